#pragma once

#include <Eigen/Dense>

#include "torsionlab/errors.hpp"

namespace torsionlab {

// Tolerances fixed by the design decisions of the su2_algebra / presentation
// modules.  Products of long words accumulate drift, so unit quaternions are
// renormalized (never rejected) once they leave the eps_norm band.
inline constexpr double kNormTol = 1e-12;    // eps_norm
inline constexpr double kCenterTol = 1e-9;   // eps_center: |w| >= 1 - eps means +-1
inline constexpr double kRepTol = 1e-9;      // eps_rep: relator residual bound
inline constexpr double kRankTolDefault = 1e-9;
inline constexpr double kChainTol = 1e-10;   // d1*d2 = 0 bound

// An su(2) element x*i + y*j + z*k in the ordered basis (i, j, k).
struct PureQuaternion {
    double x = 0.0, y = 0.0, z = 0.0;

    Eigen::Vector3d coords() const { return {x, y, z}; }
    static PureQuaternion from_coords(const Eigen::Vector3d& v) { return {v[0], v[1], v[2]}; }

    PureQuaternion operator-() const { return {-x, -y, -z}; }
    double norm() const;
};

// ⟨u, v⟩ = -1/2 Tr(uv): the Euclidean dot product of the (i,j,k) coordinates.
double su2_inner(const PureQuaternion& u, const PureQuaternion& v);

// An SU(2) element as a unit quaternion w + x*i + y*j + z*k.
struct UnitQuaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    UnitQuaternion() = default;
    // Renormalizes small drift; rejects grossly non-unit input.
    UnitQuaternion(double w_, double x_, double y_, double z_);

    static UnitQuaternion identity() { return {}; }
    static UnitQuaternion from_axis_angle(double theta, const PureQuaternion& axis);

    UnitQuaternion conjugate() const { UnitQuaternion q; q.w = w; q.x = -x; q.y = -y; q.z = -z; return q; }
    UnitQuaternion inverse() const { return conjugate(); }
    PureQuaternion pure() const { return {x, y, z}; }
    double norm() const;

    // Distance to another quaternion in R^4 (used for relator residuals).
    double dist(const UnitQuaternion& other) const;
};

UnitQuaternion quat_mul(const UnitQuaternion& a, const UnitQuaternion& b);
inline UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) { return quat_mul(a, b); }

// a^n for n in Z (n < 0 uses the inverse).
UnitQuaternion quat_pow(const UnitQuaternion& a, long long n);

struct AxisAngle {
    double theta = 0.0;      // in (0, pi)
    PureQuaternion axis;     // unit norm
};

// a = cos(theta) + sin(theta)*axis with theta in (0, pi).
// Throws CentralElement when a = +-1 within eps_center (the pair is not unique).
AxisAngle axis_angle(const UnitQuaternion& a);

// The rotation v -> a v a^-1 on (i,j,k)-coordinates; SO(3), Ad_a = Ad_{-a}.
Eigen::Matrix3d adjoint_matrix(const UnitQuaternion& a);

}  // namespace torsionlab
