#include "torsionlab/su2.hpp"

#include <cmath>

namespace torsionlab {

double PureQuaternion::norm() const { return std::sqrt(x * x + y * y + z * z); }

double su2_inner(const PureQuaternion& u, const PureQuaternion& v) {
    return u.x * v.x + u.y * v.y + u.z * v.z;
}

UnitQuaternion::UnitQuaternion(double w_, double x_, double y_, double z_)
    : w(w_), x(x_), y(y_), z(z_) {
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (std::abs(n - 1.0) > 1e-6) {
        throw InvalidParameter("quaternion is not unit norm (|q| = " + std::to_string(n) + ")");
    }
    if (std::abs(n - 1.0) > kNormTol / 2.0) {
        w /= n; x /= n; y /= n; z /= n;
    }
}

UnitQuaternion UnitQuaternion::from_axis_angle(double theta, const PureQuaternion& axis) {
    const double n = axis.norm();
    if (n == 0.0) throw InvalidParameter("axis must be nonzero");
    const double s = std::sin(theta) / n;
    UnitQuaternion q;
    q.w = std::cos(theta);
    q.x = s * axis.x; q.y = s * axis.y; q.z = s * axis.z;
    return q;
}

double UnitQuaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

double UnitQuaternion::dist(const UnitQuaternion& other) const {
    const double dw = w - other.w, dx = x - other.x, dy = y - other.y, dz = z - other.z;
    return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

UnitQuaternion quat_mul(const UnitQuaternion& a, const UnitQuaternion& b) {
    UnitQuaternion q;
    q.w = a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z;
    q.x = a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y;
    q.y = a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x;
    q.z = a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w;
    const double n2 = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
    if (std::abs(n2 - 1.0) > kNormTol) {
        const double n = std::sqrt(n2);
        q.w /= n; q.x /= n; q.y /= n; q.z /= n;
    }
    return q;
}

UnitQuaternion quat_pow(const UnitQuaternion& a, long long n) {
    UnitQuaternion base = n >= 0 ? a : a.inverse();
    long long k = n >= 0 ? n : -n;
    UnitQuaternion r;
    while (k > 0) {
        if (k & 1) r = quat_mul(r, base);
        base = quat_mul(base, base);
        k >>= 1;
    }
    return r;
}

AxisAngle axis_angle(const UnitQuaternion& a) {
    if (std::abs(a.w) >= 1.0 - kCenterTol) {
        throw CentralElement("axis/angle decomposition of a central element is not unique");
    }
    AxisAngle out;
    out.theta = std::acos(std::clamp(a.w, -1.0, 1.0));
    const double s = std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
    out.axis = {a.x / s, a.y / s, a.z / s};
    return out;
}

Eigen::Matrix3d adjoint_matrix(const UnitQuaternion& a) {
    const double w = a.w, x = a.x, y = a.y, z = a.z;
    Eigen::Matrix3d m;
    // Standard quaternion-to-rotation matrix on the ordered basis (i, j, k).
    m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
         2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
         2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y);
    return m;
}

}  // namespace torsionlab
