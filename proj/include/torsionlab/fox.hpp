#pragma once

#include <vector>

#include <Eigen/Dense>

#include "torsionlab/laurent.hpp"
#include "torsionlab/presentation.hpp"

namespace torsionlab {

// An element of the integer group ring Z[F] of the free group on the
// presentation's generators.  Terms are kept canonical: freely reduced words,
// combined coefficients, no zeros, sorted by word.
class GroupRingElement {
public:
    GroupRingElement() = default;
    static GroupRingElement from_word(long long coeff, Word w);
    static GroupRingElement one() { return from_word(1, Word()); }

    const std::vector<std::pair<long long, Word>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
    // Group-ring product (convolution of words).
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    bool operator==(const GroupRingElement&) const = default;

    // Sum of coefficients (augmentation Z[F] -> Z).
    long long augmentation() const;

private:
    void add_term(long long coeff, const Word& w);
    std::vector<std::pair<long long, Word>> terms_;
};

// Fox derivative d(w)/d(gen): d(uv) = du + u dv, dg/dg = 1, dg^-1/dg = -g^-1.
GroupRingElement fox_derivative(const Word& w, int gen);

// Sum coeff * Ad_{rho(word)} as a 3x3 real matrix.
Eigen::Matrix3d evaluate_adjoint(const GroupRingElement& e, const Representation& rho);
Eigen::Matrix3d evaluate_adjoint(const GroupRingElement& e, const std::vector<UnitQuaternion>& images);

// Sum coeff * t^{sum of letters n_i * e_i} under the abelianization exponents.
LaurentPolynomial evaluate_abelian(const GroupRingElement& e, const std::vector<long long>& exps);

// Alexander polynomial: determinant of the abelianized Fox matrix with one
// generator column deleted, divided by the cyclotomic unit 1 + t + ... +
// t^{|n|-1} when the deleted generator has |n| != 1, then normalized so the
// lowest exponent is 0 and Delta(1) = +1.
LaurentPolynomial alexander_polynomial(const GroupPresentation& p);
// Same, deleting the column of a chosen generator (used by the
// column-independence property).  Requires n_drop != 0.
LaurentPolynomial alexander_polynomial_dropping(const GroupPresentation& p, int drop);

// Exact determinant of a square Laurent-polynomial matrix by fraction-free
// (Bareiss) elimination.
LaurentPolynomial laurent_determinant(std::vector<std::vector<LaurentPolynomial>> m);

}  // namespace torsionlab
