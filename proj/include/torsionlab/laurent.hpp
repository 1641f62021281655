#pragma once

#include <complex>
#include <map>
#include <string>

#include "torsionlab/errors.hpp"

namespace torsionlab {

// Integer Laurent polynomial in one variable t.  The abelian branch is exact:
// all arithmetic (including determinants) stays in Z[t, t^-1].
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    static LaurentPolynomial monomial(long long coeff, long long exp);
    static LaurentPolynomial one() { return monomial(1, 0); }

    bool is_zero() const { return coeffs_.empty(); }
    long long coeff(long long exp) const;
    long long min_exp() const;  // throws on zero polynomial
    long long max_exp() const;
    const std::map<long long, long long>& coeffs() const { return coeffs_; }

    void add_term(long long coeff, long long exp);

    LaurentPolynomial operator-() const;
    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    bool operator==(const LaurentPolynomial&) const = default;

    // Exact quotient a/b in Z[t, t^-1]; throws Error when b does not divide a.
    static LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

    // Multiply by t^k.
    LaurentPolynomial shifted(long long k) const;

    std::complex<double> eval(std::complex<double> z) const;
    double eval(double x) const;

    // Prints as `1 - t + t^2` (ascending exponents, unit coefficients elided).
    std::string str() const;

private:
    std::map<long long, long long> coeffs_;  // exponent -> nonzero coefficient
};

}  // namespace torsionlab
