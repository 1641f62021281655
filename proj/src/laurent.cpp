#include "torsionlab/laurent.hpp"

#include <cmath>

namespace torsionlab {

LaurentPolynomial LaurentPolynomial::monomial(long long coeff, long long exp) {
    LaurentPolynomial p;
    p.add_term(coeff, exp);
    return p;
}

long long LaurentPolynomial::coeff(long long exp) const {
    const auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? 0 : it->second;
}

long long LaurentPolynomial::min_exp() const {
    if (coeffs_.empty()) throw Error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long long LaurentPolynomial::max_exp() const {
    if (coeffs_.empty()) throw Error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

void LaurentPolynomial::add_term(long long coeff, long long exp) {
    if (coeff == 0) return;
    const auto [it, inserted] = coeffs_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial p;
    for (const auto& [e, c] : coeffs_) p.coeffs_.emplace(e, -c);
    return p;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial p = a;
    for (const auto& [e, c] : b.coeffs_) p.add_term(c, e);
    return p;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial p = a;
    for (const auto& [e, c] : b.coeffs_) p.add_term(-c, e);
    return p;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial p;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) p.add_term(ca * cb, ea + eb);
    return p;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& a,
                                                  const LaurentPolynomial& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    if (a.is_zero()) return {};
    // Divide from the low end; the minimal exponent of the remainder rises
    // strictly each step, so the loop terminates.
    const long long shift = a.min_exp() - b.min_exp();
    const long long deg_q = a.max_exp() - b.max_exp() - a.min_exp() + b.min_exp();
    LaurentPolynomial r = a;
    LaurentPolynomial q;
    const long long b_lo = b.coeffs_.begin()->second;
    while (!r.is_zero()) {
        const long long e = r.min_exp() - b.min_exp();
        if (e - shift > deg_q || e < shift) throw Error("inexact Laurent division");
        const long long c = r.coeffs_.begin()->second;
        if (c % b_lo != 0) throw Error("inexact Laurent division");
        const long long qc = c / b_lo;
        q.add_term(qc, e);
        r = r - b.shifted(e) * monomial(qc, 0);
    }
    return q;
}

LaurentPolynomial LaurentPolynomial::shifted(long long k) const {
    LaurentPolynomial p;
    for (const auto& [e, c] : coeffs_) p.coeffs_.emplace(e + k, c);
    return p;
}

std::complex<double> LaurentPolynomial::eval(std::complex<double> z) const {
    std::complex<double> s = 0.0;
    for (const auto& [e, c] : coeffs_)
        s += static_cast<double>(c) * std::pow(z, static_cast<double>(e));
    return s;
}

double LaurentPolynomial::eval(double x) const {
    double s = 0.0;
    for (const auto& [e, c] : coeffs_) s += static_cast<double>(c) * std::pow(x, static_cast<double>(e));
    return s;
}

std::string LaurentPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        const long long a = std::abs(c);
        if (first) {
            out += (c < 0 ? "-" : "");
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a);
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace torsionlab
