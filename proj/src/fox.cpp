#include "torsionlab/fox.hpp"

#include <algorithm>

namespace torsionlab {

GroupRingElement GroupRingElement::from_word(long long coeff, Word w) {
    GroupRingElement e;
    e.add_term(coeff, w);
    return e;
}

void GroupRingElement::add_term(long long coeff, const Word& w) {
    if (coeff == 0) return;
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                                     [](const auto& t, const Word& key) { return t.second < key; });
    if (it != terms_.end() && it->second == w) {
        it->first += coeff;
        if (it->first == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {coeff, w});
    }
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r = a;
    for (const auto& [c, w] : b.terms_) r.add_term(c, w);
    return r;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r = a;
    for (const auto& [c, w] : b.terms_) r.add_term(-c, w);
    return r;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [ca, wa] : a.terms_)
        for (const auto& [cb, wb] : b.terms_) r.add_term(ca * cb, wa * wb);
    return r;
}

long long GroupRingElement::augmentation() const {
    long long s = 0;
    for (const auto& [c, w] : terms_) s += c;
    return s;
}

GroupRingElement fox_derivative(const Word& w, int gen) {
    GroupRingElement out;
    Word prefix;
    for (const Letter& l : w.letters()) {
        if (l.gen == gen) {
            // d(g^e)/dg = 1 + g + ... + g^{e-1}          for e > 0
            //           = -(g^-1 + g^-2 + ... + g^e)      for e < 0
            if (l.exp > 0) {
                for (long long k = 0; k < l.exp; ++k)
                    out = out + GroupRingElement::from_word(1, prefix * Word::generator(gen, k));
            } else {
                for (long long k = 1; k <= -l.exp; ++k)
                    out = out - GroupRingElement::from_word(1, prefix * Word::generator(gen, -k));
            }
        }
        prefix = prefix * Word::generator(l.gen, l.exp);
    }
    return out;
}

Eigen::Matrix3d evaluate_adjoint(const GroupRingElement& e, const std::vector<UnitQuaternion>& images) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    for (const auto& [c, w] : e.terms())
        m += static_cast<double>(c) * adjoint_matrix(evaluate_word(w, images));
    return m;
}

Eigen::Matrix3d evaluate_adjoint(const GroupRingElement& e, const Representation& rho) {
    return evaluate_adjoint(e, rho.images());
}

LaurentPolynomial evaluate_abelian(const GroupRingElement& e, const std::vector<long long>& exps) {
    LaurentPolynomial p;
    for (const auto& [c, w] : e.terms()) {
        long long total = 0;
        for (const Letter& l : w.letters()) total += exps.at(static_cast<size_t>(l.gen)) * l.exp;
        p.add_term(c, total);
    }
    return p;
}

LaurentPolynomial laurent_determinant(std::vector<std::vector<LaurentPolynomial>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPolynomial::one();
    LaurentPolynomial prev = LaurentPolynomial::one();
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero()) { piv = i; break; }
        if (piv < 0) return {};
        if (piv != k) { std::swap(m[piv], m[k]); sign = -sign; }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = LaurentPolynomial::divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

LaurentPolynomial normalized_alexander(LaurentPolynomial d) {
    if (d.is_zero()) throw NotKnotLike("Alexander minor vanishes identically");
    d = d.shifted(-d.min_exp());
    long long at_one = 0;
    for (const auto& [e, c] : d.coeffs()) at_one += c;
    if (at_one != 1 && at_one != -1)
        throw NotKnotLike("Alexander polynomial has Delta(1) = " + std::to_string(at_one));
    if (at_one == -1) d = -d;
    return d;
}

}  // namespace

LaurentPolynomial alexander_polynomial_dropping(const GroupPresentation& p, int drop) {
    const std::vector<long long> exps = abelianization_exponents(p);
    const int r = p.rank();
    if (drop < 0 || drop >= r) throw InvalidParameter("column to drop out of range");
    if (exps[static_cast<size_t>(drop)] == 0)
        throw InvalidParameter("cannot drop a generator with abelianization exponent 0");
    const int nrel = static_cast<int>(p.relators.size());

    std::vector<std::vector<LaurentPolynomial>> m(nrel);
    for (int k = 0; k < nrel; ++k) {
        for (int j = 0; j < r; ++j) {
            if (j == drop) continue;
            m[k].push_back(evaluate_abelian(fox_derivative(p.relators[static_cast<size_t>(k)], j), exps));
        }
    }
    LaurentPolynomial det = laurent_determinant(std::move(m));

    // det = Delta(t) * (t^{n_drop} - 1)/(t - 1) up to units.
    const long long nd = std::abs(exps[static_cast<size_t>(drop)]);
    if (nd != 1) {
        LaurentPolynomial cyc;
        for (long long k = 0; k < nd; ++k) cyc.add_term(1, k);
        det = LaurentPolynomial::divide_exact(det, cyc);
    }
    return normalized_alexander(std::move(det));
}

LaurentPolynomial alexander_polynomial(const GroupPresentation& p) {
    const std::vector<long long> exps = abelianization_exponents(p);
    // Design decision: delete the first generator's column.  (Fall through to
    // the first usable one when its abelianization exponent is 0, where the
    // minor would vanish identically.)
    for (int j = 0; j < p.rank(); ++j) {
        if (exps[static_cast<size_t>(j)] != 0) return alexander_polynomial_dropping(p, j);
    }
    throw NotKnotLike("all generators abelianize to 0");
}

}  // namespace torsionlab
