#include "torsionlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace torsionlab {

// --- Word ----------------------------------------------------------------

void Word::append(std::vector<Letter>& out, std::vector<Letter> in) {
    for (const Letter& l : in) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
}

long long Word::length() const {
    long long n = 0;
    for (const Letter& l : letters_) n += std::abs(l.exp);
    return n;
}

Word Word::inverse() const {
    std::vector<Letter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) rev.push_back({it->gen, -it->exp});
    Word w;
    w.letters_ = std::move(rev);  // already reduced
    return w;
}

Word Word::pow(long long n) const {
    Word base = n >= 0 ? *this : inverse();
    Word r;
    for (long long k = 0; k < std::abs(n); ++k) r = r * base;
    return r;
}

Word operator*(const Word& a, const Word& b) {
    Word r;
    r.letters_ = a.letters_;
    Word::append(r.letters_, b.letters_);
    return r;
}

long long Word::exponent_sum(int gen) const {
    long long s = 0;
    for (const Letter& l : letters_)
        if (l.gen == gen) s += l.exp;
    return s;
}

int Word::max_generator() const {
    int m = -1;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
}

// --- validation ------------------------------------------------------------

static void check_word_indices(const Word& w, int rank, const char* what) {
    if (w.max_generator() >= rank) {
        throw UnknownGenerator(std::string(what) + " references generator index " +
                               std::to_string(w.max_generator()) + " but presentation has " +
                               std::to_string(rank) + " generators");
    }
}

void validate_presentation(const GroupPresentation& p) {
    const int r = p.rank();
    if (r < 1) throw InvalidParameter("presentation needs at least one generator");
    if (static_cast<int>(p.relators.size()) != r - 1) {
        throw DeficiencyMismatch("deficiency-one presentation requires " + std::to_string(r - 1) +
                                 " relators for " + std::to_string(r) + " generators, got " +
                                 std::to_string(p.relators.size()));
    }
    for (const Word& w : p.relators) check_word_indices(w, r, "relator");
    if (p.meridian) check_word_indices(*p.meridian, r, "meridian");
    if (p.longitude) check_word_indices(*p.longitude, r, "longitude");
    for (const PeripheralTerm& t : p.peripheral_identity) {
        check_word_indices(t.conjugator, r, "peripheral conjugator");
        if (t.sign != 1 && t.sign != -1) throw InvalidParameter("peripheral sign must be +-1");
        if (t.relator < 0 || t.relator >= static_cast<int>(p.relators.size()))
            throw InvalidParameter("peripheral relator index out of range");
    }
}

// --- Representation --------------------------------------------------------

Representation::Representation(const GroupPresentation& p, std::vector<UnitQuaternion> images,
                               double rep_tol)
    : images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != p.rank()) {
        throw InvalidParameter("representation needs one image per generator");
    }
    const UnitQuaternion one;
    for (const Word& rel : p.relators) {
        residual_ = std::max(residual_, evaluate_word(rel, images_).dist(one));
    }
    if (residual_ >= rep_tol) {
        throw InvalidRepresentation("relator residual " + std::to_string(residual_) +
                                    " exceeds eps_rep");
    }
}

UnitQuaternion evaluate_word(const Word& w, const std::vector<UnitQuaternion>& images) {
    UnitQuaternion r;
    for (const Letter& l : w.letters()) {
        r = quat_mul(r, quat_pow(images.at(static_cast<size_t>(l.gen)), l.exp));
    }
    return r;
}

UnitQuaternion evaluate_word(const Word& w, const Representation& rho) {
    return evaluate_word(w, rho.images());
}

// --- word / DSL text format ------------------------------------------------

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out += "*";
        out += names.at(static_cast<size_t>(l.gen));
        if (l.exp != 1) out += "^" + std::to_string(l.exp);
    }
    return out;
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

// Resolves a name token. Exact match wins; then the all-uppercase inverse
// shorthand (B = b^-1); then a case-insensitive match.
std::pair<int, int> resolve_generator(const std::string& tok, const std::vector<std::string>& names,
                                      int line, int col) {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == tok) return {static_cast<int>(i), +1};
    const bool all_upper = std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
        return !std::isalpha(c) || std::isupper(c);
    });
    const std::string low = lower(tok);
    if (all_upper) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == low) return {static_cast<int>(i), -1};
    }
    for (size_t i = 0; i < names.size(); ++i)
        if (lower(names[i]) == low) return {static_cast<int>(i), +1};
    throw UnknownGenerator("unknown generator '" + tok + "' at line " + std::to_string(line) +
                           ", col " + std::to_string(col));
}

// Recursive-descent parser for the  factor (* factor)*  word grammar with
// parenthesized subwords and ^ exponents.
class WordParser {
public:
    WordParser(const std::string& text, const std::vector<std::string>& names, int line)
        : text_(text), names_(names), line_(line) {}

    Word parse() {
        skip_ws();
        if (eof()) throw SyntaxError("empty word", line_, col());
        Word w = parse_word();
        skip_ws();
        if (!eof()) throw SyntaxError("unexpected character '" + std::string(1, cur()) + "'", line_, col());
        return w;
    }

private:
    Word parse_word() {
        Word w = parse_factor();
        skip_ws();
        while (!eof() && cur() == '*') {
            ++pos_;
            skip_ws();
            w = w * parse_factor();
            skip_ws();
        }
        return w;
    }

    Word parse_factor() {
        Word atom = parse_atom();
        skip_ws();
        if (!eof() && cur() == '^') {
            ++pos_;
            skip_ws();
            atom = atom.pow(parse_int());
        }
        return atom;
    }

    Word parse_atom() {
        skip_ws();
        if (eof()) throw SyntaxError("expected generator or '('", line_, col());
        if (cur() == '(') {
            ++pos_;
            Word w = parse_word();
            skip_ws();
            if (eof() || cur() != ')') throw SyntaxError("expected ')'", line_, col());
            ++pos_;
            return w;
        }
        if (cur() == '1') {
            ++pos_;
            return Word();
        }
        if (!std::isalpha(static_cast<unsigned char>(cur())) && cur() != '_')
            throw SyntaxError("expected generator or '('", line_, col());
        const int start = col();
        std::string tok;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_')) {
            tok += cur();
            ++pos_;
        }
        auto [gen, sign] = resolve_generator(tok, names_, line_, start);
        return Word::generator(gen, sign);
    }

    long long parse_int() {
        skip_ws();
        const int start = col();
        std::string tok;
        if (!eof() && (cur() == '+' || cur() == '-')) { tok += cur(); ++pos_; }
        while (!eof() && std::isdigit(static_cast<unsigned char>(cur()))) { tok += cur(); ++pos_; }
        if (tok.empty() || tok == "+" || tok == "-")
            throw SyntaxError("expected integer exponent", line_, start);
        return std::stoll(tok);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char cur() const { return text_[pos_]; }
    int col() const { return static_cast<int>(pos_) + 1; }
    void skip_ws() {
        while (!eof() && (cur() == ' ' || cur() == '\t')) ++pos_;
    }

    const std::string& text_;
    const std::vector<std::string>& names_;
    int line_;
    size_t pos_ = 0;
};

bool valid_name(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& names, int line) {
    return WordParser(text, names, line).parse();
}

GroupPresentation parse_presentation(const std::string& text) {
    GroupPresentation p;
    bool have_gens = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        const auto colon = line.find(':');
        if (colon == std::string::npos) throw SyntaxError("expected 'key: value'", lineno, 1);
        const std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        if (const auto v = value.find_first_not_of(" \t"); v != std::string::npos)
            value = value.substr(v);
        else
            value.clear();

        if (key == "gens") {
            if (have_gens) throw SyntaxError("duplicate gens line", lineno, 1);
            std::istringstream gs(value);
            std::string name;
            while (std::getline(gs, name, ',')) {
                const auto a = name.find_first_not_of(" \t");
                if (a == std::string::npos) throw SyntaxError("empty generator name", lineno, 1);
                const auto b = name.find_last_not_of(" \t");
                name = name.substr(a, b - a + 1);
                if (!valid_name(name)) throw SyntaxError("invalid generator name '" + name + "'", lineno, 1);
                for (const std::string& g : p.generator_names)
                    if (lower(g) == lower(name))
                        throw SyntaxError("duplicate generator '" + name + "'", lineno, 1);
                p.generator_names.push_back(name);
            }
            if (p.generator_names.empty()) throw SyntaxError("gens line lists no generators", lineno, 1);
            have_gens = true;
            continue;
        }
        if (!have_gens) throw SyntaxError("gens line must come first", lineno, 1);

        if (key == "rel") {
            p.relators.push_back(parse_word(value, p.generator_names, lineno));
        } else if (key == "meridian") {
            p.meridian = parse_word(value, p.generator_names, lineno);
        } else if (key == "longitude") {
            p.longitude = parse_word(value, p.generator_names, lineno);
        } else if (key == "peripheral") {
            std::istringstream ts(value);
            std::string term;
            while (std::getline(ts, term, ';')) {
                const auto a = term.find_first_not_of(" \t");
                if (a == std::string::npos) throw SyntaxError("empty peripheral term", lineno, 1);
                term = term.substr(a);
                PeripheralTerm pt;
                size_t i = 0;
                if (term[i] == '+') { pt.sign = +1; ++i; }
                else if (term[i] == '-') { pt.sign = -1; ++i; }
                else throw SyntaxError("peripheral term must start with + or -", lineno, 1);
                size_t j = i;
                while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
                if (j == i) throw SyntaxError("expected relator index after sign", lineno, 1);
                pt.relator = std::stoi(term.substr(i, j - i));
                const auto at = term.find('@', j);
                if (at == std::string::npos) throw SyntaxError("expected '@ conjugator' in peripheral term", lineno, 1);
                pt.conjugator = parse_word(term.substr(at + 1), p.generator_names, lineno);
                p.peripheral_identity.push_back(pt);
            }
        } else {
            throw SyntaxError("unknown key '" + key + "'", lineno, 1);
        }
    }
    if (!have_gens) throw SyntaxError("missing gens line", 1, 1);
    validate_presentation(p);
    return p;
}

std::string to_dsl(const GroupPresentation& p) {
    std::string out = "gens: ";
    for (size_t i = 0; i < p.generator_names.size(); ++i) {
        if (i) out += ", ";
        out += p.generator_names[i];
    }
    out += "\n";
    for (const Word& r : p.relators) out += "rel: " + word_to_string(r, p.generator_names) + "\n";
    if (p.meridian) out += "meridian: " + word_to_string(*p.meridian, p.generator_names) + "\n";
    if (p.longitude) out += "longitude: " + word_to_string(*p.longitude, p.generator_names) + "\n";
    if (!p.peripheral_identity.empty()) {
        out += "peripheral: ";
        for (size_t i = 0; i < p.peripheral_identity.size(); ++i) {
            const PeripheralTerm& t = p.peripheral_identity[i];
            if (i) out += " ; ";
            out += (t.sign > 0 ? "+" : "-") + std::to_string(t.relator) + " @ " +
                   word_to_string(t.conjugator, p.generator_names);
        }
        out += "\n";
    }
    return out;
}

// --- torus knots -------------------------------------------------------------

GroupPresentation torus_knot_presentation(int q) {
    if (q < 3 || q % 2 == 0) throw InvalidParameter("torus knot parameter q must be odd and >= 3");
    GroupPresentation p;
    p.generator_names = {"x", "y"};
    const Word x = Word::generator(0);
    const Word y = Word::generator(1);
    const Word r = x.pow(2) * y.pow(-q);
    const Word m = x * y.pow((1 - q) / 2);
    p.relators = {r};
    p.meridian = m;
    p.longitude = x.pow(2) * m.pow(-2 * q);
    p.peripheral_identity = {{x, +1, 0}, {m, -1, 0}};
    validate_presentation(p);
    return p;
}

bool verify_peripheral_identity(const GroupPresentation& p) {
    if (!p.has_peripheral())
        throw MissingPeripheralData("meridian, longitude and peripheral identity are all required");
    Word prod;
    for (const PeripheralTerm& t : p.peripheral_identity) {
        const Word& rel = p.relators.at(static_cast<size_t>(t.relator));
        prod = prod * t.conjugator * rel.pow(t.sign) * t.conjugator.inverse();
    }
    const Word comm = *p.longitude * *p.meridian * p.longitude->inverse() * p.meridian->inverse();
    return prod == comm;
}

// --- abelianization -----------------------------------------------------------

namespace {

// Fraction-free (Bareiss) determinant of an integer matrix.
long long int_det(std::vector<std::vector<long long>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) { std::swap(m[piv], m[k]); sign = -sign; }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                const __int128 num =
                    static_cast<__int128>(m[k][k]) * m[i][j] - static_cast<__int128>(m[i][k]) * m[k][j];
                m[i][j] = static_cast<long long>(num / prev);
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

std::vector<long long> abelianization_exponents(const GroupPresentation& p) {
    validate_presentation(p);
    const int r = p.rank();
    const int nrel = static_cast<int>(p.relators.size());

    std::vector<std::vector<long long>> E(nrel, std::vector<long long>(r, 0));
    for (int k = 0; k < nrel; ++k)
        for (int j = 0; j < r; ++j) E[k][j] = p.relators[k].exponent_sum(j);

    // Kernel vector by Cramer: n_j = (-1)^j det(E with column j deleted).
    // The maximal minors' gcd is the torsion order of coker(E^T); H1 is
    // infinite cyclic exactly when that gcd is 1.
    std::vector<long long> n(r, 0);
    for (int j = 0; j < r; ++j) {
        std::vector<std::vector<long long>> minor(nrel, std::vector<long long>(r - 1));
        for (int k = 0; k < nrel; ++k) {
            int c = 0;
            for (int jj = 0; jj < r; ++jj)
                if (jj != j) minor[k][c++] = E[k][jj];
        }
        n[j] = (j % 2 == 0 ? 1 : -1) * int_det(std::move(minor));
    }

    long long g = 0;
    for (long long v : n) g = std::gcd(g, std::abs(v));
    if (g == 0) throw NotKnotLike("relator exponent matrix is rank deficient (H1 has rank > 1)");
    if (g != 1) throw NotKnotLike("abelianization has torsion Z/" + std::to_string(g));

    if (p.meridian) {
        long long e = 0;
        for (int j = 0; j < r; ++j) e += n[j] * p.meridian->exponent_sum(j);
        if (e != 1 && e != -1)
            throw NotKnotLike("meridian maps to " + std::to_string(e) + " in H1, not a generator");
        if (e == -1)
            for (long long& v : n) v = -v;
    } else {
        for (long long v : n) {
            if (v != 0) {
                if (v < 0)
                    for (long long& u : n) u = -u;
                break;
            }
        }
    }
    return n;
}

}  // namespace torsionlab
