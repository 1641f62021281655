#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/su2.hpp"

namespace torsionlab {

struct Letter {
    int gen = 0;          // generator index
    long long exp = 0;    // nonzero exponent
    auto operator<=>(const Letter&) const = default;
};

// A freely reduced word in the generators: adjacent letters always carry
// distinct generator indices, exponents are nonzero, the empty word is 1.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) { append(letters_, std::move(letters)); }

    static Word generator(int gen, long long exp = 1) { return Word({{gen, exp}}); }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    // Total letter count, with multiplicity |exp|.
    long long length() const;

    Word inverse() const;
    Word pow(long long n) const;
    friend Word operator*(const Word& a, const Word& b);

    long long exponent_sum(int gen) const;
    int max_generator() const;  // -1 for the empty word

    auto operator<=>(const Word&) const = default;

private:
    static void append(std::vector<Letter>& out, std::vector<Letter> in);
    std::vector<Letter> letters_;
};

struct PeripheralTerm {
    Word conjugator;
    int sign = +1;        // +-1
    int relator = 0;      // relator index
};

struct GroupPresentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;
    std::optional<Word> meridian;
    std::optional<Word> longitude;
    std::vector<PeripheralTerm> peripheral_identity;  // empty when absent

    int rank() const { return static_cast<int>(generator_names.size()); }
    bool has_peripheral() const {
        return meridian && longitude && !peripheral_identity.empty();
    }
};

// Validates the deficiency-one shape and index ranges; throws
// DeficiencyMismatch / UnknownGenerator.
void validate_presentation(const GroupPresentation& p);

class Representation {
public:
    // Computes the relator residual max_j |rho(R_j) - 1| and rejects
    // assignments above eps_rep.
    Representation(const GroupPresentation& p, std::vector<UnitQuaternion> images,
                   double rep_tol = kRepTol);

    const std::vector<UnitQuaternion>& images() const { return images_; }
    const UnitQuaternion& image(int gen) const { return images_.at(static_cast<size_t>(gen)); }
    double residual() const { return residual_; }
    int rank() const { return static_cast<int>(images_.size()); }

private:
    std::vector<UnitQuaternion> images_;
    double residual_ = 0.0;
};

UnitQuaternion evaluate_word(const Word& w, const Representation& rho);
UnitQuaternion evaluate_word(const Word& w, const std::vector<UnitQuaternion>& images);

// --- text formats -------------------------------------------------------

// Word in the `*`/`^` infix syntax against a generator-name table.
std::string word_to_string(const Word& w, const std::vector<std::string>& names);
// Parses a single word; generator names are matched case-insensitively and a
// single uppercase letter is shorthand for the inverse.  line is used only
// for error reporting.
Word parse_word(const std::string& text, const std::vector<std::string>& names, int line = 0);

// DSL parser (one item per line: gens/rel/meridian/longitude/peripheral).
GroupPresentation parse_presentation(const std::string& text);
// Canonical printer; parse_presentation(to_dsl(p)) == p.
std::string to_dsl(const GroupPresentation& p);

// --- knot-specific constructions ----------------------------------------

// G_q = <x, y | x^2 y^-q> with meridian m = x y^{(1-q)/2}, longitude
// l = x^2 m^{-2q}, peripheral identity R = x r x^-1 * m r^-1 m^-1.
GroupPresentation torus_knot_presentation(int q);

// True iff the identity-sequence product freely reduces to l m l^-1 m^-1.
bool verify_peripheral_identity(const GroupPresentation& p);

// Integers n_i with sum_j n_j * (exponent sum of gen j in R_k) = 0 for all k,
// normalized so the meridian maps to +1.  Throws NotKnotLike when the
// abelianization is not infinite cyclic.
std::vector<long long> abelianization_exponents(const GroupPresentation& p);

}  // namespace torsionlab
