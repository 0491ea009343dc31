#pragma once

#include "lynmag/ncpoly.hpp"
#include "lynmag/words.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lynmag {

/// One syllable of a free-group word: generator index with a nonzero integer
/// exponent. Adjacent syllables of a reduced word have distinct generators.
struct Syllable {
    int gen;
    long long exp;
    bool operator==(const Syllable& o) const { return gen == o.gen && exp == o.exp; }
};

/// Element of the free group on the letters of an Alphabet, kept freely
/// reduced at all times. Immutable value type.
class GroupWord {
  public:
    /// The identity element.
    explicit GroupWord(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    static GroupWord generator(const Alphabet& alphabet, int gen, long long exp = 1);

    /// Parse "x y^-1 x^2"; "1" denotes the identity.
    static GroupWord parse(const Alphabet& alphabet, std::string_view text);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Syllable>& syllables() const { return syl_; }
    bool is_identity() const { return syl_.empty(); }
    /// Total letter count, counting |exp| per syllable.
    long long length() const;

    /// Right-multiply by a single generator power, reducing at the seam.
    GroupWord times_gen(int gen, long long exp) const;

    std::string str() const;

    bool operator==(const GroupWord& o) const {
        return alphabet_ == o.alphabet_ && syl_ == o.syl_;
    }
    bool operator!=(const GroupWord& o) const { return !(*this == o); }

  private:
    Alphabet alphabet_;
    std::vector<Syllable> syl_;
};

GroupWord fg_mul(const GroupWord& a, const GroupWord& b);
GroupWord fg_inv(const GroupWord& a);
GroupWord fg_pow(const GroupWord& a, long long e);

/// [a,b] = a b a^{-1} b^{-1}.
GroupWord commutator(const GroupWord& a, const GroupWord& b);

/// Lie element of a Lyndon word: a single generator for |w| = 1, otherwise
/// the commutator of the Lie elements of the standard factorization w = uv.
GroupWord lie_element(const Word& w);

/// Truncated Magnus expansion: the homomorphism into 1-units determined by
/// x |-> 1 + x on generators. Ring must be the integers or Z/m; the series
/// carries every coefficient of degree <= max_deg exactly.
TruncatedSeries magnus_expand(const GroupWord& g, int max_deg, const Ring& ring);

/// Coefficient of w in the Magnus expansion of g.
Rational eps(const Word& w, const GroupWord& g, const Ring& ring);

/// Square unitriangular matrix over Z/modulus: unit diagonal, zero below it.
/// Entries are stored row-major, reduced to 0..modulus-1.
class UniTriMatrix {
  public:
    UniTriMatrix(int size, std::int64_t modulus);
    static UniTriMatrix identity(int size, std::int64_t modulus);

    int size() const { return size_; }
    std::int64_t modulus() const { return modulus_; }

    std::int64_t at(int r, int c) const { return ent_[static_cast<size_t>(r * size_ + c)]; }
    /// Set an entry above the diagonal (r < c).
    void set(int r, int c, std::int64_t v);

    UniTriMatrix mul(const UniTriMatrix& o) const;

    bool operator==(const UniTriMatrix& o) const;
    bool operator!=(const UniTriMatrix& o) const { return !(*this == o); }

    std::string str() const;

  private:
    int size_;
    std::int64_t modulus_;
    std::vector<std::int64_t> ent_;
};

/// Magnus representation attached to the word w = (a_1...a_i): the
/// (i+1)x(i+1) unitriangular matrix with entry (k,l), 1-based, k <= l, equal
/// to the expansion coefficient of the subword (a_k...a_{l-1}) at g.
UniTriMatrix magnus_rep(const Word& w, const GroupWord& g, std::int64_t modulus);

struct TriangularityReport {
    bool ok = false;
    int checked_deg = 0;
    std::string offending;  // offending support word, empty when ok
    std::string detail;
};

/// Check, over the integers up to max_deg, that the expansion of the Lie
/// element of a Lyndon word w is 1 + w + (terms strictly later than w in
/// length-alphabetical order, built only from letters of w).
TriangularityReport check_triangularity(const Word& w, int max_deg);

}  // namespace lynmag
