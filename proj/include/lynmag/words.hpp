#pragma once

#include "lynmag/ring.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lynmag {

/// A finite totally ordered alphabet. The declared order of the symbol list
/// *is* the total order; symbol spelling plays no role in comparisons.
/// Cheap to copy (shared immutable symbol table).
class Alphabet {
  public:
    explicit Alphabet(std::vector<std::string> letters);

    /// k letters named "a", "b", "c", ...  (k <= 26)
    static Alphabet latin(int k);

    int size() const { return static_cast<int>(letters_->size()); }
    const std::string& letter(int i) const { return (*letters_)[static_cast<size_t>(i)]; }
    /// Index of a symbol, or -1 if unknown.
    int index_of(std::string_view sym) const;
    /// True when every symbol is a single character (words then print without
    /// separators).
    bool single_char() const { return single_char_; }

    bool operator==(const Alphabet& o) const;
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

  private:
    std::shared_ptr<const std::vector<std::string>> letters_;
    bool single_char_;
};

/// A word over an Alphabet: a finite (possibly empty) sequence of letter
/// indices. Immutable value type.
class Word {
  public:
    Word(Alphabet alphabet, std::string indices);
    static Word empty(Alphabet alphabet) { return Word(std::move(alphabet), ""); }

    /// Parse from the symbol spelling: "aab" for single-char alphabets,
    /// whitespace-separated symbols otherwise.
    static Word parse(const Alphabet& alphabet, std::string_view text);

    const Alphabet& alphabet() const { return alphabet_; }
    int length() const { return static_cast<int>(idx_.size()); }
    bool is_empty() const { return idx_.empty(); }
    int letter(int pos) const { return static_cast<unsigned char>(idx_[static_cast<size_t>(pos)]); }
    /// Raw letter-index bytes (the comparison key).
    const std::string& indices() const { return idx_; }

    Word subword(int begin, int len) const;
    Word concat(const Word& other) const;
    Word append(int letter_index) const;

    /// Which letters of the alphabet occur in this word.
    std::vector<bool> letter_support() const;

    std::string str() const;

    bool operator==(const Word& o) const { return idx_ == o.idx_ && alphabet_ == o.alphabet_; }
    bool operator!=(const Word& o) const { return !(*this == o); }

  private:
    Alphabet alphabet_;
    std::string idx_;
};

/// Alphabetical (lexicographic) order; a proper prefix precedes its
/// extensions. Throws on mismatched alphabets.
std::strong_ordering cmp_alph(const Word& u, const Word& v);

/// Length-alphabetical order: shorter first, ties broken alphabetically.
std::strong_ordering cmp_lenalph(const Word& u, const Word& v);

bool alph_less(const Word& u, const Word& v);
bool lenalph_less(const Word& u, const Word& v);

/// Comparators on raw index strings (for containers keyed by words of a
/// single known alphabet).
struct LenAlphIdxLess {
    bool operator()(const std::string& a, const std::string& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

/// w is Lyndon iff nonempty and alphabetically smaller than every proper
/// nonempty suffix.
bool is_lyndon(const Word& w);

/// All Lyndon words of length <= max_len, sorted length-alphabetically.
/// Generated by Duval's algorithm (not by filtering).
std::vector<Word> lyndon_words(const Alphabet& alphabet, int max_len);

/// Number of Lyndon words of length s over k letters (Witt's formula).
BigInt witt_number(int k, int s);

/// All k^s words of length s, in alphabetical order.
std::vector<Word> all_words(const Alphabet& alphabet, int s);

/// Standard factorization w = uv of a Lyndon word with |w| >= 2: v is the
/// longest proper Lyndon suffix (equivalently the alphabetically minimal
/// one; both routes are computed and cross-checked).
std::pair<Word, Word> standard_factorization(const Word& w);

/// Chen-Fox-Lyndon factorization of a nonempty word: w = u_1^{k_1}...u_t^{k_t}
/// with u_1 >_alp ... >_alp u_t Lyndon and k_i >= 1.
std::vector<std::pair<Word, int>> cfl_factorization(const Word& w);

}  // namespace lynmag
