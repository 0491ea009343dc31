#pragma once

#include "lynmag/ring.hpp"
#include "lynmag/words.hpp"

#include <map>
#include <string>

namespace lynmag {

/// Term storage shared by polynomials and truncated series: sparse map from
/// letter-index strings to nonzero coefficients, ordered length-alphabetically
/// so that iteration and serialization are canonical.
using TermMap = std::map<std::string, Rational, LenAlphIdxLess>;

/// Sparse noncommutative polynomial over an exact coefficient ring.
class NCPoly {
  public:
    NCPoly(Alphabet alphabet, Ring ring)
        : alphabet_(std::move(alphabet)), ring_(std::move(ring)) {}

    static NCPoly monomial(const Word& w, const Rational& c, Ring ring);

    const Alphabet& alphabet() const { return alphabet_; }
    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    /// Largest degree in the support (0 for the zero polynomial).
    int max_degree() const;

    Rational coeff(const Word& w) const;
    Rational coeff_idx(const std::string& idx) const;
    Word word_at(const std::string& idx) const { return Word(alphabet_, idx); }

    /// Accumulate c onto the coefficient of w; drops the term if it cancels.
    void add_term(const Word& w, const Rational& c);
    void add_term_idx(const std::string& idx, const Rational& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly scaled(const Rational& c) const;

    NCPoly homogeneous_part(int s) const;

    /// Re-normalize all coefficients into another ring (e.g. Z -> Z/m, or an
    /// integral Q polynomial -> Z).
    NCPoly with_ring(const Ring& r) const;

    bool operator==(const NCPoly& o) const;
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Alphabet alphabet_;
    Ring ring_;
    TermMap terms_;
};

/// Truncated formal power series: all arithmetic is exact on the terms of
/// degree <= max_deg and silently discards anything deeper.
class TruncatedSeries {
  public:
    TruncatedSeries(Alphabet alphabet, Ring ring, int max_deg);

    static TruncatedSeries one(Alphabet alphabet, Ring ring, int max_deg);

    const Alphabet& alphabet() const { return alphabet_; }
    const Ring& ring() const { return ring_; }
    int max_deg() const { return max_deg_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;
    Rational coeff(const Word& w) const;
    Rational coeff_idx(const std::string& idx) const;

    void add_term(const Word& w, const Rational& c);
    void add_term_idx(const std::string& idx, const Rational& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries scaled(const Rational& c) const;

    /// Lower the truncation degree.
    TruncatedSeries truncated(int new_max_deg) const;
    /// Map coefficients into another ring.
    TruncatedSeries with_ring(const Ring& r) const;
    /// Degree-s terms as a polynomial.
    NCPoly homogeneous_part(int s) const;

    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Alphabet alphabet_;
    Ring ring_;
    int max_deg_;
    TermMap terms_;
};

/// (f, g) = sum_w f_w g_w. For a truncated f, every word in Supp(g) must have
/// length <= f.max_deg() (throws std::domain_error otherwise).
Rational scalar_product(const NCPoly& f, const NCPoly& g);
Rational scalar_product(const TruncatedSeries& f, const NCPoly& g);

/// Concatenation product, truncated: (fg)_w = sum_{w=uv} f_u g_v.
TruncatedSeries concat_mul(const TruncatedSeries& f, const TruncatedSeries& g);
/// f^e by binary powering, e >= 0.
TruncatedSeries concat_pow(const TruncatedSeries& f, unsigned long e);

/// Inverse of a 1-unit (over Z/m, any unit constant term is accepted and
/// normalized away). concat_mul(f, invert_unit(f)) == 1 up to max_deg.
TruncatedSeries invert_unit(const TruncatedSeries& f);

/// Shuffle product of two words: sum over all order-preserving interleavings.
/// Integer coefficients; homogeneous of degree |u|+|v|.
NCPoly shuffle(const Word& u, const Word& v);

/// Infiltration product: interleavings that may additionally merge equal
/// letters, via the recursion ua|vb = (u|vb)a + (ua|v)b + [a=b](u|v)a.
/// Its degree-(|u|+|v|) part equals shuffle(u, v).
NCPoly infiltration(const Word& u, const Word& v);

enum class StarOp { shuffle, infiltration };

NCPoly star_product(StarOp op, const Word& u, const Word& v);

/// Bilinear extension of shuffle/infiltration to polynomials.
NCPoly star_extend(StarOp op, const NCPoly& f, const NCPoly& g);

/// u*u*...*u (k factors, k >= 1) under the given product.
NCPoly star_power(StarOp op, const Word& u, int k);

}  // namespace lynmag
