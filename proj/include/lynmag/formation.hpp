#pragma once

#include "lynmag/magnus.hpp"
#include "lynmag/ncpoly.hpp"
#include "lynmag/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lynmag {

/// A map e : {1,...,n} -> Z_{>=1}, the exponent data of a formation.
class ExponentMap {
  public:
    /// values = e(1), ..., e(n); every value must be >= 1.
    explicit ExponentMap(std::vector<BigInt> values);

    int n() const { return static_cast<int>(e_.size()); }
    const BigInt& at(int i) const;  // e(i), 1-based

    bool operator==(const ExponentMap& o) const { return e_ == o.e_; }
    bool operator!=(const ExponentMap& o) const { return !(*this == o); }

    std::string str() const;  // "(4,2,1)"

  private:
    std::vector<BigInt> e_;
};

/// e is binomial when e(i) divides C(e(i'), l) whenever i'l <= i <= n and
/// 1 <= l <= e(i').
bool is_binomial(const ExponentMap& e);

struct BinomialEquivResult {
    bool direct;          // the definition, quantified as written
    bool via_conditions;  // e(i'l) | C(e(i'), l) for i'l <= n, plus e(i) | e(i') for i' <= i
    bool agree;
};

/// Evaluate both characterizations of binomiality independently and compare.
BinomialEquivResult binomial_equiv_check(const ExponentMap& e);

/// I_e = { i : i'e(i') >= i e(i) for every i' <= i }, ascending. Contains 1.
std::vector<int> compute_I_e(const ExponentMap& e);

/// e(i) = gcd of all products of n-i of the given a_1..a_{n-1}; n = |a|+1.
ExponentMap preset_gcd(const std::vector<BigInt>& a);
/// e(i) = p^{n-i}.
ExponentMap preset_lower_p_central(int p, int n);
/// e(i) = p^{t ceil(log_p(n/i))}.
ExponentMap preset_zassenhaus(int p, int t, int n);

/// j(i) = n - i.
std::vector<int> lower_p_central_j(int n);
/// j(i) = t * min{ k >= 0 : i p^k >= n }.
std::vector<int> zassenhaus_j(int p, int t, int n);

/// The data of a Magnus formation at desk scale: alphabet, degree bound n, a
/// prime p with exponents e(i) = p^{j(i)}, and a finite set L of Lyndon words
/// (defaulted to all Lyndon words whose length lies in I_e). Valid instances
/// always carry a binomial, not-identically-1 exponent map.
class FormationSpec {
  public:
    static FormationSpec make(Alphabet alphabet, int n, int p, std::vector<int> j,
                              std::optional<std::vector<Word>> L = std::nullopt);

    const Alphabet& alphabet() const { return alphabet_; }
    int n() const { return n_; }
    int p() const { return p_; }
    const std::vector<int>& j() const { return j_; }
    int j_of(int i) const;  // j(i), 1-based
    const ExponentMap& e() const { return e_; }
    const BigInt& e_of(int i) const { return e_.at(i); }
    const std::vector<int>& index_set() const { return index_set_; }  // I_e
    const std::vector<Word>& L() const { return L_; }                 // sorted by length-alph
    bool in_L(const Word& w) const;
    bool in_index_set(int i) const;

    int big_j() const { return big_j_; }                       // J = 1 + max j(i)
    std::int64_t working_modulus() const { return mod_; }      // p^J
    std::int64_t pj(int i) const;                              // p^{j(i)}
    std::int64_t pj1(int i) const;                             // p^{j(i)+1}

  private:
    FormationSpec(Alphabet alphabet, int n, int p, std::vector<int> j, std::vector<Word> L,
                  ExponentMap e, std::vector<int> index_set);

    Alphabet alphabet_;
    int n_;
    int p_;
    std::vector<int> j_;
    std::vector<Word> L_;
    ExponentMap e_;
    std::vector<int> index_set_;
    int big_j_;
    std::int64_t mod_;
};

/// sigma_w = tau(w)^{e(|w|)}; requires w in L.
GroupWord sigma_w(const FormationSpec& spec, const Word& w);

/// Expansion of sigma_{w'} mod p^J up to degree n, computed as the e(|w'|)-th
/// power of the expansion of the Lie element (never by flattening the power
/// into a long group word).
TruncatedSeries sigma_expansion(const FormationSpec& spec, const Word& w_prime);

/// The fundamental matrix: rows and columns indexed by L in length-alph
/// order; the entry at (row w', column w) is <w,w'> = the coefficient of w in
/// the expansion of sigma_{w'}, reduced mod p^{j(|w|)+1}, divided by
/// p^{j(|w|)}, mod p (the transposed layout that makes it upper triangular).
struct FundamentalMatrix {
    std::vector<Word> order;
    int p = 0;
    std::vector<int> j;
    std::vector<std::vector<int>> rows;

    int dim() const { return static_cast<int>(order.size()); }
    int at(int r, int c) const { return rows[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
    std::string str() const;
};

/// Computes every entry, asserting the p^{j(|w|)} divisibility of the
/// underlying coefficients (std::domain_error on violation).
FundamentalMatrix fundamental_matrix(const FormationSpec& spec);

/// Unit diagonal and zeros below it; writes the first offending entry into
/// *witness when given.
bool check_unitriangular(const FundamentalMatrix& m, std::string* witness = nullptr);

/// rho^0_w(g): the coefficient of w in the expansion of g, reduced mod
/// p^{j(i)+1} (i = |w|), divided by p^{j(i)}, as an element of Z/p.
/// Requires |w| in I_e; throws std::domain_error if the divisibility fails
/// (g outside the expected subgroup).
int rho0_eval(const FormationSpec& spec, const Word& w, const GroupWord& g);
/// Same, reading a precomputed expansion (mod p^J, degree >= |w|).
int rho0_from_series(const FormationSpec& spec, const Word& w, const TruncatedSeries& lam);

struct ImageCheckResult {
    bool ok = false;
    std::string witness;
};

/// For every w' in L, the Magnus matrix of w at sigma_{w'} and at sampled
/// conjugates lies in Id + p^{j(i)} Z E_{1,i+1} over Z/p^{j(i)+1}; for w in L
/// the value at sigma_w is exactly Id + p^{j(i)} E_{1,i+1} (a generator).
/// Requires |w| in I_e.
ImageCheckResult unitriangular_image_check(const FormationSpec& spec, const Word& w,
                                           int num_conjugators = 8, unsigned seed = 1);

struct ShuffleRelationResult {
    bool ok = false;
    std::string witness;
};

/// The relation sum_{w in X^s} (u*v, w) rho^0_w = 0 (s = |u|+|v| in I_e),
/// evaluated at every generator sigma_{w'}, w' in L.
ShuffleRelationResult shuffle_relation_check(const FormationSpec& spec, const Word& u,
                                             const Word& v, StarOp star);

}  // namespace lynmag
