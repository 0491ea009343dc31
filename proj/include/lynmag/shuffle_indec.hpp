#pragma once

#include "lynmag/formation.hpp"
#include "lynmag/ncpoly.hpp"
#include "lynmag/words.hpp"

#include <string>
#include <vector>

namespace lynmag {

/// Dense matrix over Z/p, used for rank computations.
class FpMatrix {
  public:
    FpMatrix(int p, int rows, int cols);

    int p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int r, int c) const { return ent_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, long long v);

    /// Rank by Gaussian elimination (non-destructive).
    int rank() const;

    std::string str() const;

  private:
    int p_, rows_, cols_;
    std::vector<int> ent_;
};

/// For w with factorization u_1^{k_1}...u_t^{k_t} into strictly decreasing
/// Lyndon words: Q_w = (1/(k_1!...k_t!)) u_1^{sh k_1} sh ... sh u_t^{sh k_t},
/// computed over the rationals; the result is integral (asserted) and
/// homogeneous of degree |w|.
NCPoly q_polynomial(const Word& w);

struct RadfordCheckResult {
    bool ok = false;
    std::string witness;
};

/// For every w of length s: Q_w = w + nonnegative combination of words
/// alphabetically below w (same length). In the word basis this makes the
/// Q-matrix triangular with unit diagonal, so {Q_w} and {w} span the same
/// lattice.
RadfordCheckResult radford_basis_check(const Alphabet& alphabet, int s);

/// Rank over Z/p of the span of the degree-s products u*v (|u|,|v| >= 1,
/// |u|+|v| = s) inside the k^s-dimensional word space. For the infiltration
/// product only the degree-s part of u*v enters.
int decomposable_rank(const Alphabet& alphabet, int s, int p, StarOp star = StarOp::shuffle);

struct IndecReport {
    int degree = 0;
    int word_count = 0;        // k^s
    int decomposable_rank = 0;
    int indec_dim = 0;         // word_count - decomposable_rank
    int lyndon_count = 0;
    bool match = false;        // indec_dim == lyndon_count
    bool lyndon_span_ok = false;  // Lyndon words + decomposables span the degree
};

/// Dimension of the degree-s piece of the quotient of the shuffle algebra by
/// products, over Z/p. When p > s this equals the number of Lyndon words of
/// length s, and the Lyndon words span the quotient; the report records
/// whether both hold.
IndecReport indec_dimension(const Alphabet& alphabet, int s, int p);

struct IsoDegreeRow {
    int degree = 0;
    int lhs_dim = 0;          // indecomposables of degree s over Z/p
    int rhs_basis_size = 0;   // Lyndon words of length s
    std::vector<Word> basis;  // those words; each corresponds to rho0_w
    bool match = false;
};

struct IsomorphismReport {
    int n = 0;
    int p = 0;
    std::vector<IsoDegreeRow> rows;   // one per degree in I_e
    int relation_pairs_checked = 0;
    bool fundamental_ok = false;      // fundamental matrix unitriangular
    bool relations_ok = false;        // degree-s product relations vanish
    bool dims_ok = false;             // every row matches
    bool hypotheses_met = false;      // n < p and L = all Lyndon words, lengths in I_e
    std::vector<std::string> warnings;
    std::string status;               // "pass" | "warning" | "fail"
    std::string note;
};

/// Degree-by-degree comparison of the indecomposable quotient with the span
/// of the functionals rho0_w, plus the two certifications that make the
/// comparison meaningful: the fundamental matrix is unitriangular (so the
/// rho0_w are independent) and the product relations vanish on generators (so
/// products die in the target). "pass" requires the hypotheses n < p and
/// L = all Lyndon words with lengths in I_e; otherwise at best "warning".
IsomorphismReport isomorphism_report(const FormationSpec& spec);

}  // namespace lynmag
