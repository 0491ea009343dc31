#pragma once

#include "lynmag/formation.hpp"
#include "lynmag/shuffle_indec.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lynmag {

/// Outcome of one verification suite. Witnesses carry concrete
/// counterexamples; notes state the claim strength (exhaustively verified
/// versus randomly sampled).
struct CheckReport {
    std::string suite;
    std::string status = "pass";  // "pass" | "fail" | "warning"
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;
    unsigned seed = 0;
    double seconds = 0.0;

    int exit_code() const { return status == "fail" ? 1 : 0; }
    std::string str() const;
};

/// Binomiality: both characterizations agree on presets and random maps;
/// zassenhaus index sets match the ceil(n/p^k) profile.
CheckReport suite_binomial(unsigned seed);

/// Star-product compatibility on random group words: the coefficient of the
/// infiltration u|v in the expansion equals the product of the u and v
/// coefficients, exactly over the integers.
CheckReport suite_cfl(const Alphabet& alphabet, int words, int max_word_len, int max_pair_len,
                      unsigned seed);

/// Expansion of every Lie element is 1 + w + later terms, over the integers.
CheckReport suite_triangularity(const Alphabet& alphabet, int max_len, int deg);

/// Fundamental matrix unitriangular, with the entrywise vanishing /
/// diagonal-value facts behind it checked on the raw coefficients.
CheckReport suite_fundamental_matrix(const FormationSpec& spec);

/// Brute-force group-theoretic power-containment criterion versus its
/// arithmetic predicate, over all parameter tuples within the order bound.
CheckReport suite_lcs_power(int max_i, int max_j, int max_jp, const std::vector<int>& primes,
                            long long max_order);

/// Magnus matrices of generators (and sampled conjugates) lie in the corner
/// subgroup, for every w in L.
CheckReport suite_image(const FormationSpec& spec, int conjugators, unsigned seed);

/// Degree-s product relations vanish on all generators, for s in I_e up to
/// max_s, both products.
CheckReport suite_shuffle_relations(const FormationSpec& spec, int max_s);

/// Radford basis change unitriangular with nonnegative entries, s <= max_s.
CheckReport suite_radford(const Alphabet& alphabet, int max_s);

/// Indecomposable dimension equals the Lyndon count whenever p > s, plus the
/// small-p negative control that is expected to mismatch.
CheckReport suite_indec(int max_k, int max_s, const std::vector<int>& primes);

/// Full degree-by-degree isomorphism report wrapped as a suite.
CheckReport suite_isomorphism(const FormationSpec& spec);

}  // namespace lynmag
