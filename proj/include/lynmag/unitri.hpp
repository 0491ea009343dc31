#pragma once

#include <cstdint>

namespace lynmag {

struct LcsPowerResult {
    /// Every p^{j'}-th power of the i'-th lower central term of U_i(Z/p^{j+1})
    /// lies in Id + p^j Z E_{1,i+1}.
    bool containment = false;
    /// The arithmetic side of the equivalence: i' * p^{j'} >= i * p^j
    /// (integer form of j' >= j + log_p(i/i')).
    bool predicate = false;
    bool agree = false;
    std::uint64_t group_order = 0;  // |U_i(Z/p^{j+1})|
    std::uint64_t lcs_order = 0;    // |U_i(Z/p^{j+1})^{(i')}|
};

/// Exhaustively decide whether (U_i(Z/p^{j+1})^{(i')})^{p^{j'}} is contained
/// in Id + p^j Z E_{1,i+1}, and compare with the closed-form predicate.
///
/// The full group is materialized by closure from the superdiagonal
/// elementary generators (the generation claim itself is verified by
/// counting), lower central terms are built by normal-closure of generator
/// commutators, and every element of the term is raised to the p^{j'}-th
/// power. Requires i >= i' >= 1, j, j' >= 0, p prime.
///
/// Throws std::length_error when |U_i(Z/p^{j+1})| exceeds max_order.
LcsPowerResult verify_lcs_power_containment(int i, int i_prime, int p, int j, int j_prime,
                                            std::uint64_t max_order = std::uint64_t{1} << 20);

}  // namespace lynmag
