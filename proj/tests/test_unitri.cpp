#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lynmag/unitri.hpp"

#include <stdexcept>

using namespace lynmag;

TEST_CASE("pinned small cases") {
    LcsPowerResult r = verify_lcs_power_containment(2, 1, 2, 0, 1);
    CHECK(r.group_order == 8);
    CHECK(r.lcs_order == 8);
    CHECK(r.predicate);
    CHECK(r.containment);
    CHECK(r.agree);

    r = verify_lcs_power_containment(2, 1, 2, 0, 0);
    CHECK(!r.predicate);
    CHECK(!r.containment);
    CHECK(r.agree);

    r = verify_lcs_power_containment(2, 2, 3, 0, 0);
    CHECK(r.group_order == 27);
    CHECK(r.lcs_order == 3);  // commutator subgroup of U_2(Z/3)
    CHECK(r.predicate);
    CHECK(r.containment);
    CHECK(r.agree);
}

TEST_CASE("lower central term orders follow the superdiagonal pattern") {
    // U_3(Z/4): terms have orders m^6, m^3, m with m = 4
    LcsPowerResult r1 = verify_lcs_power_containment(3, 1, 2, 1, 0);
    CHECK(r1.group_order == 4096);
    CHECK(r1.lcs_order == 4096);
    LcsPowerResult r2 = verify_lcs_power_containment(3, 2, 2, 1, 0);
    CHECK(r2.lcs_order == 64);
    LcsPowerResult r3 = verify_lcs_power_containment(3, 3, 2, 1, 0);
    CHECK(r3.lcs_order == 4);
}

TEST_CASE("equivalence holds across a small sweep") {
    for (int p : {2, 3})
        for (int i = 1; i <= 2; ++i)
            for (int ip = 1; ip <= i; ++ip)
                for (int j = 0; j <= 1; ++j)
                    for (int jp = 0; jp <= 2; ++jp) {
                        LcsPowerResult r = verify_lcs_power_containment(i, ip, p, j, jp);
                        CAPTURE(i);
                        CAPTURE(ip);
                        CAPTURE(p);
                        CAPTURE(j);
                        CAPTURE(jp);
                        CHECK(r.agree);
                    }
    // a couple of 4x4 cases on top
    CHECK(verify_lcs_power_containment(3, 2, 2, 0, 1).agree);
    CHECK(verify_lcs_power_containment(3, 3, 3, 0, 0).agree);
    CHECK(verify_lcs_power_containment(3, 1, 2, 1, 2).agree);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(verify_lcs_power_containment(1, 2, 2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_lcs_power_containment(0, 0, 2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_lcs_power_containment(2, 1, 4, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_lcs_power_containment(2, 1, 2, -1, 0), std::invalid_argument);
    // order bound: |U_3(Z/9)| = 9^6 > 2^16
    CHECK_THROWS_AS(verify_lcs_power_containment(3, 1, 3, 1, 0, std::uint64_t{1} << 16),
                    std::length_error);
}
