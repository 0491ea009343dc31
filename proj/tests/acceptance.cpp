// Acceptance gate: ten structural criteria, one line each, with wall-clock
// limits where a criterion carries one. Exit 0 only if every line passes.

#include "lynmag/checks.hpp"
#include "lynmag/magnus.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace lynmag;

namespace {

struct Line {
    int id;
    std::string what;
    bool ok;
    double secs;
    double limit;  // 0 = none
    std::string detail;
};

double now_minus(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Alphabet xy() { return Alphabet({"x", "y"}); }

FormationSpec preset_a() {  // lower-p-central, p=5, n=3
    return FormationSpec::make(xy(), 3, 5, lower_p_central_j(3));
}

FormationSpec preset_b() {  // zassenhaus, p=5, t=1, n=4
    return FormationSpec::make(xy(), 4, 5, zassenhaus_j(5, 1, 4));
}

// 1. Lyndon enumeration: Witt counts (k <= 3, s <= 8) and an independent
//    suffix-filter oracle (s <= 5).
bool crit_lyndon(std::string& detail) {
    for (int k = 1; k <= 3; ++k) {
        const Alphabet al = Alphabet::latin(k);
        const std::vector<Word> ws = lyndon_words(al, 8);
        for (int s = 1; s <= 8; ++s) {
            long long c = 0;
            for (const Word& w : ws)
                if (w.length() == s)
                    ++c;
            if (BigInt(c) != witt_number(k, s)) {
                std::ostringstream os;
                os << "k=" << k << " s=" << s << ": " << c << " words, witt says "
                   << witt_number(k, s);
                detail = os.str();
                return false;
            }
        }
        for (int s = 1; s <= 5; ++s) {
            // oracle: w is Lyndon iff it is alphabetically below every proper suffix
            std::vector<Word> oracle;
            for (const Word& w : all_words(al, s)) {
                bool lyn = true;
                for (int b = 1; b < s && lyn; ++b)
                    if (cmp_alph(w, w.subword(b, s - b)) != std::strong_ordering::less)
                        lyn = false;
                if (lyn && s > 0)
                    oracle.push_back(w);
            }
            std::vector<Word> duval;
            for (const Word& w : ws)
                if (w.length() == s)
                    duval.push_back(w);
            std::sort(duval.begin(), duval.end(), alph_less);
            std::sort(oracle.begin(), oracle.end(), alph_less);
            if (duval != oracle) {
                detail = "suffix-filter oracle disagrees at k=" + std::to_string(k) +
                         " s=" + std::to_string(s);
                return false;
            }
        }
    }
    return true;
}

// 2. Expansion coefficients are compatible with the infiltration product on
//    100 sampled group words, all pairs |u|+|v| <= 4, exactly over Z.
bool crit_cfl(std::string& detail) {
    const CheckReport r = suite_cfl(xy(), 100, 8, 4, 20260823);
    if (r.status != "pass") {
        detail = r.witnesses.empty() ? "suite failed" : r.witnesses.front();
        return false;
    }
    return true;
}

// 3. Expansion of the Lie element of every Lyndon w, |w| <= 5, is
//    1 + w + later terms, checked to degree 6 over Z.
bool crit_triangularity(std::string& detail) {
    const CheckReport r = suite_triangularity(xy(), 5, 6);
    if (r.status != "pass") {
        detail = r.witnesses.empty() ? "suite failed" : r.witnesses.front();
        return false;
    }
    return true;
}

// 4. Fundamental matrices of both presets are unitriangular, with the
//    diagonal, earlier-word, and disjoint-support facts checked entrywise.
bool crit_fundamental(std::string& detail) {
    for (const FormationSpec& spec : {preset_a(), preset_b()}) {
        const CheckReport r = suite_fundamental_matrix(spec);
        if (r.status != "pass") {
            detail = r.witnesses.empty() ? "suite failed" : r.witnesses.front();
            return false;
        }
    }
    return true;
}

// 5. Product relations vanish on all generators for both presets, both
//    products, all pairs with |u|+|v| in I_e, |u|+|v| <= 4.
bool crit_relations(std::string& detail) {
    for (const FormationSpec& spec : {preset_a(), preset_b()}) {
        const CheckReport r = suite_shuffle_relations(spec, 4);
        if (r.status != "pass") {
            detail = r.witnesses.empty() ? "suite failed" : r.witnesses.front();
            return false;
        }
    }
    return true;
}

// 6. Radford change of basis: integral, unit diagonal, supported on
//    alphabetically earlier words with nonnegative coefficients (hence
//    determinant 1), k=2, s <= 5.
bool crit_radford(std::string& detail) {
    const CheckReport r = suite_radford(Alphabet::latin(2), 5);
    if (r.status != "pass") {
        detail = r.witnesses.empty() ? "suite failed" : r.witnesses.front();
        return false;
    }
    return true;
}

// 7. Indecomposable dimension mod p equals the Lyndon count for k <= 2,
//    s <= 4, p in {5,7}; the k=1, s=2, p=2 control must mismatch.
bool crit_indec(std::string& detail) {
    const CheckReport r = suite_indec(2, 4, {5, 7});
    if (r.status != "pass") {
        detail = r.witnesses.empty() ? "suite failed" : r.witnesses.front();
        return false;
    }
    return true;
}

// 8. End-to-end isomorphism reports for both presets, with the expected
//    degree profiles {1,...,n} and {1,n}.
bool crit_isomorphism(std::string& detail) {
    {
        const FormationSpec a = preset_a();
        if (a.index_set() != std::vector<int>{1, 2, 3}) {
            detail = "lower-p-central index set is not {1,...,n}";
            return false;
        }
        const CheckReport r = suite_isomorphism(a);
        if (r.status != "pass") {
            detail = r.witnesses.empty() ? "lower-p-central report not a pass"
                                         : r.witnesses.front();
            return false;
        }
    }
    {
        const FormationSpec b = preset_b();
        if (b.index_set() != std::vector<int>{1, 4}) {
            detail = "zassenhaus index set is not {1,n}";
            return false;
        }
        const CheckReport r = suite_isomorphism(b);
        if (r.status != "pass") {
            detail = r.witnesses.empty() ? "zassenhaus report not a pass" : r.witnesses.front();
            return false;
        }
    }
    return true;
}

// 9. Brute-force power containment in unitriangular groups matches the
//    arithmetic predicate on every tuple with group order <= 2^20, covering
//    i <= 3, p in {2,3}, j <= 1, j' <= 2.
bool crit_lcs(std::string& detail) {
    const CheckReport r = suite_lcs_power(3, 1, 2, {2, 3}, 1 << 20);
    if (r.status != "pass") {
        detail = r.witnesses.empty() ? "suite failed" : r.witnesses.front();
        return false;
    }
    for (const auto& [k, v] : r.params)
        if (k == "tuples_checked" && v == "0") {
            detail = "no tuples within the order bound";
            return false;
        }
    return true;
}

// 10. Three formulations of multiplicativity agree on 200 sampled pairs:
//     series product, coefficient convolution, matrix representation.
bool crit_multiplicativity(std::string& detail) {
    const Alphabet al = xy();
    const int deg = 4;
    const Ring z = Ring::integers();
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> len_d(1, 6), gen_d(0, 1), sign_d(0, 1);
    const Word probe1 = Word::parse(al, "xyxy"), probe2 = Word::parse(al, "xxyy");

    auto draw = [&] {
        GroupWord g(al);
        const int len = len_d(rng);
        for (int i = 0; i < len; ++i)
            g = g.times_gen(gen_d(rng), sign_d(rng) ? 1 : -1);
        return g;
    };

    for (int trial = 0; trial < 200; ++trial) {
        const GroupWord g1 = draw(), g2 = draw(), g12 = fg_mul(g1, g2);
        const TruncatedSeries lam1 = magnus_expand(g1, deg, z);
        const TruncatedSeries lam2 = magnus_expand(g2, deg, z);
        const TruncatedSeries lam12 = magnus_expand(g12, deg, z);

        if (concat_mul(lam1, lam2).terms() != lam12.terms()) {
            detail = "series route fails at (" + g1.str() + ", " + g2.str() + ")";
            return false;
        }
        for (int s = 0; s <= deg; ++s)
            for (const Word& w : all_words(al, s)) {
                Rational acc = 0;
                for (int cut = 0; cut <= s; ++cut)
                    acc += lam1.coeff(w.subword(0, cut)) * lam2.coeff(w.subword(cut, s - cut));
                if (acc != lam12.coeff(w)) {
                    detail = "convolution route fails at (" + g1.str() + ", " + g2.str() +
                             "), word " + w.str();
                    return false;
                }
            }
        for (const Word& probe : {probe1, probe2}) {
            const UniTriMatrix lhs = magnus_rep(probe, g12, 81);
            const UniTriMatrix rhs = magnus_rep(probe, g1, 81).mul(magnus_rep(probe, g2, 81));
            if (lhs != rhs) {
                detail = "matrix route fails at (" + g1.str() + ", " + g2.str() + "), word " +
                         probe.str();
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Line> lines;
    const std::vector<std::tuple<std::string, double, bool (*)(std::string&)>> plan = {
        {"lyndon counts match witt and the suffix oracle", 1.0, crit_lyndon},
        {"expansion coefficients multiply through infiltration", 30.0, crit_cfl},
        {"lie-element expansions are unitriangular", 60.0, crit_triangularity},
        {"fundamental matrices unitriangular, entrywise facts", 300.0, crit_fundamental},
        {"product relations vanish on all generators", 0.0, crit_relations},
        {"radford basis change integral and unitriangular", 0.0, crit_radford},
        {"indecomposable dimensions match lyndon counts", 0.0, crit_indec},
        {"isomorphism reports pass with expected profiles", 600.0, crit_isomorphism},
        {"power containment matches the arithmetic predicate", 0.0, crit_lcs},
        {"three multiplicativity formulations agree", 0.0, crit_multiplicativity},
    };

    bool all_ok = true;
    int id = 0;
    for (const auto& [what, limit, fn] : plan) {
        ++id;
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = fn(detail);
        const double secs = now_minus(t0);
        if (ok && limit > 0 && secs > limit) {
            ok = false;
            detail = "exceeded the time limit";
        }
        all_ok = all_ok && ok;
        if (limit > 0)
            std::printf("criterion %2d: %s  %s  [%.2fs, limit %.0fs]\n", id,
                        ok ? "PASS" : "FAIL", what.c_str(), secs, limit);
        else
            std::printf("criterion %2d: %s  %s  [%.2fs]\n", id, ok ? "PASS" : "FAIL",
                        what.c_str(), secs);
        if (!ok && !detail.empty())
            std::printf("              %s\n", detail.c_str());
    }
    std::printf("acceptance: %s\n", all_ok ? "all 10 criteria passed" : "FAILED");
    return all_ok ? 0 : 1;
}
