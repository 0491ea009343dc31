#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lynmag/words.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace lynmag;

namespace {

// Oracle: definition straight from the order — nonempty and alphabetically
// smaller than every proper suffix.
bool lyndon_by_suffixes(const Word& w) {
    if (w.length() == 0)
        return false;
    for (int i = 1; i < w.length(); ++i)
        if (cmp_alph(w, w.subword(i, w.length() - i)) != std::strong_ordering::less)
            return false;
    return true;
}

// Oracle: strictly smallest among its nontrivial rotations.
bool lyndon_by_rotations(const Word& w) {
    if (w.length() == 0)
        return false;
    const std::string& s = w.indices();
    for (size_t i = 1; i < s.size(); ++i) {
        std::string rot = s.substr(i) + s.substr(0, i);
        if (rot <= s)
            return false;
    }
    return true;
}

// Oracle CFL: repeatedly strip the longest Lyndon prefix.
std::vector<Word> greedy_cfl(const Word& w) {
    std::vector<Word> out;
    Word rest = w;
    while (rest.length() > 0) {
        int best = 1;
        for (int l = 2; l <= rest.length(); ++l)
            if (lyndon_by_suffixes(rest.subword(0, l)))
                best = l;
        out.push_back(rest.subword(0, best));
        rest = rest.subword(best, rest.length() - best);
    }
    return out;
}

Word mk(const Alphabet& al, const std::string& s) { return Word::parse(al, s); }

}  // namespace

TEST_CASE("alphabet basics") {
    Alphabet al = Alphabet::latin(3);
    CHECK(al.size() == 3);
    CHECK(al.letter(0) == "a");
    CHECK(al.letter(2) == "c");
    CHECK(al.index_of("b") == 1);
    CHECK(al.index_of("z") == -1);
    CHECK_THROWS_AS(Alphabet({"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({""}), std::invalid_argument);

    Alphabet named({"x1", "x2"});
    Word w = mk(named, "x1 x2 x1");
    CHECK(w.length() == 3);
    CHECK(w.str() == "x1 x2 x1");
    CHECK(mk(named, "") == Word::empty(named));
    CHECK_THROWS_AS(mk(named, "x1 y"), std::invalid_argument);
}

TEST_CASE("word parse and concat") {
    Alphabet al = Alphabet::latin(2);
    Word w = mk(al, "aab");
    CHECK(w.length() == 3);
    CHECK(w.letter(2) == 1);
    CHECK(w.str() == "aab");
    CHECK(w.concat(mk(al, "ba")).str() == "aabba");
    CHECK(w.subword(1, 2).str() == "ab");
    CHECK_THROWS_AS(mk(al, "abc"), std::invalid_argument);
}

TEST_CASE("alphabetical and length-alphabetical orders") {
    Alphabet al = Alphabet::latin(2);
    auto a = mk(al, "a"), b = mk(al, "b"), ab = mk(al, "ab"), ba = mk(al, "ba");

    // proper prefix is alphabetically smaller
    CHECK(cmp_alph(a, ab) == std::strong_ordering::less);
    CHECK(cmp_alph(ab, b) == std::strong_ordering::less);
    CHECK(cmp_alph(ab, ab) == std::strong_ordering::equal);
    CHECK(alph_less(Word::empty(al), a));

    // length first, then alphabetical
    CHECK(cmp_lenalph(b, ab) == std::strong_ordering::less);
    CHECK(cmp_lenalph(ab, ba) == std::strong_ordering::less);
    CHECK(lenalph_less(a, b));

    // the index-string comparator agrees with cmp_lenalph
    LenAlphIdxLess idx_less;
    std::vector<Word> words = {a, b, ab, ba, mk(al, "aab"), mk(al, "bb"), Word::empty(al)};
    for (const auto& u : words)
        for (const auto& v : words)
            CHECK(idx_less(u.indices(), v.indices()) == lenalph_less(u, v));
}

TEST_CASE("lyndon recognition against two oracles") {
    for (int k : {1, 2, 3}) {
        Alphabet al = Alphabet::latin(k);
        int max_len = k == 3 ? 5 : 7;
        for (int s = 0; s <= max_len; ++s)
            for (const Word& w : all_words(al, s)) {
                bool expect = lyndon_by_suffixes(w);
                CHECK(is_lyndon(w) == expect);
                CHECK(lyndon_by_rotations(w) == expect);
            }
    }
}

TEST_CASE("lyndon words on two letters through length 5") {
    Alphabet al = Alphabet::latin(2);
    std::vector<std::string> expect = {"a", "b", "ab", "aab", "abb", "aaab", "aabb", "abbb",
                                       "aaaab", "aaabb", "aabab", "aabbb", "ababb", "abbbb"};
    std::vector<Word> got = lyndon_words(al, 5);
    REQUIRE(got.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i)
        CHECK(got[i].str() == expect[i]);
}

TEST_CASE("lyndon enumeration is sorted and counted by witt numbers") {
    for (int k : {1, 2, 3}) {
        Alphabet al = Alphabet::latin(k);
        int max_len = k == 3 ? 6 : 8;
        std::vector<Word> ws = lyndon_words(al, max_len);
        for (size_t i = 1; i < ws.size(); ++i)
            CHECK(lenalph_less(ws[i - 1], ws[i]));
        std::vector<int> per_len(max_len + 1, 0);
        for (const auto& w : ws) {
            CHECK(is_lyndon(w));
            ++per_len[w.length()];
        }
        for (int s = 1; s <= max_len; ++s)
            CHECK(BigInt(per_len[s]) == witt_number(k, s));
    }
}

TEST_CASE("witt numbers") {
    CHECK(witt_number(1, 1) == 1);
    CHECK(witt_number(1, 4) == 0);
    CHECK(witt_number(2, 1) == 2);
    CHECK(witt_number(2, 2) == 1);
    CHECK(witt_number(2, 3) == 2);
    CHECK(witt_number(2, 4) == 3);
    CHECK(witt_number(2, 5) == 6);
    CHECK(witt_number(2, 6) == 9);
    CHECK(witt_number(2, 7) == 18);
    CHECK(witt_number(2, 8) == 30);
    CHECK(witt_number(3, 2) == 3);
    CHECK(witt_number(3, 3) == 8);
    CHECK(witt_number(3, 4) == 18);
}

TEST_CASE("standard factorization") {
    Alphabet al = Alphabet::latin(2);
    auto [u1, v1] = standard_factorization(mk(al, "aabab"));
    CHECK(u1.str() == "aab");
    CHECK(v1.str() == "ab");
    auto [u2, v2] = standard_factorization(mk(al, "aaabb"));
    CHECK(u2.str() == "a");
    CHECK(v2.str() == "aabb");
    CHECK_THROWS_AS(standard_factorization(mk(al, "a")), std::invalid_argument);
    CHECK_THROWS_AS(standard_factorization(mk(al, "ba")), std::invalid_argument);

    // against the defining property: v is the longest proper Lyndon suffix
    for (int k : {2, 3}) {
        Alphabet a2 = Alphabet::latin(k);
        for (const Word& w : lyndon_words(a2, 6)) {
            if (w.length() < 2)
                continue;
            auto [u, v] = standard_factorization(w);
            CHECK(u.concat(v) == w);
            CHECK(is_lyndon(u));
            CHECK(is_lyndon(v));
            CHECK(alph_less(u, v));
            int longest = 0;
            for (int i = 1; i < w.length(); ++i)
                if (lyndon_by_suffixes(w.subword(i, w.length() - i))) {
                    longest = w.length() - i;
                    break;
                }
            CHECK(v.length() == longest);
        }
    }
}

TEST_CASE("chen-fox-lyndon factorization") {
    Alphabet al = Alphabet::latin(2);

    auto fmt = [](const std::vector<std::pair<Word, int>>& f) {
        std::string s;
        for (const auto& [w, m] : f)
            s += "(" + w.str() + "," + std::to_string(m) + ")";
        return s;
    };
    CHECK(fmt(cfl_factorization(mk(al, "abab"))) == "(ab,2)");
    CHECK(fmt(cfl_factorization(mk(al, "bbaba"))) == "(b,2)(ab,1)(a,1)");
    CHECK(fmt(cfl_factorization(mk(al, "aabab"))) == "(aabab,1)");
    CHECK_THROWS_AS(cfl_factorization(Word::empty(al)), std::invalid_argument);

    // exhaustive cross-check against the greedy longest-Lyndon-prefix oracle
    for (int k : {2, 3}) {
        Alphabet a2 = Alphabet::latin(k);
        int max_len = k == 3 ? 5 : 8;
        for (int s = 1; s <= max_len; ++s)
            for (const Word& w : all_words(a2, s)) {
                std::vector<Word> expect_flat = greedy_cfl(w);
                auto got = cfl_factorization(w);
                std::vector<Word> got_flat;
                for (const auto& [f, m] : got) {
                    CHECK(m >= 1);
                    CHECK(is_lyndon(f));
                    for (int r = 0; r < m; ++r)
                        got_flat.push_back(f);
                }
                CHECK(got_flat == expect_flat);
                // factors strictly decrease after run-compression
                for (size_t i = 1; i < got.size(); ++i)
                    CHECK(alph_less(got[i].first, got[i - 1].first));
                // flat factors non-increasing and concatenation restores w
                Word acc = Word::empty(a2);
                for (const auto& f : got_flat)
                    acc = acc.concat(f);
                CHECK(acc == w);
            }
    }
}

TEST_CASE("all_words enumerates k^s words in alphabetical order") {
    Alphabet al = Alphabet::latin(3);
    size_t expect_count = 1;
    for (int s = 0; s <= 4; ++s, expect_count *= 3) {
        std::vector<Word> ws = all_words(al, s);
        CHECK(ws.size() == expect_count);
        std::set<std::string> seen;
        for (const auto& w : ws) {
            CHECK(w.length() == s);
            seen.insert(w.indices());
        }
        CHECK(seen.size() == ws.size());
        for (size_t i = 1; i < ws.size(); ++i)
            CHECK(ws[i - 1].indices() < ws[i].indices());
    }
}

TEST_CASE("letter support") {
    Alphabet al = Alphabet::latin(3);
    auto sup = mk(al, "aca").letter_support();
    REQUIRE(sup.size() == 3);
    CHECK(sup[0]);
    CHECK(!sup[1]);
    CHECK(sup[2]);
}
