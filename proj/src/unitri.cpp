#include "lynmag/unitri.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

namespace lynmag {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Unitriangular n x n matrices over Z/m, packed into one 64-bit code: the
// strict upper-triangular entries in row-major order, each in a fixed-width
// bit field. The identity packs to 0. Any group of order <= 2^20 fits.
struct PackedGroup {
    int n;
    i64 m;
    int bits;
    u64 field_mask;
    std::vector<std::pair<int, int>> cells;

    using Mat = std::array<i64, 64>;

    PackedGroup(int size, i64 modulus) : n(size), m(modulus) {
        if (n < 2 || n > 8)
            throw std::invalid_argument("PackedGroup: matrix size out of range");
        bits = 1;
        while ((i64{1} << bits) < m)
            ++bits;
        field_mask = (u64{1} << bits) - 1;
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c)
                cells.emplace_back(r, c);
        if (bits * static_cast<int>(cells.size()) > 64)
            throw std::length_error("PackedGroup: does not fit in 64 bits");
    }

    void unpack(u64 code, Mat& a) const {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                a[static_cast<size_t>(r * n + c)] = r == c ? 1 : 0;
        for (size_t k = 0; k < cells.size(); ++k)
            a[static_cast<size_t>(cells[k].first * n + cells[k].second)] =
                static_cast<i64>((code >> (bits * static_cast<int>(k))) & field_mask);
    }

    u64 pack(const Mat& a) const {
        u64 code = 0;
        for (size_t k = 0; k < cells.size(); ++k)
            code |= static_cast<u64>(a[static_cast<size_t>(cells[k].first * n + cells[k].second)])
                    << (bits * static_cast<int>(k));
        return code;
    }

    u64 mul(u64 x, u64 y) const {
        Mat a, b;
        unpack(x, a);
        unpack(y, b);
        Mat c{};
        for (int r = 0; r < n; ++r)
            for (int col = r; col < n; ++col) {
                i64 acc = 0;
                for (int k = r; k <= col; ++k)
                    acc += a[static_cast<size_t>(r * n + k)] * b[static_cast<size_t>(k * n + col)];
                c[static_cast<size_t>(r * n + col)] = acc % m;
            }
        return pack(c);
    }

    u64 inv(u64 x) const {
        // (I + N)^{-1} = I - N + N^2 - ... with N nilpotent of index <= n
        Mat a;
        unpack(x, a);
        Mat nmat = a;
        for (int d = 0; d < n; ++d)
            nmat[static_cast<size_t>(d * n + d)] = 0;
        Mat acc{}, pw = nmat;
        for (int d = 0; d < n; ++d)
            acc[static_cast<size_t>(d * n + d)] = 1;
        int sign = -1;
        for (int k = 1; k < n; ++k) {
            for (int r = 0; r < n; ++r)
                for (int col = r + 1; col < n; ++col) {
                    i64 v = acc[static_cast<size_t>(r * n + col)] +
                            sign * pw[static_cast<size_t>(r * n + col)];
                    v %= m;
                    if (v < 0)
                        v += m;
                    acc[static_cast<size_t>(r * n + col)] = v;
                }
            // pw <- pw * nmat
            Mat next{};
            for (int r = 0; r < n; ++r)
                for (int col = r; col < n; ++col) {
                    i64 s = 0;
                    for (int k2 = r; k2 <= col; ++k2)
                        s += pw[static_cast<size_t>(r * n + k2)] *
                             nmat[static_cast<size_t>(k2 * n + col)];
                    next[static_cast<size_t>(r * n + col)] = s % m;
                }
            pw = next;
            sign = -sign;
        }
        return pack(acc);
    }

    u64 pw(u64 x, u64 e) const {
        u64 r = 0;  // identity
        u64 b = x;
        while (e) {
            if (e & 1)
                r = mul(r, b);
            e >>= 1;
            if (e)
                b = mul(b, b);
        }
        return r;
    }

    u64 conj(u64 g, u64 x) const { return mul(mul(g, x), inv(g)); }
    u64 comm(u64 a, u64 b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
};

// Smallest subgroup containing the given set: breadth-first closure under
// right multiplication (a finite subsemigroup of a group is a subgroup).
std::unordered_set<u64> subgroup_closure(const PackedGroup& G, const std::vector<u64>& gens,
                                         u64 order_bound) {
    std::unordered_set<u64> seen;
    std::vector<u64> queue;
    seen.insert(0);
    queue.push_back(0);
    for (size_t head = 0; head < queue.size(); ++head) {
        u64 x = queue[head];
        for (u64 g : gens) {
            u64 y = G.mul(x, g);
            if (seen.insert(y).second) {
                if (seen.size() > order_bound)
                    throw std::length_error("subgroup closure exceeded the size bound");
                queue.push_back(y);
            }
        }
    }
    return seen;
}

// Closure of a seed set under conjugation by the whole group generated by
// conj_gens (reached via repeated conjugation by the generators and their
// inverses).
std::vector<u64> conjugation_closure(const PackedGroup& G, const std::vector<u64>& seeds,
                                     const std::vector<u64>& conj_gens) {
    std::vector<u64> conjs;
    for (u64 g : conj_gens) {
        conjs.push_back(g);
        conjs.push_back(G.inv(g));
    }
    std::unordered_set<u64> seen(seeds.begin(), seeds.end());
    std::vector<u64> queue(seeds.begin(), seeds.end());
    for (size_t head = 0; head < queue.size(); ++head) {
        u64 x = queue[head];
        for (u64 g : conjs) {
            u64 y = G.conj(g, x);
            if (seen.insert(y).second)
                queue.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

LcsPowerResult verify_lcs_power_containment(int i, int i_prime, int p, int j, int j_prime,
                                            u64 max_order) {
    if (i < 1 || i_prime < 1 || i_prime > i)
        throw std::invalid_argument("verify_lcs_power_containment: need i >= i' >= 1");
    if (j < 0 || j_prime < 0)
        throw std::invalid_argument("verify_lcs_power_containment: need j, j' >= 0");
    if (p < 2)
        throw std::invalid_argument("verify_lcs_power_containment: p must be >= 2");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("verify_lcs_power_containment: p must be prime");

    i64 m = 1;
    for (int t = 0; t <= j; ++t) {
        m *= p;
        if (m > (i64{1} << 21))
            throw std::length_error("verify_lcs_power_containment: modulus too large");
    }

    const int cells = i * (i + 1) / 2;
    u64 order = 1;
    for (int t = 0; t < cells; ++t) {
        order *= static_cast<u64>(m);
        if (order > max_order)
            throw std::length_error("verify_lcs_power_containment: group order exceeds bound");
    }

    PackedGroup G(i + 1, m);

    // superdiagonal elementaries I + E_{k,k+1}
    std::vector<u64> gens;
    for (int k = 0; k < i; ++k) {
        PackedGroup::Mat a{};
        for (int d = 0; d <= i; ++d)
            a[static_cast<size_t>(d * (i + 1) + d)] = 1;
        a[static_cast<size_t>(k * (i + 1) + k + 1)] = 1;
        gens.push_back(G.pack(a));
    }

    std::unordered_set<u64> full = subgroup_closure(G, gens, order);
    if (full.size() != order)
        throw std::logic_error(
            "verify_lcs_power_containment: elementary generators failed to generate U_i");

    // lower central terms: term(1) = G, term(c+1) = [G, term(c)], each as the
    // normal closure of generator commutators
    std::vector<u64> term(full.begin(), full.end());
    for (int c = 2; c <= i_prime; ++c) {
        const std::vector<u64>& second = c == 2 ? gens : term;
        std::vector<u64> seeds;
        std::unordered_set<u64> seed_set;
        for (u64 g : gens)
            for (u64 h : second) {
                u64 x = G.comm(g, h);
                if (seed_set.insert(x).second)
                    seeds.push_back(x);
            }
        std::vector<u64> normal_gens = conjugation_closure(G, seeds, gens);
        std::unordered_set<u64> sub = subgroup_closure(G, normal_gens, order);
        term.assign(sub.begin(), sub.end());
    }

    LcsPowerResult res;
    res.group_order = order;
    res.lcs_order = term.size();

    u64 exponent = 1;
    for (int t = 0; t < j_prime; ++t)
        exponent *= static_cast<u64>(p);
    i64 pj = 1;
    for (int t = 0; t < j; ++t)
        pj *= p;

    res.containment = true;
    PackedGroup::Mat a;
    for (u64 h : term) {
        u64 y = G.pw(h, exponent);
        G.unpack(y, a);
        bool inside = a[static_cast<size_t>(i)] % pj == 0;  // entry (1, i+1): row 0, col i
        for (int r = 0; r <= i && inside; ++r)
            for (int col = r + 1; col <= i; ++col)
                if (!(r == 0 && col == i) && a[static_cast<size_t>(r * (i + 1) + col)] != 0) {
                    inside = false;
                    break;
                }
        if (!inside) {
            res.containment = false;
            break;
        }
    }

    res.predicate = static_cast<i64>(i_prime) * static_cast<i64>(exponent) >=
                    static_cast<i64>(i) * pj;
    res.agree = res.containment == res.predicate;
    return res;
}

}  // namespace lynmag
