#include "lynmag/formation.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lynmag {

namespace {

bool prime_check(int p) {
    if (p < 2)
        return false;
    if (p % 2 == 0)
        return p == 2;
    for (int d = 3; static_cast<long long>(d) * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

}  // namespace

ExponentMap::ExponentMap(std::vector<BigInt> values) : e_(std::move(values)) {
    if (e_.empty())
        throw std::invalid_argument("exponent map needs at least one value");
    for (const BigInt& v : e_)
        if (v < 1)
            throw std::invalid_argument("exponent map values must be >= 1");
}

const BigInt& ExponentMap::at(int i) const {
    if (i < 1 || i > n())
        throw std::out_of_range("exponent map index out of range");
    return e_[static_cast<size_t>(i - 1)];
}

std::string ExponentMap::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 1; i <= n(); ++i) {
        if (i > 1)
            os << ",";
        os << at(i);
    }
    os << ")";
    return os.str();
}

bool is_binomial(const ExponentMap& e) {
    const int n = e.n();
    for (int ip = 1; ip <= n; ++ip) {
        for (BigInt l = 1; l <= e.at(ip); ++l) {
            if (BigInt(ip) * l > n)
                break;  // no i in range; larger l only worse
            const BigInt c = binomial(e.at(ip), l);
            const int lo = ip * static_cast<int>(l);
            for (int i = lo; i <= n; ++i)
                if (!divides(e.at(i), Rational(c)))
                    return false;
        }
    }
    return true;
}

BinomialEquivResult binomial_equiv_check(const ExponentMap& e) {
    BinomialEquivResult res;
    res.direct = is_binomial(e);

    const int n = e.n();
    bool cond = true;
    for (int ip = 1; ip <= n && cond; ++ip)
        for (BigInt l = 1; l <= e.at(ip); ++l) {
            if (BigInt(ip) * l > n)
                break;
            const int il = ip * static_cast<int>(l);
            if (!divides(e.at(il), Rational(binomial(e.at(ip), l)))) {
                cond = false;
                break;
            }
        }
    for (int ip = 1; ip <= n && cond; ++ip)
        for (int i = ip; i <= n && cond; ++i)
            if (!divides(e.at(i), Rational(e.at(ip))))
                cond = false;
    res.via_conditions = cond;
    res.agree = res.direct == res.via_conditions;
    return res;
}

std::vector<int> compute_I_e(const ExponentMap& e) {
    std::vector<int> out;
    for (int i = 1; i <= e.n(); ++i) {
        bool in = true;
        for (int ip = 1; ip <= i && in; ++ip)
            if (BigInt(ip) * e.at(ip) < BigInt(i) * e.at(i))
                in = false;
        if (in)
            out.push_back(i);
    }
    return out;
}

ExponentMap preset_gcd(const std::vector<BigInt>& a) {
    const int n = static_cast<int>(a.size()) + 1;
    if (n < 2)
        throw std::invalid_argument("gcd preset needs at least one factor");
    if (n - 1 > 20)
        throw std::invalid_argument("gcd preset supports at most 20 factors");
    for (const BigInt& v : a)
        if (v < 1)
            throw std::invalid_argument("gcd preset factors must be >= 1");

    // e(i) = gcd over all (n-i)-element subsets of the factor list.
    std::vector<BigInt> e(static_cast<size_t>(n), BigInt(0));
    const std::uint32_t masks = std::uint32_t(1) << (n - 1);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        BigInt prod = 1;
        for (int k = 0; k < n - 1; ++k)
            if (mask >> k & 1u)
                prod *= a[static_cast<size_t>(k)];
        const int i = n - std::popcount(mask);
        BigInt& g = e[static_cast<size_t>(i - 1)];
        g = boost::multiprecision::gcd(g, prod);
    }
    ExponentMap em(std::move(e));
    if (!is_binomial(em))
        throw std::logic_error("gcd preset produced a non-binomial map: " + em.str());
    return em;
}

ExponentMap preset_lower_p_central(int p, int n) {
    if (!prime_check(p))
        throw std::invalid_argument("p must be prime");
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    std::vector<BigInt> e;
    for (int i = 1; i <= n; ++i)
        e.push_back(pow_big(p, static_cast<unsigned long>(n - i)));
    ExponentMap em(std::move(e));
    if (!is_binomial(em))
        throw std::logic_error("lower-p-central preset produced a non-binomial map: " + em.str());
    return em;
}

ExponentMap preset_zassenhaus(int p, int t, int n) {
    if (!prime_check(p))
        throw std::invalid_argument("p must be prime");
    if (t < 1)
        throw std::invalid_argument("t must be >= 1");
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    std::vector<BigInt> e;
    for (int j : zassenhaus_j(p, t, n))
        e.push_back(pow_big(p, static_cast<unsigned long>(j)));
    ExponentMap em(std::move(e));
    if (!is_binomial(em))
        throw std::logic_error("zassenhaus preset produced a non-binomial map: " + em.str());
    return em;
}

std::vector<int> lower_p_central_j(int n) {
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    std::vector<int> j;
    for (int i = 1; i <= n; ++i)
        j.push_back(n - i);
    return j;
}

std::vector<int> zassenhaus_j(int p, int t, int n) {
    if (!prime_check(p))
        throw std::invalid_argument("p must be prime");
    if (t < 1 || n < 1)
        throw std::invalid_argument("t and n must be >= 1");
    std::vector<int> j;
    for (int i = 1; i <= n; ++i) {
        int k = 0;
        BigInt reach = i;
        while (reach < n) {
            reach *= p;
            ++k;
        }
        j.push_back(t * k);
    }
    return j;
}

FormationSpec::FormationSpec(Alphabet alphabet, int n, int p, std::vector<int> j,
                             std::vector<Word> L, ExponentMap e, std::vector<int> index_set)
    : alphabet_(std::move(alphabet)),
      n_(n),
      p_(p),
      j_(std::move(j)),
      L_(std::move(L)),
      e_(std::move(e)),
      index_set_(std::move(index_set)) {
    big_j_ = 1 + *std::max_element(j_.begin(), j_.end());
    mod_ = 1;
    for (int k = 0; k < big_j_; ++k)
        mod_ *= p_;
}

FormationSpec FormationSpec::make(Alphabet alphabet, int n, int p, std::vector<int> j,
                                  std::optional<std::vector<Word>> L) {
    if (n < 2)
        throw std::invalid_argument("degree bound n must be >= 2");
    if (!prime_check(p))
        throw std::invalid_argument("p must be prime");
    if (static_cast<int>(j.size()) != n)
        throw std::invalid_argument("need exactly n exponents j(1..n)");
    for (int v : j)
        if (v < 0)
            throw std::invalid_argument("j values must be >= 0");
    if (j[0] < 1)
        throw std::invalid_argument("j(1) must be >= 1 (e must not be identically 1)");

    const int big_j = 1 + *std::max_element(j.begin(), j.end());
    if (pow_big(p, static_cast<unsigned long>(big_j)) > (BigInt(1) << 31))
        throw std::invalid_argument("working modulus p^(1 + max j) exceeds 2^31");

    std::vector<BigInt> evals;
    for (int v : j)
        evals.push_back(pow_big(p, static_cast<unsigned long>(v)));
    ExponentMap e(std::move(evals));
    if (!is_binomial(e))
        throw std::invalid_argument("exponent map " + e.str() + " is not binomial");
    std::vector<int> iset = compute_I_e(e);

    std::vector<Word> words;
    if (L) {
        words = std::move(*L);
        if (words.empty())
            throw std::invalid_argument("L must be nonempty");
        for (const Word& w : words) {
            if (w.alphabet() != alphabet)
                throw std::invalid_argument("L contains a word over a different alphabet");
            if (!is_lyndon(w))
                throw std::invalid_argument("L contains a non-Lyndon word: " + w.str());
            if (w.length() > n)
                throw std::invalid_argument("L contains a word longer than n: " + w.str());
        }
        std::sort(words.begin(), words.end(), lenalph_less);
        words.erase(std::unique(words.begin(), words.end()), words.end());
    } else {
        for (const Word& w : lyndon_words(alphabet, n))
            if (std::binary_search(iset.begin(), iset.end(), w.length()))
                words.push_back(w);
    }

    return FormationSpec(std::move(alphabet), n, p, std::move(j), std::move(words), std::move(e),
                         std::move(iset));
}

int FormationSpec::j_of(int i) const {
    if (i < 1 || i > n_)
        throw std::out_of_range("index out of range");
    return j_[static_cast<size_t>(i - 1)];
}

bool FormationSpec::in_L(const Word& w) const {
    return std::find(L_.begin(), L_.end(), w) != L_.end();
}

bool FormationSpec::in_index_set(int i) const {
    return std::binary_search(index_set_.begin(), index_set_.end(), i);
}

std::int64_t FormationSpec::pj(int i) const {
    std::int64_t v = 1;
    for (int k = 0; k < j_of(i); ++k)
        v *= p_;
    return v;
}

std::int64_t FormationSpec::pj1(int i) const { return pj(i) * p_; }

GroupWord sigma_w(const FormationSpec& spec, const Word& w) {
    if (!spec.in_L(w))
        throw std::invalid_argument("word is not in L");
    const GroupWord tau = lie_element(w);
    const std::int64_t e = spec.pj(w.length());
    if (static_cast<std::int64_t>(tau.length()) * e > 4'000'000)
        throw std::length_error("flattened power too large; work with sigma_expansion instead");
    return fg_pow(tau, e);
}

namespace {

/// Expansion of sigma_{w'} mod p^J up to the given degree.
TruncatedSeries sigma_series(const FormationSpec& spec, const Word& wp, int deg) {
    const Ring r = Ring::integers_mod(spec.working_modulus());
    const TruncatedSeries lam = magnus_expand(lie_element(wp), deg, r);
    return concat_pow(lam, static_cast<unsigned long>(spec.pj(wp.length())));
}

/// pi_{|w|} of the coefficient of w: reduce mod p^{j+1}, check p^j | it,
/// divide, reduce mod p. `where` labels the coefficient in error messages.
int pi_entry(const FormationSpec& spec, const Word& w, const TruncatedSeries& lam,
             const std::string& where) {
    const int i = w.length();
    const std::int64_t pj = spec.pj(i);
    const std::int64_t pj1 = pj * spec.p();
    const BigInt raw = as_integer(lam.coeff(w));
    const std::int64_t v = static_cast<std::int64_t>(raw % pj1);
    if (v % pj != 0)
        throw std::domain_error("coefficient of " + w.str() + " at " + where + " is " +
                                raw.str() + ", not divisible by " + std::to_string(pj));
    return static_cast<int>((v / pj) % spec.p());
}

}  // namespace

TruncatedSeries sigma_expansion(const FormationSpec& spec, const Word& w_prime) {
    if (!spec.in_L(w_prime))
        throw std::invalid_argument("word is not in L");
    return sigma_series(spec, w_prime, spec.n());
}

FundamentalMatrix fundamental_matrix(const FormationSpec& spec) {
    FundamentalMatrix m;
    m.order = spec.L();
    m.p = spec.p();
    m.j = spec.j();
    const int d = m.dim();
    m.rows.assign(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), 0));
    for (int r = 0; r < d; ++r) {
        const Word& wp = m.order[static_cast<size_t>(r)];
        const TruncatedSeries lam = sigma_series(spec, wp, spec.n());
        for (int c = 0; c < d; ++c)
            m.rows[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                pi_entry(spec, m.order[static_cast<size_t>(c)], lam, "sigma_" + wp.str());
    }
    return m;
}

std::string FundamentalMatrix::str() const {
    size_t width = 1;
    for (const Word& w : order)
        width = std::max(width, w.str().size());
    std::ostringstream os;
    os << std::string(width + 1, ' ');
    for (const Word& w : order) {
        std::string s = w.str();
        os << std::string(width + 1 - s.size(), ' ') << s;
    }
    os << "\n";
    for (int r = 0; r < dim(); ++r) {
        std::string s = order[static_cast<size_t>(r)].str();
        os << std::string(width + 1 - s.size(), ' ') << s;
        for (int c = 0; c < dim(); ++c) {
            std::string v = std::to_string(at(r, c));
            os << std::string(width + 1 - v.size(), ' ') << v;
        }
        os << "\n";
    }
    return os.str();
}

bool check_unitriangular(const FundamentalMatrix& m, std::string* witness) {
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c <= r; ++c) {
            const int want = (r == c) ? 1 : 0;
            if (m.at(r, c) != want) {
                if (witness) {
                    std::ostringstream os;
                    os << "entry at row " << m.order[static_cast<size_t>(r)].str() << ", column "
                       << m.order[static_cast<size_t>(c)].str() << " is " << m.at(r, c)
                       << ", expected " << want;
                    *witness = os.str();
                }
                return false;
            }
        }
    return true;
}

int rho0_eval(const FormationSpec& spec, const Word& w, const GroupWord& g) {
    if (w.alphabet() != spec.alphabet())
        throw std::invalid_argument("word is over a different alphabet");
    if (!spec.in_index_set(w.length()))
        throw std::invalid_argument("|w| must lie in I_e");
    const Ring r = Ring::integers_mod(spec.working_modulus());
    return pi_entry(spec, w, magnus_expand(g, w.length(), r), "g = " + g.str());
}

int rho0_from_series(const FormationSpec& spec, const Word& w, const TruncatedSeries& lam) {
    if (w.alphabet() != spec.alphabet())
        throw std::invalid_argument("word is over a different alphabet");
    if (!spec.in_index_set(w.length()))
        throw std::invalid_argument("|w| must lie in I_e");
    if (lam.max_deg() < w.length())
        throw std::invalid_argument("series truncated below |w|");
    if (!lam.ring().is_mod() || lam.ring().modulus() % spec.pj1(w.length()) != 0)
        throw std::invalid_argument("series modulus does not refine p^{j(|w|)+1}");
    return pi_entry(spec, w, lam, "series");
}

ImageCheckResult unitriangular_image_check(const FormationSpec& spec, const Word& w,
                                           int num_conjugators, unsigned seed) {
    if (w.alphabet() != spec.alphabet())
        throw std::invalid_argument("word is over a different alphabet");
    const int i = w.length();
    if (!spec.in_index_set(i))
        throw std::invalid_argument("|w| must lie in I_e");
    if (num_conjugators < 0)
        throw std::invalid_argument("num_conjugators must be >= 0");

    const std::int64_t pj = spec.pj(i);
    const std::int64_t pj1 = spec.pj1(i);
    const Ring rmod = Ring::integers_mod(spec.working_modulus());

    ImageCheckResult res;
    res.ok = true;

    // Entry (r,c), 0-based r < c, of the Magnus matrix of w is the expansion
    // coefficient of the subword w[r..c). Membership in Id + p^j Z E_{1,i+1}
    // over Z/p^{j+1}: every strict-upper entry vanishes mod p^{j+1} except the
    // corner (0,i), which need only vanish mod p^j (exactly p^j mod p^{j+1}
    // for the generator itself).
    auto check_series = [&](const TruncatedSeries& lam, const std::string& tag,
                            bool exact_generator) {
        for (int r = 0; r <= i && res.ok; ++r)
            for (int c = r + 1; c <= i && res.ok; ++c) {
                const std::int64_t v =
                    static_cast<std::int64_t>(as_integer(lam.coeff(w.subword(r, c - r))) % pj1);
                const bool corner = (r == 0 && c == i);
                bool good;
                if (!corner)
                    good = v == 0;
                else if (exact_generator)
                    good = v == pj % pj1;
                else
                    good = v % pj == 0;
                if (!good) {
                    res.ok = false;
                    std::ostringstream os;
                    os << "w=" << w.str() << " at " << tag << ": entry (" << r + 1 << ","
                       << c + 1 << ") = " << v << " mod " << pj1 << " violates ";
                    os << (corner ? (exact_generator ? "corner = p^j" : "p^j | corner")
                                  : "entry = 0");
                    res.witness = os.str();
                }
            }
    };

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick_len(1, 4);
    std::uniform_int_distribution<int> pick_gen(0, spec.alphabet().size() - 1);
    std::uniform_int_distribution<int> pick_sign(0, 1);
    auto random_conjugator = [&]() {
        GroupWord g(spec.alphabet());
        const int len = pick_len(rng);
        for (int t = 0; t < len; ++t)
            g = g.times_gen(pick_gen(rng), pick_sign(rng) ? 1 : -1);
        return g;
    };

    for (const Word& wp : spec.L()) {
        if (!res.ok)
            break;
        const TruncatedSeries base = sigma_series(spec, wp, i);
        check_series(base, "sigma_" + wp.str(), wp == w);
        for (int t = 0; t < num_conjugators && res.ok; ++t) {
            const GroupWord lambda = random_conjugator();
            const TruncatedSeries conj_lam = magnus_expand(lambda, i, rmod);
            const TruncatedSeries conj =
                concat_mul(concat_mul(conj_lam, base), invert_unit(conj_lam));
            check_series(conj, "conjugate #" + std::to_string(t + 1) + " of sigma_" + wp.str(),
                         false);
        }
    }
    return res;
}

ShuffleRelationResult shuffle_relation_check(const FormationSpec& spec, const Word& u,
                                             const Word& v, StarOp star) {
    if (u.alphabet() != spec.alphabet() || v.alphabet() != spec.alphabet())
        throw std::invalid_argument("words are over a different alphabet");
    if (u.is_empty() || v.is_empty())
        throw std::invalid_argument("u and v must be nonempty");
    const int s = u.length() + v.length();
    if (!spec.in_index_set(s))
        throw std::invalid_argument("|u|+|v| must lie in I_e");

    // Only words of length s enter the relation, so for the infiltration
    // product everything below the top degree is discarded up front.
    const NCPoly top = star_product(star, u, v).homogeneous_part(s);
    const int p = spec.p();

    ShuffleRelationResult res;
    res.ok = true;
    for (const Word& wp : spec.L()) {
        const TruncatedSeries lam = sigma_series(spec, wp, s);
        BigInt acc = 0;
        for (const auto& [idx, c] : top.terms())
            acc += as_integer(c) * pi_entry(spec, top.word_at(idx), lam, "sigma_" + wp.str());
        if ((acc % p + p) % p != 0) {
            res.ok = false;
            std::ostringstream os;
            os << u.str() << (star == StarOp::shuffle ? " shuffle " : " infiltration ") << v.str()
               << " pairs to " << (acc % p + p) % p << " (mod " << p << ") at sigma_"
               << wp.str();
            res.witness = os.str();
            return res;
        }
    }
    return res;
}

}  // namespace lynmag
