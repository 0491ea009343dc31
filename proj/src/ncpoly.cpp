#include "lynmag/ncpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace lynmag {

namespace {

void require_compatible(const Alphabet& a1, const Ring& r1, const Alphabet& a2, const Ring& r2) {
    if (a1 != a2)
        throw std::invalid_argument("mismatched alphabets");
    if (r1 != r2)
        throw std::invalid_argument("mismatched coefficient rings");
}

void accumulate(TermMap& terms, const Ring& ring, const std::string& idx, const Rational& c) {
    Rational v = ring.normalize(c);
    if (v == 0)
        return;
    auto it = terms.find(idx);
    if (it == terms.end()) {
        terms.emplace(idx, std::move(v));
        return;
    }
    it->second = ring.add(it->second, v);
    if (it->second == 0)
        terms.erase(it);
}

std::string pretty(const Alphabet& alphabet, const TermMap& terms) {
    if (terms.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : terms) {
        Rational a = c;
        bool neg = a < 0;
        if (neg)
            a = -a;
        if (first) {
            if (neg)
                out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string w = Word(alphabet, idx).str();
        if (w.empty())
            out << a;
        else if (a == 1)
            out << w;
        else
            out << a << " " << w;
    }
    return out.str();
}

}  // namespace

NCPoly NCPoly::monomial(const Word& w, const Rational& c, Ring ring) {
    NCPoly p(w.alphabet(), std::move(ring));
    p.add_term(w, c);
    return p;
}

int NCPoly::max_degree() const {
    return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size());
}

Rational NCPoly::coeff(const Word& w) const {
    if (w.alphabet() != alphabet_)
        throw std::invalid_argument("mismatched alphabets");
    return coeff_idx(w.indices());
}

Rational NCPoly::coeff_idx(const std::string& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
    if (w.alphabet() != alphabet_)
        throw std::invalid_argument("mismatched alphabets");
    accumulate(terms_, ring_, w.indices(), c);
}

void NCPoly::add_term_idx(const std::string& idx, const Rational& c) {
    accumulate(terms_, ring_, idx, c);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    require_compatible(alphabet_, ring_, o.alphabet_, o.ring_);
    for (const auto& [idx, c] : o.terms_)
        accumulate(terms_, ring_, idx, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    require_compatible(alphabet_, ring_, o.alphabet_, o.ring_);
    for (const auto& [idx, c] : o.terms_)
        accumulate(terms_, ring_, idx, -c);
    return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    r += o;
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    r -= o;
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(alphabet_, ring_);
    for (const auto& [idx, c] : terms_)
        r.terms_.emplace(idx, ring_.neg(c));
    return r;
}

NCPoly NCPoly::scaled(const Rational& c) const {
    NCPoly r(alphabet_, ring_);
    for (const auto& [idx, v] : terms_)
        accumulate(r.terms_, ring_, idx, v * c);
    return r;
}

NCPoly NCPoly::homogeneous_part(int s) const {
    if (s < 0)
        throw std::invalid_argument("homogeneous_part: s must be >= 0");
    NCPoly r(alphabet_, ring_);
    for (const auto& [idx, c] : terms_)
        if (static_cast<int>(idx.size()) == s)
            r.terms_.emplace(idx, c);
    return r;
}

NCPoly NCPoly::with_ring(const Ring& r) const {
    NCPoly out(alphabet_, r);
    for (const auto& [idx, c] : terms_)
        accumulate(out.terms_, r, idx, c);
    return out;
}

bool NCPoly::operator==(const NCPoly& o) const {
    return alphabet_ == o.alphabet_ && ring_ == o.ring_ && terms_ == o.terms_;
}

std::string NCPoly::str() const { return pretty(alphabet_, terms_); }

TruncatedSeries::TruncatedSeries(Alphabet alphabet, Ring ring, int max_deg)
    : alphabet_(std::move(alphabet)), ring_(std::move(ring)), max_deg_(max_deg) {
    if (max_deg < 0)
        throw std::invalid_argument("TruncatedSeries: max_deg must be >= 0");
}

TruncatedSeries TruncatedSeries::one(Alphabet alphabet, Ring ring, int max_deg) {
    TruncatedSeries s(std::move(alphabet), std::move(ring), max_deg);
    s.add_term_idx("", 1);
    return s;
}

Rational TruncatedSeries::constant_term() const { return coeff_idx(""); }

Rational TruncatedSeries::coeff(const Word& w) const {
    if (w.alphabet() != alphabet_)
        throw std::invalid_argument("mismatched alphabets");
    return coeff_idx(w.indices());
}

Rational TruncatedSeries::coeff_idx(const std::string& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const Word& w, const Rational& c) {
    if (w.alphabet() != alphabet_)
        throw std::invalid_argument("mismatched alphabets");
    add_term_idx(w.indices(), c);
}

void TruncatedSeries::add_term_idx(const std::string& idx, const Rational& c) {
    if (static_cast<int>(idx.size()) > max_deg_)
        return;
    accumulate(terms_, ring_, idx, c);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_compatible(alphabet_, ring_, o.alphabet_, o.ring_);
    if (max_deg_ != o.max_deg_)
        throw std::invalid_argument("mismatched truncation degrees");
    for (const auto& [idx, c] : o.terms_)
        accumulate(terms_, ring_, idx, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_compatible(alphabet_, ring_, o.alphabet_, o.ring_);
    if (max_deg_ != o.max_deg_)
        throw std::invalid_argument("mismatched truncation degrees");
    for (const auto& [idx, c] : o.terms_)
        accumulate(terms_, ring_, idx, -c);
    return *this;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r = *this;
    r += o;
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries r = *this;
    r -= o;
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(alphabet_, ring_, max_deg_);
    for (const auto& [idx, c] : terms_)
        r.terms_.emplace(idx, ring_.neg(c));
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries r(alphabet_, ring_, max_deg_);
    for (const auto& [idx, v] : terms_)
        accumulate(r.terms_, ring_, idx, v * c);
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int new_max_deg) const {
    TruncatedSeries r(alphabet_, ring_, new_max_deg);
    for (const auto& [idx, c] : terms_)
        r.add_term_idx(idx, c);
    return r;
}

TruncatedSeries TruncatedSeries::with_ring(const Ring& r) const {
    TruncatedSeries out(alphabet_, r, max_deg_);
    for (const auto& [idx, c] : terms_)
        accumulate(out.terms_, r, idx, c);
    return out;
}

NCPoly TruncatedSeries::homogeneous_part(int s) const {
    if (s < 0)
        throw std::invalid_argument("homogeneous_part: s must be >= 0");
    NCPoly r(alphabet_, ring_);
    for (const auto& [idx, c] : terms_)
        if (static_cast<int>(idx.size()) == s)
            r.add_term_idx(idx, c);
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return alphabet_ == o.alphabet_ && ring_ == o.ring_ && max_deg_ == o.max_deg_ &&
           terms_ == o.terms_;
}

std::string TruncatedSeries::str() const { return pretty(alphabet_, terms_); }

Rational scalar_product(const NCPoly& f, const NCPoly& g) {
    require_compatible(f.alphabet(), f.ring(), g.alphabet(), g.ring());
    Rational acc = 0;
    for (const auto& [idx, c] : g.terms())
        acc = f.ring().add(acc, f.ring().mul(f.coeff_idx(idx), c));
    return acc;
}

Rational scalar_product(const TruncatedSeries& f, const NCPoly& g) {
    require_compatible(f.alphabet(), f.ring(), g.alphabet(), g.ring());
    if (g.max_degree() > f.max_deg())
        throw std::domain_error("scalar_product: polynomial probes beyond truncation degree");
    Rational acc = 0;
    for (const auto& [idx, c] : g.terms())
        acc = f.ring().add(acc, f.ring().mul(f.coeff_idx(idx), c));
    return acc;
}

TruncatedSeries concat_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_compatible(f.alphabet(), f.ring(), g.alphabet(), g.ring());
    if (f.max_deg() != g.max_deg())
        throw std::invalid_argument("mismatched truncation degrees");
    TruncatedSeries r(f.alphabet(), f.ring(), f.max_deg());
    for (const auto& [u, cu] : f.terms()) {
        if (static_cast<int>(u.size()) > f.max_deg())
            continue;
        for (const auto& [v, cv] : g.terms()) {
            if (static_cast<int>(u.size() + v.size()) > f.max_deg())
                break;  // terms() is ordered by length
            r.add_term_idx(u + v, cu * cv);
        }
    }
    return r;
}

TruncatedSeries concat_pow(const TruncatedSeries& f, unsigned long e) {
    TruncatedSeries r = TruncatedSeries::one(f.alphabet(), f.ring(), f.max_deg());
    TruncatedSeries b = f;
    while (e) {
        if (e & 1)
            r = concat_mul(r, b);
        e >>= 1;
        if (e)
            b = concat_mul(b, b);
    }
    return r;
}

TruncatedSeries invert_unit(const TruncatedSeries& f) {
    const Ring& ring = f.ring();
    Rational c0 = f.constant_term();
    if (!ring.is_unit(c0))
        throw std::domain_error("invert_unit: constant term is not a unit");
    // f = c0 (1 + h) with h of positive degree; f^{-1} = (sum (-h)^k) c0^{-1}.
    Rational c0inv = ring.invert(c0);
    TruncatedSeries h = f.scaled(c0inv);
    h.add_term_idx("", -1);
    TruncatedSeries acc = TruncatedSeries::one(f.alphabet(), ring, f.max_deg());
    TruncatedSeries term = acc;
    for (int k = 1; k <= f.max_deg(); ++k) {
        term = concat_mul(term, h);
        if (term.is_zero())
            break;
        if (k % 2 == 1)
            acc -= term;
        else
            acc += term;
    }
    return acc.scaled(c0inv);
}

namespace {

using IntTermMap = std::map<std::string, BigInt, LenAlphIdxLess>;

void add_into(IntTermMap& dst, const IntTermMap& src, char appended) {
    for (const auto& [w, c] : src)
        dst[w + appended] += c;
}

IntTermMap shuffle_rec(const std::string& a, const std::string& b) {
    if (a.empty())
        return {{b, 1}};
    if (b.empty())
        return {{a, 1}};
    IntTermMap out;
    add_into(out, shuffle_rec(a.substr(0, a.size() - 1), b), a.back());
    add_into(out, shuffle_rec(a, b.substr(0, b.size() - 1)), b.back());
    return out;
}

IntTermMap infiltration_rec(const std::string& a, const std::string& b) {
    if (a.empty())
        return {{b, 1}};
    if (b.empty())
        return {{a, 1}};
    const std::string a0 = a.substr(0, a.size() - 1);
    const std::string b0 = b.substr(0, b.size() - 1);
    IntTermMap out;
    add_into(out, infiltration_rec(a0, b), a.back());
    add_into(out, infiltration_rec(a, b0), b.back());
    if (a.back() == b.back())
        add_into(out, infiltration_rec(a0, b0), a.back());
    return out;
}

NCPoly from_int_terms(const Alphabet& alphabet, IntTermMap terms) {
    NCPoly p(alphabet, Ring::integers());
    for (auto& [idx, c] : terms)
        p.add_term_idx(idx, Rational(std::move(c)));
    return p;
}

}  // namespace

NCPoly shuffle(const Word& u, const Word& v) {
    if (u.alphabet() != v.alphabet())
        throw std::invalid_argument("mismatched alphabets");
    return from_int_terms(u.alphabet(), shuffle_rec(u.indices(), v.indices()));
}

NCPoly infiltration(const Word& u, const Word& v) {
    if (u.alphabet() != v.alphabet())
        throw std::invalid_argument("mismatched alphabets");
    return from_int_terms(u.alphabet(), infiltration_rec(u.indices(), v.indices()));
}

NCPoly star_product(StarOp op, const Word& u, const Word& v) {
    return op == StarOp::shuffle ? shuffle(u, v) : infiltration(u, v);
}

NCPoly star_extend(StarOp op, const NCPoly& f, const NCPoly& g) {
    require_compatible(f.alphabet(), f.ring(), g.alphabet(), g.ring());
    NCPoly out(f.alphabet(), f.ring());
    for (const auto& [u, cu] : f.terms()) {
        for (const auto& [v, cv] : g.terms()) {
            IntTermMap base = op == StarOp::shuffle ? shuffle_rec(u, v) : infiltration_rec(u, v);
            Rational c = cu * cv;
            for (const auto& [w, m] : base)
                out.add_term_idx(w, c * Rational(m));
        }
    }
    return out;
}

NCPoly star_power(StarOp op, const Word& u, int k) {
    if (k < 1)
        throw std::invalid_argument("star_power: k must be >= 1");
    NCPoly acc = NCPoly::monomial(u, 1, Ring::integers());
    NCPoly base = acc;
    for (int i = 1; i < k; ++i)
        acc = star_extend(op, acc, base);
    return acc;
}

}  // namespace lynmag
