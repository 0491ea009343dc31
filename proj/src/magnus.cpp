#include "lynmag/magnus.hpp"

#include <sstream>
#include <stdexcept>

namespace lynmag {

namespace {

// Append a syllable to a reduced syllable list, keeping it reduced.
void push_reduced(std::vector<Syllable>& syl, int gen, long long exp) {
    if (exp == 0)
        return;
    if (!syl.empty() && syl.back().gen == gen) {
        syl.back().exp += exp;
        if (syl.back().exp == 0)
            syl.pop_back();
        return;
    }
    syl.push_back({gen, exp});
}

}  // namespace

GroupWord GroupWord::generator(const Alphabet& alphabet, int gen, long long exp) {
    if (gen < 0 || gen >= alphabet.size())
        throw std::invalid_argument("GroupWord::generator: index out of range");
    GroupWord g(alphabet);
    if (exp != 0)
        g.syl_.push_back({gen, exp});
    return g;
}

GroupWord GroupWord::parse(const Alphabet& alphabet, std::string_view text) {
    GroupWord g(alphabet);
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "1")
            continue;
        long long exp = 1;
        std::string sym = tok;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            sym = tok.substr(0, caret);
            try {
                exp = std::stoll(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("GroupWord::parse: bad exponent in '" + tok + "'");
            }
        }
        int gen = alphabet.index_of(sym);
        if (gen < 0)
            throw std::invalid_argument("GroupWord::parse: unknown generator '" + sym + "'");
        push_reduced(g.syl_, gen, exp);
    }
    return g;
}

long long GroupWord::length() const {
    long long n = 0;
    for (const auto& s : syl_)
        n += s.exp < 0 ? -s.exp : s.exp;
    return n;
}

GroupWord GroupWord::times_gen(int gen, long long exp) const {
    GroupWord g = *this;
    push_reduced(g.syl_, gen, exp);
    return g;
}

std::string GroupWord::str() const {
    if (syl_.empty())
        return "1";
    std::string out;
    for (const auto& s : syl_) {
        if (!out.empty())
            out += ' ';
        out += alphabet_.letter(s.gen);
        if (s.exp != 1)
            out += "^" + std::to_string(s.exp);
    }
    return out;
}

GroupWord fg_mul(const GroupWord& a, const GroupWord& b) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("fg_mul: mismatched alphabets");
    GroupWord r = a;
    for (const auto& s : b.syllables())
        r = r.times_gen(s.gen, s.exp);
    return r;
}

GroupWord fg_inv(const GroupWord& a) {
    GroupWord r(a.alphabet());
    for (auto it = a.syllables().rbegin(); it != a.syllables().rend(); ++it)
        r = r.times_gen(it->gen, -it->exp);
    return r;
}

GroupWord fg_pow(const GroupWord& a, long long e) {
    if (e < 0)
        return fg_pow(fg_inv(a), -e);
    GroupWord r(a.alphabet());
    GroupWord b = a;
    while (e) {
        if (e & 1)
            r = fg_mul(r, b);
        e >>= 1;
        if (e)
            b = fg_mul(b, b);
    }
    return r;
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) {
    return fg_mul(fg_mul(a, b), fg_mul(fg_inv(a), fg_inv(b)));
}

GroupWord lie_element(const Word& w) {
    if (!is_lyndon(w))
        throw std::invalid_argument("lie_element: word is not Lyndon");
    if (w.length() == 1)
        return GroupWord::generator(w.alphabet(), w.letter(0));
    auto [u, v] = standard_factorization(w);
    return commutator(lie_element(u), lie_element(v));
}

TruncatedSeries magnus_expand(const GroupWord& g, int max_deg, const Ring& ring) {
    if (max_deg < 1)
        throw std::invalid_argument("magnus_expand: max_deg must be >= 1");
    if (ring.kind() == RingKind::rationals)
        throw std::invalid_argument("magnus_expand: coefficient ring must be Z or Z/m");
    const Alphabet& al = g.alphabet();
    TruncatedSeries acc = TruncatedSeries::one(al, ring, max_deg);
    for (const auto& s : g.syllables()) {
        TruncatedSeries base = TruncatedSeries::one(al, ring, max_deg);
        base.add_term_idx(std::string(1, static_cast<char>(s.gen)), 1);
        if (s.exp < 0)
            base = invert_unit(base);
        unsigned long e = static_cast<unsigned long>(s.exp < 0 ? -s.exp : s.exp);
        acc = concat_mul(acc, concat_pow(base, e));
    }
    return acc;
}

Rational eps(const Word& w, const GroupWord& g, const Ring& ring) {
    if (w.alphabet() != g.alphabet())
        throw std::invalid_argument("eps: mismatched alphabets");
    if (w.is_empty())
        return ring.normalize(1);
    return magnus_expand(g, w.length(), ring).coeff(w);
}

UniTriMatrix::UniTriMatrix(int size, std::int64_t modulus)
    : size_(size), modulus_(modulus),
      ent_(static_cast<size_t>(size) * static_cast<size_t>(size), 0) {
    if (size < 1)
        throw std::invalid_argument("UniTriMatrix: size must be >= 1");
    if (modulus < 2 || modulus > (std::int64_t{1} << 31))
        throw std::invalid_argument("UniTriMatrix: modulus must be in 2..2^31");
    for (int d = 0; d < size_; ++d)
        ent_[static_cast<size_t>(d * size_ + d)] = 1;
}

UniTriMatrix UniTriMatrix::identity(int size, std::int64_t modulus) {
    return UniTriMatrix(size, modulus);
}

void UniTriMatrix::set(int r, int c, std::int64_t v) {
    if (r < 0 || c >= size_ || r >= c)
        throw std::out_of_range("UniTriMatrix::set: need 0 <= r < c < size");
    v %= modulus_;
    if (v < 0)
        v += modulus_;
    ent_[static_cast<size_t>(r * size_ + c)] = v;
}

UniTriMatrix UniTriMatrix::mul(const UniTriMatrix& o) const {
    if (size_ != o.size_ || modulus_ != o.modulus_)
        throw std::invalid_argument("UniTriMatrix::mul: shape or modulus mismatch");
    UniTriMatrix r(size_, modulus_);
    for (int i = 0; i < size_; ++i)
        for (int k = i + 1; k < size_; ++k) {
            std::int64_t acc = 0;
            for (int j = i; j <= k; ++j)
                acc = (acc + at(i, j) * o.at(j, k)) % modulus_;
            r.ent_[static_cast<size_t>(i * size_ + k)] = acc;
        }
    return r;
}

bool UniTriMatrix::operator==(const UniTriMatrix& o) const {
    return size_ == o.size_ && modulus_ == o.modulus_ && ent_ == o.ent_;
}

std::string UniTriMatrix::str() const {
    std::ostringstream out;
    for (int r = 0; r < size_; ++r) {
        out << (r == 0 ? "[" : " ") << "[";
        for (int c = 0; c < size_; ++c)
            out << (c ? "," : "") << at(r, c);
        out << "]" << (r + 1 == size_ ? "]" : "\n");
    }
    return out.str();
}

UniTriMatrix magnus_rep(const Word& w, const GroupWord& g, std::int64_t modulus) {
    if (w.is_empty())
        throw std::invalid_argument("magnus_rep: empty word");
    const int i = w.length();
    TruncatedSeries lam = magnus_expand(g, i, Ring::integers_mod(modulus));
    UniTriMatrix m(i + 1, modulus);
    for (int r = 0; r < i; ++r)
        for (int c = r + 1; c <= i; ++c) {
            Rational v = lam.coeff(w.subword(r, c - r));
            m.set(r, c, static_cast<std::int64_t>(as_integer(v)));
        }
    return m;
}

TriangularityReport check_triangularity(const Word& w, int max_deg) {
    if (!is_lyndon(w))
        throw std::invalid_argument("check_triangularity: word is not Lyndon");
    if (w.length() > max_deg)
        throw std::invalid_argument("check_triangularity: max_deg below |w|");
    TriangularityReport rep;
    rep.checked_deg = max_deg;
    TruncatedSeries lam = magnus_expand(lie_element(w), max_deg, Ring::integers());
    auto support = w.letter_support();
    for (const auto& [idx, c] : lam.terms()) {
        Word t(w.alphabet(), idx);
        if (t.is_empty() || t == w) {
            if (c != 1) {
                rep.offending = t.is_empty() ? "(empty)" : t.str();
                rep.detail = "coefficient is not 1";
                return rep;
            }
            continue;
        }
        if (!lenalph_less(w, t)) {
            rep.offending = t.str();
            rep.detail = "support word not later than w in length-alphabetical order";
            return rep;
        }
        for (int pos = 0; pos < t.length(); ++pos)
            if (!support[static_cast<size_t>(t.letter(pos))]) {
                rep.offending = t.str();
                rep.detail = "support word uses a letter outside w";
                return rep;
            }
    }
    if (lam.coeff_idx("") != 1 || lam.coeff(w) != 1) {
        rep.offending = lam.coeff(w) != 1 ? w.str() : "(empty)";
        rep.detail = "missing unit coefficient";
        return rep;
    }
    rep.ok = true;
    return rep;
}

}  // namespace lynmag
