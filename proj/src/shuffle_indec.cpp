#include "lynmag/shuffle_indec.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

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

/// Column of a length-s word in the alphabetical ordering of X^s.
int word_col(const std::string& idx, int k) {
    int col = 0;
    for (unsigned char ch : idx)
        col = col * k + ch;
    return col;
}

int word_space_dim(const Alphabet& al, int s) {
    int cols = 1;
    for (int i = 0; i < s; ++i) {
        cols *= al.size();
        if (cols > 100000)
            throw std::invalid_argument("word space of degree " + std::to_string(s) +
                                        " too large for dense elimination");
    }
    return cols;
}

/// Write one row per product u*v with |u|+|v| = s; returns the rows used.
int fill_product_rows(FpMatrix& m, int r0, const Alphabet& al, int s, StarOp star) {
    const int k = al.size();
    int r = r0;
    for (int a = 1; a <= s - 1; ++a)
        for (const Word& u : all_words(al, a))
            for (const Word& v : all_words(al, s - a)) {
                const NCPoly prod = star == StarOp::shuffle
                                        ? shuffle(u, v)
                                        : infiltration(u, v).homogeneous_part(s);
                for (const auto& [idx, c] : prod.terms())
                    m.set(r, word_col(idx, k),
                          (as_integer(c) % m.p()).convert_to<long long>());
                ++r;
            }
    return r - r0;
}

std::vector<Word> lyndon_of_length(const Alphabet& al, int s) {
    std::vector<Word> out;
    for (const Word& w : lyndon_words(al, s))
        if (w.length() == s)
            out.push_back(w);
    return out;
}

}  // namespace

FpMatrix::FpMatrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
    if (!prime_check(p))
        throw std::invalid_argument("matrix modulus must be prime");
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dimensions must be nonnegative");
    if (static_cast<long long>(rows) * cols > 50'000'000)
        throw std::length_error("matrix too large");
    ent_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
}

void FpMatrix::set(int r, int c, long long v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    ent_[static_cast<size_t>(r) * cols_ + c] = static_cast<int>(((v % p_) + p_) % p_);
}

int FpMatrix::rank() const {
    std::vector<int> a(ent_);
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r)
            if (a[static_cast<size_t>(r) * cols_ + c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        for (int cc = c; cc < cols_; ++cc)
            std::swap(a[static_cast<size_t>(piv) * cols_ + cc],
                      a[static_cast<size_t>(rank) * cols_ + cc]);
        const long long inv =
            mod_inverse(BigInt(a[static_cast<size_t>(rank) * cols_ + c]), BigInt(p_))
                .convert_to<long long>();
        for (int cc = c; cc < cols_; ++cc) {
            int& x = a[static_cast<size_t>(rank) * cols_ + cc];
            x = static_cast<int>(x * inv % p_);
        }
        for (int r = rank + 1; r < rows_; ++r) {
            const long long f = a[static_cast<size_t>(r) * cols_ + c];
            if (f == 0)
                continue;
            for (int cc = c; cc < cols_; ++cc) {
                int& x = a[static_cast<size_t>(r) * cols_ + cc];
                x = static_cast<int>(
                    ((x - f * a[static_cast<size_t>(rank) * cols_ + cc]) % p_ + p_) % p_);
            }
        }
        ++rank;
    }
    return rank;
}

std::string FpMatrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            os << (c ? " " : "") << at(r, c);
        os << "\n";
    }
    return os.str();
}

NCPoly q_polynomial(const Word& w) {
    if (w.is_empty())
        throw std::invalid_argument("q_polynomial: word must be nonempty");
    const Ring q = Ring::rationals();
    NCPoly acc = NCPoly::monomial(Word::empty(w.alphabet()), 1, q);
    BigInt denom = 1;
    for (const auto& [u, k] : cfl_factorization(w)) {
        acc = star_extend(StarOp::shuffle, acc, star_power(StarOp::shuffle, u, k).with_ring(q));
        for (int i = 2; i <= k; ++i)
            denom *= i;
    }
    acc = acc.scaled(Rational(1) / Rational(denom));
    for (const auto& [idx, c] : acc.terms())
        if (boost::multiprecision::denominator(c) != 1)
            throw std::logic_error("q polynomial of " + w.str() +
                                   " has a non-integral coefficient at " +
                                   acc.word_at(idx).str());
    return acc.with_ring(Ring::integers());
}

RadfordCheckResult radford_basis_check(const Alphabet& alphabet, int s) {
    if (s < 1)
        throw std::invalid_argument("radford_basis_check: s must be >= 1");
    RadfordCheckResult res;
    res.ok = true;
    for (const Word& w : all_words(alphabet, s)) {
        const NCPoly q = q_polynomial(w);
        std::string bad;
        if (q.coeff(w) != 1)
            bad = "coefficient at " + w.str() + " is " + q.coeff(w).str() + ", not 1";
        for (const auto& [idx, c] : q.terms()) {
            if (!bad.empty())
                break;
            const Word v = q.word_at(idx);
            if (v.length() != s)
                bad = "term " + v.str() + " breaks homogeneity";
            else if (cmp_alph(v, w) == std::strong_ordering::greater)
                bad = "term " + v.str() + " lies alphabetically above " + w.str();
            else if (c < 0)
                bad = "negative coefficient " + c.str() + " at " + v.str();
        }
        if (!bad.empty()) {
            res.ok = false;
            res.witness = "Q_" + w.str() + ": " + bad;
            return res;
        }
    }
    return res;
}

int decomposable_rank(const Alphabet& alphabet, int s, int p, StarOp star) {
    if (s < 2)
        throw std::invalid_argument("decomposable_rank: s must be >= 2");
    const int cols = word_space_dim(alphabet, s);
    FpMatrix m(p, (s - 1) * cols, cols);
    fill_product_rows(m, 0, alphabet, s, star);
    return m.rank();
}

IndecReport indec_dimension(const Alphabet& alphabet, int s, int p) {
    if (s < 1)
        throw std::invalid_argument("indec_dimension: s must be >= 1");
    IndecReport rep;
    rep.degree = s;
    rep.word_count = word_space_dim(alphabet, s);
    rep.decomposable_rank = s >= 2 ? decomposable_rank(alphabet, s, p) : 0;
    rep.indec_dim = rep.word_count - rep.decomposable_rank;
    rep.lyndon_count = witt_number(alphabet.size(), s).convert_to<int>();
    rep.match = rep.indec_dim == rep.lyndon_count;

    const std::vector<Word> lyn = lyndon_of_length(alphabet, s);
    const int prod_rows = s >= 2 ? (s - 1) * rep.word_count : 0;
    FpMatrix m(p, prod_rows + static_cast<int>(lyn.size()), rep.word_count);
    int r = s >= 2 ? fill_product_rows(m, 0, alphabet, s, StarOp::shuffle) : 0;
    for (const Word& w : lyn)
        m.set(r++, word_col(w.indices(), alphabet.size()), 1);
    rep.lyndon_span_ok = m.rank() == rep.word_count;
    return rep;
}

IsomorphismReport isomorphism_report(const FormationSpec& spec) {
    IsomorphismReport rep;
    rep.n = spec.n();
    rep.p = spec.p();

    const bool n_below_p = spec.n() < spec.p();
    std::vector<Word> auto_l;
    for (const Word& w : lyndon_words(spec.alphabet(), spec.n()))
        if (spec.in_index_set(w.length()))
            auto_l.push_back(w);
    const bool l_is_auto = auto_l == spec.L();
    rep.hypotheses_met = n_below_p && l_is_auto;
    if (!n_below_p)
        rep.warnings.push_back("theorem hypotheses unmet: needs n < p, got n = " +
                               std::to_string(spec.n()) + ", p = " + std::to_string(spec.p()));
    if (!l_is_auto)
        rep.warnings.push_back(
            "theorem hypotheses unmet: L must be all Lyndon words with length in I_e");

    std::string witness;
    rep.fundamental_ok = check_unitriangular(fundamental_matrix(spec), &witness);
    if (!rep.fundamental_ok)
        rep.warnings.push_back("fundamental matrix not unitriangular: " + witness);

    rep.relations_ok = true;
    for (int s : spec.index_set()) {
        if (!rep.relations_ok)
            break;
        for (int a = 1; a <= s - 1 && rep.relations_ok; ++a)
            for (const Word& u : all_words(spec.alphabet(), a)) {
                if (!rep.relations_ok)
                    break;
                for (const Word& v : all_words(spec.alphabet(), s - a)) {
                    if (!rep.relations_ok)
                        break;
                    for (StarOp op : {StarOp::shuffle, StarOp::infiltration}) {
                        const ShuffleRelationResult r = shuffle_relation_check(spec, u, v, op);
                        ++rep.relation_pairs_checked;
                        if (!r.ok) {
                            rep.relations_ok = false;
                            rep.warnings.push_back("product relation violated: " + r.witness);
                            break;
                        }
                    }
                }
            }
    }

    rep.dims_ok = true;
    for (int s : spec.index_set()) {
        const IndecReport ir = indec_dimension(spec.alphabet(), s, spec.p());
        IsoDegreeRow row;
        row.degree = s;
        row.lhs_dim = ir.indec_dim;
        row.basis = lyndon_of_length(spec.alphabet(), s);
        row.rhs_basis_size = static_cast<int>(row.basis.size());
        row.match = row.lhs_dim == row.rhs_basis_size;
        rep.dims_ok = rep.dims_ok && row.match;
        rep.rows.push_back(std::move(row));
    }

    if (!rep.fundamental_ok || !rep.relations_ok)
        rep.status = "fail";
    else if (!rep.hypotheses_met)
        rep.status = "warning";
    else
        rep.status = rep.dims_ok ? "pass" : "fail";

    rep.note =
        "each basis word w corresponds to the functional rho0_w; identifying the "
        "target cohomology via transgression is assumed, not computed";
    return rep;
}

}  // namespace lynmag
