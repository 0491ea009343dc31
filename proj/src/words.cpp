#include "lynmag/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lynmag {

Alphabet::Alphabet(std::vector<std::string> letters) {
    if (letters.empty())
        throw std::invalid_argument("Alphabet: at least one letter required");
    std::set<std::string> seen;
    single_char_ = true;
    for (const auto& s : letters) {
        if (s.empty())
            throw std::invalid_argument("Alphabet: empty symbol name");
        if (!seen.insert(s).second)
            throw std::invalid_argument("Alphabet: duplicate symbol '" + s + "'");
        if (s.size() != 1)
            single_char_ = false;
    }
    if (letters.size() > 255)
        throw std::invalid_argument("Alphabet: at most 255 letters supported");
    letters_ = std::make_shared<const std::vector<std::string>>(std::move(letters));
}

Alphabet Alphabet::latin(int k) {
    if (k < 1 || k > 26)
        throw std::invalid_argument("Alphabet::latin: k must be in 1..26");
    std::vector<std::string> ls;
    ls.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        ls.push_back(std::string(1, static_cast<char>('a' + i)));
    return Alphabet(std::move(ls));
}

int Alphabet::index_of(std::string_view sym) const {
    for (size_t i = 0; i < letters_->size(); ++i)
        if ((*letters_)[i] == sym)
            return static_cast<int>(i);
    return -1;
}

bool Alphabet::operator==(const Alphabet& o) const {
    return letters_ == o.letters_ || *letters_ == *o.letters_;
}

Word::Word(Alphabet alphabet, std::string indices)
    : alphabet_(std::move(alphabet)), idx_(std::move(indices)) {
    for (char c : idx_)
        if (static_cast<unsigned char>(c) >= alphabet_.size())
            throw std::invalid_argument("Word: letter index out of range");
}

Word Word::parse(const Alphabet& alphabet, std::string_view text) {
    std::string idx;
    if (alphabet.single_char()) {
        for (char c : text) {
            if (c == ' ')
                continue;
            int i = alphabet.index_of(std::string_view(&c, 1));
            if (i < 0)
                throw std::invalid_argument(std::string("Word::parse: unknown letter '") + c + "'");
            idx.push_back(static_cast<char>(i));
        }
    } else {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) {
            int i = alphabet.index_of(tok);
            if (i < 0)
                throw std::invalid_argument("Word::parse: unknown letter '" + tok + "'");
            idx.push_back(static_cast<char>(i));
        }
    }
    return Word(alphabet, std::move(idx));
}

Word Word::subword(int begin, int len) const {
    if (begin < 0 || len < 0 || begin + len > length())
        throw std::out_of_range("Word::subword");
    return Word(alphabet_, idx_.substr(static_cast<size_t>(begin), static_cast<size_t>(len)));
}

Word Word::concat(const Word& other) const {
    if (alphabet_ != other.alphabet_)
        throw std::invalid_argument("Word::concat: mismatched alphabets");
    return Word(alphabet_, idx_ + other.idx_);
}

Word Word::append(int letter_index) const {
    if (letter_index < 0 || letter_index >= alphabet_.size())
        throw std::invalid_argument("Word::append: letter index out of range");
    return Word(alphabet_, idx_ + static_cast<char>(letter_index));
}

std::vector<bool> Word::letter_support() const {
    std::vector<bool> sup(static_cast<size_t>(alphabet_.size()), false);
    for (int i = 0; i < length(); ++i)
        sup[static_cast<size_t>(letter(i))] = true;
    return sup;
}

std::string Word::str() const {
    std::string out;
    for (int i = 0; i < length(); ++i) {
        if (!alphabet_.single_char() && i > 0)
            out += ' ';
        out += alphabet_.letter(letter(i));
    }
    return out;
}

static void require_same_alphabet(const Word& u, const Word& v) {
    if (u.alphabet() != v.alphabet())
        throw std::invalid_argument("mismatched alphabets");
}

std::strong_ordering cmp_alph(const Word& u, const Word& v) {
    require_same_alphabet(u, v);
    return u.indices() <=> v.indices();
}

std::strong_ordering cmp_lenalph(const Word& u, const Word& v) {
    require_same_alphabet(u, v);
    if (u.length() != v.length())
        return u.length() <=> v.length();
    return u.indices() <=> v.indices();
}

bool alph_less(const Word& u, const Word& v) { return cmp_alph(u, v) < 0; }
bool lenalph_less(const Word& u, const Word& v) { return cmp_lenalph(u, v) < 0; }

bool is_lyndon(const Word& w) {
    const std::string& s = w.indices();
    if (s.empty())
        return false;
    for (size_t i = 1; i < s.size(); ++i)
        if (s.compare(s.substr(i)) >= 0)
            return false;
    return true;
}

std::vector<Word> lyndon_words(const Alphabet& alphabet, int max_len) {
    if (max_len < 1)
        throw std::invalid_argument("lyndon_words: max_len must be >= 1");
    const int k = alphabet.size();
    // Duval's generation: successive Lyndon words of length <= max_len in
    // alphabetical order, bucketed by length afterwards.
    std::vector<std::vector<Word>> by_len(static_cast<size_t>(max_len) + 1);
    std::string w(1, '\0');
    while (true) {
        by_len[w.size()].emplace_back(alphabet, w);
        // extend periodically to max_len
        std::string t;
        t.reserve(static_cast<size_t>(max_len));
        for (int i = 0; i < max_len; ++i)
            t.push_back(w[static_cast<size_t>(i) % w.size()]);
        // drop trailing top letters, then increment
        while (!t.empty() && t.back() == static_cast<char>(k - 1))
            t.pop_back();
        if (t.empty())
            break;
        ++t.back();
        w = std::move(t);
    }
    std::vector<Word> out;
    for (auto& bucket : by_len)
        for (auto& lw : bucket)
            out.push_back(std::move(lw));
    return out;
}

BigInt witt_number(int k, int s) {
    if (s < 1)
        throw std::invalid_argument("witt_number: s must be >= 1");
    // (1/s) sum_{d | s} mu(d) k^{s/d}
    auto mobius = [](int n) {
        int mu = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0)
                    return 0;
                mu = -mu;
            }
        }
        if (n > 1)
            mu = -mu;
        return mu;
    };
    BigInt total = 0;
    for (int d = 1; d <= s; ++d) {
        if (s % d != 0)
            continue;
        int mu = mobius(d);
        if (mu == 0)
            continue;
        total += mu * pow_big(k, static_cast<unsigned long>(s / d));
    }
    return total / s;
}

std::vector<Word> all_words(const Alphabet& alphabet, int s) {
    if (s < 0)
        throw std::invalid_argument("all_words: s must be >= 0");
    std::vector<Word> out;
    std::string cur(static_cast<size_t>(s), '\0');
    const int k = alphabet.size();
    while (true) {
        out.emplace_back(alphabet, cur);
        int pos = s - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == static_cast<char>(k - 1)) {
            cur[static_cast<size_t>(pos)] = '\0';
            --pos;
        }
        if (pos < 0)
            break;
        ++cur[static_cast<size_t>(pos)];
    }
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (!is_lyndon(w) || w.length() < 2)
        throw std::invalid_argument("standard_factorization: requires a Lyndon word of length >= 2");
    int longest = -1;
    int minimal = -1;
    for (int i = 1; i < w.length(); ++i) {
        Word suffix = w.subword(i, w.length() - i);
        if (!is_lyndon(suffix))
            continue;
        if (longest < 0)
            longest = i;  // first hit = longest Lyndon suffix
        if (minimal < 0 || alph_less(suffix, w.subword(minimal, w.length() - minimal)))
            minimal = i;
    }
    // the two characterizations of v must agree
    if (longest < 0 || longest != minimal)
        throw std::logic_error("standard_factorization: characterizations disagree");
    return {w.subword(0, longest), w.subword(longest, w.length() - longest)};
}

std::vector<std::pair<Word, int>> cfl_factorization(const Word& w) {
    if (w.is_empty())
        throw std::invalid_argument("cfl_factorization: empty word");
    // Duval's linear-time factorization into weakly decreasing Lyndon factors.
    const std::string& s = w.indices();
    const int n = w.length();
    std::vector<Word> factors;
    int i = 0;
    while (i < n) {
        int j = i + 1, p = i;
        while (j < n && s[static_cast<size_t>(p)] <= s[static_cast<size_t>(j)]) {
            if (s[static_cast<size_t>(p)] < s[static_cast<size_t>(j)])
                p = i;
            else
                ++p;
            ++j;
        }
        const int len = j - p;  // length of the Lyndon factor
        while (i <= p) {
            factors.push_back(w.subword(i, len));
            i += len;
        }
    }
    std::vector<std::pair<Word, int>> out;
    for (auto& f : factors) {
        if (!out.empty() && out.back().first == f)
            ++out.back().second;
        else
            out.emplace_back(std::move(f), 1);
    }
    return out;
}

}  // namespace lynmag
