#include "lynmag/json_io.hpp"

#include <stdexcept>
#include <string>

namespace lynmag {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string())
        throw std::invalid_argument(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

std::vector<int> int_array_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array())
        throw std::invalid_argument(std::string("field \"") + key + "\" must be an array");
    std::vector<int> out;
    for (const Json& e : v) {
        if (!e.is_number_integer())
            throw std::invalid_argument(std::string("field \"") + key +
                                        "\" must hold integers");
        out.push_back(e.get<int>());
    }
    return out;
}

Json term_to_json(const NCPoly& host, const std::string& idx, const Rational& c) {
    Json t;
    t["word"] = host.word_at(idx).str();
    t["coeff"] = c.str();
    return t;
}

}  // namespace

Alphabet default_formation_alphabet(int k) {
    static const std::vector<std::string> pool = {"x", "y", "z", "w", "v", "u", "t", "s"};
    if (k < 1 || k > static_cast<int>(pool.size()))
        throw std::invalid_argument("default alphabet supports 1..8 letters; name them "
                                    "explicitly for more");
    return Alphabet(std::vector<std::string>(pool.begin(), pool.begin() + k));
}

Json alphabet_to_json(const Alphabet& al) {
    Json a = Json::array();
    for (int i = 0; i < al.size(); ++i)
        a.push_back(al.letter(i));
    return a;
}

Alphabet alphabet_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("alphabet must be a non-empty array of symbols");
    std::vector<std::string> letters;
    for (const Json& e : j) {
        if (!e.is_string() || e.get<std::string>().empty())
            throw std::invalid_argument("alphabet symbols must be non-empty strings");
        letters.push_back(e.get<std::string>());
    }
    return Alphabet(std::move(letters));
}

Json words_to_json(const std::vector<Word>& ws) {
    Json a = Json::array();
    for (const Word& w : ws)
        a.push_back(w.str());
    return a;
}

Json poly_to_json(const NCPoly& f) {
    Json a = Json::array();
    for (const auto& [idx, c] : f.terms())
        a.push_back(term_to_json(f, idx, c));
    return a;
}

NCPoly poly_from_json(const Json& j, const Alphabet& al, const Ring& ring) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial must be an array of {word, coeff} terms");
    NCPoly f(al, ring);
    for (const Json& t : j) {
        const Word w = Word::parse(al, string_field(t, "word"));
        const std::string cs = string_field(t, "coeff");
        try {
            f.add_term(w, Rational(cs));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient \"" + cs + "\"");
        }
    }
    return f;
}

Json series_to_json(const TruncatedSeries& f) {
    Json j;
    j["max_deg"] = f.max_deg();
    if (f.ring().is_mod())
        j["modulus"] = f.ring().modulus().str();
    Json terms = Json::array();
    NCPoly host(f.alphabet(), f.ring());
    for (const auto& [idx, c] : f.terms())
        terms.push_back(term_to_json(host, idx, c));
    j["terms"] = std::move(terms);
    return j;
}

Json formation_to_json(const FormationSpec& spec) {
    Json j;
    j["alphabet"] = alphabet_to_json(spec.alphabet());
    j["n"] = spec.n();
    j["p"] = spec.p();
    j["j"] = spec.j();
    j["L"] = words_to_json(spec.L());
    return j;
}

FormationSpec formation_from_json(const Json& j) {
    if (!j.is_object())
        throw std::invalid_argument("formation spec must be a JSON object");

    Alphabet al = j.contains("alphabet") ? alphabet_from_json(j.at("alphabet"))
                                         : default_formation_alphabet(
                                               j.contains("k") ? int_field(j, "k") : 2);
    const int n = int_field(j, "n");
    const int p = int_field(j, "p");

    std::vector<int> jvec;
    if (j.contains("preset")) {
        if (j.contains("j"))
            throw std::invalid_argument("give either \"preset\" or \"j\", not both");
        const std::string preset = string_field(j, "preset");
        if (preset == "lower-p-central") {
            jvec = lower_p_central_j(n);
        } else if (preset == "zassenhaus") {
            const int t = j.contains("t") ? int_field(j, "t") : 1;
            if (t < 1)
                throw std::invalid_argument("zassenhaus needs t >= 1");
            jvec = zassenhaus_j(p, t, n);
        } else {
            throw std::invalid_argument("unknown preset \"" + preset + "\"");
        }
    } else if (j.contains("j")) {
        jvec = int_array_field(j, "j");
    } else {
        throw std::invalid_argument("formation spec needs \"preset\" or \"j\"");
    }

    std::optional<std::vector<Word>> L;
    if (j.contains("L") && j.at("L") != Json("auto")) {
        const Json& lj = j.at("L");
        if (!lj.is_array())
            throw std::invalid_argument("\"L\" must be \"auto\" or an array of words");
        std::vector<Word> words;
        for (const Json& e : lj) {
            if (!e.is_string())
                throw std::invalid_argument("\"L\" entries must be word strings");
            words.push_back(Word::parse(al, e.get<std::string>()));
        }
        L = std::move(words);
    }

    return FormationSpec::make(std::move(al), n, p, std::move(jvec), std::move(L));
}

Json fundamental_to_json(const FundamentalMatrix& m) {
    Json j;
    if (!m.order.empty())
        j["alphabet"] = alphabet_to_json(m.order.front().alphabet());
    j["order"] = words_to_json(m.order);
    j["p"] = m.p;
    j["j"] = m.j;
    j["rows"] = m.rows;
    return j;
}

FundamentalMatrix fundamental_from_json(const Json& j) {
    const Alphabet al = alphabet_from_json(field(j, "alphabet"));
    FundamentalMatrix m;
    const Json& order = field(j, "order");
    if (!order.is_array())
        throw std::invalid_argument("\"order\" must be an array of words");
    for (const Json& e : order) {
        if (!e.is_string())
            throw std::invalid_argument("\"order\" entries must be word strings");
        m.order.push_back(Word::parse(al, e.get<std::string>()));
    }
    m.p = int_field(j, "p");
    m.j = int_array_field(j, "j");
    const Json& rows = field(j, "rows");
    if (!rows.is_array() || rows.size() != m.order.size())
        throw std::invalid_argument("\"rows\" must be a square matrix over \"order\"");
    for (const Json& row : rows) {
        if (!row.is_array() || row.size() != m.order.size())
            throw std::invalid_argument("\"rows\" must be a square matrix over \"order\"");
        std::vector<int> r;
        for (const Json& e : row) {
            if (!e.is_number_integer())
                throw std::invalid_argument("matrix entries must be integers");
            r.push_back(e.get<int>());
        }
        m.rows.push_back(std::move(r));
    }
    return m;
}

Json indec_to_json(const IndecReport& r) {
    Json j;
    j["degree"] = r.degree;
    j["word_count"] = r.word_count;
    j["decomposable_rank"] = r.decomposable_rank;
    j["indec_dim"] = r.indec_dim;
    j["lyndon_count"] = r.lyndon_count;
    j["match"] = r.match;
    j["lyndon_span_ok"] = r.lyndon_span_ok;
    return j;
}

Json isomorphism_to_json(const IsomorphismReport& r) {
    Json j;
    j["n"] = r.n;
    j["p"] = r.p;
    Json rows = Json::array();
    for (const IsoDegreeRow& row : r.rows) {
        Json rj;
        rj["degree"] = row.degree;
        rj["lhs_dim"] = row.lhs_dim;
        rj["rhs_basis_size"] = row.rhs_basis_size;
        rj["basis"] = words_to_json(row.basis);
        rj["match"] = row.match;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    j["relation_pairs_checked"] = r.relation_pairs_checked;
    j["fundamental_ok"] = r.fundamental_ok;
    j["relations_ok"] = r.relations_ok;
    j["dims_ok"] = r.dims_ok;
    j["hypotheses_met"] = r.hypotheses_met;
    j["warnings"] = r.warnings;
    j["status"] = r.status;
    j["note"] = r.note;
    return j;
}

Json check_report_to_json(const CheckReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["status"] = r.status;
    j["seed"] = r.seed;
    j["seconds"] = r.seconds;
    Json params;
    for (const auto& [k, v] : r.params)
        params[k] = v;
    j["params"] = std::move(params);
    j["notes"] = r.notes;
    j["witnesses"] = r.witnesses;
    return j;
}

}  // namespace lynmag
