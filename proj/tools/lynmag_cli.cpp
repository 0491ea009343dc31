#include "CLI11.hpp"

#include "lynmag/json_io.hpp"
#include "lynmag/magnus.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace lynmag;

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty())
            out.push_back(tok);
    return out;
}

std::vector<int> ints_from_csv(const std::string& s, const char* what) {
    std::vector<int> out;
    for (const std::string& tok : split_csv(s)) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad integer in ") + what + ": \"" + tok +
                                        "\"");
        }
    }
    return out;
}

/// Alphabet for the word/series commands when none is named: the distinct
/// single-character letters of the inputs, in character order. group_syntax
/// strips "^exp" suffixes and the identity token "1" first.
Alphabet infer_alphabet(const std::vector<std::string>& texts, bool group_syntax) {
    std::set<std::string> seen;
    for (const std::string& text : texts) {
        std::istringstream in(text);
        std::string tok;
        if (group_syntax) {
            while (in >> tok) {
                const size_t caret = tok.find('^');
                if (caret != std::string::npos)
                    tok = tok.substr(0, caret);
                if (!tok.empty() && tok != "1")
                    seen.insert(tok);
            }
        } else {
            for (char c : text)
                if (c != ' ')
                    seen.insert(std::string(1, c));
        }
    }
    if (seen.empty())
        return Alphabet::latin(1);
    return Alphabet(std::vector<std::string>(seen.begin(), seen.end()));
}

/// Shared alphabet flags. When neither is given the command falls back either
/// to inference from its inputs or to a named default.
struct AlphabetOpts {
    int k = 0;  // 0 = not set
    std::string alphabet_csv;

    void attach(CLI::App* cmd) {
        cmd->add_option("-k,--letters", k, "alphabet size (letters a,b,c,...)");
        cmd->add_option("--alphabet", alphabet_csv, "comma-separated letter symbols");
    }

    bool given() const { return k > 0 || !alphabet_csv.empty(); }

    Alphabet build(const std::vector<std::string>& inputs, bool group_syntax) const {
        if (!alphabet_csv.empty())
            return Alphabet(split_csv(alphabet_csv));
        if (k > 0)
            return Alphabet::latin(k);
        return infer_alphabet(inputs, group_syntax);
    }
};

void desk_scale_warning(int k, int n, int p) {
    if (k > 3 || n > 6 || p > 7)
        std::cerr << "warning: parameters exceed the intended desk scale (k <= 3, n <= 6, "
                     "p <= 7); this may take a long time\n";
}

struct FormationOpts {
    std::string config;
    std::string preset = "lower-p-central";
    int n = 3;
    int p = 5;
    int t = 1;
    int k = 2;
    std::string alphabet_csv;
    std::string j_csv;
    std::string l_csv;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config, "formation spec as a JSON file (overrides flags)");
        cmd->add_option("--preset", preset, "lower-p-central | zassenhaus")
            ->check(CLI::IsMember({"lower-p-central", "zassenhaus"}));
        cmd->add_option("-n", n, "truncation depth");
        cmd->add_option("-p", p, "prime");
        cmd->add_option("-t", t, "zassenhaus multiplier");
        cmd->add_option("-k,--letters", k, "alphabet size");
        cmd->add_option("--alphabet", alphabet_csv, "comma-separated letter symbols");
        cmd->add_option("--j", j_csv, "explicit exponents j(1),...,j(n) (instead of --preset)");
        cmd->add_option("--L", l_csv, "comma-separated Lyndon words (default: auto)");
    }

    FormationSpec build() const {
        Json sj;
        if (!config.empty()) {
            std::ifstream in(config);
            if (!in)
                throw std::invalid_argument("cannot open config file \"" + config + "\"");
            try {
                sj = Json::parse(in);
            } catch (const std::exception& e) {
                throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
            }
        } else {
            if (!alphabet_csv.empty()) {
                Json a = Json::array();
                for (const std::string& s : split_csv(alphabet_csv))
                    a.push_back(s);
                sj["alphabet"] = std::move(a);
            } else {
                sj["k"] = k;
            }
            sj["n"] = n;
            sj["p"] = p;
            if (!j_csv.empty()) {
                sj["j"] = ints_from_csv(j_csv, "--j");
            } else {
                sj["preset"] = preset;
                sj["t"] = t;
            }
            if (!l_csv.empty()) {
                Json l = Json::array();
                for (const std::string& s : split_csv(l_csv))
                    l.push_back(s);
                sj["L"] = std::move(l);
            }
        }
        FormationSpec spec = formation_from_json(sj);
        desk_scale_warning(spec.alphabet().size(), spec.n(), spec.p());
        return spec;
    }
};

struct CheckOpts {
    FormationOpts formation;
    unsigned seed = 1;
    int words = 50;
    int max_word_len = 6;
    int max_pair_len = 4;
    int max_len = 4;
    int deg = 5;
    int conjugators = 8;
    int max_s = 0;  // 0 = per-suite default
    int max_i = 3;
    int max_j = 1;
    int max_jp = 2;
    long long max_order = 1LL << 20;
    int max_k = 2;
    std::string primes_csv;

    void attach(CLI::App* cmd) {
        formation.attach(cmd);
        cmd->add_option("--seed", seed, "RNG seed, recorded in the report");
        cmd->add_option("--words", words, "cfl: number of sampled group words");
        cmd->add_option("--max-word-len", max_word_len, "cfl: sampled group word length");
        cmd->add_option("--max-pair-len", max_pair_len, "cfl: bound on |u|+|v|");
        cmd->add_option("--max-len", max_len, "triangularity: longest word checked");
        cmd->add_option("--deg", deg, "triangularity: expansion degree");
        cmd->add_option("--conjugators", conjugators, "image: sampled conjugators per word");
        cmd->add_option("--max-s", max_s, "shuffle-relations/radford/indec: degree bound");
        cmd->add_option("--max-i", max_i, "lcs-power: matrix size bound");
        cmd->add_option("--max-j", max_j, "lcs-power: bound on j");
        cmd->add_option("--max-jp", max_jp, "lcs-power: bound on j'");
        cmd->add_option("--max-order", max_order, "lcs-power: group order cap");
        cmd->add_option("--max-k", max_k, "indec: alphabet size bound");
        cmd->add_option("--primes", primes_csv, "lcs-power/indec: prime list");
    }

    std::vector<int> primes_or(std::initializer_list<int> dflt) const {
        if (primes_csv.empty())
            return dflt;
        return ints_from_csv(primes_csv, "--primes");
    }

    int max_s_or(int dflt) const { return max_s > 0 ? max_s : dflt; }

    /// Alphabet for the suites that need letters but no formation.
    Alphabet plain_alphabet() const {
        if (!formation.alphabet_csv.empty())
            return Alphabet(split_csv(formation.alphabet_csv));
        return default_formation_alphabet(formation.k);
    }
};

const std::vector<std::string> kSuites = {
    "binomial",      "cfl",   "triangularity",     "fundamental-matrix", "lcs-power",
    "image",         "shuffle-relations", "radford", "indec",            "isomorphism"};

CheckReport run_suite(const std::string& name, const CheckOpts& o) {
    if (name == "binomial")
        return suite_binomial(o.seed);
    if (name == "cfl")
        return suite_cfl(o.plain_alphabet(), o.words, o.max_word_len, o.max_pair_len, o.seed);
    if (name == "triangularity")
        return suite_triangularity(o.plain_alphabet(), o.max_len, o.deg);
    if (name == "fundamental-matrix")
        return suite_fundamental_matrix(o.formation.build());
    if (name == "lcs-power")
        return suite_lcs_power(o.max_i, o.max_j, o.max_jp, o.primes_or({2, 3}), o.max_order);
    if (name == "image")
        return suite_image(o.formation.build(), o.conjugators, o.seed);
    if (name == "shuffle-relations")
        return suite_shuffle_relations(o.formation.build(), o.max_s_or(4));
    if (name == "radford") {
        Alphabet al = o.formation.alphabet_csv.empty() ? Alphabet::latin(o.formation.k)
                                                       : Alphabet(split_csv(o.formation.alphabet_csv));
        return suite_radford(al, o.max_s_or(5));
    }
    if (name == "indec")
        return suite_indec(o.max_k, o.max_s_or(4), o.primes_or({5, 7}));
    if (name == "isomorphism")
        return suite_isomorphism(o.formation.build());
    throw std::invalid_argument("unknown suite \"" + name + "\"");
}

void emit_report(const CheckReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << check_report_to_json(rep).dump(2) << "\n";
    else
        std::cout << rep.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lyndon words, Magnus expansions and shuffle-algebra checks"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    int rc = 0;

    // lyndon: list Lyndon words length-alphabetically, with Witt counts
    auto* ly = app.add_subcommand("lyndon", "enumerate Lyndon words");
    ly->fallthrough();
    AlphabetOpts ly_al;
    ly_al.attach(ly);
    int ly_max_len = 5;
    ly->add_option("--max-len", ly_max_len, "longest length listed");
    ly->callback([&] {
        if (ly_max_len < 1)
            throw std::invalid_argument("--max-len must be >= 1");
        const Alphabet al = ly_al.given() ? ly_al.build({}, false) : Alphabet::latin(2);
        desk_scale_warning(al.size(), 0, 0);
        const std::vector<Word> ws = lyndon_words(al, ly_max_len);
        if (format == "json") {
            Json j;
            j["alphabet"] = alphabet_to_json(al);
            j["max_len"] = ly_max_len;
            j["words"] = words_to_json(ws);
            Json by_len = Json::array();
            for (int s = 1; s <= ly_max_len; ++s) {
                const long long c =
                    std::count_if(ws.begin(), ws.end(),
                                  [&](const Word& w) { return w.length() == s; });
                Json row;
                row["length"] = s;
                row["count"] = c;
                row["witt"] = witt_number(al.size(), s).str();
                by_len.push_back(std::move(row));
            }
            j["by_length"] = std::move(by_len);
            j["total"] = ws.size();
            std::cout << j.dump(2) << "\n";
        } else {
            for (const Word& w : ws)
                std::cout << w.str() << "\n";
            std::cout << "by length:";
            for (int s = 1; s <= ly_max_len; ++s) {
                const long long c =
                    std::count_if(ws.begin(), ws.end(),
                                  [&](const Word& w) { return w.length() == s; });
                std::cout << " " << s << ": " << c << " (witt " << witt_number(al.size(), s)
                          << ")";
            }
            std::cout << "\ntotal: " << ws.size() << "\n";
        }
    });

    // shuffle / infiltrate: binary products of plain words
    for (const char* opname : {"shuffle", "infiltrate"}) {
        const bool is_shuffle = std::string(opname) == "shuffle";
        auto* cmd = app.add_subcommand(
            opname, is_shuffle ? "shuffle product of two words" : "infiltration product");
        cmd->fallthrough();
        auto al_opts = std::make_shared<AlphabetOpts>();
        al_opts->attach(cmd);
        auto u_text = std::make_shared<std::string>();
        auto v_text = std::make_shared<std::string>();
        cmd->add_option("u", *u_text, "left word")->required();
        cmd->add_option("v", *v_text, "right word")->required();
        cmd->callback([&, al_opts, u_text, v_text, is_shuffle] {
            const Alphabet al = al_opts->build({*u_text, *v_text}, false);
            const Word u = Word::parse(al, *u_text), v = Word::parse(al, *v_text);
            const NCPoly f = is_shuffle ? shuffle(u, v) : infiltration(u, v);
            if (format == "json")
                std::cout << poly_to_json(f).dump(2) << "\n";
            else
                std::cout << f.str() << "\n";
        });
    }

    // magnus: truncated expansion of a free-group word
    auto* mg = app.add_subcommand("magnus", "truncated Magnus expansion of a group word");
    mg->fallthrough();
    AlphabetOpts mg_al;
    mg_al.attach(mg);
    std::string mg_text, mg_mod;
    int mg_deg = 5;
    mg->add_option("word", mg_text, "group word, e.g. \"x y^-1 x^2\" (\"1\" = identity)")
        ->required();
    mg->add_option("--deg", mg_deg, "truncation degree");
    mg->add_option("--mod", mg_mod, "work over Z/m (default: integers)");
    mg->callback([&] {
        if (mg_deg < 0)
            throw std::invalid_argument("--deg must be >= 0");
        const Alphabet al = mg_al.build({mg_text}, true);
        const GroupWord g = GroupWord::parse(al, mg_text);
        Ring ring = Ring::integers();
        if (!mg_mod.empty()) {
            try {
                ring = Ring::integers_mod(BigInt(mg_mod));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad modulus \"" + mg_mod + "\"");
            }
        }
        const TruncatedSeries lam = magnus_expand(g, mg_deg, ring);
        if (format == "json")
            std::cout << series_to_json(lam).dump(2) << "\n";
        else
            std::cout << lam.str() << "\n";
    });

    // q-poly: shuffle-power polynomial attached to a word
    auto* qp = app.add_subcommand("q-poly", "Radford-basis polynomial of a word");
    qp->fallthrough();
    AlphabetOpts qp_al;
    qp_al.attach(qp);
    std::string qp_text;
    qp->add_option("word", qp_text, "plain word, e.g. \"abab\"")->required();
    qp->callback([&] {
        const Alphabet al = qp_al.build({qp_text}, false);
        const NCPoly f = q_polynomial(Word::parse(al, qp_text));
        if (format == "json")
            std::cout << poly_to_json(f).dump(2) << "\n";
        else
            std::cout << f.str() << "\n";
    });

    // fundamental-matrix: the pairing table of a formation
    auto* fm = app.add_subcommand("fundamental-matrix",
                                  "fundamental matrix of a Magnus formation");
    fm->fallthrough();
    FormationOpts fm_opts;
    fm_opts.attach(fm);
    fm->callback([&] {
        const FormationSpec spec = fm_opts.build();
        try {
            const FundamentalMatrix m = fundamental_matrix(spec);
            std::string witness;
            const bool ok = check_unitriangular(m, &witness);
            if (format == "json") {
                std::cout << fundamental_to_json(m).dump(2) << "\n";
            } else {
                std::cout << m.str();
                std::cout << "unitriangular: " << (ok ? "yes" : "NO") << "\n";
            }
            if (!ok) {
                std::cerr << "counterexample: " << witness << "\n";
                rc = 1;
            }
        } catch (const std::domain_error& e) {
            std::cerr << "counterexample: " << e.what() << "\n";
            rc = 1;
        }
    });

    // check: one named suite
    auto* ck = app.add_subcommand("check", "run one verification suite");
    ck->fallthrough();
    CheckOpts ck_opts;
    std::string ck_suite;
    ck->add_option("suite", ck_suite, "which suite")->required()->check(CLI::IsMember(kSuites));
    ck_opts.attach(ck);
    ck->callback([&] {
        const CheckReport rep = run_suite(ck_suite, ck_opts);
        emit_report(rep, format);
        rc = rep.exit_code();
    });

    // report: every suite, one combined document
    auto* rp = app.add_subcommand("report", "run all suites and summarize");
    rp->fallthrough();
    CheckOpts rp_opts;
    rp_opts.attach(rp);
    rp->callback([&] {
        std::vector<CheckReport> reps;
        for (const std::string& suite : kSuites)
            reps.push_back(run_suite(suite, rp_opts));
        std::string overall = "pass";
        for (const CheckReport& r : reps) {
            if (r.status == "fail")
                overall = "fail";
            else if (r.status == "warning" && overall == "pass")
                overall = "warning";
            rc = std::max(rc, r.exit_code());
        }
        if (format == "json") {
            Json j;
            Json suites = Json::array();
            for (const CheckReport& r : reps)
                suites.push_back(check_report_to_json(r));
            j["suites"] = std::move(suites);
            j["overall"] = overall;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const CheckReport& r : reps)
                std::cout << r.str() << "\n";
            std::string shout = overall;
            for (char& c : shout)
                c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            std::cout << "overall: " << shout << " (" << reps.size() << " suites)\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "counterexample: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
