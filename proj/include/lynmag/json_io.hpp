#pragma once

#include "json.hpp"

#include "lynmag/checks.hpp"
#include "lynmag/formation.hpp"
#include "lynmag/ncpoly.hpp"
#include "lynmag/shuffle_indec.hpp"

namespace lynmag {

/// ordered_json keeps object keys in insertion order, so emitted reports have
/// a stable, readable field layout.
using Json = nlohmann::ordered_json;

/// "x","y",... for formation-flavoured commands (latin() covers the a,b,...
/// side). k <= 8.
Alphabet default_formation_alphabet(int k);

Json alphabet_to_json(const Alphabet& al);
Alphabet alphabet_from_json(const Json& j);

Json words_to_json(const std::vector<Word>& ws);

/// Length-alphabetically sorted array of {"word","coeff"}; coefficients as
/// exact decimal strings ("-4", "3/4").
Json poly_to_json(const NCPoly& f);
NCPoly poly_from_json(const Json& j, const Alphabet& al, const Ring& ring);

Json series_to_json(const TruncatedSeries& f);

/// Always the explicit form: {"alphabet","n","p","j","L"}.
Json formation_to_json(const FormationSpec& spec);

/// Accepts the explicit form or {"preset": "lower-p-central"|"zassenhaus",
/// "t":...}; alphabet via "alphabet" or "k" (default 2); "L" defaults to
/// "auto". Malformed input -> std::invalid_argument.
FormationSpec formation_from_json(const Json& j);

Json fundamental_to_json(const FundamentalMatrix& m);
FundamentalMatrix fundamental_from_json(const Json& j);

Json indec_to_json(const IndecReport& r);
Json isomorphism_to_json(const IsomorphismReport& r);
Json check_report_to_json(const CheckReport& r);

}  // namespace lynmag
