#pragma once

#include <json.hpp>

#include "tspread/betti.hpp"
#include "tspread/ideal.hpp"
#include "tspread/lexsegment.hpp"

namespace tspread {

using Json = nlohmann::ordered_json;

/// {"n": int, "gens": [string...]}
Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

/// {"convention": "ideal"|"quotient", "entries": [[i, j, count]...]}
Json to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& j);

/// {"n","d","t","u","v","kind"}
Json to_json(const LexsegmentSpec& spec);

}  // namespace tspread
