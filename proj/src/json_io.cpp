#include "tspread/json_io.hpp"

#include "tspread/errors.hpp"

namespace tspread {

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g.to_string());
  return Json{{"n", ideal.ambient_n()}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens")) gens.push_back(Monomial::parse(g.get<std::string>(), n));
    return minimalize(n, std::move(gens));
  } catch (const Json::exception& e) {
    throw PreconditionError("json_schema", e.what());
  }
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, c] : table.entries()) entries.push_back(Json::array({key.first, key.second, c}));
  return Json{{"convention", to_string(table.convention())}, {"entries", std::move(entries)}};
}

BettiTable betti_from_json(const Json& j) {
  try {
    const std::string c = j.at("convention").get<std::string>();
    if (c != "ideal" && c != "quotient") throw PreconditionError("json_schema", "unknown convention " + c);
    BettiTable table(c == "ideal" ? Convention::ideal : Convention::quotient);
    for (const auto& e : j.at("entries")) table.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::uint64_t>());
    return table;
  } catch (const Json::exception& e) {
    throw PreconditionError("json_schema", e.what());
  }
}

Json to_json(const LexsegmentSpec& spec) {
  const Params& p = spec.params();
  return Json{{"n", p.n}, {"d", p.d}, {"t", p.t}, {"u", spec.u().to_string()}, {"v", spec.v().to_string()},
              {"kind", to_string(spec.kind())}};
}

}  // namespace tspread
