#include "tspread/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>

#include "tspread/betti.hpp"
#include "tspread/errors.hpp"
#include "tspread/json_io.hpp"
#include "tspread/lexsegment.hpp"
#include "tspread/oracle.hpp"

namespace tspread {

namespace {

struct Options {
  int n = 0;
  std::optional<int> d;
  int t = 0;
  std::string u;
  std::string v;
  bool json = false;
  std::optional<std::uint32_t> field_char;
  unsigned threads = 0;
  std::string part = "segment";
  std::string method = "formula";
  std::string convention = "quotient";
  std::string op = "sigma";
  int shift = 1;
  std::vector<std::string> monomials;
  std::string left;
  std::string right;
  std::string gens;
  bool oracle = false;
};

std::vector<Monomial> parse_list(const std::string& text, int n) {
  std::vector<Monomial> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(Monomial::parse(item, n));
  }
  return out;
}

PrimeField field_of(const Options& o) {
  if (o.field_char) return PrimeField(*o.field_char);
  if (const char* env = std::getenv(kFieldCharEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long p = std::strtoul(env, &end, 10);
    if (*end != '\0' || p > 0xffffffffUL)
      throw PreconditionError("field_prime", std::string(kFieldCharEnv) + "=" + env + " is not a number");
    return PrimeField(static_cast<std::uint32_t>(p));
  }
  return PrimeField();
}

void require_n(const Options& o) {
  if (o.n < 1) throw PreconditionError("n_positive", "-n is required and must be >= 1");
}

LexsegmentSpec spec_of(const Options& o) {
  require_n(o);
  if (o.u.empty() || o.v.empty()) throw PreconditionError("endpoints", "both -u and -v are required");
  const Monomial u = Monomial::parse(o.u, o.n);
  const Params p{o.n, o.d.value_or(u.degree()), o.t};
  validate(p);
  return LexsegmentSpec(p, u, Monomial::parse(o.v, o.n));
}

Params params_of(const Options& o) {
  require_n(o);
  if (!o.d) throw PreconditionError("degree", "-d is required");
  const Params p{o.n, *o.d, o.t};
  validate(p);
  return p;
}

// The ideal addressed by --gens, or by -u/-v together with --part.
MonomialIdeal target_ideal(const Options& o) {
  if (!o.gens.empty()) {
    require_n(o);
    return minimalize(o.n, parse_list(o.gens, o.n));
  }
  if (o.part == "veronese" && o.u.empty()) return veronese(params_of(o));
  const LexsegmentSpec spec = spec_of(o);
  if (o.part == "segment") return segment_ideal(spec);
  if (o.part == "initial") return initial_ideal(spec);
  if (o.part == "final") return final_ideal(spec);
  if (o.part == "veronese") return veronese(spec.params());
  throw PreconditionError("part", "unknown part " + o.part);
}

Json null_or(const std::optional<Monomial>& m) { return m ? Json(m->to_string()) : Json(nullptr); }

void print_gens(std::ostream& out, const std::vector<Monomial>& gens) {
  for (const auto& g : gens) out << g.to_string() << '\n';
}

// Closed form matching the shape of the ideal; the completely-lexsegment
// formula is tried first when -u/-v name a segment.
std::pair<BettiTable, std::string> formula_table(const Options& o, const MonomialIdeal& ideal) {
  if (o.gens.empty() && o.part == "segment") {
    const LexsegmentSpec spec = spec_of(o);
    if (is_completely_by_intersection(spec) && has_linear_resolution(spec).linear)
      return {betti_completely_linear(spec), "completely-linear"};
  }
  if (ideal.is_zero()) return {BettiTable(Convention::ideal), "zero"};
  const int t = o.t;
  if (is_tspread(ideal, t)) {
    if (is_strongly_stable_tspread(ideal, t, false)) return {betti_stable_formula(ideal, t), "stable"};
    if (is_strongly_stable_tspread(ideal, t, true)) return {betti_reversed_formula(ideal, t), "reversed-stable"};
  }
  throw PreconditionError("formula_available", "no closed formula applies to this ideal");
}

BettiTable in_convention(const BettiTable& table, const std::string& c) {
  return c == "ideal" ? table.to_ideal() : table.to_quotient();
}

std::vector<std::array<std::int64_t, 4>> diff(const BettiTable& a, const BettiTable& b) {
  std::vector<std::array<std::int64_t, 4>> out;
  std::set<BettiTable::Key> keys;
  for (const auto& [k, c] : a.entries()) keys.insert(k);
  for (const auto& [k, c] : b.entries()) keys.insert(k);
  for (const auto& k : keys) {
    const auto x = a.at(k.first, k.second);
    const auto y = b.at(k.first, k.second);
    if (x != y)
      out.push_back({k.first, k.second, static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)});
  }
  return out;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Params p = params_of(o);
  const auto all = enumerate(p);
  if (o.json) {
    Json list = Json::array();
    for (const auto& m : all) list.push_back(m.to_string());
    out << Json{{"n", p.n}, {"d", p.d}, {"t", p.t}, {"count", all.size()}, {"monomials", list}}.dump() << '\n';
  } else {
    print_gens(out, all);
  }
  return kExitOk;
}

int cmd_successor(const Options& o, std::ostream& out) {
  require_n(o);
  if (o.monomials.size() != 1) throw PreconditionError("arguments", "successor takes exactly one monomial");
  const Monomial m = Monomial::parse(o.monomials.front(), o.n);
  const Params p{o.n, o.d.value_or(m.degree()), o.t};
  validate(p);
  if (!in_set(m, p)) throw PreconditionError("u_in_set", m.to_string() + " is not a t-spread monomial of degree " + std::to_string(p.d));
  const auto next = slex_successor(m, p);
  if (o.json)
    out << Json{{"n", p.n}, {"d", p.d}, {"t", p.t}, {"monomial", m.to_string()}, {"successor", null_or(next)}}.dump()
        << '\n';
  else
    out << (next ? next->to_string() : "none") << '\n';
  return kExitOk;
}

int cmd_segment(const Options& o, std::ostream& out) {
  const MonomialIdeal ideal = target_ideal(o);
  if (o.json)
    out << to_json(ideal).dump() << '\n';
  else
    print_gens(out, ideal.gens());
  return kExitOk;
}

int cmd_shift(const Options& o, std::ostream& out) {
  require_n(o);
  if (o.monomials.empty()) throw PreconditionError("arguments", "shift needs at least one monomial");
  std::vector<Monomial> gens;
  for (const auto& s : o.monomials) gens.push_back(Monomial::parse(s, o.n));
  const int deg = gens.front().degree();
  if (std::any_of(gens.begin(), gens.end(), [deg](const Monomial& g) { return g.degree() != deg; }))
    throw PreconditionError("equigenerated", "all monomials passed to shift must share one degree");
  const MonomialIdeal ideal = minimalize(o.n, gens);
  MonomialIdeal image(1);
  if (o.op == "sigma")
    image = shift_sigma(ideal, o.shift);
  else if (o.op == "tau")
    image = shift_tau(ideal, o.shift);
  else
    throw PreconditionError("shift_operator", "unknown operator " + o.op);
  if (o.json)
    out << to_json(image).dump() << '\n';
  else
    print_gens(out, image.gens());
  return kExitOk;
}

int cmd_intersect(const Options& o, std::ostream& out) {
  MonomialIdeal result(1);
  std::optional<bool> equals_segment;
  if (!o.left.empty() || !o.right.empty()) {
    require_n(o);
    result = intersect(minimalize(o.n, parse_list(o.left, o.n)), minimalize(o.n, parse_list(o.right, o.n)));
  } else {
    const LexsegmentSpec spec = spec_of(o);
    result = intersect(initial_ideal(spec), final_ideal(spec));
    equals_segment = result == segment_ideal(spec);
  }
  if (o.json) {
    Json j = to_json(result);
    j["degrees"] = result.generator_degrees();
    if (equals_segment) j["equals_segment"] = *equals_segment;
    out << j.dump() << '\n';
  } else {
    print_gens(out, result.gens());
    if (equals_segment) out << "equals segment ideal: " << (*equals_segment ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_check_complete(const Options& o, std::ostream& out) {
  const LexsegmentSpec spec = spec_of(o);
  const bool completely = is_completely_by_intersection(spec);
  const ConditionReport report = is_completely_by_criterion(spec);
  if (o.json) {
    Json j = to_json(spec);
    j["completely"] = completely;
    j["criterion"] = report.holds;
    j["witness"] = null_or(report.witness);
    Json failed = Json::array();
    for (const auto& f : report.failed_products) failed.push_back(f.to_string());
    j["failed_products"] = failed;
    out << j.dump() << '\n';
  } else {
    out << "kind: " << to_string(spec.kind()) << '\n';
    out << "completely: " << (completely ? "true" : "false") << '\n';
    out << "criterion: " << (report.holds ? "true" : "false") << '\n';
    out << "witness: " << (report.witness ? report.witness->to_string() : "none") << '\n';
    for (const auto& f : report.failed_products) out << "  failed: " << f.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_check_linear(const Options& o, std::ostream& out) {
  const LexsegmentSpec spec = spec_of(o);
  const LinearityVerdict verdict = has_linear_resolution(spec);
  std::optional<bool> oracle;
  if (o.oracle) oracle = is_linear_oracle(segment_ideal(spec), spec.params().d, field_of(o), o.threads);
  if (o.json) {
    Json j = to_json(spec);
    j["linear"] = verdict.linear;
    j["reason"] = verdict.reason;
    j["normalized"] = to_json(verdict.normalized.spec);
    j["steps"] = verdict.normalized.steps;
    if (oracle) j["oracle"] = *oracle;
    out << j.dump() << '\n';
  } else {
    out << "linear: " << (verdict.linear ? "true" : "false") << '\n';
    out << "reason: " << verdict.reason << '\n';
    const LexsegmentSpec& ns = verdict.normalized.spec;
    out << "normalized: n=" << ns.params().n << " d=" << ns.params().d << " u=" << ns.u().to_string()
        << " v=" << ns.v().to_string() << '\n';
    if (oracle) out << "oracle: " << (*oracle ? "true" : "false") << '\n';
  }
  if (oracle && *oracle != verdict.linear) return kExitInconsistent;
  return kExitOk;
}

int cmd_betti(const Options& o, std::ostream& out, const std::string& method) {
  if (method != "formula" && method != "oracle" && method != "both")
    throw PreconditionError("method", "unknown method " + method);
  if (o.convention != "ideal" && o.convention != "quotient")
    throw PreconditionError("convention", "unknown convention " + o.convention);
  const MonomialIdeal ideal = target_ideal(o);

  std::optional<std::pair<BettiTable, std::string>> formula;
  std::optional<BettiTable> oracle;
  std::optional<PrimeField> field;
  if (method != "oracle") formula = formula_table(o, ideal);
  if (method != "formula") {
    field = field_of(o);
    oracle = betti_table_oracle(ideal, *field, o.threads);
  }
  const auto delta = (formula && oracle) ? diff(formula->first, *oracle) : decltype(diff(*oracle, *oracle)){};

  if (o.json) {
    Json j;
    if (formula) {
      j["formula"] = to_json(in_convention(formula->first, o.convention));
      j["formula"]["source"] = formula->second;
    }
    if (oracle) {
      j["oracle"] = to_json(in_convention(*oracle, o.convention));
      j["oracle"]["method"] = "homology";
      j["oracle"]["char"] = field->characteristic();
    }
    if (formula && oracle) {
      Json d = Json::array();
      for (const auto& e : delta) d.push_back(Json::array({e[0], e[1], e[2], e[3]}));
      j["diff"] = d;
      j["agree"] = delta.empty();
    }
    out << j.dump() << '\n';
  } else {
    if (formula) {
      if (oracle) out << "formula (" << formula->second << "):\n";
      out << render_table(formula->first);
    }
    if (oracle) {
      if (formula) out << "oracle (homology over GF(" << field->characteristic() << ")):\n";
      out << render_table(*oracle);
    }
    if (formula && oracle) {
      out << "diff (ideal convention i j formula oracle):\n";
      if (delta.empty()) out << "  none\n";
      for (const auto& e : delta) out << "  " << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << e[3] << '\n';
    }
  }
  return delta.empty() ? kExitOk : kExitInconsistent;
}

int cmd_census(const Options& o, std::ostream& out) {
  const Params p = params_of(o);
  const auto all = enumerate(p);
  Json rows = Json::array();
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a; b < all.size(); ++b) {
      const LexsegmentSpec spec(p, all[a], all[b]);
      const bool completely = is_completely_by_intersection(spec);
      const ConditionReport report = is_completely_by_criterion(spec);
      std::optional<LinearityVerdict> verdict;
      if (completely) verdict = has_linear_resolution(spec);
      if (o.json) {
        rows.push_back(Json{{"u", spec.u().to_string()},
                            {"v", spec.v().to_string()},
                            {"kind", to_string(spec.kind())},
                            {"completely", completely},
                            {"criterion", report.holds},
                            {"linear", verdict ? Json(verdict->linear) : Json(nullptr)},
                            {"reason", verdict ? Json(verdict->reason) : Json(nullptr)}});
      } else {
        out << spec.u().to_string() << ' ' << spec.v().to_string() << ' ' << to_string(spec.kind()) << ' '
            << (completely ? "completely" : "not-completely") << ' ' << (report.holds ? "criterion" : "no-criterion")
            << ' ' << (verdict ? (verdict->linear ? "linear" : "nonlinear") : "-") << '\n';
      }
    }
  if (o.json) out << Json{{"n", p.n}, {"d", p.d}, {"t", p.t}, {"rows", rows}}.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"t-spread lexsegment ideals: enumeration, completeness, linearity and Betti numbers", "tspread"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("-n", o.n, "number of variables");
    sub->add_option("-d", o.d, "degree");
    sub->add_option("-t", o.t, "spread")->check(CLI::NonNegativeNumber);
    sub->add_option("-u", o.u, "upper endpoint, e.g. x1*x5*x8");
    sub->add_option("-v", o.v, "lower endpoint");
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--field-char", o.field_char, std::string("prime for the homology oracle (default ") +
                                                      kFieldCharEnv + " or 32003)");
    sub->add_option("--threads", o.threads, "oracle worker threads, 0 = hardware");
  };
  auto add_target = [&o](CLI::App* sub) {
    sub->add_option("--part", o.part, "segment|initial|final|veronese");
    sub->add_option("--gens", o.gens, "explicit generators, comma separated (needs -n)");
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list M(n,d,t) in descending slex order");
  add_common(enumerate_cmd);
  auto* successor_cmd = app.add_subcommand("successor", "next monomial in slex order, or none");
  add_common(successor_cmd);
  successor_cmd->add_option("monomial", o.monomials)->required();
  auto* segment_cmd = app.add_subcommand("segment", "generators of a segment, J, T or the Veronese ideal");
  add_common(segment_cmd);
  add_target(segment_cmd);
  auto* shift_cmd = app.add_subcommand("shift", "apply sigma^s or tau^s to monomials");
  add_common(shift_cmd);
  shift_cmd->add_option("--op", o.op, "sigma|tau");
  shift_cmd->add_option("-s", o.shift, "shift amount")->check(CLI::NonNegativeNumber);
  shift_cmd->add_option("monomials", o.monomials)->required();
  auto* intersect_cmd = app.add_subcommand("intersect", "J intersect T for -u/-v, or --left intersect --right");
  add_common(intersect_cmd);
  intersect_cmd->add_option("--left", o.left, "generators, comma separated");
  intersect_cmd->add_option("--right", o.right, "generators, comma separated");
  auto* complete_cmd = app.add_subcommand("check-complete", "completeness by intersection and by the exchange criterion");
  add_common(complete_cmd);
  auto* linear_cmd = app.add_subcommand("check-linear", "linear resolution of a completely lexsegment ideal");
  add_common(linear_cmd);
  linear_cmd->add_flag("--oracle", o.oracle, "cross-check with the homology oracle");
  auto* betti_cmd = app.add_subcommand("betti", "graded Betti numbers");
  add_common(betti_cmd);
  add_target(betti_cmd);
  betti_cmd->add_option("--method", o.method, "formula|oracle|both");
  betti_cmd->add_option("--convention", o.convention, "ideal|quotient (JSON only)");
  auto* oracle_cmd = app.add_subcommand("betti-oracle", "graded Betti numbers from the homology oracle");
  add_common(oracle_cmd);
  add_target(oracle_cmd);
  oracle_cmd->add_option("--convention", o.convention, "ideal|quotient (JSON only)");
  auto* census_cmd = app.add_subcommand("census", "classify every segment of M(n,d,t)");
  add_common(census_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (enumerate_cmd->parsed()) return cmd_enumerate(o, out);
    if (successor_cmd->parsed()) return cmd_successor(o, out);
    if (segment_cmd->parsed()) return cmd_segment(o, out);
    if (shift_cmd->parsed()) return cmd_shift(o, out);
    if (intersect_cmd->parsed()) return cmd_intersect(o, out);
    if (complete_cmd->parsed()) return cmd_check_complete(o, out);
    if (linear_cmd->parsed()) return cmd_check_linear(o, out);
    if (betti_cmd->parsed()) return cmd_betti(o, out, o.method);
    if (oracle_cmd->parsed()) return cmd_betti(o, out, "oracle");
    if (census_cmd->parsed()) return cmd_census(o, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::overflow_error& e) {
    err << "error: overflow: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return kExitPrecondition;
}

}  // namespace tspread
