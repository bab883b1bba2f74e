#include "tspread/lexsegment.hpp"

#include "tspread/errors.hpp"

namespace tspread {

namespace {

std::string describe(const Params& p) {
  return "M(" + std::to_string(p.n) + "," + std::to_string(p.d) + "," + std::to_string(p.t) + ")";
}

std::vector<Monomial> walk(Monomial from, const Monomial& to, const Params& p) {
  std::vector<Monomial> out;
  std::optional<Monomial> cur = std::move(from);
  while (cur) {
    out.push_back(*cur);
    if (*cur == to) break;
    cur = slex_successor(*cur, p);
  }
  return out;
}

}  // namespace

std::string to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::arbitrary: return "arbitrary";
    case SegmentKind::initial: return "initial";
    case SegmentKind::final: return "final";
    case SegmentKind::veronese: return "veronese";
  }
  return "unknown";
}

LexsegmentSpec::LexsegmentSpec(Params params, Monomial u, Monomial v)
    : params_(params), u_(std::move(u)), v_(std::move(v)) {
  validate(params_);
  if (!params_.admissible()) throw PreconditionError("set_nonempty", describe(params_) + " is empty");
  if (!in_set(u_, params_)) throw PreconditionError("u_in_set", u_.to_string() + " is not in " + describe(params_));
  if (!in_set(v_, params_)) throw PreconditionError("v_in_set", v_.to_string() + " is not in " + describe(params_));
  if (cmp_slex(u_, v_) < 0)
    throw PreconditionError("u_geq_v", u_.to_string() + " <_slex " + v_.to_string());
}

LexsegmentSpec LexsegmentSpec::parse(const Params& params, std::string_view u, std::string_view v) {
  validate(params);
  return LexsegmentSpec(params, Monomial::parse(u, params.n), Monomial::parse(v, params.n));
}

SegmentKind LexsegmentSpec::kind() const {
  const auto [top, bottom] = extremes(params_);
  const bool initial = u_ == top;
  const bool final = v_ == bottom;
  if (initial && final) return SegmentKind::veronese;
  if (initial) return SegmentKind::initial;
  if (final) return SegmentKind::final;
  return SegmentKind::arbitrary;
}

std::vector<Monomial> segment(const LexsegmentSpec& spec) { return walk(spec.u(), spec.v(), spec.params()); }

MonomialIdeal segment_ideal(const LexsegmentSpec& spec) { return minimalize(spec.params().n, segment(spec)); }

MonomialIdeal initial_ideal(const LexsegmentSpec& spec) {
  return minimalize(spec.params().n, walk(extremes(spec.params()).first, spec.v(), spec.params()));
}

MonomialIdeal final_ideal(const LexsegmentSpec& spec) {
  return minimalize(spec.params().n, walk(spec.u(), extremes(spec.params()).second, spec.params()));
}

MonomialIdeal veronese(const Params& p) { return minimalize(p.n, enumerate(p)); }

ConditionReport scan_exchange_condition(const LexsegmentSpec& spec) {
  const Params& p = spec.params();
  const Monomial& u = spec.u();
  const int i1 = u.min_index();
  ConditionReport report;
  for (auto omega = slex_successor(spec.v(), p); omega; omega = slex_successor(*omega, p)) {
    std::vector<Monomial> tried;
    bool found = false;
    for (int s : omega->support()) {
      if (s <= i1) continue;
      Monomial product = omega->div_var(s).times_var(i1);
      if (cmp_lex(product, u) <= 0) {
        found = true;
        break;
      }
      tried.push_back(std::move(product));
    }
    if (!found) {
      report.holds = false;
      report.witness = *omega;
      report.failed_products = std::move(tried);
      return report;
    }
  }
  return report;
}

ConditionReport is_completely_by_criterion(const LexsegmentSpec& spec) {
  if (const SegmentKind kind = spec.kind(); kind != SegmentKind::arbitrary) {
    ConditionReport report;
    report.shortcut = kind;
    return report;
  }
  return scan_exchange_condition(spec);
}

bool is_completely_by_intersection(const LexsegmentSpec& spec) {
  return segment_ideal(spec) == intersect(initial_ideal(spec), final_ideal(spec));
}

ConditionReport shadow_condition_bprime(const LexsegmentSpec& spec) {
  const int t = spec.params().t;
  if (t < 1) throw PreconditionError("t_positive", "the squarefree shadow needs t >= 1");
  // For t = 1 the statement coincides with the exchange condition itself,
  // so evaluate it on the image under tau^{t-1}.
  return is_completely_by_criterion(tau_segment(spec, t - 1));
}

LexsegmentSpec tau_segment(const LexsegmentSpec& spec, int s) {
  const Params& p = spec.params();
  if (s < 0 || s > p.t)
    throw PreconditionError("shift_in_range", "shift " + std::to_string(s) + " outside [0, " + std::to_string(p.t) + "]");
  const Params q{p.n - (p.d - 1) * s, p.d, p.t - s};
  return LexsegmentSpec(q, shift_tau(spec.u(), s), shift_tau(spec.v(), s));
}

}  // namespace tspread
