#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tspread/ideal.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

enum class SegmentKind { arbitrary, initial, final, veronese };

std::string to_string(SegmentKind kind);

/// Endpoints u >=_slex v of a t-spread lexsegment L_t(u, v) in M(n,d,t).
class LexsegmentSpec {
 public:
  /// Throws PreconditionError unless u, v lie in M(n,d,t) and u >=_slex v.
  LexsegmentSpec(Params params, Monomial u, Monomial v);

  static LexsegmentSpec parse(const Params& params, std::string_view u, std::string_view v);

  const Params& params() const noexcept { return params_; }
  const Monomial& u() const noexcept { return u_; }
  const Monomial& v() const noexcept { return v_; }

  SegmentKind kind() const;
  bool is_principal() const { return u_ == v_; }

  friend bool operator==(const LexsegmentSpec&, const LexsegmentSpec&) = default;

 private:
  Params params_;
  Monomial u_;
  Monomial v_;
};

/// L_t(u, v) in descending slex order.
std::vector<Monomial> segment(const LexsegmentSpec& spec);

/// (L_t(u, v)).
MonomialIdeal segment_ideal(const LexsegmentSpec& spec);
/// J = (L_t^i(v)), the initial segment ending at v.
MonomialIdeal initial_ideal(const LexsegmentSpec& spec);
/// T = (L_t^f(u)), the final segment starting at u.
MonomialIdeal final_ideal(const LexsegmentSpec& spec);
/// The t-spread Veronese ideal generated by all of M(n,d,t).
MonomialIdeal veronese(const Params& p);

/// Outcome of the exchange condition: for every omega <_slex v there is
/// s > min(u) with x_s | omega and x_{min(u)} (omega / x_s) <=_lex u.
struct ConditionReport {
  bool holds = true;
  /// Set when the condition was decided without scanning.
  std::optional<SegmentKind> shortcut;
  /// The slex-largest omega for which no exchange works.
  std::optional<Monomial> witness;
  /// Every product x_{min(u)} (omega / x_s), s > min(u), tried for the witness.
  std::vector<Monomial> failed_products;
};

/// Scans the exchange condition literally over omega <_slex v, lazily
/// walking slex successors. No shortcut for initial or final segments.
ConditionReport scan_exchange_condition(const LexsegmentSpec& spec);

/// Initial, final and Veronese segments are accepted outright; anything
/// else is decided by scan_exchange_condition.
ConditionReport is_completely_by_criterion(const LexsegmentSpec& spec);

/// Decides (L_t(u,v)) = J intersect T by computing the intersection.
bool is_completely_by_intersection(const LexsegmentSpec& spec);

/// The exchange condition evaluated on the squarefree image under
/// tau^{t-1}, with the same shortcuts as is_completely_by_criterion.
/// Requires t >= 1.
ConditionReport shadow_condition_bprime(const LexsegmentSpec& spec);

/// Spec over tau^s(u), tau^s(v) in M(n-(d-1)s, d, t-s); 0 <= s <= t.
LexsegmentSpec tau_segment(const LexsegmentSpec& spec, int s);

}  // namespace tspread
