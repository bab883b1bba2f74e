#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tspread/ideal.hpp"
#include "tspread/lexsegment.hpp"

namespace tspread {

enum class Convention { ideal, quotient };

std::string to_string(Convention c);

/// Sparse graded Betti numbers beta_{i,j}, keyed by (homological degree i,
/// internal degree j). Zero entries are never stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;

  explicit BettiTable(Convention convention = Convention::ideal) : convention_(convention) {}

  Convention convention() const noexcept { return convention_; }
  const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }

  std::uint64_t at(int i, int j) const;
  void add(int i, int j, std::uint64_t count);

  /// Sum over j of beta_{i,j}.
  std::uint64_t total(int i) const;
  /// Largest homological degree with a nonzero entry, or -1.
  int max_homological_degree() const;

  /// beta_{i+1,j}(S/I) = beta_{i,j}(I), plus beta_{0,0}(S/I) = 1.
  BettiTable to_quotient() const;
  BettiTable to_ideal() const;

  /// All nonzero entries of the ideal table sit at j = d + i.
  bool is_linear(int d) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  Convention convention_;
  std::map<Key, std::uint64_t> entries_;
};

/// Betti table in the usual layout: columns are homological degrees, rows
/// are j - i, and a "total:" row comes first. Always printed in quotient
/// convention.
std::string render_table(const BettiTable& table);

/// beta_{i,i+j}(I) = sum over u in G(I)_j of C(max(u) - t(j-1) - 1, i), for
/// t-spread strongly stable I. Ideal convention.
BettiTable betti_stable_formula(const MonomialIdeal& ideal, int t);

/// beta_{i,i+j}(I) = sum over u in G(I)_j of C(n - min(u) - t(j-1), i), for
/// I strongly stable with the variable order reversed.
BettiTable betti_reversed_formula(const MonomialIdeal& ideal, int t);

enum class CycleSide { initial, final };

/// Label (u, sigma) of a Koszul homology class of S/I in homological degree
/// |sigma| + 1. Indices in sigma refer to the ring of tau^{t-1}(u).
struct CycleLabel {
  Monomial generator;
  std::vector<int> sigma;
  CycleSide side = CycleSide::initial;

  int homological_degree() const { return static_cast<int>(sigma.size()) + 1; }
  int internal_degree() const { return generator.degree() + static_cast<int>(sigma.size()); }

  friend bool operator==(const CycleLabel&, const CycleLabel&) = default;
};

/// All labels in homological degree i >= 1 (quotient convention).
///
/// Initial side (I t-spread strongly stable): with w = tau^{t-1}(u), sigma
/// avoids supp(w) and max(sigma) < max(w).
/// Final side (stable for the reversed order): sigma avoids supp(w) and lies
/// in (min(u), n - (deg u - 1)(t-1)].
std::vector<CycleLabel> cycle_basis(const MonomialIdeal& ideal, int t, int i, CycleSide side);

/// Reductions that leave the Betti numbers unchanged up to a degree shift.
struct NormalizedSpec {
  LexsegmentSpec spec;
  bool principal = false;
  /// Number of variables dropped from the front by re-indexing.
  int reindexed = 0;
  /// Number of common minimal variables divided out.
  int stripped = 0;
  SegmentKind kind = SegmentKind::arbitrary;
  std::vector<std::string> steps;
};

/// Repeatedly (a) flags u = v, (b) re-indexes so that x_1 | u and (c)
/// divides u and v by x_{min(u)} while min(u) = min(v). Stops once
/// min(u) = 1 < min(v) or the segment is principal, initial or final.
NormalizedSpec normalize(const LexsegmentSpec& spec);

struct LinearityVerdict {
  bool linear = false;
  /// "principal", "initial", "final", "veronese", "(i)" or "(ii)".
  std::string reason;
  NormalizedSpec normalized;
};

/// Classification of completely t-spread lexsegment ideals with linear
/// resolution. Throws PreconditionError if (L_t(u,v)) is not completely
/// lexsegment.
LinearityVerdict has_linear_resolution(const LexsegmentSpec& spec);

/// beta_{i,i+d}(I) = sum_{w in L^f(u)} C(n - min(w) - (d-1)t, i)
///                 - sum_{w in L^f(v), w != v} C(max(w) - (d-1)t - 1, i)
/// for a completely lexsegment ideal with linear resolution.
BettiTable betti_completely_linear(const LexsegmentSpec& spec);

}  // namespace tspread
