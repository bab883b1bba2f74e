#include "tspread/betti.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "tspread/binomial.hpp"
#include "tspread/errors.hpp"

namespace tspread {

std::string to_string(Convention c) { return c == Convention::ideal ? "ideal" : "quotient"; }

std::uint64_t BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t count) {
  if (count == 0) return;
  if (i < 0 || j < 0) throw PreconditionError("betti_index", "negative index (" + std::to_string(i) + "," + std::to_string(j) + ")");
  entries_[{i, j}] += count;
}

std::uint64_t BettiTable::total(int i) const {
  std::uint64_t s = 0;
  for (const auto& [key, c] : entries_)
    if (key.first == i) s += c;
  return s;
}

int BettiTable::max_homological_degree() const {
  int m = -1;
  for (const auto& [key, c] : entries_) m = std::max(m, key.first);
  return m;
}

BettiTable BettiTable::to_quotient() const {
  if (convention_ == Convention::quotient) return *this;
  BettiTable out(Convention::quotient);
  // S/S = 0 has no Betti numbers at all.
  if (at(0, 0) != 0) return out;
  out.add(0, 0, 1);
  for (const auto& [key, c] : entries_) out.add(key.first + 1, key.second, c);
  return out;
}

BettiTable BettiTable::to_ideal() const {
  if (convention_ == Convention::ideal) return *this;
  BettiTable out(Convention::ideal);
  if (entries_.empty()) {
    out.add(0, 0, 1);
    return out;
  }
  for (const auto& [key, c] : entries_) {
    if (key.first == 0) {
      if (key.second != 0 || c != 1)
        throw PreconditionError("quotient_table", "beta_{0,*}(S/I) must be the single entry beta_{0,0} = 1");
      continue;
    }
    out.add(key.first - 1, key.second, c);
  }
  return out;
}

bool BettiTable::is_linear(int d) const {
  const BettiTable ideal = to_ideal();
  return std::all_of(ideal.entries_.begin(), ideal.entries_.end(),
                     [d](const auto& kv) { return kv.first.second == d + kv.first.first; });
}

std::string render_table(const BettiTable& table) {
  const BettiTable q = table.to_quotient();
  const int columns = std::max(q.max_homological_degree(), 0) + 1;
  int rows = 1;
  for (const auto& [key, c] : q.entries()) rows = std::max(rows, key.second - key.first + 1);

  // cells[r][c]; r = 0 is the header, r = 1 the totals.
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(rows + 2));
  std::vector<std::string> labels{"", "total:"};
  for (int c = 0; c < columns; ++c) {
    cells[0].push_back(std::to_string(c));
    cells[1].push_back(std::to_string(q.total(c)));
  }
  for (int r = 0; r < rows; ++r) {
    labels.push_back(std::to_string(r) + ":");
    for (int c = 0; c < columns; ++c) {
      const std::uint64_t v = q.at(c, c + r);
      cells[static_cast<std::size_t>(r + 2)].push_back(v == 0 ? "." : std::to_string(v));
    }
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths(static_cast<std::size_t>(columns), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    out << std::setw(static_cast<int>(label_width)) << labels[r];
    for (std::size_t c = 0; c < cells[r].size(); ++c) out << ' ' << std::setw(static_cast<int>(widths[c])) << cells[r][c];
    out << '\n';
  }
  return out.str();
}

namespace {

template <class Width>
BettiTable sum_over_generators(const MonomialIdeal& ideal, Width&& width) {
  BettiTable table(Convention::ideal);
  for (const auto& u : ideal.gens()) {
    const int j = u.degree();
    const std::int64_t a = width(u, j);
    for (std::int64_t i = 0; i <= a; ++i) table.add(static_cast<int>(i), static_cast<int>(i) + j, binomial(a, i));
  }
  return table;
}

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& pool, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > static_cast<int>(pool.size())) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<int> s;
    s.reserve(pick.size());
    for (int p : pick) s.push_back(pool[static_cast<std::size_t>(p)]);
    out.push_back(std::move(s));
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(pool.size()) - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

void require_stable(const MonomialIdeal& ideal, int t, bool reversed) {
  if (!is_strongly_stable_tspread(ideal, t, reversed))
    throw PreconditionError(reversed ? "reversed_strongly_stable" : "strongly_stable",
                            "ideal is not " + std::to_string(t) + "-spread strongly stable" +
                                (reversed ? " for the reversed variable order" : ""));
}

}  // namespace

BettiTable betti_stable_formula(const MonomialIdeal& ideal, int t) {
  require_stable(ideal, t, false);
  return sum_over_generators(ideal, [t](const Monomial& u, int j) {
    return static_cast<std::int64_t>(u.max_index()) - static_cast<std::int64_t>(t) * (j - 1) - 1;
  });
}

BettiTable betti_reversed_formula(const MonomialIdeal& ideal, int t) {
  require_stable(ideal, t, true);
  const int n = ideal.ambient_n();
  return sum_over_generators(ideal, [t, n](const Monomial& u, int j) {
    return static_cast<std::int64_t>(n) - u.min_index() - static_cast<std::int64_t>(t) * (j - 1);
  });
}

std::vector<CycleLabel> cycle_basis(const MonomialIdeal& ideal, int t, int i, CycleSide side) {
  if (t < 1) throw PreconditionError("t_positive", "cycle labels are defined for t >= 1");
  if (i < 1) throw PreconditionError("homological_degree", "i = " + std::to_string(i) + " must be >= 1");
  require_stable(ideal, t, side == CycleSide::final);

  std::vector<CycleLabel> out;
  for (const auto& u : ideal.gens()) {
    const Monomial w = shift_tau(u, t - 1);
    const auto supp = w.support();
    auto avoids = [&](int c) { return !std::binary_search(supp.begin(), supp.end(), c); };
    std::vector<int> pool;
    if (side == CycleSide::initial) {
      for (int c = 1; c < w.max_index(); ++c)
        if (avoids(c)) pool.push_back(c);
    } else {
      for (int c = u.min_index() + 1; c <= w.ambient_n(); ++c)
        if (avoids(c)) pool.push_back(c);
    }
    for (auto& sigma : subsets_of_size(pool, i - 1)) out.push_back(CycleLabel{u, std::move(sigma), side});
  }
  return out;
}

NormalizedSpec normalize(const LexsegmentSpec& spec) {
  NormalizedSpec out{spec, false, 0, 0, SegmentKind::arbitrary, {}};
  while (true) {
    const LexsegmentSpec& cur = out.spec;
    const Params& p = cur.params();
    if (cur.is_principal()) {
      out.principal = true;
      out.steps.push_back("principal");
      break;
    }
    out.kind = cur.kind();
    if (out.kind != SegmentKind::arbitrary) break;

    const int m = cur.u().min_index();
    if (m > 1) {
      // Variables below min(u) divide no generator; drop them.
      const int shift = m - 1;
      auto reindex = [&](const Monomial& x) {
        auto idx = x.indices();
        for (int& k : idx) k -= shift;
        return Monomial::from_indices(p.n - shift, idx);
      };
      out.spec = LexsegmentSpec(Params{p.n - shift, p.d, p.t}, reindex(cur.u()), reindex(cur.v()));
      out.reindexed += shift;
      out.steps.push_back("reindex by " + std::to_string(shift));
      continue;
    }
    if (cur.v().min_index() == m) {
      out.spec = LexsegmentSpec(Params{p.n, p.d - 1, p.t}, cur.u().div_var(m), cur.v().div_var(m));
      ++out.stripped;
      out.steps.push_back("divide by x" + std::to_string(m));
      continue;
    }
    break;
  }
  return out;
}

LinearityVerdict has_linear_resolution(const LexsegmentSpec& spec) {
  // A principal ideal is linear whether or not J cap T happens to equal it.
  if (spec.is_principal()) return {true, "principal", normalize(spec)};
  if (!is_completely_by_intersection(spec))
    throw PreconditionError("completely_lexsegment", "(L(" + spec.u().to_string() + ", " + spec.v().to_string() +
                                                         ")) is not a completely lexsegment ideal");
  LinearityVerdict verdict{false, "", normalize(spec)};
  const NormalizedSpec& ns = verdict.normalized;
  if (ns.principal) {
    verdict.linear = true;
    verdict.reason = "principal";
    return verdict;
  }
  if (ns.kind != SegmentKind::arbitrary) {
    verdict.linear = true;
    verdict.reason = to_string(ns.kind);
    return verdict;
  }

  // Here min(u) = 1 < min(v) and d >= 2.
  const Params& p = ns.spec.params();
  const auto idx = ns.spec.u().indices();
  if (idx[1] == 1 + p.t) {
    verdict.linear = true;
    verdict.reason = "(i)";
    return verdict;
  }
  const auto omega = slex_successor(ns.spec.v(), p);
  if (!omega) throw InconsistencyError("a non-final segment must have an element below v");
  const Monomial lhs = omega->div_var(omega->max_index()).times_var(1);
  std::vector<int> bound{1};
  for (std::size_t k = 1; k < idx.size(); ++k) bound.push_back(idx[k] - p.t);
  const Monomial rhs = Monomial::from_indices(p.n, bound);
  verdict.linear = cmp_lex(lhs, rhs) <= 0;
  verdict.reason = verdict.linear ? "(ii)" : "neither (i) nor (ii)";
  return verdict;
}

BettiTable betti_completely_linear(const LexsegmentSpec& spec) {
  const LinearityVerdict verdict = has_linear_resolution(spec);
  if (!verdict.linear)
    throw PreconditionError("linear_resolution", "(L(" + spec.u().to_string() + ", " + spec.v().to_string() +
                                                     ")) does not have a linear resolution");
  const Params& p = spec.params();
  if (spec.is_principal()) {
    BettiTable one(Convention::ideal);
    one.add(0, p.d, 1);
    return one;
  }
  const std::int64_t shift = static_cast<std::int64_t>(p.d - 1) * p.t;

  std::vector<std::int64_t> plus;
  std::vector<std::int64_t> minus;
  for (std::optional<Monomial> w = spec.u(); w; w = slex_successor(*w, p)) plus.push_back(p.n - w->min_index() - shift);
  for (std::optional<Monomial> w = slex_successor(spec.v(), p); w; w = slex_successor(*w, p))
    minus.push_back(w->max_index() - shift - 1);

  BettiTable table(Convention::ideal);
  for (int i = 0; i <= p.n; ++i) {
    std::int64_t value = 0;
    for (auto a : plus) value += static_cast<std::int64_t>(binomial(a, i));
    for (auto a : minus) value -= static_cast<std::int64_t>(binomial(a, i));
    if (value < 0) throw InconsistencyError("negative Betti number from the completely-linear formula");
    table.add(i, i + p.d, static_cast<std::uint64_t>(value));
  }
  return table;
}

}  // namespace tspread
