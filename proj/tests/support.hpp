#pragma once

// Brute-force references used by the unit and acceptance tests. They work on
// plain index lists and never call the library's enumeration, ordering or
// intersection code.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "tspread/errors.hpp"
#include "tspread/monomial.hpp"

namespace tspread::testing {

using Indices = std::vector<int>;

// All k-subsets of {1..n}, increasing lists.
inline std::vector<Indices> subsets(int n, int k) {
  std::vector<Indices> out;
  if (k < 0 || k > n) return out;
  Indices cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// All sorted index lists of length d with entries in 1..n (repetition allowed).
inline std::vector<Indices> multisets(int n, int d) {
  std::vector<Indices> out;
  Indices cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline bool spread_ok(const Indices& idx, int t) {
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (idx[k] - idx[k - 1] < t) return false;
  return true;
}

// a >_slex b for equal-length sorted index lists: the first differing
// position decides, smaller index wins.
inline bool slex_greater(const Indices& a, const Indices& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

// M(n,d,t), descending.
inline std::vector<Indices> brute_tspread(int n, int d, int t) {
  std::vector<Indices> out;
  for (auto& m : multisets(n, d))
    if (spread_ok(m, t)) out.push_back(m);
  std::sort(out.begin(), out.end(), slex_greater);
  return out;
}

inline Monomial mono(int n, const Indices& idx) { return Monomial::from_indices(n, idx); }

inline std::vector<Monomial> monos(int n, const std::vector<Indices>& list) {
  std::vector<Monomial> out;
  for (const auto& idx : list) out.push_back(mono(n, idx));
  return out;
}

// Multiset inclusion of sorted index lists.
inline bool divides(const Indices& g, const Indices& m) {
  return std::includes(m.begin(), m.end(), g.begin(), g.end());
}

inline bool member(const std::vector<Indices>& gens, const Indices& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Indices& g) { return divides(g, m); });
}

// Definition of completeness checked pointwise: for squarefree generators the
// ideals I and J cap T are both generated in degrees <= 2d by squarefree
// monomials, so they agree iff they contain the same squarefree monomials of
// degree <= 2d.
inline bool brute_completely(int n, const std::vector<Indices>& all, std::size_t iu, std::size_t iv) {
  const std::vector<Indices> seg(all.begin() + static_cast<long>(iu), all.begin() + static_cast<long>(iv) + 1);
  const std::vector<Indices> initial(all.begin(), all.begin() + static_cast<long>(iv) + 1);
  const std::vector<Indices> final(all.begin() + static_cast<long>(iu), all.end());
  const int d = static_cast<int>(all.front().size());
  for (int k = d; k <= std::min(n, 2 * d); ++k)
    for (const auto& m : subsets(n, k))
      if (member(seg, m) != (member(initial, m) && member(final, m))) return false;
  return true;
}

// Name of the invariant reported by a PreconditionError thrown from f, or ""
// if f returns normally.
inline std::string invariant_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const PreconditionError& e) {
    return e.invariant();
  }
  return "";
}

inline std::string join(const std::vector<Monomial>& ms) {
  std::string s;
  for (const auto& m : ms) s += (s.empty() ? "" : ",") + m.to_string();
  return s;
}

}  // namespace tspread::testing
