#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tspread {

using Exponent = std::uint32_t;

/// Parameters of the set M(n,d,t) of t-spread monomials of degree d in n
/// variables.
struct Params {
  int n = 1;
  int d = 1;
  int t = 0;

  /// n >= 1 + (d-1)t, i.e. M(n,d,t) is nonempty.
  bool admissible() const noexcept { return n >= 1 + (d - 1) * t; }

  friend bool operator==(const Params&, const Params&) = default;
};

void validate(const Params& p);

/// A monomial x_1^{a_1} ... x_n^{a_n} of the polynomial ring in n variables,
/// stored as a dense exponent vector. Index 0 of the vector is x_1.
class Monomial {
 public:
  Monomial() = default;
  /// The unit monomial of the ring with `ambient_n` variables.
  explicit Monomial(int ambient_n);
  Monomial(int ambient_n, std::vector<Exponent> exponents);

  /// Builds x_{i_1} x_{i_2} ... from 1-based variable indices; repeats are
  /// allowed and multiply.
  static Monomial from_indices(int ambient_n, const std::vector<int>& indices);

  int ambient_n() const noexcept { return static_cast<int>(exps_.size()); }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  /// Exponent of x_i, 1-based.
  Exponent exponent(int i) const { return exps_.at(static_cast<std::size_t>(i - 1)); }

  int degree() const noexcept;
  bool is_one() const noexcept { return degree() == 0; }
  bool is_squarefree() const noexcept;

  /// Sorted variable indices with multiplicity: x_2^2 x_3 -> {2, 2, 3}.
  std::vector<int> indices() const;
  /// Variables dividing the monomial, ascending.
  std::vector<int> support() const;
  /// min(1) = max(1) = 0.
  int min_index() const noexcept;
  int max_index() const noexcept;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Multiplies by x_i.
  Monomial times_var(int i) const;
  /// Divides by x_i; throws if x_i does not divide.
  Monomial div_var(int i) const;

  /// Same monomial viewed in a ring with a different number of variables.
  /// Throws if a used variable would fall outside the new ring.
  Monomial with_ambient(int ambient_n) const;

  std::string to_string() const;
  /// Accepts `1`, `x1*x5*x8`, `x2^2*x3^2`; variables may repeat.
  static Monomial parse(std::string_view text, int ambient_n);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Pure lexicographic comparison of exponent vectors with x_1 > x_2 > ... .
std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b);

/// Squarefree lexicographic comparison of equal-degree monomials. Compares
/// the sorted index lists: the first smaller index wins. On monomials of the
/// same degree this agrees with cmp_lex, and so it is also used for t = 0.
std::strong_ordering cmp_slex(const Monomial& a, const Monomial& b);

/// True iff i_{j+1} - i_j >= t for the sorted indices of m.
bool is_tspread(const Monomial& m, int t);

/// True iff m lies in M(n,d,t) for the given parameters.
bool in_set(const Monomial& m, const Params& p);

/// (max, min) of M(n,d,t) with respect to slex.
std::pair<Monomial, Monomial> extremes(const Params& p);

/// |M(n,d,t)| = C(n - (d-1)(t-1), d), and 0 when the set is empty.
std::uint64_t cardinality(const Params& p);

struct Gap {
  int position;
  int width;
  friend bool operator==(const Gap&, const Gap&) = default;
};

/// Positive gap widths of u in M(n,d,t). Position j < d has width
/// i_{j+1} - i_j - t; position d carries the slack n - i_d.
using GapProfile = std::vector<Gap>;

GapProfile gap_profile(const Monomial& u, const Params& p);

/// Largest element of M(n,d,t) strictly below u in slex order, or nullopt if
/// u is the minimum.
std::optional<Monomial> slex_successor(const Monomial& u, const Params& p);

/// M(n,d,t) in strictly descending slex order.
std::vector<Monomial> enumerate(const Params& p);

/// x_{i_j} -> x_{i_j + (j-1)s}; the ambient ring grows by (d-1)s.
Monomial shift_sigma(const Monomial& m, int s);

/// x_{i_j} -> x_{i_j - (j-1)s}; the ambient ring shrinks by (d-1)s. Throws
/// when an index would leave the ring or the indices would stop being
/// weakly increasing.
Monomial shift_tau(const Monomial& m, int s);

}  // namespace tspread
