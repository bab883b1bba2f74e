#pragma once

#include <vector>

#include "tspread/monomial.hpp"

namespace tspread {

/// A monomial ideal given by its minimal generating set G(I).
///
/// Generators are kept divisibility-minimal and sorted by ascending degree,
/// then descending lex, so that two equal ideals compare equal member-wise.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int ambient_n = 1) : n_(ambient_n) {}

  int ambient_n() const noexcept { return n_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Minimum generator degree; -1 for the zero ideal.
  int indeg() const noexcept;
  /// Generators of degree j.
  std::vector<Monomial> gens_of_degree(int j) const;
  /// Sorted distinct generator degrees.
  std::vector<int> generator_degrees() const;
  bool is_equigenerated() const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  friend MonomialIdeal minimalize(int ambient_n, std::vector<Monomial> gens);

 private:
  int n_;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal, deduplicated and sorted ideal generated by `gens`.
MonomialIdeal minimalize(int ambient_n, std::vector<Monomial> gens);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// All t-spread monomials of degree d of the ambient ring lying in the ideal,
/// in descending slex order.
std::vector<Monomial> graded_tspread_piece(const MonomialIdeal& ideal, int d, int t);

bool is_tspread(const MonomialIdeal& ideal, int t);

/// Checks the t-spread exchange property x_i (u / x_j) on G(I): i < j, or
/// i > j when `reversed` is set. Throws if I is not t-spread.
bool is_strongly_stable_tspread(const MonomialIdeal& ideal, int t, bool reversed = false);

/// Image of every generator under a re-indexing operator; the ideal is
/// assumed equigenerated so that all images share one ambient ring.
MonomialIdeal shift_tau(const MonomialIdeal& ideal, int s);
MonomialIdeal shift_sigma(const MonomialIdeal& ideal, int s);

}  // namespace tspread
