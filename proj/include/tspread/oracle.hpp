#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tspread/betti.hpp"
#include "tspread/ideal.hpp"

namespace tspread {

/// GF(p) for a prime p < 2^31.
class PrimeField {
 public:
  static constexpr std::uint32_t default_characteristic = 32003;

  explicit PrimeField(std::uint32_t p = default_characteristic);

  std::uint32_t characteristic() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
};

/// Upper Koszul simplicial complex of I at multidegree b: the subsets tau of
/// supp(b) with x^{b - tau} in I. beta_{i,b}(I) = dim H~_{i-1} of it.
///
/// Faces are bitmasks over the local vertex list `vertices()`; the empty face
/// is included whenever x^b lies in I.
class UpperKoszulComplex {
 public:
  UpperKoszulComplex(const MonomialIdeal& ideal, const Monomial& b);

  /// Variables (1-based) that are vertices of the complex, ascending.
  const std::vector<int>& vertices() const noexcept { return vertices_; }
  /// faces_by_size()[k] lists faces with k vertices (dimension k-1).
  const std::vector<std::vector<std::uint32_t>>& faces_by_size() const noexcept { return faces_; }
  std::size_t face_count() const noexcept;

  /// Sum over faces of (-1)^{dim}, counting the empty face in dimension -1.
  std::int64_t reduced_euler_characteristic() const;

  /// dims[k + 1] = dim H~_k for k = -1 .. max dimension.
  std::vector<std::uint64_t> reduced_homology(const PrimeField& field) const;

 private:
  std::vector<int> vertices_;
  std::vector<std::vector<std::uint32_t>> faces_;
};

/// LCM closure of G(I): the only multidegrees that can carry Betti numbers.
/// Sorted ascending by degree then lex.
std::vector<Monomial> candidate_degrees(const MonomialIdeal& ideal);

/// beta_{i,b}(I) for all i with a nonzero value.
std::map<int, std::uint64_t> betti_multigraded(const MonomialIdeal& ideal, const Monomial& b,
                                               const PrimeField& field = PrimeField());

/// Graded Betti table of I (ideal convention) aggregated from the
/// multigraded numbers over the lcm closure. `threads` = 0 picks the
/// hardware concurrency; the result does not depend on it.
BettiTable betti_table_oracle(const MonomialIdeal& ideal, const PrimeField& field = PrimeField(),
                              unsigned threads = 0);

/// Requires I equigenerated in degree d.
bool is_linear_oracle(const MonomialIdeal& ideal, int d, const PrimeField& field = PrimeField(),
                      unsigned threads = 0);

}  // namespace tspread
