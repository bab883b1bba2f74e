#include "tspread/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "tspread/errors.hpp"

namespace tspread {

namespace {

constexpr int kMaxVertices = 24;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using SparseColumn = std::vector<std::pair<int, std::uint32_t>>;

// a += factor * b, both sorted by row, zeros dropped.
void axpy(SparseColumn& a, std::uint32_t factor, const SparseColumn& b, const PrimeField& f) {
  SparseColumn out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f.mul(factor, b[j].second));
      ++j;
    } else {
      const std::uint32_t c = f.add(a[i].second, f.mul(factor, b[j].second));
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

// Rank over GF(p) by column reduction on the lowest nonzero row.
std::uint64_t rank(std::vector<SparseColumn> columns, std::size_t rows, const PrimeField& f) {
  std::vector<int> owner(rows, -1);
  std::uint64_t r = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    SparseColumn& col = columns[c];
    while (!col.empty()) {
      const auto [low, coef] = col.back();
      const int o = owner[static_cast<std::size_t>(low)];
      if (o < 0) {
        owner[static_cast<std::size_t>(low)] = static_cast<int>(c);
        ++r;
        break;
      }
      const SparseColumn& pivot = columns[static_cast<std::size_t>(o)];
      const std::uint32_t factor = f.neg(f.mul(coef, f.inv(pivot.back().second)));
      axpy(col, factor, pivot, f);
    }
  }
  return r;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw PreconditionError("field_prime", std::to_string(p) + " is not a prime below 2^31");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw PreconditionError("field_inverse", "zero has no inverse");
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<std::uint32_t>(result);
}

UpperKoszulComplex::UpperKoszulComplex(const MonomialIdeal& ideal, const Monomial& b) {
  if (b.ambient_n() != ideal.ambient_n())
    throw PreconditionError("ambient_mismatch", "multidegree and ideal live in different rings");
  vertices_ = b.support();
  const int m = static_cast<int>(vertices_.size());
  if (m > kMaxVertices)
    throw PreconditionError("complex_size", "multidegree has " + std::to_string(m) + " variables; at most " +
                                                std::to_string(kMaxVertices) + " are supported");

  // x^{b - tau} is divisible by g iff g | x^b and tau avoids the vertices
  // where g already uses the full exponent of b.
  std::vector<std::uint32_t> tight;
  for (const auto& g : ideal.gens()) {
    if (!g.divides(b)) continue;
    std::uint32_t mask = 0;
    for (int k = 0; k < m; ++k) {
      const int var = vertices_[static_cast<std::size_t>(k)];
      if (g.exponent(var) == b.exponent(var)) mask |= 1u << k;
    }
    tight.push_back(mask);
  }

  const std::uint32_t full = m == 0 ? 1u : (1u << m);
  std::vector<char> is_face(full, 0);
  faces_.assign(static_cast<std::size_t>(m + 1), {});
  for (std::uint32_t tau = 0; tau < full; ++tau) {
    const bool face = std::any_of(tight.begin(), tight.end(), [tau](std::uint32_t t) { return (tau & t) == 0; });
    if (!face) continue;
    is_face[tau] = 1;
    faces_[static_cast<std::size_t>(std::popcount(tau))].push_back(tau);
  }
  for (std::uint32_t tau = 0; tau < full; ++tau) {
    if (!is_face[tau]) continue;
    for (std::uint32_t rest = tau; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (!is_face[tau ^ bit]) throw InconsistencyError("upper Koszul complex is not closed under taking subsets");
    }
  }
  while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
}

std::size_t UpperKoszulComplex::face_count() const noexcept {
  std::size_t c = 0;
  for (const auto& f : faces_) c += f.size();
  return c;
}

std::int64_t UpperKoszulComplex::reduced_euler_characteristic() const {
  std::int64_t chi = 0;
  // Faces with k vertices have dimension k - 1.
  for (std::size_t k = 0; k < faces_.size(); ++k)
    chi += ((k % 2 == 1) ? 1 : -1) * static_cast<std::int64_t>(faces_[k].size());
  return chi;
}

std::vector<std::uint64_t> UpperKoszulComplex::reduced_homology(const PrimeField& field) const {
  const std::size_t sizes = faces_.size();
  if (sizes == 0) return {};

  const int m = static_cast<int>(vertices_.size());
  std::vector<int> index(m == 0 ? 1u : (1u << m), -1);
  for (const auto& layer : faces_)
    for (std::size_t i = 0; i < layer.size(); ++i) index[layer[i]] = static_cast<int>(i);

  // ranks[k] = rank of the boundary from faces with k vertices to faces with
  // k - 1 vertices; ranks[0] = 0.
  std::vector<std::uint64_t> ranks(sizes + 1, 0);
  for (std::size_t k = 1; k < sizes; ++k) {
    std::vector<SparseColumn> columns;
    columns.reserve(faces_[k].size());
    for (std::uint32_t tau : faces_[k]) {
      SparseColumn col;
      int position = 0;
      for (std::uint32_t rest = tau; rest != 0; rest &= rest - 1, ++position) {
        const std::uint32_t bit = rest & (~rest + 1);
        const std::uint32_t sign = (position % 2 == 0) ? 1u : field.neg(1);
        col.emplace_back(index[tau ^ bit], sign);
      }
      std::sort(col.begin(), col.end());
      columns.push_back(std::move(col));
    }
    ranks[k] = rank(std::move(columns), faces_[k - 1].size(), field);
  }

  std::vector<std::uint64_t> dims(sizes, 0);
  for (std::size_t k = 0; k < sizes; ++k) dims[k] = faces_[k].size() - ranks[k] - ranks[k + 1];
  return dims;
}

std::vector<Monomial> candidate_degrees(const MonomialIdeal& ideal) {
  std::set<std::vector<Exponent>> seen;
  std::vector<Monomial> frontier;
  for (const auto& g : ideal.gens())
    if (seen.insert(g.exponents()).second) frontier.push_back(g);
  std::vector<Monomial> all = frontier;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& x : frontier)
      for (const auto& g : ideal.gens()) {
        Monomial l = x.lcm(g);
        if (seen.insert(l.exponents()).second) next.push_back(std::move(l));
      }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return cmp_lex(a, b) > 0;
  });
  return all;
}

std::map<int, std::uint64_t> betti_multigraded(const MonomialIdeal& ideal, const Monomial& b,
                                               const PrimeField& field) {
  std::map<int, std::uint64_t> out;
  const auto dims = UpperKoszulComplex(ideal, b).reduced_homology(field);
  // dims[k] is H~ in dimension k - 1, i.e. beta_k.
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (dims[k] != 0) out[static_cast<int>(k)] = dims[k];
  return out;
}

BettiTable betti_table_oracle(const MonomialIdeal& ideal, const PrimeField& field, unsigned threads) {
  BettiTable table(Convention::ideal);
  if (ideal.is_zero()) return table;
  const std::vector<Monomial> degrees = candidate_degrees(ideal);
  std::vector<std::map<int, std::uint64_t>> results(degrees.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, (degrees.size() + 31) / 32));
  std::atomic<std::size_t> next{0};
  std::mutex error_lock;
  std::exception_ptr error;
  auto work = [&] {
    try {
      for (std::size_t k = next++; k < degrees.size(); k = next++)
        results[k] = betti_multigraded(ideal, degrees[k], field);
    } catch (...) {
      const std::lock_guard lock(error_lock);
      if (!error) error = std::current_exception();
      next = degrees.size();
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t k = 0; k < degrees.size(); ++k)
    for (const auto& [i, c] : results[k]) table.add(i, degrees[k].degree(), c);
  return table;
}

bool is_linear_oracle(const MonomialIdeal& ideal, int d, const PrimeField& field, unsigned threads) {
  const auto degs = ideal.generator_degrees();
  if (degs.size() != 1 || degs.front() != d)
    throw PreconditionError("equigenerated", "ideal is not generated in the single degree " + std::to_string(d));
  return betti_table_oracle(ideal, field, threads).is_linear(d);
}

}  // namespace tspread
