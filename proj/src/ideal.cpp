#include "tspread/ideal.hpp"

#include <algorithm>

#include "tspread/errors.hpp"

namespace tspread {

namespace {

bool generator_order(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return cmp_lex(a, b) > 0;
}

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient_n() != b.ambient_n())
    throw PreconditionError("ambient_mismatch", "ideals live in rings with " + std::to_string(a.ambient_n()) +
                                                    " and " + std::to_string(b.ambient_n()) + " variables");
}

template <class F>
MonomialIdeal map_generators(const MonomialIdeal& ideal, F&& f) {
  if (ideal.is_zero()) return ideal;
  std::vector<Monomial> out;
  out.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) out.push_back(f(g));
  const int n = out.front().ambient_n();
  for (const auto& g : out)
    if (g.ambient_n() != n) throw PreconditionError("equigenerated", "shifted generators land in different rings");
  return minimalize(n, std::move(out));
}

}  // namespace

int MonomialIdeal::indeg() const noexcept { return gens_.empty() ? -1 : gens_.front().degree(); }

std::vector<Monomial> MonomialIdeal::gens_of_degree(int j) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_)
    if (g.degree() == j) out.push_back(g);
  return out;
}

std::vector<int> MonomialIdeal::generator_degrees() const {
  std::vector<int> out;
  for (const auto& g : gens_)
    if (out.empty() || out.back() != g.degree()) out.push_back(g.degree());
  return out;
}

bool MonomialIdeal::is_equigenerated() const noexcept { return generator_degrees().size() <= 1; }

MonomialIdeal minimalize(int ambient_n, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.ambient_n() != ambient_n)
      throw PreconditionError("ambient_mismatch", g.to_string() + " does not live in a ring with " +
                                                      std::to_string(ambient_n) + " variables");
  std::sort(gens.begin(), gens.end(), generator_order);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // After sorting by degree, a divisor always precedes what it divides.
  MonomialIdeal out(ambient_n);
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(out.gens_.begin(), out.gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.gens_.push_back(std::move(g));
  }
  return out;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.ambient_n() != ideal.ambient_n())
    throw PreconditionError("ambient_mismatch", m.to_string() + " is not in the ring of the ideal");
  return std::any_of(ideal.gens().begin(), ideal.gens().end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> lcms;
  lcms.reserve(a.gens().size() * b.gens().size());
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) lcms.push_back(x.lcm(y));
  return minimalize(a.ambient_n(), std::move(lcms));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> all = a.gens();
  all.insert(all.end(), b.gens().begin(), b.gens().end());
  return minimalize(a.ambient_n(), std::move(all));
}

std::vector<Monomial> graded_tspread_piece(const MonomialIdeal& ideal, int d, int t) {
  std::vector<Monomial> out;
  for (auto& w : enumerate(Params{ideal.ambient_n(), d, t}))
    if (contains(ideal, w)) out.push_back(std::move(w));
  return out;
}

bool is_tspread(const MonomialIdeal& ideal, int t) {
  return std::all_of(ideal.gens().begin(), ideal.gens().end(), [t](const Monomial& g) { return is_tspread(g, t); });
}

bool is_strongly_stable_tspread(const MonomialIdeal& ideal, int t, bool reversed) {
  if (!is_tspread(ideal, t))
    throw PreconditionError("ideal_tspread", "ideal is not generated by " + std::to_string(t) + "-spread monomials");
  const int n = ideal.ambient_n();
  for (const auto& u : ideal.gens()) {
    for (int j : u.support()) {
      const Monomial rest = u.div_var(j);
      const int lo = reversed ? j + 1 : 1;
      const int hi = reversed ? n : j - 1;
      for (int i = lo; i <= hi; ++i) {
        const Monomial w = rest.times_var(i);
        if (is_tspread(w, t) && !contains(ideal, w)) return false;
      }
    }
  }
  return true;
}

MonomialIdeal shift_tau(const MonomialIdeal& ideal, int s) {
  return map_generators(ideal, [s](const Monomial& g) { return shift_tau(g, s); });
}

MonomialIdeal shift_sigma(const MonomialIdeal& ideal, int s) {
  return map_generators(ideal, [s](const Monomial& g) { return shift_sigma(g, s); });
}

}  // namespace tspread
