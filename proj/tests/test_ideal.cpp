#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tspread/errors.hpp"
#include "tspread/ideal.hpp"
#include "tspread/lexsegment.hpp"

using namespace tspread;
namespace tt = tspread::testing;

namespace {

Monomial m(int n, const char* s) { return Monomial::parse(s, n); }

MonomialIdeal ideal(int n, std::initializer_list<const char*> gens) {
  std::vector<Monomial> v;
  for (const char* g : gens) v.push_back(m(n, g));
  return minimalize(n, v);
}

const LexsegmentSpec ex_complete = LexsegmentSpec::parse({11, 3, 3}, "x1*x5*x8", "x2*x5*x8");
const LexsegmentSpec ex_incomplete = LexsegmentSpec::parse({7, 3, 2}, "x1*x5*x7", "x2*x4*x6");

MonomialIdeal random_ideal(std::mt19937& rng, int n, int max_gens, int max_deg) {
  std::uniform_int_distribution<int> count(0, max_gens);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> var(1, n);
  std::vector<Monomial> gens;
  const int k = count(rng);
  for (int g = 0; g < k; ++g) {
    Monomial x(n);
    const int e = deg(rng);
    for (int s = 0; s < e; ++s) x = x.times_var(var(rng));
    gens.push_back(x);
  }
  return minimalize(n, gens);
}

}  // namespace

TEST_CASE("minimalize") {
  CHECK(ideal(7, {"x1*x5*x7", "x1*x2*x5*x7"}).gens() == std::vector<Monomial>{m(7, "x1*x5*x7")});
  CHECK(ideal(7, {}).is_zero());
  CHECK(ideal(7, {"x1*x5*x7", "x1*x5*x7"}).gens().size() == 1);
  CHECK(ideal(4, {"x1", "1"}).gens() == std::vector<Monomial>{Monomial(4)});
  const auto seg = segment(ex_complete);
  CHECK(minimalize(11, seg).gens() == seg);
  CHECK_THROWS_AS(minimalize(5, {m(4, "x1")}), PreconditionError);
  const auto mixed = ideal(7, {"x2*x4*x6", "x1*x2*x4*x7", "x1*x5*x7"});
  CHECK(mixed.gens() == std::vector<Monomial>{m(7, "x1*x5*x7"), m(7, "x2*x4*x6"), m(7, "x1*x2*x4*x7")});
  CHECK(mixed.indeg() == 3);
  CHECK(mixed.generator_degrees() == std::vector<int>{3, 4});
  CHECK_FALSE(mixed.is_equigenerated());
}

TEST_CASE("membership") {
  const auto i = segment_ideal(ex_incomplete);
  CHECK_FALSE(contains(i, m(7, "x1*x2*x4*x7")));
  CHECK(contains(i, m(7, "x1*x2*x5*x7")));
  CHECK_FALSE(contains(i, Monomial(7)));
  CHECK(contains(ideal(7, {"1"}), Monomial(7)));
  CHECK(contains(initial_ideal(ex_complete), m(11, "x2*x5*x8")));
  CHECK_THROWS_AS(contains(i, m(8, "x1")), PreconditionError);
}

TEST_CASE("intersection and sum of lexsegment ideals") {
  CHECK(intersect(initial_ideal(ex_incomplete), final_ideal(ex_incomplete)) ==
        ideal(7, {"x1*x5*x7", "x2*x4*x6", "x1*x2*x4*x7"}));
  CHECK(intersect(initial_ideal(ex_complete), final_ideal(ex_complete)) == segment_ideal(ex_complete));
  const auto v7 = sum(initial_ideal(ex_incomplete), final_ideal(ex_incomplete));
  CHECK(v7 == minimalize(7, enumerate({7, 3, 2})));
  CHECK(v7.gens().size() == 10);
  const auto v11 = sum(initial_ideal(ex_complete), final_ideal(ex_complete));
  CHECK(v11.gens().size() == 35);
  CHECK(v11 == veronese({11, 3, 3}));
  const auto j = initial_ideal(ex_complete);
  CHECK(intersect(j, j) == j);
  CHECK(sum(j, MonomialIdeal(11)) == j);
  CHECK(intersect(j, MonomialIdeal(11)).is_zero());
  CHECK_THROWS_AS(sum(j, MonomialIdeal(10)), PreconditionError);
}

TEST_CASE("graded t-spread pieces") {
  const auto q = intersect(initial_ideal(ex_incomplete), final_ideal(ex_incomplete));
  CHECK(graded_tspread_piece(q, 3, 2) == std::vector<Monomial>{m(7, "x1*x5*x7"), m(7, "x2*x4*x6")});
  const auto seg = segment_ideal(ex_complete);
  CHECK(graded_tspread_piece(seg, 3, 3) == seg.gens());
  CHECK(graded_tspread_piece(veronese({7, 3, 2}), 3, 2) == enumerate({7, 3, 2}));
}

TEST_CASE("strong stability") {
  CHECK(is_strongly_stable_tspread(initial_ideal(ex_complete), 3));
  CHECK_FALSE(is_strongly_stable_tspread(final_ideal(ex_complete), 3));
  CHECK(is_strongly_stable_tspread(final_ideal(ex_complete), 3, true));
  CHECK_FALSE(is_strongly_stable_tspread(segment_ideal(ex_incomplete), 2));
  CHECK_FALSE(is_strongly_stable_tspread(segment_ideal(ex_incomplete), 2, true));
  CHECK(is_strongly_stable_tspread(veronese({9, 3, 2}), 2));
  CHECK(is_strongly_stable_tspread(veronese({9, 3, 2}), 2, true));
  CHECK_THROWS_AS(is_strongly_stable_tspread(ideal(5, {"x1*x2"}), 2), PreconditionError);
  CHECK(is_tspread(ideal(5, {"x1*x3", "x2*x5"}), 2));
  CHECK_FALSE(is_tspread(ideal(5, {"x1*x3", "x2*x3"}), 2));
}

TEST_CASE("ideal shifts") {
  const auto base = ideal(3, {"x1*x3^3", "x2^4", "x2^3*x3", "x2^2*x3^2"});
  const auto up = shift_sigma(base, 2);
  CHECK(up.ambient_n() == 9);
  CHECK(up == ideal(9, {"x1*x5*x7*x9", "x2*x4*x6*x8", "x2*x4*x6*x9", "x2*x4*x7*x9"}));
  CHECK(shift_tau(up, 2) == base);
}

TEST_CASE("intersection and sum laws on random ideals") {
  std::mt19937 rng(20201);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + round % 5;
    const auto a = random_ideal(rng, n, 5, 4);
    const auto b = random_ideal(rng, n, 5, 4);
    const auto c = random_ideal(rng, n, 5, 4);
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(sum(a, b) == sum(b, a));
    CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
    CHECK(sum(sum(a, b), c) == sum(a, sum(b, c)));
    CHECK(intersect(a, a) == a);
    CHECK(sum(a, a) == a);
    const auto ab = intersect(a, b);
    for (int deg = 0; deg <= 6; ++deg)
      for (const auto& idx : tt::multisets(n, deg)) {
        const Monomial x = Monomial::from_indices(n, idx);
        CHECK(contains(ab, x) == (contains(a, x) && contains(b, x)));
        CHECK(contains(sum(a, b), x) == (contains(a, x) || contains(b, x)));
      }
  }
}

TEST_CASE("J cap T is generated in degrees d and d+1") {
  for (int t = 0; t <= 3; ++t)
    for (int d = 2; d <= 3; ++d)
      for (int n = 1 + (d - 1) * t; n <= (t == 0 ? 5 : 9); ++n) {
        const Params p{n, d, t};
        const auto all = enumerate(p);
        for (std::size_t a = 0; a < all.size(); ++a)
          for (std::size_t b = a; b < all.size(); ++b) {
            const LexsegmentSpec s(p, all[a], all[b]);
            const auto q = intersect(initial_ideal(s), final_ideal(s));
            for (int deg : q.generator_degrees()) CHECK((deg == d || deg == d + 1));
            CHECK(graded_tspread_piece(q, d, t) == segment(s));
          }
      }
}
