#include <doctest.h>

#include "support.hpp"
#include "tspread/errors.hpp"
#include "tspread/lexsegment.hpp"

using namespace tspread;
using tspread::testing::invariant_of;
namespace tt = tspread::testing;

namespace {

Monomial m(int n, const char* s) { return Monomial::parse(s, n); }

std::vector<Monomial> ms(int n, std::initializer_list<const char*> list) {
  std::vector<Monomial> out;
  for (const char* s : list) out.push_back(m(n, s));
  return out;
}

}  // namespace

TEST_CASE("spec validation and kind") {
  const auto s = LexsegmentSpec::parse({11, 3, 3}, "x1*x5*x8", "x2*x5*x8");
  CHECK(s.kind() == SegmentKind::arbitrary);
  CHECK(LexsegmentSpec::parse({11, 3, 3}, "x1*x4*x7", "x2*x5*x8").kind() == SegmentKind::initial);
  CHECK(LexsegmentSpec::parse({11, 3, 3}, "x1*x5*x8", "x5*x8*x11").kind() == SegmentKind::final);
  CHECK(LexsegmentSpec::parse({11, 3, 3}, "x1*x4*x7", "x5*x8*x11").kind() == SegmentKind::veronese);
  CHECK(LexsegmentSpec::parse({11, 3, 3}, "x1*x5*x8", "x1*x5*x8").is_principal());
  CHECK(invariant_of([] { LexsegmentSpec::parse({11, 3, 3}, "x2*x5*x8", "x1*x5*x8"); }) == "u_geq_v");
  CHECK(invariant_of([] { LexsegmentSpec::parse({11, 3, 3}, "x1*x2*x8", "x2*x5*x8"); }) == "u_in_set");
  CHECK(invariant_of([] { LexsegmentSpec::parse({11, 3, 3}, "x1*x5*x8", "x2*x5"); }) == "v_in_set");
  CHECK(invariant_of([] { LexsegmentSpec::parse({6, 3, 3}, "x1", "x1"); }) == "set_nonempty");
}

TEST_CASE("segments") {
  const auto s = LexsegmentSpec::parse({11, 3, 3}, "x1*x5*x8", "x2*x5*x8");
  CHECK(segment(s) == ms(11, {"x1*x5*x8", "x1*x5*x9", "x1*x5*x10", "x1*x5*x11", "x1*x6*x9", "x1*x6*x10",
                              "x1*x6*x11", "x1*x7*x10", "x1*x7*x11", "x1*x8*x11", "x2*x5*x8"}));
  const auto p = LexsegmentSpec::parse({11, 3, 3}, "x1*x6*x9", "x1*x6*x9");
  CHECK(segment(p) == ms(11, {"x1*x6*x9"}));
  const auto e = LexsegmentSpec::parse({12, 3, 3}, "x2*x6*x9", "x3*x6*x9");
  CHECK(segment(e).front() == m(12, "x2*x6*x9"));
  CHECK(segment(e).back() == m(12, "x3*x6*x9"));
}

TEST_CASE("veronese ideals") {
  CHECK(veronese({11, 3, 3}).gens().size() == 35);
  CHECK(veronese({7, 3, 2}).gens().size() == 10);
  CHECK(veronese({5, 1, 4}).gens() == ms(5, {"x1", "x2", "x3", "x4", "x5"}));
}

TEST_CASE("exchange criterion") {
  const auto a = LexsegmentSpec::parse({12, 3, 3}, "x2*x6*x9", "x3*x6*x9");
  CHECK(scan_exchange_condition(a).holds);
  CHECK(is_completely_by_criterion(a).holds);

  const auto b = LexsegmentSpec::parse({12, 4, 2}, "x2*x4*x6*x9", "x2*x4*x6*x11");
  const auto r = is_completely_by_criterion(b);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == m(12, "x2*x4*x6*x12"));
  CHECK(r.failed_products == ms(12, {"x2^2*x6*x12", "x2^2*x4*x12", "x2^2*x4*x6"}));

  const auto f = LexsegmentSpec::parse({11, 3, 3}, "x2*x5*x8", "x5*x8*x11");
  const auto rf = is_completely_by_criterion(f);
  CHECK(rf.holds);
  CHECK(rf.shortcut == SegmentKind::final);
  CHECK(scan_exchange_condition(f).holds);
}

TEST_CASE("completeness by intersection") {
  CHECK(is_completely_by_intersection(LexsegmentSpec::parse({11, 3, 3}, "x1*x5*x8", "x2*x5*x8")));
  CHECK_FALSE(is_completely_by_intersection(LexsegmentSpec::parse({7, 3, 2}, "x1*x5*x7", "x2*x4*x6")));
  CHECK(is_completely_by_intersection(LexsegmentSpec::parse({11, 3, 3}, "x1*x4*x7", "x5*x8*x11")));
  CHECK_FALSE(is_completely_by_intersection(LexsegmentSpec::parse({12, 4, 2}, "x2*x4*x6*x9", "x2*x4*x6*x11")));
  // The exchange criterion accepts this one, but lcm(x1x6x10, x3x6x10) lies in
  // J cap T and not in I.
  const auto s = LexsegmentSpec::parse({12, 3, 3}, "x2*x6*x9", "x3*x6*x9");
  CHECK_FALSE(is_completely_by_intersection(s));
  CHECK(contains(intersect(initial_ideal(s), final_ideal(s)), m(12, "x1*x3*x6*x10")));
  CHECK_FALSE(contains(segment_ideal(s), m(12, "x1*x3*x6*x10")));
}

TEST_CASE("squarefree shadow condition") {
  CHECK(shadow_condition_bprime(LexsegmentSpec::parse({12, 3, 3}, "x2*x6*x9", "x3*x6*x9")).holds);
  CHECK_FALSE(shadow_condition_bprime(LexsegmentSpec::parse({12, 4, 2}, "x2*x4*x6*x9", "x2*x4*x6*x11")).holds);
  CHECK(shadow_condition_bprime(LexsegmentSpec::parse({11, 3, 3}, "x2*x5*x8", "x5*x8*x11")).holds);
  CHECK(invariant_of([] { shadow_condition_bprime(LexsegmentSpec::parse({4, 2, 0}, "x1^2", "x2*x3")); }) ==
        "t_positive");
}

TEST_CASE("tau segments") {
  const auto s = LexsegmentSpec::parse({11, 3, 3}, "x1*x5*x8", "x2*x5*x8");
  const auto s2 = tau_segment(s, 2);
  CHECK(s2.params() == Params{7, 3, 1});
  CHECK(s2.u() == m(7, "x1*x3*x4"));
  CHECK(s2.v() == m(7, "x2*x3*x4"));
  CHECK(tau_segment(s, 0) == s);
  const auto s3 = tau_segment(s, 3);
  CHECK(s3.params() == Params{5, 3, 0});
  CHECK(s3.u() == m(5, "x1*x2^2"));
  CHECK(s3.v() == m(5, "x2^3"));
  CHECK(invariant_of([&] { tau_segment(s, 4); }) == "shift_in_range");
}

TEST_CASE("intersection test agrees with pointwise membership") {
  for (int t = 1; t <= 3; ++t)
    for (int d = 2; d <= 3; ++d)
      for (int n = 1 + (d - 1) * t; n <= 8; ++n) {
        const Params p{n, d, t};
        const auto all = enumerate(p);
        std::vector<tt::Indices> idx;
        for (const auto& x : all) idx.push_back(x.indices());
        for (std::size_t a = 0; a < all.size(); ++a)
          for (std::size_t b = a; b < all.size(); ++b)
            CHECK(is_completely_by_intersection({p, all[a], all[b]}) == tt::brute_completely(n, idx, a, b));
      }
}

TEST_CASE("criterion and intersection agree when min(u) = 1 < min(v)") {
  for (int t = 1; t <= 3; ++t)
    for (int d = 2; d <= 3; ++d)
      for (int n = 1 + (d - 1) * t; n <= 10; ++n) {
        const Params p{n, d, t};
        const auto all = enumerate(p);
        for (std::size_t a = 0; a < all.size(); ++a)
          for (std::size_t b = a; b < all.size(); ++b) {
            const LexsegmentSpec s(p, all[a], all[b]);
            if (s.u().min_index() != 1 || s.v().min_index() == 1) continue;
            CHECK(is_completely_by_criterion(s).holds == is_completely_by_intersection(s));
          }
      }
}

TEST_CASE("criterion agrees with the squarefree shadow condition") {
  for (int t = 1; t <= 3; ++t)
    for (int d = 2; d <= 4; ++d)
      for (int n = 1 + (d - 1) * t; n <= 10; ++n) {
        const Params p{n, d, t};
        const auto all = enumerate(p);
        for (std::size_t a = 0; a < all.size(); ++a)
          for (std::size_t b = a; b < all.size(); ++b) {
            const LexsegmentSpec s(p, all[a], all[b]);
            CHECK(is_completely_by_criterion(s).holds == shadow_condition_bprime(s).holds);
          }
      }
}

TEST_CASE("tau^{t-1} maps segments onto segments") {
  for (int t = 1; t <= 3; ++t)
    for (int d = 2; d <= 3; ++d)
      for (int n = 1 + (d - 1) * t; n <= 10; ++n) {
        const Params p{n, d, t};
        const auto all = enumerate(p);
        for (std::size_t a = 0; a < all.size(); ++a)
          for (std::size_t b = a; b < all.size(); ++b) {
            const LexsegmentSpec s(p, all[a], all[b]);
            std::vector<Monomial> image;
            for (const auto& x : segment(s)) image.push_back(shift_tau(x, t - 1));
            CHECK(image == segment(tau_segment(s, t - 1)));
          }
      }
}

TEST_CASE("tau^t preserves completeness when min(u) = 1 < min(v)") {
  for (int t = 1; t <= 3; ++t)
    for (int d = 2; d <= 3; ++d)
      for (int n = 1 + (d - 1) * t; n <= 10; ++n) {
        const Params p{n, d, t};
        const auto all = enumerate(p);
        for (std::size_t a = 0; a < all.size(); ++a)
          for (std::size_t b = a; b < all.size(); ++b) {
            const LexsegmentSpec s(p, all[a], all[b]);
            if (s.u().min_index() != 1 || s.v().min_index() == 1) continue;
            CHECK(is_completely_by_intersection(s) == is_completely_by_intersection(tau_segment(s, t)));
          }
      }
}
