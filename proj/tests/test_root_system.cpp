#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "specroots/root_system.hpp"
#include "support.hpp"

using namespace specroots;

TEST_CASE("A2 positive roots") {
  const RootSystem rs = build_root_system(LieType{Family::A, 2});
  // Canonical order is height first, then lexicographic on coefficients.
  CHECK(rs.positive_roots ==
        std::vector<RootVector>{RootVector({0, 1}), RootVector({1, 0}), RootVector({1, 1})});
}

TEST_CASE("A3 has 6 positive roots with highest root alpha_1+alpha_2+alpha_3") {
  const RootSystem rs = build_root_system(LieType{Family::A, 3});
  CHECK(rs.size() == 6);
  CHECK(rs.highest_root() == RootVector({1, 1, 1}));
}

TEST_CASE("G2 has 6 positive roots with highest root 3*alpha_1 + 2*alpha_2") {
  const RootSystem rs = build_root_system(LieType{Family::G, 2});
  CHECK(rs.size() == 6);
  // Node 1 is the short node here, so the highest (long) root is (3,2).
  CHECK(rs.highest_root() == RootVector({3, 2}));
}

TEST_CASE("positive root counts match the closed forms") {
  std::vector<LieType> types = support::gamma_suite();
  types.push_back({Family::E, 6});
  types.push_back({Family::E, 7});
  types.push_back({Family::E, 8});
  types.push_back({Family::D, 5});
  types.push_back({Family::C, 2});
  for (const LieType& t : types) {
    CAPTURE(t.name());
    const RootSystem rs = build_root_system(t);
    CHECK(rs.size() == positive_root_count(t));
  }
}

TEST_CASE("listing is sorted, duplicate-free and reflection-closed") {
  for (const LieType& t : support::gamma_suite()) {
    CAPTURE(t.name());
    const RootSystem rs = build_root_system(t);

    CHECK(std::is_sorted(rs.positive_roots.begin(), rs.positive_roots.end()));
    CHECK(std::adjacent_find(rs.positive_roots.begin(), rs.positive_roots.end()) ==
          rs.positive_roots.end());

    const std::set<RootVector> listed(rs.positive_roots.begin(), rs.positive_roots.end());
    for (const RootVector& beta : rs.positive_roots) {
      for (int i = 1; i <= rs.rank(); ++i) {
        const RootVector image = reflect_root(i, beta, rs.cartan);
        CHECK((listed.count(image) || listed.count(-image)));
      }
      // Admissible squared lengths only: 2, 4 or 6.
      const Rational norm = sym_product(beta, beta, rs.cartan);
      CHECK((norm == 2 || norm == 4 || norm == 6));
      // Integer pairing against every fundamental weight, nonnegative for
      // at least one of them.
      bool some_nonneg = false;
      for (int i = 1; i <= rs.rank(); ++i) {
        const Rational p = pairing(fundamental_weight(i, rs.cartan), beta, rs.cartan);
        CHECK(is_integral(p));
        some_nonneg = some_nonneg || p >= 0;
      }
      CHECK(some_nonneg);
    }
  }
}

TEST_CASE("generation is deterministic (idempotent re-run)") {
  for (const LieType& t : {LieType{Family::B, 3}, LieType{Family::G, 2}}) {
    const RootSystem a = build_root_system(t);
    const RootSystem b = build_root_system(t);
    CHECK(a.positive_roots == b.positive_roots);
  }
}

TEST_CASE("simple reflections are involutive on random vectors") {
  std::mt19937_64 rng(77002211);
  for (const LieType& t : support::tuple_suite()) {
    CAPTURE(t.name());
    const CartanData cd = build_cartan(t);
    for (int trial = 0; trial < 100; ++trial) {
      const RootVector x = support::random_root(rng, cd.rank());
      const WeightVector u = support::random_weight(rng, cd.rank());
      for (int i = 1; i <= cd.rank(); ++i) {
        CHECK(reflect_root(i, reflect_root(i, x, cd), cd) == x);
        CHECK(reflect_weight(i, reflect_weight(i, u, cd), cd) == u);
      }
    }
  }
}

TEST_CASE("reflection rejects out-of-range indices") {
  const CartanData cd = build_cartan(LieType{Family::A, 2});
  CHECK_THROWS_AS(reflect_root(0, RootVector::zero(2), cd), std::invalid_argument);
  CHECK_THROWS_AS(reflect_weight(3, WeightVector::zero(2), cd), std::invalid_argument);
}
