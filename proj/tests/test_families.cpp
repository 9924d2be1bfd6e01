#include "doctest.h"

#include "oracles.hpp"
#include "support.hpp"
#include "topolab/error.hpp"
#include "topolab/families.hpp"
#include "topolab/verify.hpp"
#include "topolab/zoo.hpp"

using namespace topolab;
using support::bits;

TEST_CASE("point closures and directed closures of small spaces") {
  const FiniteSpace s = support::sierpinski();
  CHECK(point_closures(s).members() == std::vector<PointSet>{bits({0}), bits({0, 1})});
  const FiniteSpace d = support::discrete2();
  CHECK(point_closures(d).members() == std::vector<PointSet>{bits({0}), bits({1})});
  CHECK(directed_closures(d) == point_closures(d));
}

TEST_CASE("irreducible closed sets of vee are its point closures") {
  const FiniteSpace v = support::vee();
  CHECK(irreducible_closed(v).members() == std::vector<PointSet>{bits({0}), bits({1}), bits({0, 1, 2})});
  CHECK(irreducible_closed(v) == point_closures(v));
  CHECK(irreducible_closed(support::sierpinski()).members() == std::vector<PointSet>{bits({0}), bits({0, 1})});
}

TEST_CASE("finite families agree with definitional oracles") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const FiniteSpace x = support::sample(21, i, 6);
    const auto t = oracle::of(x);
    const auto sc = oracle::point_closures(t);
    CHECK(oracle::masks(point_closures(x)) == sc);
    CHECK(oracle::masks(directed_closures(x)) == oracle::directed_closures(t));
    CHECK(oracle::masks(irreducible_closed(x)) == oracle::irreducible_closed(t));
    CHECK(oracle::irreducible_closed(t) == sc);
  }
}

TEST_CASE("Rudin sets") {
  CHECK(rudin_sets(support::sierpinski()).family == point_closures(support::sierpinski()));
  CHECK(rudin_sets(support::point()).family.members() == std::vector<PointSet>{bits({0})});
  for (std::uint64_t i = 0; i < 40; ++i) {
    const FiniteSpace x = support::sample(22, i, 5);
    const auto t = oracle::of(x);
    const RudinFamily rd = rudin_sets(x);
    CHECK(oracle::masks(rd.family) == oracle::rudin_sets(t, 3));
    CHECK(oracle::masks(rd.family) == oracle::point_closures(t));
    CHECK(rudin_sets_by_filtered_families(x, 2) == rd.family);
    REQUIRE(rd.witnesses.size() == rd.family.size());
    for (std::size_t m = 0; m < rd.family.size(); ++m) {
      const RudinWitness& w = rd.witnesses[m];
      CHECK(w.minimal_closed == rd.family.members()[m]);
      CHECK(is_filtered(w.compacts));
      for (const PointSet& k : w.compacts) CHECK(w.minimal_closed.intersects(k));
    }
  }
  CHECK(is_filtered({bits({0, 1}), bits({1})}));
  CHECK_FALSE(is_filtered({bits({0}), bits({1})}));
}

TEST_CASE("K-families of finite spaces") {
  const FiniteSpace s = support::sierpinski();
  CHECK(k_family(s, CategoryTag::WellFiltered) == point_closures(s));
  CHECK(k_family(support::discrete2(), CategoryTag::DSpace).members() == std::vector<PointSet>{bits({0}), bits({1})});
  for (std::uint64_t i = 0; i < 30; ++i) {
    const FiniteSpace x = support::sample(23, i, 6);
    CHECK(k_family(x, CategoryTag::Sobriety) == irreducible_closed(x));
    for (CategoryTag c : kAllCategories) CHECK(k_family(x, c) == point_closures(x));
  }
}

TEST_CASE("the K-set definition restricted to the sober catalogue gives point closures") {
  for (std::uint64_t i = 0; i < 15; ++i) {
    const FiniteSpace x = support::sample(24, i, 3);
    CHECK(kset_oracle(x, sober_catalog()) == point_closures(x));
  }
  // With no targets every nonempty closed set qualifies vacuously.
  const FiniteSpace v = support::vee();
  CHECK(kset_oracle(v, {}).size() == v.closed_sets().size() - 1);
}

TEST_CASE("topological Rudin witness search") {
  SUBCASE("Sierpinski") {
    const RudinWitness w = rudin_witness_search(support::sierpinski(), {bits({1})}, bits({0, 1}));
    CHECK(w.minimal_closed == bits({0, 1}));
  }
  SUBCASE("principal upper sets give point closures") {
    for (std::uint64_t i = 0; i < 20; ++i) {
      const FiniteSpace x = support::sample(25, i, 5);
      for (std::size_t p = 0; p < x.size(); ++p) {
        CHECK(rudin_witness_search(x, {x.neighbourhood(p)}, x.point_closure(p)).minimal_closed == x.point_closure(p));
      }
    }
  }
  SUBCASE("random instances are minimal, irreducible and meet every member") {
    for (std::uint64_t i = 0; i < 60; ++i) {
      const RudinInstance inst = random_rudin_instance(77, i, 5);
      const auto t = oracle::of(inst.space);
      const oracle::Mask m = oracle::mask(rudin_witness_search(inst.space, inst.compacts, inst.closed).minimal_closed);
      auto meets_all = [&](oracle::Mask c) {
        for (const PointSet& k : inst.compacts) {
          if (!(c & oracle::mask(k))) return false;
        }
        return true;
      };
      CHECK(t.is_closed(m));
      CHECK((m & ~oracle::mask(inst.closed)) == 0);
      CHECK(meets_all(m));
      CHECK(oracle::irreducible(t, m));
      for (oracle::Mask c : oracle::closed_sets(t)) {
        if (c != m && (c & ~m) == 0) CHECK_FALSE(meets_all(c));
      }
    }
  }
  SUBCASE("invalid inputs") {
    const FiniteSpace s = support::sierpinski();
    CHECK_THROWS_AS(rudin_witness_search(s, {}, bits({0, 1})), ContractViolation);
    CHECK_THROWS_AS(rudin_witness_search(s, {bits({0})}, bits({0, 1})), ContractViolation);  // not an upper set
    CHECK_THROWS_AS(rudin_witness_search(s, {bits({1})}, bits({1})), ContractViolation);     // not closed
    CHECK_THROWS_AS(rudin_witness_search(s, {bits({1})}, bits({0})), ContractViolation);     // misses the member
    const FiniteSpace d = support::discrete2();
    CHECK_THROWS_AS(rudin_witness_search(d, {bits({0}), bits({1})}, bits({0, 1})), ContractViolation);  // reducible
  }
}

TEST_CASE("images of K-sets under continuous maps") {
  const FiniteSpace v = support::vee();
  const FiniteSpace s = support::sierpinski();
  for (const PointSet& a : point_closures(v).members()) {
    CHECK(kset_image_check(ContinuousMap::identity(v), a, CategoryTag::Sobriety));
    CHECK(kset_image_check(ContinuousMap::constant(v, s, 0), a, CategoryTag::WellFiltered));
  }
  CHECK_THROWS_AS(kset_image_check(ContinuousMap::identity(v), bits({0, 1}), CategoryTag::DSpace), ContractViolation);
  for (std::uint64_t i = 0; i < 10; ++i) {
    const FiniteSpace x = support::sample(26, 2 * i, 5);
    const FiniteSpace y = support::sample(26, 2 * i + 1, 5);
    const auto maps = enumerate_continuous_maps(x, y);
    for (std::size_t m = 0; m < maps.size(); m += 1 + maps.size() / 25) {
      for (CategoryTag c : kAllCategories) {
        for (const PointSet& a : k_family(x, c).members()) CHECK(kset_image_check(maps[m], a, c));
      }
    }
  }
}
