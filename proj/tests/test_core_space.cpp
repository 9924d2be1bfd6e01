#include "doctest.h"

#include "oracles.hpp"
#include "support.hpp"
#include "topolab/caps.hpp"
#include "topolab/continuous_map.hpp"
#include "topolab/error.hpp"

using namespace topolab;
using support::bits;

namespace {

std::string axiom_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const AxiomError& e) {
    return e.axiom();
  }
  return "";
}

}  // namespace

TEST_CASE("point sets order by size, then by high and low words") {
  const PointSet a = bits({5});
  const PointSet b = bits({0, 1});
  const PointSet hi = PointSet::singleton(100);
  CHECK(a < b);
  CHECK(PointSet{} < a);
  CHECK(a < hi);
  CHECK(PointSet::full(3).count() == 3);
  CHECK((b - bits({1})) == bits({0}));
  CHECK(hi.first() == 100);
  CHECK(PointSet{}.first() == PointSet::kWidth);
  CHECK(b.indices() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("posets give their Alexandrov topologies") {
  SUBCASE("two-point chain is Sierpinski") {
    const FiniteSpace s = support::sierpinski();
    CHECK(oracle::masks(s.opens()) == std::vector<oracle::Mask>{0b00, 0b10, 0b11});
  }
  SUBCASE("antichain is discrete") { CHECK(support::discrete2().opens().size() == 4); }
  SUBCASE("vee") {
    // {}, {t}, {a,t}, {b,t}, {a,b,t}
    CHECK(oracle::masks(support::vee().opens()) == std::vector<oracle::Mask>{0, 0b100, 0b101, 0b110, 0b111});
  }
  SUBCASE("random posets match an upper-set enumeration") {
    for (std::uint64_t i = 0; i < 60; ++i) {
      const FiniteSpace x = support::sample(1, i, 6);
      const FinitePoset p = specialization_order(x);
      const auto expected = oracle::upper_sets(x.size(), [&](std::size_t a, std::size_t b) { return p.leq(a, b); });
      CHECK(oracle::masks(x.opens()) == expected);
      CHECK(oracle::is_topology(oracle::of(x)));
    }
  }
}

TEST_CASE("specialization order agrees with closure membership") {
  CHECK(specialization_order(support::sierpinski()).leq(0, 1));
  CHECK_FALSE(specialization_order(support::sierpinski()).leq(1, 0));
  CHECK(specialization_order(support::discrete2()).covers().empty());
  for (std::uint64_t i = 0; i < 40; ++i) {
    const FiniteSpace x = support::sample(2, i, 5);
    const auto t = oracle::of(x);
    const FinitePoset p = specialization_order(x);
    for (std::size_t a = 0; a < x.size(); ++a) {
      for (std::size_t b = 0; b < x.size(); ++b) {
        CHECK(p.leq(a, b) == oracle::leq(t, a, b));
        CHECK(x.leq(a, b) == oracle::leq(t, a, b));
      }
    }
  }
}

TEST_CASE("closure, interior and saturation follow their definitions") {
  const FiniteSpace s = support::sierpinski();
  CHECK(s.closure(bits({1})) == bits({0, 1}));
  CHECK(s.saturation(bits({0})) == bits({0, 1}));
  CHECK(s.interior(bits({0})) == PointSet{});
  for (std::uint64_t i = 0; i < 20; ++i) {
    const FiniteSpace x = support::sample(3, i, 6);
    const auto t = oracle::of(x);
    for (oracle::Mask a = 0; a <= t.full(); ++a) {
      CHECK(oracle::mask(x.closure(oracle::set(a))) == oracle::closure(t, a));
      CHECK(oracle::mask(x.interior(oracle::set(a))) == oracle::interior(t, a));
      CHECK(oracle::mask(x.saturation(oracle::set(a))) == oracle::saturation(t, a));
      CHECK(x.is_closed(oracle::set(a)) == t.is_closed(a));
    }
    CHECK(oracle::masks(x.closed_sets()) == oracle::closed_sets(t));
  }
}

TEST_CASE("axiom violations name the failing axiom") {
  using V = std::vector<PointSet>;
  CHECK(axiom_of([] { FiniteSpace({"a", "b"}, V{bits({0, 1})}); }) == "empty set");
  CHECK(axiom_of([] { FiniteSpace({"a", "b"}, V{{}, bits({0})}); }) == "carrier");
  CHECK(axiom_of([] { FiniteSpace({"a", "b", "c"}, V{{}, bits({0}), bits({1}), bits({0, 1, 2})}); }) == "union");
  CHECK(axiom_of([] {
          FiniteSpace({"a", "b", "c"}, V{{}, bits({0, 1}), bits({1, 2}), bits({0, 1, 2})});
        }) == "intersection");
  CHECK(axiom_of([] { FiniteSpace({"a", "b"}, V{{}, bits({0, 1})}); }) == "T0");
  CHECK(axiom_of([] { FiniteSpace({"a", "a"}, V{{}, bits({0}), bits({0, 1})}); }) == "labels");
  CHECK(axiom_of([] { FiniteSpace({}, V{{}}); }) == "nonempty");
  CHECK(axiom_of([] { FinitePoset::from_relation({"a", "b"}, {{0, 1}, {1, 0}}); }) == "antisymmetry");
  CHECK(axiom_of([] { FinitePoset({"a", "b"}, {bits({0, 1}), PointSet{}}); }) == "reflexivity");
  CHECK(axiom_of([] { FinitePoset({"a", "b", "c"}, {bits({0, 1}), bits({1, 2}), bits({2})}); }) == "transitivity");
}

TEST_CASE("continuity checks and witnesses") {
  const FiniteSpace s = support::sierpinski();
  CHECK(check_continuous(PointMap{s, s, {0, 1}}).continuous);
  CHECK(check_continuous(PointMap{s, s, {1, 1}}).continuous);
  const ContinuityCheck swap = check_continuous(PointMap{s, s, {1, 0}});
  CHECK_FALSE(swap.continuous);
  REQUIRE(swap.witness);
  CHECK(*swap.witness == bits({1}));
  CHECK_THROWS_AS(ContinuousMap(PointMap{s, s, {1, 0}}), ContractViolation);
  CHECK_THROWS_AS(check_continuous(PointMap{s, s, {0, 2}}), ContractViolation);
  const FiniteSpace v = support::vee();
  CHECK(ContinuousMap::identity(v).values() == std::vector<std::size_t>{0, 1, 2});
  CHECK(ContinuousMap::constant(v, s, 1).values() == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("map enumeration matches an exhaustive filter") {
  const FiniteSpace s = support::sierpinski();
  CHECK(enumerate_continuous_maps(s, s).size() == 3);
  CHECK(enumerate_continuous_maps(support::discrete2(), s).size() == 4);
  CHECK(enumerate_continuous_maps(support::point(), support::vee()).size() == 3);
  for (std::uint64_t i = 0; i < 40; ++i) {
    const FiniteSpace x = support::sample(4, 2 * i, 4);
    const FiniteSpace y = support::sample(4, 2 * i + 1, 4);
    const auto maps = enumerate_continuous_maps(x, y);
    std::vector<std::vector<std::size_t>> got;
    for (const auto& f : maps) got.push_back(f.values());
    CHECK(got == oracle::continuous_maps(oracle::of(x), oracle::of(y)));
  }
  Caps tiny;
  tiny.max_maps = 3;
  CHECK_THROWS_AS(enumerate_continuous_maps(s, s, tiny), ResourceError);
}

TEST_CASE("composition") {
  const FiniteSpace s = support::sierpinski();
  const FiniteSpace v = support::vee();
  const ContinuousMap f(PointMap{v, s, {0, 0, 1}});
  const ContinuousMap g = ContinuousMap::constant(s, v, 2);
  CHECK(compose(g, f).values() == std::vector<std::size_t>{2, 2, 2});
  CHECK(compose(ContinuousMap::identity(s), f) == f);
  CHECK_THROWS_AS(compose(f, f), ContractViolation);
}

TEST_CASE("homeomorphism search agrees with a permutation sweep") {
  CHECK(find_homeomorphism(support::vee(), support::vee()));
  CHECK_FALSE(find_homeomorphism(support::sierpinski(), support::discrete2()));
  for (std::uint64_t i = 0; i < 60; ++i) {
    const FiniteSpace x = support::sample(5, 2 * i, 5);
    const FiniteSpace y = random_space(i * 7 + 3, x.size());
    const auto h = find_homeomorphism(x, y);
    CHECK(h.has_value() == oracle::homeomorphic(oracle::of(x), oracle::of(y)));
    if (h) {
      CHECK(oracle::is_homeomorphism(oracle::of(x), oracle::of(y), h->values()));
      CHECK(is_homeomorphism(PointMap{x, y, h->values()}));
    }
  }
  Caps caps;
  caps.max_homeo_points = 2;
  CHECK_THROWS_AS(find_homeomorphism(support::vee(), support::vee(), caps), ResourceError);
}

TEST_CASE("embeddings") {
  const FiniteSpace s = support::sierpinski();
  const FiniteSpace v = support::vee();
  CHECK(is_embedding(ContinuousMap(PointMap{s, v, {0, 2}})));
  CHECK_FALSE(is_embedding(ContinuousMap(PointMap{support::discrete2(), s, {0, 1}})));
  CHECK_FALSE(is_embedding(ContinuousMap::constant(s, v, 2)));
}

TEST_CASE("subbase generation matches intersection-then-union closure") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const FiniteSpace x = support::sample(6, i, 5);
    std::vector<PointSet> subbase;
    std::vector<oracle::Mask> raw;
    // Use complements of point closures as a subbase: it always generates the topology.
    for (std::size_t p = 0; p < x.size(); ++p) {
      subbase.push_back(x.carrier() - x.point_closure(p));
      raw.push_back(oracle::mask(subbase.back()));
    }
    CHECK(oracle::masks(topology_from_subbase(x.size(), subbase, 1 << 17)) == oracle::generate(x.size(), raw));
  }
  CHECK_THROWS_AS(union_closure({bits({0}), bits({1}), bits({2})}, 4), ResourceError);
}

TEST_CASE("caps parse bare numbers and key lists") {
  CHECK(Caps::parse("20").max_points == 20);
  const Caps c = Caps::parse("points=3,hyper=4,maps=9");
  CHECK(c.max_points == 3);
  CHECK(c.max_hyper_base == 4);
  CHECK(c.max_maps == 9);
  CHECK(c.max_product_points == Caps{}.max_product_points);
  CHECK_THROWS_AS(Caps::parse("points=x"), Error);
  CHECK_THROWS_AS(Caps::parse("colour=3"), Error);
  CHECK_THROWS_AS(Caps::parse("0"), Error);
  Caps small;
  small.max_points = 2;
  CHECK_THROWS_AS(from_poset(FinitePoset::from_relation({"a", "b", "c"}, {}), "", small), ResourceError);
}
