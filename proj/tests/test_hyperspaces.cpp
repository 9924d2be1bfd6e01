#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "topolab/error.hpp"
#include "topolab/families.hpp"
#include "topolab/hyperspaces.hpp"

using namespace topolab;
using support::bits;

TEST_CASE("diamond and box on the point closures of Sierpinski") {
  const FiniteSpace s = support::sierpinski();
  const ClosedFamily g = point_closures(s);
  REQUIRE(g.members() == std::vector<PointSet>{bits({0}), bits({0, 1})});
  CHECK(diamond(g, bits({1})) == bits({1}));
  CHECK(box(g, bits({0})) == bits({0}));
  CHECK(diamond(g, s.carrier()) == bits({0, 1}));
  CHECK(diamond(g, PointSet{}) == PointSet{});
}

TEST_CASE("closed families validate members") {
  const FiniteSpace s = support::sierpinski();
  CHECK_THROWS_AS(ClosedFamily(s, {bits({1})}), ContractViolation);
  const ClosedFamily g(s, {bits({0, 1}), bits({0}), bits({0})});
  CHECK(g.size() == 2);
  CHECK(g.index_of(bits({0, 1})) == 1);
  CHECK_FALSE(g.contains(PointSet{}));
  CHECK(g.status() == FamilyStatus::Exact);
  const ClosedFamily iv = ClosedFamily::interval(s, {bits({0})}, {bits({0}), bits({0, 1})});
  CHECK(iv.status() == FamilyStatus::Interval);
  CHECK_THROWS_AS(lower_vietoris(iv), ContractViolation);
}

TEST_CASE("lower Vietoris spaces of small families") {
  SUBCASE("point closures of Sierpinski reproduce it") {
    const HyperSpace h = lower_vietoris(point_closures(support::sierpinski()));
    CHECK(oracle::homeomorphic(oracle::of(h.space), oracle::of(support::sierpinski())));
  }
  SUBCASE("irreducible closed sets of the discrete space") {
    const HyperSpace h = lower_vietoris(irreducible_closed(support::discrete2()));
    CHECK(h.space.size() == 2);
    CHECK(h.space.opens().size() == 4);
  }
  SUBCASE("irreducible closed sets of vee") {
    const HyperSpace h = lower_vietoris(irreducible_closed(support::vee()));
    CHECK(oracle::homeomorphic(oracle::of(h.space), oracle::of(support::vee())));
  }
  SUBCASE("points are labelled by their member sets") {
    const ClosedFamily g = point_closures(support::vee());
    const HyperSpace h = lower_vietoris(g);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(h.space.label(i) == g.describe(g.members()[i]));
  }
}

TEST_CASE("lower Vietoris topology matches the generated one on random families") {
  std::mt19937_64 rng(99);
  for (std::uint64_t i = 0; i < 60; ++i) {
    const FiniteSpace x = support::sample(11, i, 5);
    std::vector<PointSet> members;
    for (const PointSet& c : x.closed_sets()) {
      if (!c.empty() && (rng() & 1)) members.push_back(c);
    }
    if (members.empty()) members.push_back(x.carrier());
    const ClosedFamily g(x, members);
    const HyperSpace h = lower_vietoris(g);
    // Hyperspace point i is member i in the family's own order.
    std::vector<oracle::Mask> ordered;
    for (const PointSet& m : g.members()) ordered.push_back(oracle::mask(m));
    CHECK(oracle::masks(h.space.opens()) == oracle::lower_vietoris(oracle::of(x), ordered));
  }
}

TEST_CASE("eta embeds a space into the hyperspace of its irreducible closed sets") {
  const HyperSpace hs = lower_vietoris(irreducible_closed(support::sierpinski()));
  const ContinuousMap e = eta(hs);
  CHECK(hs.family.members()[e(1)] == bits({0, 1}));
  for (std::uint64_t i = 0; i < 40; ++i) {
    const FiniteSpace x = support::sample(12, i, 5);
    const HyperSpace h = lower_vietoris(irreducible_closed(x));
    const ContinuousMap f = eta(h);
    PointSet image;
    for (std::size_t p = 0; p < x.size(); ++p) {
      CHECK(h.family.members()[f(p)] == x.point_closure(p));
      image.set(f(p));
    }
    CHECK(image.count() == x.size());
    CHECK(is_embedding(f));
    for (const PointSet& u : x.opens()) CHECK(f.preimage(diamond(h.family, u)) == u);
  }
  // eta needs every point closure in the family.
  const FiniteSpace v = support::vee();
  CHECK_THROWS_AS(eta(lower_vietoris(ClosedFamily(v, {v.carrier()}))), ContractViolation);
}

TEST_CASE("Smyth power spaces") {
  SUBCASE("one point") { CHECK(smyth_power(support::point()).space.size() == 1); }
  SUBCASE("Sierpinski") {
    const SmythSpace ps = smyth_power(support::sierpinski());
    REQUIRE(ps.members == std::vector<PointSet>{bits({1}), bits({0, 1})});
    // box{top} = {{top}} is open; the space is Sierpinski-shaped.
    CHECK(ps.space.is_open(bits({0})));
    CHECK(oracle::homeomorphic(oracle::of(ps.space), oracle::of(support::sierpinski())));
    CHECK(ps.members[xi(ps)(0)] == bits({0, 1}));
  }
  SUBCASE("discrete two-point space") {
    const SmythSpace ps = smyth_power(support::discrete2());
    CHECK(ps.space.size() == 3);
    const std::size_t ab = *ps.index_of(bits({0, 1}));
    const std::size_t a = *ps.index_of(bits({0}));
    const std::size_t b = *ps.index_of(bits({1}));
    // Smyth order is reverse inclusion: {a,b} lies below {a} and {b}.
    CHECK(ps.space.leq(ab, a));
    CHECK(ps.space.leq(ab, b));
    CHECK_FALSE(ps.space.leq(a, ab));
    const ContinuousMap x = xi(ps);
    CHECK(x(0) == a);
    CHECK(x(1) == b);
  }
  SUBCASE("random spaces: box topology and xi embedding") {
    for (std::uint64_t i = 0; i < 30; ++i) {
      const FiniteSpace x = support::sample(13, i, 5);
      const SmythSpace ps = smyth_power(x);
      const auto t = oracle::of(x);
      std::vector<oracle::Mask> ups;
      for (oracle::Mask s = 1; s <= t.full(); ++s) {
        if (oracle::saturation(t, s) == s) ups.push_back(s);
      }
      CHECK(oracle::masks(ps.members) == ups);
      std::vector<oracle::Mask> subbase;
      for (oracle::Mask u : t.opens) {
        oracle::Mask b = 0;
        for (std::size_t k = 0; k < ps.members.size(); ++k) {
          if ((oracle::mask(ps.members[k]) & ~u) == 0) b |= oracle::Mask{1} << k;
        }
        subbase.push_back(b);
      }
      CHECK(oracle::masks(ps.space.opens()) == oracle::generate(ps.members.size(), subbase));
      CHECK(is_embedding(xi(ps)));
    }
  }
  SUBCASE("base size cap") {
    const FiniteSpace big = random_space(5, 8);
    CHECK_THROWS_AS(smyth_power(big), ResourceError);
  }
}

TEST_CASE("irreducibility agrees with the open-set definition") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const FiniteSpace x = support::sample(14, i, 6);
    const auto t = oracle::of(x);
    for (oracle::Mask a = 0; a <= t.full(); ++a) CHECK(is_irreducible(x, oracle::set(a)) == oracle::irreducible(t, a));
  }
}
