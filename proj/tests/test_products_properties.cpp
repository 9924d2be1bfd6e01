#include "doctest.h"

#include "oracles.hpp"
#include "support.hpp"
#include "topolab/error.hpp"
#include "topolab/families.hpp"
#include "topolab/products.hpp"
#include "topolab/properties.hpp"
#include "topolab/reflections.hpp"

using namespace topolab;
using support::bits;

namespace {

bool homeomorphic(const FiniteSpace& x, const FiniteSpace& y) {
  return oracle::homeomorphic(oracle::of(x), oracle::of(y));
}

}  // namespace

TEST_CASE("binary products match unions of open boxes") {
  const FiniteSpace s = support::sierpinski();
  const ProductSpace ss = product({s, s});
  CHECK(ss.space.size() == 4);
  // The upper sets of the 2x2 grid: {}, {tt}, {bt,tt}, {tb,tt}, {bt,tb,tt}, all.
  CHECK(ss.space.opens().size() == 6);
  CHECK(oracle::masks(ss.space.opens()) == oracle::product(oracle::of(s), oracle::of(s)));
  CHECK(ss.space.label(1) == "(bot,top)");
  CHECK(ss.coordinates(2) == std::vector<std::size_t>{1, 0});
  CHECK(ss.point({1, 1}) == 3);
  for (std::uint64_t i = 0; i < 40; ++i) {
    const FiniteSpace x = support::sample(41, 2 * i, 4);
    const FiniteSpace y = support::sample(41, 2 * i + 1, 4);
    const ProductSpace p = product({x, y});
    CHECK(oracle::masks(p.space.opens()) == oracle::product(oracle::of(x), oracle::of(y)));
    for (std::size_t k = 0; k < 2; ++k) {
      const ContinuousMap pr = p.projection(k);
      CHECK(oracle::continuous(oracle::of(p.space), oracle::of(p.factors[k]), pr.values()));
    }
    CHECK(homeomorphic(product({x, support::point()}).space, x));
  }
}

TEST_CASE("three-factor products and caps") {
  const FiniteSpace s = support::sierpinski();
  const ProductSpace sss = product({s, s, s});
  CHECK(sss.space.size() == 8);
  CHECK(sss.space.label(5) == "(top,bot,top)");
  // Associativity up to homeomorphism.
  CHECK(homeomorphic(sss.space, product({product({s, s}).space, s}).space));
  Caps tiny;
  tiny.max_product_points = 7;
  CHECK_THROWS_AS(product({s, s, s}, tiny), ResourceError);
  CHECK_THROWS_AS(product({}), ContractViolation);
}

TEST_CASE("irreducibility and closure laws in products") {
  for (std::uint64_t i = 0; i < 12; ++i) {
    const FiniteSpace x = support::sample(42, 2 * i, 4);
    const FiniteSpace y = support::sample(42, 2 * i + 1, 4);
    const ProductSpace p = product({x, y});
    const auto t = oracle::of(p.space);
    for (oracle::Mask a = 1; a <= oracle::of(x).full(); ++a) {
      for (oracle::Mask b = 1; b <= oracle::of(y).full(); ++b) {
        const PointSet box = p.box({oracle::set(a), oracle::set(b)});
        CHECK(oracle::irreducible(t, oracle::mask(box)) ==
              (is_irreducible(x, oracle::set(a)) && is_irreducible(y, oracle::set(b))));
      }
    }
    if (p.space.size() > 10) continue;
    for (oracle::Mask a = 1; a <= t.full(); ++a) {
      if (!oracle::irreducible(t, a)) continue;
      const PointSet s = oracle::set(a);
      const PointSet rhs = p.box({x.closure(p.project(0, s)), y.closure(p.project(1, s))});
      CHECK(oracle::closure(t, a) == oracle::mask(rhs));
    }
  }
}

TEST_CASE("reflection commutes with finite products") {
  const FiniteSpace s = support::sierpinski();
  const ProductReflectionCheck ss = check_product_reflection({s, s}, CategoryTag::Sobriety);
  CHECK(ss.ok);
  CHECK(ss.cross_checked);
  REQUIRE(ss.gamma.has_value());
  CHECK(ss.gamma->source().size() == 4);
  CHECK(check_product_reflection({support::vee(), support::point()}, CategoryTag::DSpace).ok);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const FiniteSpace x = support::sample(43, 2 * i, 4);
    const FiniteSpace y = support::sample(43, 2 * i + 1, 4);
    if (x.size() * y.size() > 12) continue;
    for (CategoryTag c : kAllCategories) {
      const ProductReflectionCheck r = check_product_reflection({x, y}, c);
      CHECK(r.ok);
      CHECK(r.failures.empty());
      REQUIRE(r.gamma.has_value());
      // Independent check: gamma is a homeomorphism between the two sides.
      CHECK(oracle::is_homeomorphism(oracle::of(r.gamma->source()), oracle::of(r.gamma->target()),
                                     r.gamma->values()));
      const ProductSpace p = product({x, y});
      const Reflection rp = reflect(p.space, c);
      CHECK(homeomorphic(rp.space, product({reflect(x, c).space, reflect(y, c).space}).space));
    }
  }
}

TEST_CASE("K-space products and Smyth categories") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const FiniteSpace x = support::sample(44, 2 * i, 4);
    const FiniteSpace y = support::sample(44, 2 * i + 1, 3);
    for (CategoryTag c : kAllCategories) {
      const KSpaceProductCheck k = check_kspace_product({x, y}, c);
      CHECK(k.holds());
      CHECK(k.product_is_kspace);
      CHECK(k.factors_are_kspaces);
      CHECK(check_smyth_category(x, c));
    }
  }
  CHECK(check_smyth_category(support::sierpinski(), CategoryTag::Sobriety));
  CHECK(check_smyth_category(support::discrete2(), CategoryTag::WellFiltered));
  CHECK(predicates(smyth_power(support::discrete2()).space).well_filtered);
}

TEST_CASE("property predicates") {
  const PropertyReport s = predicates(support::sierpinski());
  for (const std::string& name : PropertyReport::names()) CHECK(*s.flag(name));
  CHECK_FALSE(s.flag("hausdorff").has_value());
  CHECK(s.chain_violations().empty());
  for (const std::string& name : PropertyReport::names()) CHECK(s.witnesses.count(name) == 1);

  PropertyReport broken = s;
  *broken.flag_ptr("well_filtered") = false;
  CHECK_FALSE(broken.chain_violations().empty());
  CHECK_FALSE(broken.satisfies(CategoryTag::WellFiltered));
  CHECK(broken.satisfies(CategoryTag::DSpace));

  for (std::uint64_t i = 0; i < 40; ++i) {
    const FiniteSpace x = support::sample(45, i, 6);
    const auto t = oracle::of(x);
    const PropertyReport r = predicates(x);
    CHECK(r.sober == (oracle::irreducible_closed(t) == oracle::point_closures(t)));
    CHECK(r.d_space == (oracle::directed_closures(t) == oracle::point_closures(t)));
    CHECK(r.well_filtered);
    CHECK(r.compact);
    CHECK(r.c_space);
    CHECK(r.locally_compact == r.core_compact);
    CHECK(r.chain_violations().empty());
    // Alexandrov: the least neighbourhood of x is the open upper set of x.
    for (std::size_t p = 0; p < x.size(); ++p) {
      const oracle::Mask up = oracle::saturation(t, oracle::Mask{1} << p);
      CHECK(oracle::interior(t, up) == up);
    }
  }
}
