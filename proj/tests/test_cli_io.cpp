#include "doctest.h"

#include <regex>

#include "json.hpp"
#include "oracles.hpp"
#include "support.hpp"
#include "topolab/error.hpp"
#include "topolab/io.hpp"
#include "topolab/reflections.hpp"
#include "topolab/verify.hpp"
#include "topolab/zoo.hpp"

using namespace topolab;
using support::bits;

namespace {

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

std::size_t dot_nodes(const std::string& dot) { return count_matches(dot, R"(\n  \w+ \[label=)"); }
std::size_t dot_edges(const std::string& dot) { return count_matches(dot, "->"); }

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_space(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

bool same_space(const FiniteSpace& a, const FiniteSpace& b) {
  return a.labels() == b.labels() && a.opens() == b.opens();
}

}  // namespace

TEST_CASE("DSL documents") {
  const FiniteSpace s = support::sierpinski();
  SUBCASE("poset form") {
    const AnySpace p = parse_space("space s\npoints a b\norder a < b");
    const FiniteSpace& x = std::get<FiniteSpace>(p);
    CHECK(x.name() == "s");
    CHECK(oracle::masks(x.opens()) == oracle::masks(s.opens()));
  }
  SUBCASE("topology form") {
    const FiniteSpace x = std::get<FiniteSpace>(parse_space("space x\npoints 0 1\nopens {} {1} {0 1}"));
    CHECK(x.labels() == std::vector<std::string>{"0", "1"});
    CHECK(oracle::homeomorphic(oracle::of(x), oracle::of(s)));
  }
  SUBCASE("symbolic form") {
    const SymbolicSpace w = std::get<SymbolicSpace>(parse_space("space w\nsymbolic cofinite"));
    CHECK(w.kind() == SymbolicKind::CofiniteNat);
    CHECK(w.name() == "w");
  }
  SUBCASE("chains, comments, quoting and the discrete default") {
    const FiniteSpace c = std::get<FiniteSpace>(parse_space("# three\nspace c\npoints x y z  # labels\norder x < y < z\n"));
    CHECK(c.leq(0, 2));
    const FiniteSpace q = std::get<FiniteSpace>(parse_space("points \"a b\" \"c\\\"d\"\n"));
    CHECK(q.label(0) == "a b");
    CHECK(q.label(1) == "c\"d");
    CHECK(q.opens().size() == 4);
  }
  SUBCASE("errors carry line numbers") {
    CHECK(parse_error_line("space s\npoints a b\norder a < c") == 3);
    CHECK(parse_error_line("space s\nfrobnicate\n") == 2);
    CHECK(parse_error_line("points a b\norder a < b\nopens {} {a b}") == 3);
    CHECK(parse_error_line("points a b\nopens {} {a b\n") == 2);
    CHECK(parse_error_line("symbolic isbell") == 1);
    CHECK(parse_error_line("points \"a\n") == 1);
    CHECK(parse_error_line("") == 1);
  }
  SUBCASE("axiom violations surface as axiom errors") {
    CHECK_THROWS_AS(parse_space("points a b\nopens {} {a} {b}"), AxiomError);
    CHECK_THROWS_AS(parse_space("points a b\norder a < b < a"), AxiomError);
  }
  SUBCASE("point caps apply to both forms") {
    Caps small;
    small.max_points = 2;
    CHECK_THROWS_AS(parse_space("points a b c\norder a < b", small), ResourceError);
    CHECK_THROWS_AS(parse_space("points a b c\nopens {} {a b c}", small), ResourceError);
    CHECK_THROWS_AS(zoo("diamond", small), ResourceError);
    CHECK(std::holds_alternative<SymbolicSpace>(zoo("cofinite", small)));
  }
}

TEST_CASE("render then parse is the identity") {
  for (const std::string& name : zoo_names()) {
    const AnySpace z = zoo(name);
    const AnySpace back = parse_space(render_dsl(z));
    if (const auto* f = std::get_if<FiniteSpace>(&z)) {
      CHECK(same_space(std::get<FiniteSpace>(back), *f));
      CHECK(std::get<FiniteSpace>(back).name() == name);
    } else {
      CHECK(std::get<SymbolicSpace>(back) == std::get<SymbolicSpace>(z));
    }
  }
  for (std::uint64_t i = 0; i < 60; ++i) {
    const FiniteSpace x = support::sample(51, i, 7);
    CHECK(same_space(std::get<FiniteSpace>(parse_space(render_dsl(x))), x));
  }
  const FiniteSpace odd = support::poset_space({"a b", "{x}", "#", "<"}, {{0, 1}, {2, 3}}, "odd one");
  CHECK(same_space(std::get<FiniteSpace>(parse_space(render_dsl(odd))), odd));
}

TEST_CASE("JSON documents") {
  const std::string text = render_json(to_json(support::sierpinski()));
  const auto j = nlohmann::json::parse(text);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["kind"] == "space");
  CHECK(j["points"] == nlohmann::json::array({"bot", "top"}));
  CHECK(j["opens"].size() == 3);
  const auto r = nlohmann::json::parse(render_json(to_json(reflect(support::vee(), CategoryTag::Sobriety))));
  CHECK(r["schema_version"] == kSchemaVersion);
  CHECK(r.contains("family"));
  const auto c = to_json(SymbolicSpace::cofinite());
  CHECK(c["variant"] == "cofinite");
  // Output is deterministic.
  CHECK(render_json(to_json(support::vee())) == render_json(to_json(support::vee())));
}

TEST_CASE("DOT diagrams") {
  const std::string s = render_dot(support::sierpinski());
  CHECK(dot_nodes(s) == 2);
  CHECK(dot_edges(s) == 1);
  CHECK(s.find("rankdir=BT") != std::string::npos);

  const std::string v = render_dot(support::vee());
  const Reflection r = reflect(support::vee(), CategoryTag::Sobriety);
  const std::string rv = render_dot(HyperSpace{r.space, r.family});
  CHECK(dot_nodes(rv) == dot_nodes(v));
  CHECK(dot_edges(rv) == dot_edges(v));
  CHECK(rv.find("{a}") != std::string::npos);

  const std::string cw = render_dot(sym_reflect(SymbolicSpace::cofinite(), CategoryTag::WellFiltered).space);
  CHECK(cw.find("...") != std::string::npos);
  CHECK(cw.find("⊛") != std::string::npos);
  // The generic point lies above every drawn point, including the ellipsis.
  CHECK(count_matches(cw, "-> top") == 4);
  const std::string om = render_dot(SymbolicSpace::omega_plus_one());
  CHECK(om.find("ω") != std::string::npos);
}

TEST_CASE("zoo") {
  for (const char* name : {"sierpinski", "discrete2", "vee", "wedge", "diamond", "omega_chain", "cofinite"}) {
    CHECK(zoo_source(name).has_value());
  }
  CHECK_FALSE(zoo_source("isbell").has_value());
  CHECK(zoo_finite("diamond").size() == 4);
  CHECK(zoo_finite("diamond").opens().size() == 6);
  const FiniteSpace w = zoo_finite("wedge");
  CHECK(w.leq(*w.index_of("t"), *w.index_of("a")));
  CHECK_THROWS_AS(zoo_finite("cofinite"), UnsupportedVariant);
  // Posets up to isomorphism on 1..4 points: 1 + 2 + 5 + 16.
  CHECK(sober_catalog().size() == 24);
}

TEST_CASE("random spaces") {
  CHECK(random_space(1, 1).size() == 1);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const FiniteSpace a = random_space(seed, 5);
    const FiniteSpace b = random_space(seed, 5);
    CHECK(same_space(a, b));
    CHECK(render_json(to_json(a)) == render_json(to_json(b)));
    CHECK(a.name() == "rand_" + std::to_string(seed) + "_5");
    CHECK(a.label(0) == "p0");
    // The specialization order is a partial order.
    const auto t = oracle::of(a);
    CHECK(oracle::is_topology(t));
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        if (i != j) CHECK_FALSE((oracle::leq(t, i, j) && oracle::leq(t, j, i)));
        for (std::size_t k = 0; k < 5; ++k) {
          if (oracle::leq(t, i, j) && oracle::leq(t, j, k)) CHECK(oracle::leq(t, i, k));
        }
      }
    }
  }
  // Edges only run from lower to higher index.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const FiniteSpace a = random_space(seed, 6);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(a.leq(i, j));
    }
  }
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("verify") {
  VerifyConfig quick;
  quick.samples = 5;
  quick.max_points = 4;
  const VerifyReport all = verify(quick);
  CHECK(all.ok());
  CHECK(all.failures.empty());
  CHECK(all.checks.size() > 10);

  VerifyConfig sym;
  sym.suites = {"symbolic"};
  const VerifyReport s = verify(sym);
  CHECK(s.ok());
  for (const auto& [name, counts] : s.checks) {
    CHECK(counts.fail == 0);
    CHECK(counts.pass > 0);
  }

  VerifyConfig mutated = quick;
  mutated.mutation = "well_filtered";
  const VerifyReport m = verify(mutated);
  CHECK_FALSE(m.ok());
  CHECK_FALSE(m.failures.empty());

  const auto j = all.to_json();
  CHECK(j["ok"] == true);
  CHECK(all.render_text().find("all checks passed") != std::string::npos);
  CHECK(m.render_text().find("all checks passed") == std::string::npos);

  VerifyConfig bad;
  bad.samples = 0;
  CHECK_THROWS_AS(validate(bad), Error);
  bad = VerifyConfig{};
  bad.suites = {"astrology"};
  CHECK_THROWS_AS(validate(bad), Error);
  bad = VerifyConfig{};
  bad.mutation = "hausdorff";
  CHECK_THROWS_AS(validate(bad), Error);
  bad = VerifyConfig{};
  bad.max_points = bad.caps.max_points + 1;
  CHECK_THROWS_AS(validate(bad), Error);
}
