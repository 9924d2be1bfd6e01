#include "topolab/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "topolab/error.hpp"
#include "topolab/io.hpp"
#include "topolab/products.hpp"
#include "topolab/properties.hpp"
#include "topolab/reflections.hpp"
#include "topolab/symbolic.hpp"
#include "topolab/zoo.hpp"

namespace topolab {
namespace {

constexpr std::size_t kMaxListedFailures = 50;

class Runner {
 public:
  explicit Runner(const VerifyConfig& config) : config_(config) {}

  /// Records one check; a ResourceError counts as a skip, any other error as a failure.
  void check(const std::string& name, const std::string& subject, const std::function<bool()>& body) {
    CheckCounts& counts = report_.checks[name];
    try {
      if (body()) {
        ++counts.pass;
      } else {
        ++counts.fail;
        fail(name, subject, "check returned false");
      }
    } catch (const ResourceError& e) {
      ++counts.skip;
    } catch (const std::exception& e) {
      ++counts.fail;
      fail(name, subject, e.what());
    }
  }

  PropertyReport report_of(const FiniteSpace& x) const {
    PropertyReport r = predicates(x, config_.caps);
    if (config_.mutation) {
      bool* flag = r.flag_ptr(*config_.mutation);
      *flag = !*flag;
    }
    return r;
  }

  SymbolicPredicates report_of(const SymbolicSpace& s) const {
    SymbolicPredicates p = sym_predicates(s);
    if (config_.mutation) {
      if (*config_.mutation == "sober") p.sober = !p.sober;
      if (*config_.mutation == "d_space") p.d_space = !p.d_space;
      if (*config_.mutation == "well_filtered") p.well_filtered = !p.well_filtered;
      if (*config_.mutation == "compact") p.compact = !p.compact;
    }
    return p;
  }

  FiniteSpace sample(std::uint64_t stream, std::size_t i, std::size_t bound) const {
    return random_sample(config_.seed + stream * 0x10000, i, std::min(bound, config_.max_points), config_.caps);
  }

  const VerifyConfig& config() const { return config_; }
  VerifyReport take() { return std::move(report_); }

 private:
  void fail(const std::string& name, const std::string& subject, const std::string& what) {
    if (report_.failures.size() < kMaxListedFailures) report_.failures.push_back(name + " [" + subject + "]: " + what);
  }

  const VerifyConfig& config_;
  VerifyReport report_;
};

std::string cat(CategoryTag c) { return std::string(short_name(c)); }

// --- suites ------------------------------------------------------------------

void collapse_suite(Runner& run) {
  const auto& cfg = run.config();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const FiniteSpace x = run.sample(1, i, 6);
    const ClosedFamily sc = point_closures(x);
    run.check("collapse.families", x.name(), [&] {
      return irreducible_closed(x) == sc && directed_closures(x, cfg.caps) == sc && rudin_sets(x).family == sc;
    });
    run.check("collapse.predicates", x.name(), [&] {
      const PropertyReport r = run.report_of(x);
      return r.sober && r.d_space && r.well_filtered && r.compact;
    });
    for (CategoryTag c : cfg.categories) {
      run.check("collapse.k_family", x.name() + "/" + cat(c), [&] { return k_family(x, c) == sc; });
      run.check("collapse.reflection_homeomorphic", x.name() + "/" + cat(c), [&] {
        const Reflection r = reflect(x, c, cfg.caps);
        if (!is_homeomorphism(PointMap{x, r.space, r.embedding.values()})) return false;
        return x.size() > cfg.caps.max_homeo_points || find_homeomorphism(x, r.space, cfg.caps).has_value();
      });
    }
  }
}

void symbolic_suite(Runner& run) {
  const auto& cfg = run.config();
  const SymbolicSpace cof = SymbolicSpace::cofinite();
  const SymbolicSpace omega = SymbolicSpace::omega_chain();

  run.check("symbolic.cofinite_flags", "cofinite", [&] {
    const SymbolicPredicates p = run.report_of(cof);
    return p.d_space && !p.well_filtered && !p.sober;
  });
  run.check("symbolic.cofinite_families", "cofinite", [&] {
    return sym_family(cof, SymFamily::RD).contains(SymbolicClosed::all()) &&
           !sym_family(cof, SymFamily::Dc).contains(SymbolicClosed::all());
  });
  run.check("symbolic.cofinite_reflections", "cofinite", [&] {
    const auto d = sym_reflect(cof, CategoryTag::DSpace).space;
    const auto w = sym_reflect(cof, CategoryTag::WellFiltered).space;
    const auto s = sym_reflect(cof, CategoryTag::Sobriety).space;
    return sym_homeomorphic(d, cof) && sym_homeomorphic(w, s) &&
           sym_homeomorphic(w, SymbolicSpace::cofinite_generic()) && !sym_homeomorphic(d, w);
  });
  for (CategoryTag c : cfg.categories) {
    run.check("symbolic.omega_reflections", "omega_chain/" + cat(c), [&] {
      return sym_homeomorphic(sym_reflect(omega, c).space, SymbolicSpace::omega_plus_one());
    });
    for (const SymbolicSpace& s : {cof, omega}) {
      const std::string subject = std::string(s.variant_name()) + "/" + cat(c);
      run.check("symbolic.frame_isomorphism", subject, [&] { return sym_frame_isomorphism_holds(sym_reflect(s, c)); });
      run.check("symbolic.fixed_point", subject, [&] {
        const SymbolicReflection r = sym_reflect(s, c);
        return sym_homeomorphic(sym_reflect(r.space, c).space, r.space);
      });
      run.check("symbolic.compactness_transfer", subject, [&] {
        return !run.report_of(s).compact || run.report_of(sym_reflect(s, c).space).compact;
      });
      run.check("symbolic.reflection_in_category", subject,
                [&] { return run.report_of(sym_reflect(s, c).space).satisfies(c); });
    }
  }
  run.check("symbolic.d_completion", "omega_chain", [&] {
    return sym_homeomorphic(d_completion(omega).completed, SymbolicSpace::omega_plus_one());
  });
  const FiniteSpace sierpinski = zoo_finite("sierpinski");
  run.check("symbolic.product_split", "cofinite*sierpinski", [&] {
    const auto d = check_kspace_product(cof, sierpinski, CategoryTag::DSpace);
    const auto s = check_kspace_product(cof, sierpinski, CategoryTag::Sobriety);
    return d.holds() && d.product_is_kspace && s.holds() && !s.product_is_kspace;
  });
  run.check("symbolic.product_irreducible", "omega_chain*vee", [&] {
    const auto fam = sym_product_irr(omega, zoo_finite("vee"));
    return !fam.all_point_closures() && fam.members.size() == 2 * irreducible_closed(zoo_finite("vee")).size();
  });
}

void universal_suite(Runner& run) {
  const auto& cfg = run.config();
  const auto& targets = sober_catalog();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const FiniteSpace x = run.sample(2, i, 4);
    for (CategoryTag c : cfg.categories) {
      run.check("universal.unique_factorization", x.name() + "/" + cat(c),
                [&] { return universal_property_report(x, c, targets, cfg.caps).ok(); });
    }
  }
}

void closure_suite(Runner& run) {
  const auto& cfg = run.config();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const FiniteSpace x = run.sample(3, i, 5);
    for (CategoryTag c : cfg.categories) {
      run.check("closure.eta_image", x.name() + "/" + cat(c), [&] {
        if (x.size() > cfg.caps.max_subset_points) throw ResourceError("too many subsets");
        const Reflection r = reflect(x, c, cfg.caps);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << x.size()); ++bits) {
          const PointSet a = PointSet::from_words(bits);
          if (r.space.closure(r.embedding.image(a)) != box(r.family, x.closure(a))) return false;
        }
        return true;
      });
    }
  }
}

void products_suite(Runner& run) {
  const auto& cfg = run.config();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const FiniteSpace x = run.sample(4, 2 * i, 4);
    const FiniteSpace y = run.sample(4, 2 * i + 1, 4);
    const std::string subject = x.name() + "*" + y.name();
    for (CategoryTag c : cfg.categories) {
      run.check("product.gamma_homeomorphism", subject + "/" + cat(c),
                [&] { return check_product_reflection({x, y}, c, cfg.caps).ok; });
      run.check("product.kspace_biconditional", subject + "/" + cat(c),
                [&] { return check_kspace_product({x, y}, c, cfg.caps).holds(); });
    }
    run.check("product.irreducible_law", subject, [&] {
      const ProductSpace p = product({x, y}, cfg.caps);
      for (const PointSet& a : x.closed_sets()) {
        for (const PointSet& b : y.closed_sets()) {
          if (is_irreducible(p.space, p.box({a, b})) != (is_irreducible(x, a) && is_irreducible(y, b))) return false;
        }
      }
      return true;
    });
    run.check("product.closure_projection_law", subject, [&] {
      const ProductSpace p = product({x, y}, cfg.caps);
      if (p.space.size() > 10) throw ResourceError("product too large for a subset sweep");
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << p.space.size()); ++bits) {
        const PointSet a = PointSet::from_words(bits);
        if (!is_irreducible(p.space, a)) continue;
        if (p.space.closure(a) != p.box({x.closure(p.project(0, a)), y.closure(p.project(1, a))})) return false;
      }
      return true;
    });
  }
}

bool certified_rudin(const RudinInstance& inst, const RudinWitness& w) {
  const FiniteSpace& x = inst.space;
  const PointSet m = w.minimal_closed;
  auto meets_all = [&](PointSet s) {
    return std::all_of(inst.compacts.begin(), inst.compacts.end(), [&](PointSet k) { return s.intersects(k); });
  };
  if (!x.is_closed(m) || !m.subset_of(inst.closed) || !meets_all(m) || !is_irreducible(x, m)) return false;
  for (const PointSet& c : x.closed_sets()) {
    if (c.proper_subset_of(m) && meets_all(c)) return false;
  }
  return true;
}

void rudin_suite(Runner& run) {
  const auto& cfg = run.config();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    run.check("rudin.witness", "instance " + std::to_string(i), [&] {
      const RudinInstance inst =
          random_rudin_instance(cfg.seed + 5 * 0x10000, i, std::min<std::size_t>(cfg.max_points, 5), cfg.caps);
      return certified_rudin(inst, rudin_witness_search(inst.space, inst.compacts, inst.closed, cfg.caps));
    });
  }
}

void transfer_suite(Runner& run) {
  const auto& cfg = run.config();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const FiniteSpace x = run.sample(6, i, 6);
    run.check("transfer.implication_chain", x.name(), [&] { return run.report_of(x).chain_violations().empty(); });
    for (CategoryTag c : cfg.categories) {
      const std::string subject = x.name() + "/" + cat(c);
      run.check("transfer.frame_isomorphism", subject, [&] { return frame_isomorphism_holds(reflect(x, c, cfg.caps)); });
      run.check("transfer.compactness", subject, [&] {
        return !run.report_of(x).compact || run.report_of(reflect(x, c, cfg.caps).space).compact;
      });
      run.check("transfer.reflection_in_category", subject,
                [&] { return run.report_of(reflect(x, c, cfg.caps).space).satisfies(c); });
      run.check("transfer.smyth", subject, [&] {
        if (!run.report_of(x).satisfies(c)) return true;
        return run.report_of(smyth_power(x, cfg.caps).space).satisfies(c);
      });
    }
  }
}

void io_suite(Runner& run) {
  const auto& cfg = run.config();
  for (const std::string& name : zoo_names()) {
    run.check("io.roundtrip", name, [&] {
      const AnySpace s = zoo(name);
      return parse_space(render_dsl(s)) == s;
    });
    run.check("io.json", name, [&] {
      const auto doc = nlohmann::json::parse(render_json(to_json(zoo(name))));
      return doc.at("schema_version") == kSchemaVersion;
    });
  }
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const FiniteSpace x = run.sample(7, i, cfg.max_points);
    run.check("io.roundtrip", x.name(), [&] { return parse_space(render_dsl(x)) == AnySpace{x}; });
    run.check("io.random_deterministic", x.name(), [&] {
      return random_sample(cfg.seed + 7 * 0x10000, i, cfg.max_points, cfg.caps) == x;
    });
  }
}

using Suite = void (*)(Runner&);

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all{
      {"collapse", collapse_suite}, {"symbolic", symbolic_suite}, {"universal", universal_suite},
      {"closure", closure_suite},   {"products", products_suite}, {"rudin", rudin_suite},
      {"transfer", transfer_suite}, {"io", io_suite},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

void validate(const VerifyConfig& config) {
  if (config.samples == 0) throw Error("samples must be positive");
  if (config.max_points == 0) throw Error("max_points must be positive");
  if (config.max_points > config.caps.max_points) {
    throw Error("max_points " + std::to_string(config.max_points) + " exceeds the cap of " +
                std::to_string(config.caps.max_points));
  }
  if (config.categories.empty()) throw Error("no categories selected");
  for (const std::string& s : config.suites) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end()) throw Error("unknown suite '" + s + "'");
  }
  if (config.mutation) {
    const auto& names = PropertyReport::names();
    if (std::find(names.begin(), names.end(), *config.mutation) == names.end()) {
      throw Error("unknown predicate '" + *config.mutation + "'");
    }
  }
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.fail == 0; });
}

std::string VerifyReport::render_text() const {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& [name, counts] : checks) width = std::max(width, name.size());
  for (const auto& [name, counts] : checks) {
    out << name << std::string(width - name.size() + 2, ' ') << "pass " << counts.pass << "  fail " << counts.fail
        << "  skip " << counts.skip << '\n';
  }
  for (const std::string& f : failures) out << "FAIL " << f << '\n';
  out << (ok() ? "verify: all checks passed\n" : "verify: FAILED\n");
  return out.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["kind"] = "verify_report";
  j["ok"] = ok();
  nlohmann::json rows = nlohmann::json::object();
  for (const auto& [name, counts] : checks) {
    rows[name] = {{"pass", counts.pass}, {"fail", counts.fail}, {"skip", counts.skip}};
  }
  j["checks"] = std::move(rows);
  j["failures"] = failures;
  return j;
}

VerifyReport verify(const VerifyConfig& config) {
  validate(config);
  Runner run(config);
  for (const auto& [name, fn] : suites()) {
    if (config.suites.empty() || std::find(config.suites.begin(), config.suites.end(), name) != config.suites.end()) {
      fn(run);
    }
  }
  return run.take();
}

RudinInstance random_rudin_instance(std::uint64_t seed, std::uint64_t index, std::size_t max_points,
                                    const Caps& caps) {
  const FiniteSpace x = random_sample(seed, index, max_points, caps);
  const SmythSpace ps = smyth_power(x, caps);
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index) ^ 0x5275646e));
  const std::size_t m = ps.space.size();

  // An irreducible subset of P_S: a random subset when one is irreducible, otherwise the
  // closure of a random point.
  PointSet chosen;
  for (int attempt = 0; attempt < 32 && chosen.empty(); ++attempt) {
    PointSet s;
    for (std::size_t k = 0; k < m; ++k) {
      if (rng() >> 63) s.set(k);
    }
    if (is_irreducible(ps.space, s)) chosen = s;
  }
  if (chosen.empty()) chosen = ps.space.point_closure(static_cast<std::size_t>(rng() % m));
  std::vector<PointSet> compacts;
  chosen.for_each([&](std::size_t k) { compacts.push_back(ps.members[k]); });

  auto meets_all = [&](PointSet c) {
    return std::all_of(compacts.begin(), compacts.end(), [&](PointSet k) { return c.intersects(k); });
  };
  const auto closed = x.closed_sets();
  std::vector<PointSet> candidates;
  std::copy_if(closed.begin(), closed.end(), std::back_inserter(candidates), meets_all);
  const PointSet c = candidates[static_cast<std::size_t>(rng() % candidates.size())];
  return RudinInstance{x, std::move(compacts), c};
}

}  // namespace topolab
