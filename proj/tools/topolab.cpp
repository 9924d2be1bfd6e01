// topolab: command-line front end for the finite/symbolic topology library.
//
// Exit codes: 0 ok, 1 mathematical violation (or a checked property is false),
// 2 usage or input error, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "topolab/error.hpp"
#include "topolab/io.hpp"
#include "topolab/products.hpp"
#include "topolab/properties.hpp"
#include "topolab/reflections.hpp"
#include "topolab/symbolic.hpp"
#include "topolab/verify.hpp"
#include "topolab/zoo.hpp"

namespace {

using namespace topolab;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct UsageError : Error {
  using Error::Error;
};

struct Output {
  bool json = false;
  bool dot = false;
};

AnySpace load(const std::string& arg, const Caps& caps) {
  if (arg.rfind("zoo:", 0) == 0) return zoo(arg.substr(4), caps);
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open '" + arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_space(text, caps);
}

std::string join_set(const FiniteSpace& x, PointSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    out += (first ? "" : " ") + x.label(i);
    first = false;
  });
  return out + "}";
}

std::string yes(bool b) { return b ? "true" : "false"; }

void print_space_text(const FiniteSpace& x) {
  std::cout << "space: " << (x.name().empty() ? "(unnamed)" : x.name()) << '\n';
  std::cout << "points: " << x.size() << '\n';
  std::cout << "opens: " << x.opens().size() << '\n';
  std::cout << "order:";
  const auto covers = specialization_order(x).covers();
  if (covers.empty()) std::cout << " (discrete)";
  for (const auto& [a, b] : covers) std::cout << ' ' << x.label(a) << '<' << x.label(b);
  std::cout << '\n';
}

int cmd_info(const std::string& file, const Output& out, const Caps& caps) {
  const AnySpace s = load(file, caps);
  if (out.dot) {
    std::cout << render_dot(s);
    return kOk;
  }
  if (const auto* x = std::get_if<FiniteSpace>(&s)) {
    const PropertyReport r = predicates(*x, caps);
    if (out.json) {
      json j = to_json(*x);
      j["properties"] = to_json(r);
      std::cout << render_json(j);
      return kOk;
    }
    print_space_text(*x);
    for (const auto& n : PropertyReport::names()) std::cout << n << ": " << yes(*r.flag(n)) << '\n';
    return kOk;
  }
  const auto& sym = std::get<SymbolicSpace>(s);
  const SymbolicPredicates p = sym_predicates(sym);
  if (out.json) {
    json j = to_json(sym);
    j["properties"] = to_json(p, sym);
    std::cout << render_json(j);
    return kOk;
  }
  std::cout << "space: " << sym.name() << "\nvariant: " << sym.variant_name() << '\n';
  std::cout << "sober: " << yes(p.sober) << "\nd_space: " << yes(p.d_space) << "\nwell_filtered: "
            << yes(p.well_filtered) << "\ncompact: " << yes(p.compact) << " (" << p.compact_certificate << ")\n";
  return kOk;
}

int cmd_families(const std::string& file, const Output& out, const Caps& caps) {
  const AnySpace s = load(file, caps);
  if (const auto* x = std::get_if<FiniteSpace>(&s)) {
    const std::vector<std::pair<std::string, ClosedFamily>> fams{
        {"S_c", point_closures(*x)},
        {"D_c", directed_closures(*x, caps)},
        {"RD", rudin_sets(*x).family},
        {"Irr_c", irreducible_closed(*x)},
        {"K(sob)", k_family(*x, CategoryTag::Sobriety)},
        {"K(d)", k_family(*x, CategoryTag::DSpace)},
        {"K(wf)", k_family(*x, CategoryTag::WellFiltered)},
    };
    if (out.json) {
      json j;
      j["kind"] = "families";
      j["space"] = x->name();
      for (const auto& [name, f] : fams) j["families"][name] = to_json(f);
      std::cout << render_json(j);
      return kOk;
    }
    for (const auto& [name, f] : fams) {
      std::cout << name << ':';
      for (const PointSet& m : f.members()) std::cout << ' ' << join_set(*x, m);
      std::cout << '\n';
    }
    return kOk;
  }
  const auto& sym = std::get<SymbolicSpace>(s);
  json j;
  j["kind"] = "families";
  j["space"] = sym.name();
  for (SymFamily f : {SymFamily::Sc, SymFamily::Dc, SymFamily::RD, SymFamily::Irr, SymFamily::KSob, SymFamily::KD,
                      SymFamily::KWF}) {
    const SymbolicFamily fam = sym_family(sym, f);
    if (out.json) {
      j["families"][std::string(to_string(f))] = to_json(fam);
    } else {
      std::cout << to_string(f) << ": " << fam.describe() << '\n';
    }
  }
  if (out.json) std::cout << render_json(j);
  return kOk;
}

int cmd_reflect(const std::string& file, const std::string& category, const Output& out, const Caps& caps) {
  const auto c = parse_category(category);
  if (!c) throw UsageError("unknown category '" + category + "' (expected sob, d or wf)");
  const AnySpace s = load(file, caps);
  if (const auto* x = std::get_if<FiniteSpace>(&s)) {
    const Reflection r = reflect(*x, *c, caps);
    if (out.dot) {
      std::cout << render_dot(r.space);
    } else if (out.json) {
      std::cout << render_json(to_json(r));
    } else {
      print_space_text(r.space);
      for (std::size_t p = 0; p < x->size(); ++p) {
        std::cout << "eta " << x->label(p) << " -> " << r.space.label(r.embedding(p)) << '\n';
      }
    }
    return kOk;
  }
  const SymbolicReflection r = sym_reflect(std::get<SymbolicSpace>(s), *c);
  if (out.dot) {
    std::cout << render_dot(r.space);
  } else if (out.json) {
    std::cout << render_json(to_json(r));
  } else {
    std::cout << "family: " << r.family.describe() << "\nreflection: " << r.space.variant_name() << '\n';
  }
  return kOk;
}

int cmd_product(const std::vector<std::string>& files, const std::string& category, const Output& out,
                const Caps& caps) {
  std::optional<CategoryTag> c;
  if (!category.empty()) {
    c = parse_category(category);
    if (!c) throw UsageError("unknown category '" + category + "' (expected sob, d or wf)");
  }
  std::vector<AnySpace> spaces;
  for (const auto& f : files) spaces.push_back(load(f, caps));
  const bool symbolic = std::any_of(spaces.begin(), spaces.end(),
                                    [](const AnySpace& s) { return std::holds_alternative<SymbolicSpace>(s); });
  if (symbolic) {
    if (spaces.size() != 2 || !std::holds_alternative<SymbolicSpace>(spaces[0]) ||
        !std::holds_alternative<FiniteSpace>(spaces[1])) {
      throw UsageError("symbolic products take exactly one symbolic space followed by one finite space");
    }
    if (!c) throw UsageError("symbolic products need --category");
    const auto& sym = std::get<SymbolicSpace>(spaces[0]);
    const auto& fin = std::get<FiniteSpace>(spaces[1]);
    const auto fam = sym_product_family(sym, fin, k_selector(*c));
    const auto check = check_kspace_product(sym, fin, *c);
    if (out.json) {
      json j{{"kind", "symbolic_product"},
             {"family", fam.describe()},
             {"product_is_kspace", check.product_is_kspace},
             {"factors_are_kspaces", check.factors_are_kspaces},
             {"holds", check.holds()}};
      std::cout << render_json(j);
    } else {
      std::cout << "K-family: " << fam.describe() << "\nproduct is a K-space: " << yes(check.product_is_kspace)
                << "\nfactors are K-spaces: " << yes(check.factors_are_kspaces) << '\n';
    }
    return check.holds() ? kOk : kViolation;
  }
  std::vector<FiniteSpace> xs;
  for (const auto& s : spaces) xs.push_back(std::get<FiniteSpace>(s));
  const ProductSpace p = product(xs, caps);
  bool ok = true;
  json checks;
  if (c) {
    const auto refl = check_product_reflection(xs, *c, caps);
    const auto kprod = check_kspace_product(xs, *c, caps);
    ok = refl.ok && kprod.holds();
    checks = {{"gamma_homeomorphism", refl.ok}, {"failures", refl.failures}, {"kspace_biconditional", kprod.holds()}};
    if (!out.json && !out.dot) {
      for (const auto& f : refl.failures) std::cerr << "violation: " << f << '\n';
    }
  }
  if (out.dot) {
    std::cout << render_dot(p.space);
  } else if (out.json) {
    json j = to_json(p.space);
    if (c) j["checks"] = checks;
    std::cout << render_json(j);
  } else {
    print_space_text(p.space);
    if (c) std::cout << "gamma homeomorphism and K-space biconditional: " << yes(ok) << '\n';
  }
  return ok ? kOk : kViolation;
}

int cmd_check(const std::string& file, const std::string& property, const Output& out, const Caps& caps) {
  const AnySpace s = load(file, caps);
  std::optional<bool> value;
  if (const auto* x = std::get_if<FiniteSpace>(&s)) {
    value = predicates(*x, caps).flag(property);
  } else {
    const SymbolicPredicates p = sym_predicates(std::get<SymbolicSpace>(s));
    if (property == "sober") value = p.sober;
    if (property == "d_space") value = p.d_space;
    if (property == "well_filtered") value = p.well_filtered;
    if (property == "compact") value = p.compact;
    const auto& names = PropertyReport::names();
    if (!value && std::find(names.begin(), names.end(), property) != names.end()) {
      throw UnsupportedVariant("property '" + property + "' is not computed for symbolic spaces");
    }
  }
  if (!value) throw UsageError("unknown property '" + property + "'");
  if (out.json) {
    std::cout << render_json(json{{"kind", "check"}, {"property", property}, {"value", *value}});
  } else {
    std::cout << property << ": " << yes(*value) << '\n';
  }
  return *value ? kOk : kViolation;
}

int cmd_zoo(const std::string& name, const Output& out) {
  if (name.empty()) {
    for (const auto& n : zoo_names()) std::cout << n << '\n';
    return kOk;
  }
  if (!zoo_source(name)) throw UsageError("unknown zoo space '" + name + "'");
  const AnySpace s = zoo(name);
  if (out.dot) {
    std::cout << render_dot(s);
  } else if (out.json) {
    std::cout << render_json(to_json(s));
  } else {
    std::cout << render_dsl(s);
  }
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Finite and symbolic T0 spaces: families of closed sets, K-reflections, products"};
  app.require_subcommand(1);
  Output out;
  std::string cap_text;
  app.add_option("--cap", cap_text, "Resource caps (N or key=value list); overrides TOPOLAB_CAP");

  auto add_output = [&](CLI::App* sub, bool dot) {
    sub->add_flag("--json", out.json, "Emit JSON");
    if (dot) sub->add_flag("--dot", out.dot, "Emit a DOT Hasse diagram");
  };

  std::string file;
  auto* info = app.add_subcommand("info", "Describe a space and its properties");
  info->add_option("file", file, "DSL file, '-' for stdin, or zoo:NAME")->required();
  add_output(info, true);

  auto* families = app.add_subcommand("families", "List S_c, D_c, RD, Irr_c and the K-families");
  families->add_option("file", file, "DSL file, '-' for stdin, or zoo:NAME")->required();
  add_output(families, false);

  std::string category;
  auto* reflect_cmd = app.add_subcommand("reflect", "Compute the K-reflection P_H(K(X))");
  reflect_cmd->add_option("file", file, "DSL file, '-' for stdin, or zoo:NAME")->required();
  reflect_cmd->add_option("--category", category, "sob, d or wf")->required();
  add_output(reflect_cmd, true);

  std::vector<std::string> files;
  auto* product_cmd = app.add_subcommand("product", "Product of spaces; with --category, check the product theorems");
  product_cmd->add_option("files", files, "DSL files, '-' or zoo:NAME")->required()->expected(1, -1);
  product_cmd->add_option("--category", category, "sob, d or wf");
  add_output(product_cmd, true);

  std::string property;
  auto* check_cmd = app.add_subcommand("check", "Test one property; exit 1 if it is false");
  check_cmd->add_option("file", file, "DSL file, '-' for stdin, or zoo:NAME")->required();
  check_cmd->add_option("--property", property, "sober, d_space, well_filtered, compact, ...")->required();
  add_output(check_cmd, false);

  std::string zoo_name;
  auto* zoo_cmd = app.add_subcommand("zoo", "List the built-in spaces or print one");
  zoo_cmd->add_option("name", zoo_name, "Zoo entry");
  add_output(zoo_cmd, true);

  VerifyConfig config;
  std::string categories;
  std::string mutation;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites on seeded random samples");
  verify_cmd->add_option("--seed", config.seed, "PRNG seed")->capture_default_str();
  verify_cmd->add_option("--samples", config.samples, "Samples per suite")->capture_default_str();
  verify_cmd->add_option("--max-points", config.max_points, "Largest random space")->capture_default_str();
  verify_cmd->add_option("--categories", categories, "Comma-separated subset of sob,d,wf");
  verify_cmd->add_option("--suite", config.suites, "Suites to run (repeatable)");
  verify_cmd->add_option("--mutate", mutation, "Invert one predicate flag (harness self-test)");
  add_output(verify_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Caps caps = Caps::from_env();
    if (!cap_text.empty()) caps = Caps::parse(cap_text, caps);
    if (out.json && out.dot) throw UsageError("--json and --dot are exclusive");
    if (*info) return cmd_info(file, out, caps);
    if (*families) return cmd_families(file, out, caps);
    if (*reflect_cmd) return cmd_reflect(file, category, out, caps);
    if (*product_cmd) return cmd_product(files, category, out, caps);
    if (*check_cmd) return cmd_check(file, property, out, caps);
    if (*zoo_cmd) return cmd_zoo(zoo_name, out);
    if (*verify_cmd) {
      config.caps = caps;
      if (!categories.empty()) {
        config.categories.clear();
        std::stringstream ss(categories);
        for (std::string item; std::getline(ss, item, ',');) {
          auto c = parse_category(item);
          if (!c) throw UsageError("unknown category '" + item + "'");
          config.categories.push_back(*c);
        }
      }
      if (!mutation.empty()) config.mutation = mutation;
      const VerifyReport report = verify(config);
      std::cout << (out.json ? render_json(report.to_json()) : report.render_text());
      return report.ok() ? kOk : kViolation;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const AxiomError& e) {
    std::cerr << "axiom violation: " << e.what() << '\n';
    return kViolation;
  } catch (const ContractViolation& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
