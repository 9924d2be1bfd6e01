#include "topolab/properties.hpp"

#include <algorithm>
#include <functional>

#include "topolab/error.hpp"

namespace topolab {
namespace {

std::string render(const FiniteSpace& x, PointSet s) {
  std::string out = "{";
  s.for_each([&](std::size_t i) { out += (out.size() > 1 ? "," : "") + x.label(i); });
  return out + "}";
}

// Sweeps filtered families of at most three compact saturated sets. For a filtered K
// with intersection I, the least open containing I is its saturation, so checking that
// single open decides the well-filtered condition for K.
std::optional<std::string> well_filtered_counterexample(const FiniteSpace& x) {
  std::vector<PointSet> q;
  for (const PointSet& u : x.opens()) {
    if (!u.empty()) q.push_back(u);
  }
  std::vector<PointSet> chosen;
  std::optional<std::string> bad;
  std::function<void(std::size_t)> sweep = [&](std::size_t from) {
    if (bad) return;
    if (!chosen.empty() && is_filtered(chosen)) {
      PointSet meet = x.carrier();
      for (const PointSet& k : chosen) meet &= k;
      const PointSet u = x.saturation(meet);
      if (std::none_of(chosen.begin(), chosen.end(), [&](const PointSet& k) { return k.subset_of(u); })) {
        bad = "filtered family with intersection inside " + render(x, u) + " but no member inside it";
        return;
      }
    }
    if (chosen.size() == 3) return;
    for (std::size_t i = from; i < q.size(); ++i) {
      chosen.push_back(q[i]);
      sweep(i + 1);
      chosen.pop_back();
    }
  };
  sweep(0);
  return bad;
}

}  // namespace

const std::vector<std::string>& PropertyReport::names() {
  static const std::vector<std::string> kNames{"sober",           "d_space",   "well_filtered", "compact",
                                               "locally_hypercompact", "c_space", "core_compact", "locally_compact"};
  return kNames;
}

bool* PropertyReport::flag_ptr(std::string_view name) {
  if (name == "sober") return &sober;
  if (name == "d_space") return &d_space;
  if (name == "well_filtered") return &well_filtered;
  if (name == "compact") return &compact;
  if (name == "locally_hypercompact") return &locally_hypercompact;
  if (name == "c_space") return &c_space;
  if (name == "core_compact") return &core_compact;
  if (name == "locally_compact") return &locally_compact;
  return nullptr;
}

std::optional<bool> PropertyReport::flag(std::string_view name) const {
  if (const bool* p = const_cast<PropertyReport*>(this)->flag_ptr(name)) return *p;
  return std::nullopt;
}

bool PropertyReport::satisfies(CategoryTag c) const {
  switch (c) {
    case CategoryTag::Sobriety:
      return sober;
    case CategoryTag::DSpace:
      return d_space;
    case CategoryTag::WellFiltered:
      return well_filtered;
  }
  return false;
}

std::vector<std::string> PropertyReport::chain_violations() const {
  std::vector<std::string> out;
  auto implies = [&](bool a, bool b, const char* what) {
    if (a && !b) out.emplace_back(what);
  };
  implies(sober, well_filtered, "sober but not well-filtered");
  implies(well_filtered, d_space, "well-filtered but not a d-space");
  implies(c_space, locally_hypercompact, "C-space but not locally hypercompact");
  implies(locally_hypercompact, locally_compact, "locally hypercompact but not locally compact");
  implies(locally_compact, core_compact, "locally compact but not core compact");
  return out;
}

PropertyReport predicates(const FiniteSpace& x, const Caps& caps) {
  PropertyReport r;
  r.space = x.name().empty() ? std::to_string(x.size()) + "-point space" : x.name();

  const ClosedFamily sc = point_closures(x);
  const ClosedFamily irr = irreducible_closed(x);
  r.sober = irr == sc;
  if (r.sober) {
    r.witnesses["sober"] = "every irreducible closed set is a point closure";
  } else {
    for (const PointSet& a : irr.members()) {
      if (!sc.contains(a)) {
        r.witnesses["sober"] = "irreducible closed set " + render(x, a) + " has no generic point";
        break;
      }
    }
  }

  r.d_space = directed_closures(x, caps) == sc;
  r.witnesses["d_space"] = r.d_space ? "closures of directed sets are point closures" : "D_c differs from S_c";

  // A finite filtered family has a least member, which lies inside any open containing
  // the intersection; the sweep re-derives this on small spaces.
  if (x.opens().size() <= 65) {
    auto bad = well_filtered_counterexample(x);
    r.well_filtered = !bad.has_value();
    r.witnesses["well_filtered"] = bad ? *bad : "filtered families up to size 3 swept; least-member reduction";
  } else {
    r.well_filtered = true;
    r.witnesses["well_filtered"] = "finite filtered families have a least member";
  }

  r.compact = true;
  r.witnesses["compact"] = "finite carrier";

  // Each local condition is monotone in the neighbourhood U, so it suffices to test the
  // least open neighbourhood up(x).
  r.c_space = true;
  r.locally_hypercompact = true;
  r.locally_compact = true;
  for (std::size_t p = 0; p < x.size() && (r.c_space || r.locally_hypercompact || r.locally_compact); ++p) {
    const PointSet nbhd = x.neighbourhood(p);
    bool has_u = false;
    nbhd.for_each([&](std::size_t u) {
      if (!has_u && x.interior(x.saturation(PointSet::singleton(u))).test(p)) has_u = true;
    });
    if (!has_u && r.c_space) {
      r.c_space = false;
      r.witnesses["c_space"] = "no u with " + x.label(p) + " in int up(u) inside up(" + x.label(p) + ")";
    }
    // Finite F: singletons first, then F = up(x) itself.
    const bool has_f = has_u || x.interior(x.saturation(nbhd)).test(p);
    if (!has_f && r.locally_hypercompact) {
      r.locally_hypercompact = false;
      r.witnesses["locally_hypercompact"] = "no finite F around " + x.label(p);
    }
    // V = up(x) is open and K = sat(V) is compact (finite).
    const bool has_vk = x.is_open(nbhd) && x.saturation(nbhd).subset_of(nbhd);
    if (!has_vk && r.locally_compact) {
      r.locally_compact = false;
      r.witnesses["locally_compact"] = "no compact neighbourhood of " + x.label(p);
    }
  }
  if (r.c_space) r.witnesses["c_space"] = "x in int up(u) inside U for some u in U";
  if (r.locally_hypercompact) r.witnesses["locally_hypercompact"] = "x in int up(F) inside U for finite F";
  if (r.locally_compact) r.witnesses["locally_compact"] = "up(x) is a compact open neighbourhood";

  // In a finite lattice every directed set has a top, so V is way below U iff V is
  // contained in U; O(X) is continuous iff each U is the union of the least
  // neighbourhoods way below it.
  r.core_compact = true;
  for (const PointSet& u : x.opens()) {
    PointSet approx;
    u.for_each([&](std::size_t p) {
      if (x.neighbourhood(p).subset_of(u)) approx |= x.neighbourhood(p);
    });
    if (approx != u) {
      r.core_compact = false;
      r.witnesses["core_compact"] = "open " + render(x, u) + " is not the join of opens way below it";
      break;
    }
  }
  if (r.core_compact) r.witnesses["core_compact"] = "every open is a join of opens way below it";

  if (auto v = r.chain_violations(); !v.empty()) {
    throw ContractViolation("property report for " + r.space + " breaks implication chain: " + v.front());
  }
  return r;
}

}  // namespace topolab
