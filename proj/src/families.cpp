#include "topolab/families.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "topolab/error.hpp"

namespace topolab {
namespace {

std::vector<PointSet> nonempty_upper_sets(const FiniteSpace& x) {
  std::vector<PointSet> out;
  for (const PointSet& u : x.opens()) {
    if (!u.empty()) out.push_back(u);
  }
  return out;
}

bool meets_all(PointSet a, const std::vector<PointSet>& compacts) {
  return std::all_of(compacts.begin(), compacts.end(), [&](const PointSet& k) { return a.intersects(k); });
}

/// m(K): closed sets minimal among those meeting every member, in canonical order.
std::vector<PointSet> minimal_meeting(const std::vector<PointSet>& closed_sets, const std::vector<PointSet>& compacts) {
  std::vector<PointSet> minimal;
  for (const PointSet& c : closed_sets) {  // canonical order: smaller sets first
    if (!meets_all(c, compacts)) continue;
    const bool dominated =
        std::any_of(minimal.begin(), minimal.end(), [&](const PointSet& m) { return m.proper_subset_of(c); });
    if (!dominated) minimal.push_back(c);
  }
  return minimal;
}

std::string describe(const FiniteSpace& x, PointSet s) {
  std::string out = "{";
  s.for_each([&](std::size_t i) { out += (out.size() > 1 ? " " : "") + x.label(i); });
  return out + "}";
}

}  // namespace

std::string_view short_name(CategoryTag c) {
  switch (c) {
    case CategoryTag::Sobriety:
      return "sob";
    case CategoryTag::DSpace:
      return "d";
    case CategoryTag::WellFiltered:
      return "wf";
  }
  return "?";
}

std::optional<CategoryTag> parse_category(std::string_view text) {
  for (CategoryTag c : kAllCategories) {
    if (short_name(c) == text) return c;
  }
  return std::nullopt;
}

bool is_filtered(const std::vector<PointSet>& compacts) {
  if (compacts.empty()) return false;
  for (const PointSet& a : compacts) {
    for (const PointSet& b : compacts) {
      const PointSet both = a & b;
      if (std::none_of(compacts.begin(), compacts.end(), [&](const PointSet& c) { return c.subset_of(both); })) {
        return false;
      }
    }
  }
  return true;
}

ClosedFamily point_closures(const FiniteSpace& x) {
  std::vector<PointSet> members;
  for (std::size_t p = 0; p < x.size(); ++p) members.push_back(x.point_closure(p));
  return ClosedFamily(x, std::move(members));
}

ClosedFamily directed_closures(const FiniteSpace& x, const Caps& caps) {
  ClosedFamily sc = point_closures(x);
  if (x.size() > caps.max_subset_points) return sc;
  std::vector<PointSet> members;
  const std::uint64_t limit = std::uint64_t{1} << x.size();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const PointSet d = PointSet::from_words(bits);
    bool directed = true;
    d.for_each([&](std::size_t p) {
      d.for_each([&](std::size_t q) {
        if (directed && q > p && !(x.neighbourhood(p) & x.neighbourhood(q)).intersects(d)) directed = false;
      });
    });
    if (directed) members.push_back(x.closure(d));
  }
  ClosedFamily dc(x, std::move(members));
  if (!(dc == sc)) throw ContractViolation("directed closures of a finite space differ from its point closures");
  return dc;
}

ClosedFamily irreducible_closed(const FiniteSpace& x) {
  std::vector<PointSet> members;
  for (const PointSet& c : x.closed_sets()) {
    if (is_irreducible(x, c)) members.push_back(c);
  }
  return ClosedFamily(x, std::move(members));
}

ClosedFamily rudin_sets_by_filtered_families(const FiniteSpace& x, std::size_t max_family) {
  const auto q = nonempty_upper_sets(x);
  const auto closed = x.closed_sets();
  std::vector<PointSet> members;
  std::vector<PointSet> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (!chosen.empty() && is_filtered(chosen)) {
      for (const PointSet& m : minimal_meeting(closed, chosen)) members.push_back(m);
    }
    if (chosen.size() == max_family) return;
    for (std::size_t i = from; i < q.size(); ++i) {
      chosen.push_back(q[i]);
      extend(i + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  return ClosedFamily(x, std::move(members));
}

RudinFamily rudin_sets(const FiniteSpace& x) {
  const auto closed = x.closed_sets();
  std::vector<PointSet> members;
  std::vector<RudinWitness> found;
  for (const PointSet& k : nonempty_upper_sets(x)) {
    for (const PointSet& m : minimal_meeting(closed, {k})) {
      if (std::find(members.begin(), members.end(), m) != members.end()) continue;
      members.push_back(m);
      found.push_back(RudinWitness{{k}, m});
    }
  }
  ClosedFamily family(x, members);
  std::vector<RudinWitness> witnesses(family.size());
  for (auto& w : found) witnesses[*family.index_of(w.minimal_closed)] = std::move(w);
  if (x.size() <= 5 && !(rudin_sets_by_filtered_families(x, 3) == family)) {
    throw ContractViolation("single-member Rudin reduction disagrees with filtered-family enumeration");
  }
  return RudinFamily{std::move(family), std::move(witnesses)};
}

ClosedFamily k_family(const FiniteSpace& x, CategoryTag c) {
  if (c == CategoryTag::Sobriety) return irreducible_closed(x);
  return point_closures(x);
}

ClosedFamily kset_oracle(const FiniteSpace& x, const std::vector<FiniteSpace>& targets, const Caps& caps) {
  std::vector<std::vector<ContinuousMap>> maps;
  for (const FiniteSpace& y : targets) maps.push_back(enumerate_continuous_maps(x, y, caps));
  std::vector<PointSet> members;
  for (const PointSet& a : x.closed_sets()) {
    if (a.empty()) continue;
    bool kset = true;
    for (std::size_t t = 0; t < targets.size() && kset; ++t) {
      for (const ContinuousMap& f : maps[t]) {
        if (!targets[t].generic_point(targets[t].closure(f.image(a)))) {
          kset = false;
          break;
        }
      }
    }
    if (kset) members.push_back(a);
  }
  return ClosedFamily(x, std::move(members));
}

RudinWitness rudin_witness_search(const FiniteSpace& x, const std::vector<PointSet>& compacts, PointSet closed,
                                  const Caps& caps) {
  if (compacts.empty()) throw ContractViolation("rudin_witness_search needs a nonempty family");
  if (!x.is_closed(closed)) throw ContractViolation("rudin_witness_search: " + describe(x, closed) + " is not closed");
  const SmythSpace ps = smyth_power(x, caps);
  PointSet as_points;
  for (const PointSet& k : compacts) {
    auto idx = ps.index_of(k);
    if (!idx) throw ContractViolation("member " + describe(x, k) + " is not a nonempty compact saturated set");
    if (!k.intersects(closed)) throw ContractViolation("member " + describe(x, k) + " misses the closed set");
    as_points.set(*idx);
  }
  if (!is_irreducible(ps.space, as_points)) {
    throw ContractViolation("the family is not irreducible in the Smyth power space");
  }
  std::optional<PointSet> best;
  for (const PointSet& c : x.closed_sets()) {
    if (c.subset_of(closed) && meets_all(c, compacts)) {
      best = c;
      break;
    }
  }
  if (!best) throw ContractViolation("no closed subset meets every member");
  if (!is_irreducible(x, *best)) {
    throw ContractViolation("minimal closed set " + describe(x, *best) + " is not irreducible");
  }
  for (const PointSet& c : x.closed_sets()) {
    if (c.proper_subset_of(*best) && meets_all(c, compacts)) {
      throw ContractViolation("closed set " + describe(x, *best) + " is not minimal");
    }
  }
  return RudinWitness{compacts, *best};
}

bool kset_image_check(const ContinuousMap& f, PointSet a, CategoryTag c) {
  if (!k_family(f.source(), c).contains(a)) {
    throw ContractViolation("kset_image_check: set is not a member of the source family");
  }
  return k_family(f.target(), c).contains(f.target().closure(f.image(a)));
}

}  // namespace topolab
