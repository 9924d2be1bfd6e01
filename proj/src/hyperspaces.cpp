#include "topolab/hyperspaces.hpp"

#include <algorithm>

#include "topolab/error.hpp"

namespace topolab {
namespace {

std::string set_label(const FiniteSpace& base, PointSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += base.label(i);
    first = false;
  });
  return out + "}";
}

std::vector<PointSet> canonical(std::vector<PointSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

ClosedFamily::ClosedFamily(FiniteSpace base, std::vector<PointSet> members)
    : base_(std::move(base)), members_(canonical(std::move(members))) {
  if (members_.size() > PointSet::kWidth) {
    throw ResourceError("closed family has " + std::to_string(members_.size()) + " members, limit is " +
                        std::to_string(PointSet::kWidth));
  }
  for (const PointSet& m : members_) {
    if (!base_.is_closed(m)) throw ContractViolation("family member " + set_label(base_, m) + " is not closed");
  }
}

ClosedFamily ClosedFamily::interval(FiniteSpace base, std::vector<PointSet> lower, std::vector<PointSet> upper) {
  ClosedFamily lo(base, std::move(lower));
  ClosedFamily hi(std::move(base), std::move(upper));
  if (!lo.subset_of(hi)) throw ContractViolation("interval family: lower bound is not contained in upper bound");
  lo.upper_ = hi.members_;
  return lo;
}

bool ClosedFamily::contains(PointSet a) const { return std::binary_search(members_.begin(), members_.end(), a); }

std::optional<std::size_t> ClosedFamily::index_of(PointSet a) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), a);
  if (it == members_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool ClosedFamily::subset_of(const ClosedFamily& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::string ClosedFamily::describe(PointSet member) const { return set_label(base_, member); }

PointSet diamond(const ClosedFamily& g, PointSet a) {
  PointSet out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.members()[i].intersects(a)) out.set(i);
  }
  return out;
}

PointSet box(const ClosedFamily& g, PointSet a) {
  PointSet out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.members()[i].subset_of(a)) out.set(i);
  }
  return out;
}

HyperSpace lower_vietoris(const ClosedFamily& g, const Caps& caps) {
  if (g.status() != FamilyStatus::Exact) throw ContractViolation("lower_vietoris needs an exact family");
  if (g.size() == 0) throw ContractViolation("lower_vietoris needs a nonempty family");
  std::vector<std::string> labels;
  labels.reserve(g.size());
  for (const PointSet& m : g.members()) {
    if (m.empty()) throw ContractViolation("lower_vietoris: family members must be nonempty");
    labels.push_back(set_label(g.base(), m));
  }
  std::vector<PointSet> subbase;
  subbase.reserve(g.base().opens().size());
  for (const PointSet& u : g.base().opens()) subbase.push_back(diamond(g, u));
  auto opens = topology_from_subbase(g.size(), subbase, caps.max_opens);
  return HyperSpace{FiniteSpace(std::move(labels), std::move(opens)), g};
}

std::optional<std::size_t> SmythSpace::index_of(PointSet k) const {
  auto it = std::lower_bound(members.begin(), members.end(), k);
  if (it == members.end() || *it != k) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

SmythSpace smyth_power(const FiniteSpace& x, const Caps& caps) {
  if (x.size() > caps.max_hyper_base) {
    throw ResourceError("smyth_power base has " + std::to_string(x.size()) + " points, cap is " +
                        std::to_string(caps.max_hyper_base));
  }
  // Every subset of a finite space is compact, so Q(X) is the nonempty upper sets.
  std::vector<PointSet> gens;
  for (std::size_t p = 0; p < x.size(); ++p) gens.push_back(x.saturation(PointSet::singleton(p)));
  std::vector<PointSet> members;
  try {
    members = union_closure(gens, PointSet::kWidth + 1);
  } catch (const ResourceError&) {
    throw ResourceError("Smyth power space would have more than " + std::to_string(PointSet::kWidth) + " points");
  }
  members.erase(members.begin());  // the empty set sorts first
  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (const PointSet& k : members) labels.push_back(set_label(x, k));
  std::vector<PointSet> subbase;
  for (const PointSet& u : x.opens()) {
    PointSet b;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i].subset_of(u)) b.set(i);
    }
    subbase.push_back(b);
  }
  auto opens = topology_from_subbase(members.size(), subbase, caps.max_opens);
  return SmythSpace{FiniteSpace(std::move(labels), std::move(opens)), x, std::move(members)};
}

ContinuousMap eta(const HyperSpace& h) {
  const FiniteSpace& base = h.family.base();
  std::vector<std::size_t> fn(base.size());
  for (std::size_t x = 0; x < base.size(); ++x) {
    auto idx = h.family.index_of(base.point_closure(x));
    if (!idx) {
      throw ContractViolation("eta: closure of " + base.label(x) + " is not a member of the family");
    }
    fn[x] = *idx;
  }
  return ContinuousMap(PointMap{base, h.space, std::move(fn)});
}

ContinuousMap xi(const SmythSpace& s) {
  std::vector<std::size_t> fn(s.base.size());
  for (std::size_t x = 0; x < s.base.size(); ++x) {
    auto idx = s.index_of(s.base.neighbourhood(x));
    if (!idx) throw ContractViolation("xi: up-set of " + s.base.label(x) + " missing from Q(X)");
    fn[x] = *idx;
  }
  return ContinuousMap(PointMap{s.base, s.space, std::move(fn)});
}

bool is_irreducible(const FiniteSpace& x, PointSet a) {
  a &= x.carrier();
  if (a.empty()) return false;
  bool ok = true;
  a.for_each([&](std::size_t p) {
    if (!ok) return;
    a.for_each([&](std::size_t q) {
      if (ok && q > p && !(x.neighbourhood(p) & x.neighbourhood(q)).intersects(a)) ok = false;
    });
  });
  return ok;
}

}  // namespace topolab
