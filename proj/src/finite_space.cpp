#include "topolab/finite_space.hpp"

#include <algorithm>
#include <unordered_set>

#include "topolab/error.hpp"

namespace topolab {
namespace {

std::optional<std::vector<PointSet>> bounded_union_closure(const std::vector<PointSet>& generators,
                                                           std::size_t max_sets) {
  std::vector<PointSet> sets{PointSet{}};
  std::unordered_set<PointSet, PointSetHash> seen{PointSet{}};
  for (const PointSet& g : generators) {
    if (seen.count(g) != 0) continue;
    const std::size_t m = sets.size();
    for (std::size_t i = 0; i < m; ++i) {
      const PointSet u = sets[i] | g;
      if (seen.insert(u).second) {
        if (sets.size() >= max_sets) return std::nullopt;
        sets.push_back(u);
      }
    }
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

std::string render_set(const std::vector<std::string>& labels, PointSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ' ';
    out += labels[i];
    first = false;
  });
  return out + "}";
}

}  // namespace

std::vector<PointSet> union_closure(const std::vector<PointSet>& generators, std::size_t max_sets) {
  auto sets = bounded_union_closure(generators, max_sets);
  if (!sets) throw ResourceError("open lattice exceeds cap of " + std::to_string(max_sets) + " sets");
  return std::move(*sets);
}

std::vector<PointSet> topology_from_subbase(std::size_t n, const std::vector<PointSet>& subbase,
                                            std::size_t max_opens) {
  // In a finite space the intersection of all subbasic sets around x is a basic open
  // and every basic open is the union of these minimal neighbourhoods.
  const PointSet all = PointSet::full(n);
  std::vector<PointSet> minimal(n, all);
  for (const PointSet& s : subbase) {
    (s & all).for_each([&](std::size_t x) { minimal[x] &= s; });
  }
  return union_closure(minimal, max_opens);
}

// ---------------------------------------------------------------------------
// FinitePoset

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<PointSet> up)
    : labels_(std::move(labels)), up_(std::move(up)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw AxiomError("nonempty", "a poset needs at least one element");
  if (n > PointSet::kWidth) throw ResourceError("poset exceeds " + std::to_string(PointSet::kWidth) + " elements");
  if (up_.size() != n) throw AxiomError("shape", "relation matrix does not match the element count");
  const PointSet all = PointSet::full(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!up_[i].subset_of(all)) throw AxiomError("shape", "relation refers to a missing element");
    if (!up_[i].test(i)) throw AxiomError("reflexivity", labels_[i] + " is not below itself");
  }
  for (std::size_t i = 0; i < n; ++i) {
    up_[i].for_each([&](std::size_t j) {
      if (!up_[j].subset_of(up_[i])) {
        throw AxiomError("transitivity", labels_[i] + " <= " + labels_[j] + " but the upper set of " +
                                             labels_[j] + " is not contained in that of " + labels_[i]);
      }
      if (j != i && up_[j].test(i)) {
        throw AxiomError("antisymmetry", labels_[i] + " and " + labels_[j] + " are mutually below each other");
      }
    });
  }
  down_.assign(n, PointSet{});
  for (std::size_t i = 0; i < n; ++i) up_[i].for_each([&](std::size_t j) { down_[j].set(i); });
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& below) {
  const std::size_t n = labels.size();
  if (n > PointSet::kWidth) throw ResourceError("poset exceeds " + std::to_string(PointSet::kWidth) + " elements");
  std::vector<PointSet> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (auto [lo, hi] : below) {
    if (lo >= n || hi >= n) throw AxiomError("shape", "relation refers to a missing element");
    up[lo].set(hi);
  }
  // Warshall on rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
  return FinitePoset(std::move(labels), std::move(up));
}

PointSet FinitePoset::up_closure(PointSet a) const {
  PointSet out;
  a.for_each([&](std::size_t i) { out |= up_.at(i); });
  return out;
}

PointSet FinitePoset::down_closure(PointSet a) const {
  PointSet out;
  a.for_each([&](std::size_t i) { out |= down_.at(i); });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    const PointSet strict = up_[i] - PointSet::singleton(i);
    strict.for_each([&](std::size_t j) {
      const PointSet between = strict & (down_[j] - PointSet::singleton(j));
      if (between.empty()) out.emplace_back(i, j);
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// FiniteSpace

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<PointSet> opens, std::string name) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->labels = std::move(points);
  const std::size_t n = impl->labels.size();
  if (n == 0) throw AxiomError("nonempty", "the empty space is not supported");
  if (n > PointSet::kWidth) {
    throw ResourceError("space exceeds the representable width of " + std::to_string(PointSet::kWidth) + " points");
  }
  {
    std::unordered_set<std::string> distinct(impl->labels.begin(), impl->labels.end());
    if (distinct.size() != n) throw AxiomError("labels", "point labels must be distinct");
  }
  const PointSet all = PointSet::full(n);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (const PointSet& u : opens) {
    if (!u.subset_of(all)) throw AxiomError("carrier", "an open set refers to a point outside the carrier");
  }
  if (opens.empty() || !opens.front().empty()) throw AxiomError("empty set", "the empty set must be open");
  if (opens.back() != all) throw AxiomError("carrier", "the full carrier must be open");

  impl->up.assign(n, all);
  std::vector<PointSet> outside(n);  // union of opens missing x
  for (const PointSet& u : opens) {
    for (std::size_t x = 0; x < n; ++x) {
      if (u.test(x)) {
        impl->up[x] &= u;
      } else {
        outside[x] |= u;
      }
    }
  }
  impl->down.resize(n);
  for (std::size_t x = 0; x < n; ++x) impl->down[x] = all - outside[x];

  // Every member is an upper set of the induced preorder, so the family is a topology
  // iff it contains each minimal neighbourhood and has as many sets as that preorder
  // has upper sets. Only on failure do we search for an explicit witness pair.
  auto member = [&](const PointSet& s) { return std::binary_search(opens.begin(), opens.end(), s); };
  bool lattice = std::all_of(impl->up.begin(), impl->up.end(), member);
  if (lattice) {
    auto upper = bounded_union_closure(impl->up, opens.size());
    lattice = upper && upper->size() == opens.size();
  }
  if (!lattice) {
    for (std::size_t i = 0; i < opens.size(); ++i) {
      for (std::size_t j = i + 1; j < opens.size(); ++j) {
        if (!member(opens[i] | opens[j])) {
          throw AxiomError("union", "union of " + render_set(impl->labels, opens[i]) + " and " +
                                        render_set(impl->labels, opens[j]) + " is not open");
        }
      }
    }
    for (std::size_t i = 0; i < opens.size(); ++i) {
      for (std::size_t j = i + 1; j < opens.size(); ++j) {
        if (!member(opens[i] & opens[j])) {
          throw AxiomError("intersection", "intersection of " + render_set(impl->labels, opens[i]) + " and " +
                                               render_set(impl->labels, opens[j]) + " is not open");
        }
      }
    }
  }

  std::unordered_set<PointSet, PointSetHash> closures;
  for (std::size_t x = 0; x < n; ++x) {
    if (!closures.insert(impl->down[x]).second) {
      for (std::size_t y = 0; y < x; ++y) {
        if (impl->down[y] == impl->down[x]) {
          throw AxiomError("T0", "points " + impl->labels[y] + " and " + impl->labels[x] +
                                     " have the same open neighbourhoods");
        }
      }
    }
  }
  impl->opens = std::move(opens);
  impl_ = std::move(impl);
}

FiniteSpace FiniteSpace::renamed(std::string name) const {
  FiniteSpace copy = *this;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  copy.impl_ = std::move(impl);
  return copy;
}

std::optional<std::size_t> FiniteSpace::index_of(const std::string& label) const {
  const auto& ls = impl_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ls.begin());
}

std::vector<PointSet> FiniteSpace::closed_sets() const {
  std::vector<PointSet> out;
  out.reserve(opens().size());
  for (const PointSet& u : opens()) out.push_back(carrier() - u);
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteSpace::is_open(PointSet a) const {
  return std::binary_search(impl_->opens.begin(), impl_->opens.end(), a);
}

PointSet FiniteSpace::closure(PointSet a) const {
  // Closure commutes with finite unions.
  PointSet out;
  (a & carrier()).for_each([&](std::size_t x) { out |= impl_->down[x]; });
  return out;
}

PointSet FiniteSpace::interior(PointSet a) const { return carrier() - closure(carrier() - a); }

PointSet FiniteSpace::saturation(PointSet a) const {
  PointSet out;
  (a & carrier()).for_each([&](std::size_t x) { out |= impl_->up[x]; });
  return out;
}

std::optional<std::size_t> FiniteSpace::generic_point(PointSet a) const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (impl_->down[x] == a) return x;
  }
  return std::nullopt;
}

FiniteSpace from_poset(const FinitePoset& p, std::string name, const Caps& caps) {
  if (p.size() > caps.max_points) {
    throw ResourceError("poset has " + std::to_string(p.size()) + " elements, cap is " +
                        std::to_string(caps.max_points));
  }
  std::vector<PointSet> gens;
  gens.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) gens.push_back(p.up(i));
  gens.push_back(PointSet::full(p.size()));
  return FiniteSpace(p.labels(), union_closure(gens, caps.max_opens), std::move(name));
}

FinitePoset specialization_order(const FiniteSpace& x) {
  std::vector<PointSet> up;
  up.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) up.push_back(x.neighbourhood(i));
  return FinitePoset(x.labels(), std::move(up));
}

}  // namespace topolab
