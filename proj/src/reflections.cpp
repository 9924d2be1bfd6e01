#include "topolab/reflections.hpp"

#include <algorithm>
#include <map>

#include "topolab/error.hpp"
#include "topolab/properties.hpp"

namespace topolab {
namespace {

bool directed_in(const FinitePoset& p, PointSet d) {
  if (d.empty()) return false;
  bool ok = true;
  d.for_each([&](std::size_t a) {
    d.for_each([&](std::size_t b) {
      if (ok && b > a && !(p.up(a) & p.up(b)).intersects(d)) ok = false;
    });
  });
  return ok;
}

std::optional<std::size_t> supremum(const FinitePoset& p, PointSet d) {
  PointSet bounds = PointSet::full(p.size());
  d.for_each([&](std::size_t a) { bounds &= p.up(a); });
  std::optional<std::size_t> least;
  bounds.for_each([&](std::size_t u) {
    if (!least && bounds.subset_of(p.up(u))) least = u;
  });
  return least;
}

std::string category_label(CategoryTag c) { return std::string(short_name(c)); }

}  // namespace

Reflection reflect(const FiniteSpace& x, CategoryTag c, const Caps& caps) {
  ClosedFamily family = k_family(x, c);
  HyperSpace h = lower_vietoris(family, caps);
  ContinuousMap embedding = eta(h);
  const std::string name = x.name().empty() ? std::string{} : x.name() + "^" + category_label(c);
  FiniteSpace space = h.space.renamed(name);
  embedding = ContinuousMap(PointMap{x, space, embedding.values()});

  for (const PointSet& u : x.opens()) {
    if (embedding.preimage(diamond(family, u)) != u) {
      throw ContractViolation("eta does not pull diamond(U) back to U");
    }
  }
  if (!predicates(space, caps).satisfies(c)) {
    throw ContractViolation("P_H(K(X)) is not a " + category_label(c) + "-space");
  }
  return Reflection{c, x, std::move(family), std::move(space), std::move(embedding)};
}

ContinuousMap extend(const ContinuousMap& f, const Reflection& r, const Caps& caps) {
  if (!(f.source() == r.base)) throw ContractViolation("extend: map source is not the reflected space");
  const FiniteSpace& y = f.target();
  if (!predicates(y, caps).satisfies(r.category)) {
    throw ContractViolation("extend: target is not a " + category_label(r.category) + "-space");
  }
  std::vector<std::size_t> fn(r.family.size());
  for (std::size_t i = 0; i < r.family.size(); ++i) {
    const PointSet image_closure = y.closure(f.image(r.family.members()[i]));
    auto ya = y.generic_point(image_closure);
    if (!ya) {
      throw ContractViolation("extend: closure of the image of " + r.family.describe(r.family.members()[i]) +
                              " is not a point closure");
    }
    fn[i] = *ya;
  }
  return ContinuousMap(PointMap{r.space, y, std::move(fn)});
}

ContinuousMap functor_map(const ContinuousMap& f, CategoryTag c, const Caps& caps) {
  const Reflection rx = reflect(f.source(), c, caps);
  const Reflection ry = reflect(f.target(), c, caps);
  std::vector<std::size_t> fn(rx.family.size());
  for (std::size_t i = 0; i < rx.family.size(); ++i) {
    const PointSet image_closure = f.target().closure(f.image(rx.family.members()[i]));
    auto idx = ry.family.index_of(image_closure);
    if (!idx) throw ContractViolation("functor_map: image closure is not a member of K(Y)");
    fn[i] = *idx;
  }
  ContinuousMap fk(PointMap{rx.space, ry.space, std::move(fn)});
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    if (fk(rx.embedding(x)) != ry.embedding(f(x))) {
      throw ContractViolation("functor_map: naturality square fails at " + f.source().label(x));
    }
  }
  return fk;
}

UniversalPropertyReport universal_property_report(const FiniteSpace& x, CategoryTag c,
                                                  const std::vector<FiniteSpace>& targets, const Caps& caps) {
  UniversalPropertyReport report;
  const Reflection r = reflect(x, c, caps);
  for (const FiniteSpace& y : targets) {
    if (!predicates(y, caps).satisfies(c)) {
      throw ContractViolation("universal_property_report: target " + y.name() + " is not a " + category_label(c) +
                              "-space");
    }
    ++report.targets;
    // Group every continuous g: X^k -> Y by its restriction g . eta.
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_restriction;
    const auto gs = enumerate_continuous_maps(r.space, y, caps);
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
      std::vector<std::size_t> restriction(x.size());
      for (std::size_t p = 0; p < x.size(); ++p) restriction[p] = gs[gi](r.embedding(p));
      by_restriction[restriction].push_back(gi);
    }
    for (const ContinuousMap& f : enumerate_continuous_maps(x, y, caps)) {
      ++report.maps_tested;
      auto it = by_restriction.find(f.values());
      const std::size_t count = it == by_restriction.end() ? 0 : it->second.size();
      report.factorizations_found += count;
      if (count != 1) {
        report.violations.push_back(std::to_string(count) + " factorizations of a map into " + y.name());
        continue;
      }
      try {
        if (!(extend(f, r, caps) == gs[it->second.front()])) {
          report.violations.push_back("extension differs from the unique factorization into " + y.name());
        }
      } catch (const ContractViolation& e) {
        report.violations.push_back(e.what());
      }
    }
  }
  return report;
}

bool frame_isomorphism_holds(const Reflection& r) {
  const auto& opens = r.base.opens();
  std::vector<PointSet> image;
  image.reserve(opens.size());
  for (const PointSet& u : opens) image.push_back(diamond(r.family, u));
  for (const PointSet& v : image) {
    if (!r.space.is_open(v)) return false;
  }
  std::vector<PointSet> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted != r.space.opens()) return false;
  // Preservation of binary joins and meets (pairs are cheap at these sizes; stop early on
  // large lattices after a bounded number of pairs).
  const std::size_t limit = std::min<std::size_t>(opens.size(), 512);
  for (std::size_t i = 0; i < limit; ++i) {
    for (std::size_t j = i; j < limit; ++j) {
      if (diamond(r.family, opens[i] | opens[j]) != (image[i] | image[j])) return false;
      if (diamond(r.family, opens[i] & opens[j]) != (image[i] & image[j])) return false;
    }
  }
  return true;
}

DcpoCompletion d_completion(const FinitePoset& p, const Caps& caps) {
  const FiniteSpace scott = from_poset(p, {}, caps);
  const Reflection r = reflect(scott, CategoryTag::DSpace, caps);
  std::vector<std::string> labels;
  std::vector<PointSet> up(r.family.size());
  for (std::size_t i = 0; i < r.family.size(); ++i) {
    labels.push_back(r.family.describe(r.family.members()[i]));
    for (std::size_t j = 0; j < r.family.size(); ++j) {
      if (r.family.members()[i].subset_of(r.family.members()[j])) up[i].set(j);
    }
  }
  FinitePoset completed(std::move(labels), std::move(up));
  if (!(completed == specialization_order(r.space))) {
    throw ContractViolation("d_completion: specialization order of X^d is not inclusion");
  }
  DcpoCompletion out{p, std::move(completed), r.embedding.values()};

  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.leq(a, b) && !out.completed.leq(out.unit[a], out.unit[b])) {
        throw ContractViolation("d_completion: unit is not monotone");
      }
    }
  }
  auto sweep = [&](const FinitePoset& q, auto&& on_directed) {
    if (q.size() > caps.max_subset_points) return;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << q.size()); ++bits) {
      const PointSet d = PointSet::from_words(bits);
      if (directed_in(q, d)) on_directed(d);
    }
  };
  sweep(out.completed, [&](PointSet d) {
    if (!supremum(out.completed, d)) throw ContractViolation("d_completion: result is not a dcpo");
  });
  sweep(p, [&](PointSet d) {
    auto s = supremum(p, d);
    if (!s) return;
    PointSet image;
    d.for_each([&](std::size_t a) { image.set(out.unit[a]); });
    if (supremum(out.completed, image) != out.unit[*s]) {
      throw ContractViolation("d_completion: unit does not preserve a directed supremum");
    }
  });
  return out;
}

}  // namespace topolab
