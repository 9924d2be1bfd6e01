#include "topolab/products.hpp"

#include "topolab/error.hpp"
#include "topolab/hyperspaces.hpp"
#include "topolab/properties.hpp"
#include "topolab/reflections.hpp"

namespace topolab {

std::vector<std::size_t> ProductSpace::coordinates(std::size_t point) const {
  std::vector<std::size_t> coords(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    coords[i] = point % factors[i].size();
    point /= factors[i].size();
  }
  return coords;
}

std::size_t ProductSpace::point(const std::vector<std::size_t>& coords) const {
  std::size_t p = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) p = p * factors[i].size() + coords.at(i);
  return p;
}

ContinuousMap ProductSpace::projection(std::size_t i) const {
  std::vector<std::size_t> fn(space.size());
  for (std::size_t p = 0; p < space.size(); ++p) fn[p] = coordinates(p)[i];
  return ContinuousMap(PointMap{space, factors.at(i), std::move(fn)});
}

PointSet ProductSpace::project(std::size_t i, PointSet a) const {
  PointSet out;
  a.for_each([&](std::size_t p) { out.set(coordinates(p)[i]); });
  return out;
}

PointSet ProductSpace::box(const std::vector<PointSet>& sets) const {
  PointSet out;
  for (std::size_t p = 0; p < space.size(); ++p) {
    const auto coords = coordinates(p);
    bool inside = true;
    for (std::size_t i = 0; i < factors.size() && inside; ++i) inside = sets.at(i).test(coords[i]);
    if (inside) out.set(p);
  }
  return out;
}

ProductSpace product(const std::vector<FiniteSpace>& xs, const Caps& caps) {
  if (xs.empty()) throw ContractViolation("product of an empty list");
  std::size_t total = 1;
  for (const FiniteSpace& x : xs) {
    total *= x.size();
    if (total > caps.max_product_points) {
      throw ResourceError("product carrier exceeds cap of " + std::to_string(caps.max_product_points) + " points");
    }
  }
  ProductSpace out{FiniteSpace({"*"}, {PointSet{}, PointSet::singleton(0)}), xs};
  std::vector<std::string> labels(total);
  std::string name;
  for (std::size_t p = 0; p < total; ++p) {
    const auto coords = out.coordinates(p);
    std::string label = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) label += (i ? "," : "") + xs[i].label(coords[i]);
    labels[p] = label + ")";
  }
  for (const FiniteSpace& x : xs) {
    if (x.name().empty()) {
      name.clear();
      break;
    }
    name += (name.empty() ? "" : "*") + x.name();
  }
  std::vector<PointSet> subbase;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (const PointSet& u : xs[i].opens()) {
      PointSet pre;
      for (std::size_t p = 0; p < total; ++p) {
        if (u.test(out.coordinates(p)[i])) pre.set(p);
      }
      subbase.push_back(pre);
    }
  }
  out.space = FiniteSpace(std::move(labels), topology_from_subbase(total, subbase, caps.max_opens), name);
  return out;
}

ProductReflectionCheck check_product_reflection(const std::vector<FiniteSpace>& xs, CategoryTag c, const Caps& caps) {
  ProductReflectionCheck check;
  const ProductSpace prod = product(xs, caps);
  const Reflection whole = reflect(prod.space, c, caps);
  std::vector<Reflection> parts;
  std::vector<FiniteSpace> part_spaces;
  for (const FiniteSpace& x : xs) {
    parts.push_back(reflect(x, c, caps));
    part_spaces.push_back(parts.back().space);
  }
  const ProductSpace target = product(part_spaces, caps);

  std::vector<std::size_t> gamma(whole.family.size());
  for (std::size_t m = 0; m < whole.family.size(); ++m) {
    const PointSet a = whole.family.members()[m];
    std::vector<PointSet> closures;
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const PointSet ai = xs[i].closure(prod.project(i, a));
      auto idx = parts[i].family.index_of(ai);
      if (!idx) {
        check.failures.push_back("projection closure of " + whole.family.describe(a) + " is not a K-set of factor " +
                                 std::to_string(i));
        return check;
      }
      closures.push_back(ai);
      coords.push_back(*idx);
    }
    if (prod.box(closures) != a) {
      check.failures.push_back(whole.family.describe(a) + " is not the product of its projection closures");
    }
    gamma[m] = target.point(coords);
  }
  PointMap gamma_map{whole.space, target.space, gamma};
  if (!is_homeomorphism(gamma_map)) {
    check.failures.push_back("gamma is not a homeomorphism");
    return check;
  }
  // The inverse sends a tuple of K-sets to their product.
  std::vector<std::size_t> inverse(target.space.size());
  for (std::size_t q = 0; q < target.space.size(); ++q) {
    const auto coords = target.coordinates(q);
    std::vector<PointSet> sets;
    for (std::size_t i = 0; i < xs.size(); ++i) sets.push_back(parts[i].family.members()[coords[i]]);
    auto idx = whole.family.index_of(prod.box(sets));
    if (!idx || gamma[*idx] != q) {
      check.failures.push_back("member-wise product is not the inverse of gamma");
      return check;
    }
    inverse[q] = *idx;
  }
  const bool gamma_continuous = static_cast<bool>(check_continuous(gamma_map));
  if (!gamma_continuous || !check_continuous(PointMap{target.space, whole.space, inverse})) {
    check.failures.push_back("gamma or its inverse is not continuous");
  }
  if (target.space.size() <= caps.max_homeo_points) {
    check.cross_checked = true;
    if (!find_homeomorphism(whole.space, target.space, caps)) {
      check.failures.push_back("homeomorphism search found no homeomorphism");
    }
  }
  if (gamma_continuous) check.gamma.emplace(std::move(gamma_map));
  check.ok = check.failures.empty();
  return check;
}

KSpaceProductCheck check_kspace_product(const std::vector<FiniteSpace>& xs, CategoryTag c, const Caps& caps) {
  KSpaceProductCheck out;
  out.product_is_kspace = predicates(product(xs, caps).space, caps).satisfies(c);
  out.factors_are_kspaces = true;
  for (const FiniteSpace& x : xs) out.factors_are_kspaces = out.factors_are_kspaces && predicates(x, caps).satisfies(c);
  return out;
}

bool check_smyth_category(const FiniteSpace& x, CategoryTag c, const Caps& caps) {
  if (!predicates(x, caps).satisfies(c)) return true;
  return predicates(smyth_power(x, caps).space, caps).satisfies(c);
}

}  // namespace topolab
