#include "topolab/continuous_map.hpp"

#include <functional>
#include <string>

#include "topolab/error.hpp"

namespace topolab {
namespace {

void require_total(const PointMap& f) {
  if (f.fn.size() != f.source.size()) {
    throw ContractViolation("point function is not total on the source carrier");
  }
  for (std::size_t v : f.fn) {
    if (v >= f.target.size()) throw ContractViolation("point function leaves the target carrier");
  }
}

PointSet preimage_of(const PointMap& f, PointSet b) {
  PointSet out;
  for (std::size_t x = 0; x < f.fn.size(); ++x) {
    if (b.test(f.fn[x])) out.set(x);
  }
  return out;
}

PointSet image_of(const PointMap& f, PointSet a) {
  PointSet out;
  a.for_each([&](std::size_t x) { out.set(f.fn.at(x)); });
  return out;
}

}  // namespace

ContinuityCheck check_continuous(const PointMap& f) {
  require_total(f);
  for (const PointSet& v : f.target.opens()) {
    if (!f.source.is_open(preimage_of(f, v))) return {false, v};
  }
  return {};
}

ContinuousMap::ContinuousMap(PointMap f) : map_(std::move(f)) {
  if (auto check = check_continuous(map_); !check) {
    std::string w;
    check.witness->for_each([&](std::size_t i) { w += (w.empty() ? "" : " ") + map_.target.label(i); });
    throw ContractViolation("map is not continuous: preimage of open {" + w + "} is not open");
  }
}

ContinuousMap ContinuousMap::identity(const FiniteSpace& x) {
  std::vector<std::size_t> fn(x.size());
  for (std::size_t i = 0; i < fn.size(); ++i) fn[i] = i;
  return ContinuousMap(PointMap{x, x, std::move(fn)});
}

ContinuousMap ContinuousMap::constant(const FiniteSpace& x, const FiniteSpace& y, std::size_t point) {
  return ContinuousMap(PointMap{x, y, std::vector<std::size_t>(x.size(), point)});
}

PointSet ContinuousMap::image(PointSet a) const { return image_of(map_, a); }
PointSet ContinuousMap::preimage(PointSet b) const { return preimage_of(map_, b); }

ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
  if (!(f.target() == g.source())) throw ContractViolation("cannot compose: target and source differ");
  std::vector<std::size_t> fn(f.source().size());
  for (std::size_t x = 0; x < fn.size(); ++x) fn[x] = g(f(x));
  return ContinuousMap(PointMap{f.source(), g.target(), std::move(fn)});
}

std::vector<ContinuousMap> enumerate_continuous_maps(const FiniteSpace& x, const FiniteSpace& y,
                                                     const Caps& caps) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (total > caps.max_maps / y.size()) {
      throw ResourceError("|Y|^|X| = " + std::to_string(y.size()) + "^" + std::to_string(x.size()) +
                          " exceeds the map cap of " + std::to_string(caps.max_maps));
    }
    total *= y.size();
  }
  std::vector<ContinuousMap> out;
  std::vector<std::size_t> fn(x.size());
  // Continuous maps are monotone, which prunes most branches before the full check.
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == x.size()) {
      PointMap candidate{x, y, fn};
      if (check_continuous(candidate)) out.emplace_back(std::move(candidate));
      return;
    }
    for (std::size_t v = 0; v < y.size(); ++v) {
      bool monotone = true;
      for (std::size_t j = 0; j < i && monotone; ++j) {
        if (x.leq(j, i) && !y.leq(fn[j], v)) monotone = false;
        if (x.leq(i, j) && !y.leq(v, fn[j])) monotone = false;
      }
      if (!monotone) continue;
      fn[i] = v;
      assign(i + 1);
    }
  };
  assign(0);
  return out;
}

bool is_embedding(const ContinuousMap& f) {
  const FiniteSpace& x = f.source();
  const FiniteSpace& y = f.target();
  const PointSet im = f.image(x.carrier());
  if (im.count() != x.size()) return false;
  for (const PointSet& u : x.opens()) {
    const PointSet fu = f.image(u);
    // The saturation is the least open superset in a finite space.
    if ((y.saturation(fu) & im) != fu) return false;
  }
  return true;
}

bool is_homeomorphism(const PointMap& f) {
  require_total(f);
  if (f.source.size() != f.target.size() || f.source.opens().size() != f.target.opens().size()) return false;
  PointSet hit;
  for (std::size_t v : f.fn) hit.set(v);
  if (hit.count() != f.target.size()) return false;
  for (const PointSet& u : f.source.opens()) {
    if (!f.target.is_open(image_of(f, u))) return false;
  }
  return true;
}

std::optional<ContinuousMap> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y, const Caps& caps) {
  if (x.size() != y.size() || x.opens().size() != y.opens().size()) return std::nullopt;
  if (x.size() > caps.max_homeo_points) {
    throw ResourceError("homeomorphism search limited to " + std::to_string(caps.max_homeo_points) + " points");
  }
  const std::size_t n = x.size();
  auto fingerprint = [](const FiniteSpace& s, std::size_t p) {
    return std::pair{s.point_closure(p).count(), s.neighbourhood(p).count()};
  };
  std::vector<std::size_t> fn(n);
  PointSet used;
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) return is_homeomorphism(PointMap{x, y, fn});
    for (std::size_t v = 0; v < n; ++v) {
      if (used.test(v) || fingerprint(x, i) != fingerprint(y, v)) continue;
      bool order_iso = true;
      for (std::size_t j = 0; j < i && order_iso; ++j) {
        order_iso = x.leq(j, i) == y.leq(fn[j], v) && x.leq(i, j) == y.leq(v, fn[j]);
      }
      if (!order_iso) continue;
      fn[i] = v;
      used.set(v);
      if (assign(i + 1)) return true;
      used.reset(v);
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return ContinuousMap(PointMap{x, y, fn});
}

}  // namespace topolab
