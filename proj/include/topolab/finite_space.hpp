#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topolab/caps.hpp"
#include "topolab/point_set.hpp"

namespace topolab {

/// A finite partial order. `leq(i, j)` holds iff element i is below element j.
class FinitePoset {
 public:
  /// Validates reflexivity, transitivity and antisymmetry of the given up-set matrix
  /// (`up[i]` = elements above i). Throws AxiomError naming the first violated axiom.
  FinitePoset(std::vector<std::string> labels, std::vector<PointSet> up);

  /// Reflexive-transitive closure of a strict relation given as (lower, upper) index
  /// pairs. A cycle is reported as an antisymmetry violation.
  static FinitePoset from_relation(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& below);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool leq(std::size_t i, std::size_t j) const { return up_.at(i).test(j); }
  PointSet up(std::size_t i) const { return up_.at(i); }
  PointSet down(std::size_t i) const { return down_.at(i); }
  PointSet up_closure(PointSet a) const;
  PointSet down_closure(PointSet a) const;
  bool is_upper(PointSet a) const { return up_closure(a) == a; }

  /// Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
};

/// A finite T0 topological space given by its full family of open sets.
///
/// Immutable; copies share the underlying storage. Opens are kept sorted in the
/// canonical PointSet order. Construction checks that the family contains the empty
/// set and the carrier, is closed under binary union and intersection, and separates
/// points (T0); the first failed axiom is named in the AxiomError.
class FiniteSpace {
 public:
  FiniteSpace(std::vector<std::string> points, std::vector<PointSet> opens, std::string name = {});

  std::size_t size() const noexcept { return impl_->labels.size(); }
  const std::string& name() const noexcept { return impl_->name; }
  FiniteSpace renamed(std::string name) const;

  const std::vector<std::string>& labels() const noexcept { return impl_->labels; }
  const std::string& label(std::size_t i) const { return impl_->labels.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  PointSet carrier() const noexcept { return PointSet::full(size()); }
  const std::vector<PointSet>& opens() const noexcept { return impl_->opens; }
  /// Complements of the opens, in canonical order.
  std::vector<PointSet> closed_sets() const;

  bool is_open(PointSet a) const;
  bool is_closed(PointSet a) const { return is_open(carrier() - a); }

  /// Smallest closed superset.
  PointSet closure(PointSet a) const;
  /// Largest open subset.
  PointSet interior(PointSet a) const;
  /// Intersection of all open supersets; the upper set of `a` in the specialization order.
  PointSet saturation(PointSet a) const;

  /// cl{x}, i.e. the down-set of x in the specialization order.
  PointSet point_closure(std::size_t x) const { return impl_->down.at(x); }
  /// Least open neighbourhood of x, i.e. the up-set of x.
  PointSet neighbourhood(std::size_t x) const { return impl_->up.at(x); }
  /// x below y in the specialization order (x lies in the closure of y).
  bool leq(std::size_t x, std::size_t y) const { return impl_->down.at(y).test(x); }

  /// Points whose closure is exactly `a`, if any.
  std::optional<std::size_t> generic_point(PointSet a) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.impl_ == b.impl_ || (a.impl_->labels == b.impl_->labels && a.impl_->opens == b.impl_->opens);
  }

 private:
  struct Impl {
    std::string name;
    std::vector<std::string> labels;
    std::vector<PointSet> opens;
    std::vector<PointSet> down;
    std::vector<PointSet> up;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Closes a family of generators under unions (the empty union included). Throws
/// ResourceError once more than `max_sets` sets have been produced. Result is sorted.
std::vector<PointSet> union_closure(const std::vector<PointSet>& generators, std::size_t max_sets);

/// The topology on n points generated by `subbase` (unions of finite intersections).
/// The carrier is always open.
std::vector<PointSet> topology_from_subbase(std::size_t n, const std::vector<PointSet>& subbase,
                                            std::size_t max_opens);

/// Alexandrov topology of the poset: opens are exactly the upper sets. On a finite
/// poset every directed subset has a maximum, so this is also the Scott topology.
FiniteSpace from_poset(const FinitePoset& p, std::string name = {}, const Caps& caps = {});

/// x <= y iff x lies in the closure of {y}.
FinitePoset specialization_order(const FiniteSpace& x);

}  // namespace topolab
