#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topolab/caps.hpp"
#include "topolab/continuous_map.hpp"
#include "topolab/finite_space.hpp"

namespace topolab {

enum class FamilyStatus { Exact, Interval };

/// A collection of distinct closed sets of a finite base space, in canonical order.
///
/// An Interval family carries lower and upper bounds on a family that could not be
/// computed exactly; its members are the lower bound. Finite computations in this
/// library always produce Exact families.
class ClosedFamily {
 public:
  /// Throws ContractViolation if a member is not closed in `base`, and ResourceError if
  /// there are more members than a space can hold. Duplicates are merged.
  ClosedFamily(FiniteSpace base, std::vector<PointSet> members);

  static ClosedFamily interval(FiniteSpace base, std::vector<PointSet> lower, std::vector<PointSet> upper);

  const FiniteSpace& base() const noexcept { return base_; }
  const std::vector<PointSet>& members() const& noexcept { return members_; }
  std::vector<PointSet> members() && noexcept { return std::move(members_); }
  std::size_t size() const noexcept { return members_.size(); }
  FamilyStatus status() const noexcept { return upper_ ? FamilyStatus::Interval : FamilyStatus::Exact; }
  const std::vector<PointSet>& upper() const { return upper_ ? *upper_ : members_; }

  bool contains(PointSet a) const;
  std::optional<std::size_t> index_of(PointSet a) const;
  bool subset_of(const ClosedFamily& other) const;

  /// Render a member as "{a b}" using the base labels.
  std::string describe(PointSet member) const;

  friend bool operator==(const ClosedFamily& a, const ClosedFamily& b) {
    return a.members_ == b.members_ && a.upper_ == b.upper_ && a.base_ == b.base_;
  }

 private:
  FiniteSpace base_;
  std::vector<PointSet> members_;
  std::optional<std::vector<PointSet>> upper_;
};

/// Members meeting `a`, as indices into the family's member order.
PointSet diamond(const ClosedFamily& g, PointSet a);
/// Members contained in `a`, as indices into the family's member order.
PointSet box(const ClosedFamily& g, PointSet a);

/// P_H(G): the members of G with the lower Vietoris topology.
struct HyperSpace {
  FiniteSpace space;
  ClosedFamily family;
};

HyperSpace lower_vietoris(const ClosedFamily& g, const Caps& caps = {});

/// P_S(X): the nonempty compact saturated sets (for a finite base, the nonempty upper
/// sets) with the topology generated by the sets box(U).
struct SmythSpace {
  FiniteSpace space;
  FiniteSpace base;
  std::vector<PointSet> members;

  std::optional<std::size_t> index_of(PointSet k) const;
};

SmythSpace smyth_power(const FiniteSpace& x, const Caps& caps = {});

/// x -> cl{x} into lower_vietoris(g). Throws ContractViolation if some point closure
/// is missing from g.
ContinuousMap eta(const HyperSpace& h);

/// x -> up(x) into the Smyth power space.
ContinuousMap xi(const SmythSpace& s);

/// Whether `a` (a subset of x) is irreducible: nonempty, and any two open sets meeting
/// it meet inside it. Uses least neighbourhoods, which are open in a finite space.
bool is_irreducible(const FiniteSpace& x, PointSet a);

}  // namespace topolab
