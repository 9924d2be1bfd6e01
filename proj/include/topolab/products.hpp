#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topolab/caps.hpp"
#include "topolab/continuous_map.hpp"
#include "topolab/families.hpp"

namespace topolab {

/// A finite product with its coordinate bookkeeping. Points are indexed in mixed radix
/// with the first factor most significant and labelled "(a,b,...)".
struct ProductSpace {
  FiniteSpace space;
  std::vector<FiniteSpace> factors;

  std::vector<std::size_t> coordinates(std::size_t point) const;
  std::size_t point(const std::vector<std::size_t>& coords) const;
  ContinuousMap projection(std::size_t i) const;
  /// p_i(a).
  PointSet project(std::size_t i, PointSet a) const;
  /// a_1 x ... x a_n.
  PointSet box(const std::vector<PointSet>& sets) const;
};

/// Product topology: generated by the preimages of opens under the projections.
/// Throws ResourceError when the carrier exceeds caps.max_product_points.
ProductSpace product(const std::vector<FiniteSpace>& xs, const Caps& caps = {});

struct ProductReflectionCheck {
  bool ok = false;
  /// gamma: (prod X_i)^k -> prod X_i^k, A -> (cl p_1(A), ..., cl p_n(A)).
  std::optional<ContinuousMap> gamma;
  /// Whether an independent homeomorphism search also found the two sides homeomorphic.
  bool cross_checked = false;
  std::vector<std::string> failures;
};

/// Verifies that gamma is a homeomorphism whose inverse is the member-wise product, that
/// every projection closure of a K-set is a K-set, and that each K-set of the product is
/// the product of its projection closures.
ProductReflectionCheck check_product_reflection(const std::vector<FiniteSpace>& xs, CategoryTag c,
                                                const Caps& caps = {});

struct KSpaceProductCheck {
  bool product_is_kspace = false;
  bool factors_are_kspaces = false;
  bool holds() const noexcept { return product_is_kspace == factors_are_kspaces; }
};

/// The product is a K-space iff every factor is.
KSpaceProductCheck check_kspace_product(const std::vector<FiniteSpace>& xs, CategoryTag c, const Caps& caps = {});

/// If x is a K-space then so is its Smyth power space (vacuously true otherwise).
bool check_smyth_category(const FiniteSpace& x, CategoryTag c, const Caps& caps = {});

}  // namespace topolab
