#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "topolab/caps.hpp"
#include "topolab/continuous_map.hpp"
#include "topolab/families.hpp"
#include "topolab/hyperspaces.hpp"

namespace topolab {

/// X^k = P_H(K(X)) together with the canonical embedding x -> cl{x}.
struct Reflection {
  CategoryTag category;
  FiniteSpace base;
  ClosedFamily family;
  FiniteSpace space;
  ContinuousMap embedding;
};

/// Builds the K-reflection of a finite space. Verifies that the result is a K-space and
/// that the embedding pulls each basic open diamond(U) back to U.
Reflection reflect(const FiniteSpace& x, CategoryTag c, const Caps& caps = {});

/// The unique f*: X^k -> Y with f* . eta = f, where f*(A) is the point whose closure is
/// cl f(A). Throws ContractViolation if Y is not a K-space or some y_A does not exist.
ContinuousMap extend(const ContinuousMap& f, const Reflection& r, const Caps& caps = {});

/// f^k: X^k -> Y^k, A -> cl f(A). Throws ContractViolation if the naturality square
/// f^k . eta_X = eta_Y . f fails.
ContinuousMap functor_map(const ContinuousMap& f, CategoryTag c, const Caps& caps = {});

struct UniversalPropertyReport {
  std::size_t targets = 0;
  std::size_t maps_tested = 0;
  std::size_t factorizations_found = 0;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty() && maps_tested == factorizations_found; }
};

/// For every continuous f from x into each target, counts the continuous g on X^k with
/// g . eta = f (by exhaustive enumeration) and checks there is exactly one, equal to
/// extend(f). Throws ContractViolation if a target is not a K-space.
UniversalPropertyReport universal_property_report(const FiniteSpace& x, CategoryTag c,
                                                  const std::vector<FiniteSpace>& targets, const Caps& caps = {});

/// Whether U -> diamond(U) is a bijection O(X) -> O(X^k) preserving unions and intersections.
bool frame_isomorphism_holds(const Reflection& r);

/// D-completion of a finite poset: the closed d-sets of its Scott space ordered by inclusion.
struct DcpoCompletion {
  FinitePoset base;
  FinitePoset completed;
  /// x -> index of cl{x} in `completed`.
  std::vector<std::size_t> unit;
};

/// Checks that `completed` is a dcpo and that the unit is Scott continuous (monotone and
/// preserving suprema of directed subsets, enumerated up to caps.max_subset_points).
DcpoCompletion d_completion(const FinitePoset& p, const Caps& caps = {});

}  // namespace topolab
