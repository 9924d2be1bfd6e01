#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/caps.hpp"
#include "topolab/families.hpp"
#include "topolab/finite_space.hpp"

namespace topolab {

/// Separation and compactness properties of a space, each with a short witness
/// (a certificate when the flag holds, a counterexample when it fails).
struct PropertyReport {
  std::string space;
  bool sober = false;
  bool d_space = false;
  bool well_filtered = false;
  bool compact = false;
  bool locally_hypercompact = false;
  bool c_space = false;
  bool core_compact = false;
  bool locally_compact = false;
  std::map<std::string, std::string> witnesses;

  static const std::vector<std::string>& names();
  /// Flag by name ("sober", "d_space", ...); nullopt for unknown names.
  std::optional<bool> flag(std::string_view name) const;
  bool* flag_ptr(std::string_view name);

  bool satisfies(CategoryTag c) const;

  /// Violations of sober => well_filtered => d_space and
  /// c_space => locally_hypercompact => locally_compact => core_compact.
  std::vector<std::string> chain_violations() const;
};

/// Computes every flag of a finite space from its definition (using the finite
/// reductions documented per flag). Throws ContractViolation if the resulting report
/// breaks the implication chains.
PropertyReport predicates(const FiniteSpace& x, const Caps& caps = {});

}  // namespace topolab
