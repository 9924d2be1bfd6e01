#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "topolab/caps.hpp"
#include "topolab/continuous_map.hpp"
#include "topolab/hyperspaces.hpp"

namespace topolab {

/// The full subcategories of T0 spaces handled here: sober spaces, d-spaces and
/// well-filtered spaces.
enum class CategoryTag { Sobriety, DSpace, WellFiltered };

inline constexpr std::array<CategoryTag, 3> kAllCategories{CategoryTag::Sobriety, CategoryTag::DSpace,
                                                            CategoryTag::WellFiltered};

/// "sob", "d" or "wf".
std::string_view short_name(CategoryTag c);
std::optional<CategoryTag> parse_category(std::string_view text);

/// A closed set certified minimal among the closed sets meeting every member of a
/// family of compact saturated sets.
struct RudinWitness {
  std::vector<PointSet> compacts;
  PointSet minimal_closed;
};

/// Every pair of members has a member contained in both.
bool is_filtered(const std::vector<PointSet>& compacts);

/// S_c(X) = { cl{x} }.
ClosedFamily point_closures(const FiniteSpace& x);

/// D_c(X) = { cl D : D directed }. Up to caps.max_subset_points every directed subset is
/// enumerated and the result is checked against S_c (a finite directed set has a
/// maximum); larger spaces use that reduction directly.
ClosedFamily directed_closures(const FiniteSpace& x, const Caps& caps = {});

/// Irr_c(X): the nonempty closed sets that are not a union of two proper closed subsets.
ClosedFamily irreducible_closed(const FiniteSpace& x);

struct RudinFamily {
  ClosedFamily family;
  /// One witness per member, aligned with family.members().
  std::vector<RudinWitness> witnesses;
};

/// RD(X). A finite filtered family has a least member, so a closed set is a Rudin set
/// iff it is minimal among closed sets meeting a single nonempty upper set K. Spaces of
/// at most 5 points are cross-checked against rudin_sets_by_filtered_families(x, 3).
RudinFamily rudin_sets(const FiniteSpace& x);

/// Union of m(K) over all filtered families K of at most `max_family` compact saturated sets.
ClosedFamily rudin_sets_by_filtered_families(const FiniteSpace& x, std::size_t max_family);

/// K(X) for a finite space. Sobriety gives Irr_c(X). For the other categories a finite
/// T0 space is sober and hence a K-space itself, so applying the definition to the
/// identity map leaves only point closures: the result is S_c(X).
ClosedFamily k_family(const FiniteSpace& x, CategoryTag c);

/// Closed sets A such that cl f(A) is a point closure for every continuous f from x into
/// every space of `targets`. The definition quantifies over all K-spaces; this is its
/// restriction to a finite catalogue and is only used as a consistency check.
ClosedFamily kset_oracle(const FiniteSpace& x, const std::vector<FiniteSpace>& targets, const Caps& caps = {});

/// Topological Rudin search: given compact saturated sets forming an irreducible subset
/// of P_S(x) and a closed set meeting each of them, returns the least (canonical order)
/// closed subset of `closed` meeting every member, certified irreducible and minimal.
RudinWitness rudin_witness_search(const FiniteSpace& x, const std::vector<PointSet>& compacts, PointSet closed,
                                  const Caps& caps = {});

/// Whether cl f(a) belongs to K(target). `a` must belong to K(source).
bool kset_image_check(const ContinuousMap& f, PointSet a, CategoryTag c);

}  // namespace topolab
