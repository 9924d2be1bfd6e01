#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topolab/families.hpp"
#include "topolab/finite_space.hpp"
#include "topolab/hyperspaces.hpp"
#include "topolab/reflections.hpp"

namespace topolab {

// Closed-form descriptors for a few infinite T0 spaces.
//
//   omega_chain       N with the Scott topology of 0 < 1 < 2 < ...; opens are {} and
//                     Up(n); closed sets are {}, Down(n) and the whole space.
//   omega_plus_one    N + {w} with the Scott topology of the chain 0 < 1 < ... < w.
//                     Opens are {} and Up(n) (which contains w); w itself is not
//                     isolated because N has supremum w.
//   cofinite          N with the cofinite topology; closed sets are the finite sets
//                     and the whole space.
//   cofinite_generic  cofinite plus a generic point whose closure is everything; opens
//                     are {} and Cofinite(F) + generic point.
//   finite            an embedded FiniteSpace.

enum class SymbolicKind { OmegaChainScott, OmegaPlusOneScott, CofiniteNat, CofiniteGeneric, FiniteEmbedded };

/// Label of the point adjoined by the sobrification of the cofinite space.
inline constexpr std::string_view kGenericPointLabel = "⊛";
/// Label of the top of the omega+1 chain.
inline constexpr std::string_view kOmegaLabel = "ω";

class SymbolicSpace {
 public:
  static SymbolicSpace omega_chain();
  static SymbolicSpace omega_plus_one();
  static SymbolicSpace cofinite();
  static SymbolicSpace cofinite_generic();
  static SymbolicSpace embed(FiniteSpace x);

  /// "omega_chain", "omega_plus_one", "cofinite", "cofinite_generic" or "finite".
  static std::optional<SymbolicSpace> from_variant_name(std::string_view name);

  SymbolicKind kind() const noexcept { return kind_; }
  std::string_view variant_name() const;
  const std::string& name() const noexcept { return name_; }
  SymbolicSpace renamed(std::string name) const;

  bool is_finite() const noexcept { return kind_ == SymbolicKind::FiniteEmbedded; }
  /// Throws UnsupportedVariant unless the space is FiniteEmbedded.
  const FiniteSpace& finite() const;
  /// Whether the space has the extra point (omega or the generic point).
  bool has_top() const noexcept;

  friend bool operator==(const SymbolicSpace& a, const SymbolicSpace& b) {
    return a.kind_ == b.kind_ && a.finite_ == b.finite_;
  }

 private:
  SymbolicSpace(SymbolicKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}
  SymbolicKind kind_;
  std::string name_;
  std::optional<FiniteSpace> finite_;
};

struct SymbolicPoint {
  enum class Tag { Nat, Top, Finite };
  Tag tag = Tag::Nat;
  std::uint64_t n = 0;

  static SymbolicPoint nat(std::uint64_t n) { return {Tag::Nat, n}; }
  static SymbolicPoint top() { return {Tag::Top, 0}; }
  static SymbolicPoint finite(std::size_t i) { return {Tag::Finite, i}; }
  friend bool operator==(const SymbolicPoint&, const SymbolicPoint&) = default;
};

struct SymbolicClosed {
  enum class Shape { Empty, Down, Finite, All, Subset };
  Shape shape = Shape::Empty;
  std::uint64_t n = 0;                // Down(n)
  std::set<std::uint64_t> elements;   // Finite
  PointSet subset;                    // Subset of an embedded finite space

  static SymbolicClosed empty() { return {}; }
  static SymbolicClosed down(std::uint64_t n) { return {Shape::Down, n, {}, {}}; }
  /// An empty element set normalises to empty().
  static SymbolicClosed finite_set(std::set<std::uint64_t> elements);
  static SymbolicClosed all() { return {Shape::All, 0, {}, {}}; }
  static SymbolicClosed of(PointSet s) { return {Shape::Subset, 0, {}, s}; }
  friend bool operator==(const SymbolicClosed&, const SymbolicClosed&) = default;
};

struct SymbolicOpen {
  enum class Shape { Empty, Up, Cofinite, Subset };
  Shape shape = Shape::Empty;
  std::uint64_t n = 0;                // Up(n)
  std::set<std::uint64_t> excluded;   // Cofinite(F)
  PointSet subset;

  static SymbolicOpen empty() { return {}; }
  static SymbolicOpen up(std::uint64_t n) { return {Shape::Up, n, {}, {}}; }
  static SymbolicOpen cofinite(std::set<std::uint64_t> excluded) { return {Shape::Cofinite, 0, std::move(excluded), {}}; }
  static SymbolicOpen of(PointSet s) { return {Shape::Subset, 0, {}, s}; }
  friend bool operator==(const SymbolicOpen&, const SymbolicOpen&) = default;
};

// --- point-level algebra ----------------------------------------------------

bool contains(const SymbolicSpace& s, const SymbolicOpen& u, const SymbolicPoint& p);
bool contains(const SymbolicSpace& s, const SymbolicClosed& c, const SymbolicPoint& p);
bool is_open_in(const SymbolicSpace& s, const SymbolicOpen& u);
bool is_closed_in(const SymbolicSpace& s, const SymbolicClosed& c);
SymbolicClosed complement(const SymbolicSpace& s, const SymbolicOpen& u);
SymbolicOpen intersect(const SymbolicSpace& s, const SymbolicOpen& u, const SymbolicOpen& v);
bool is_empty(const SymbolicSpace& s, const SymbolicOpen& u);
bool open_subset(const SymbolicSpace& s, const SymbolicOpen& u, const SymbolicOpen& v);
bool meets(const SymbolicSpace& s, const SymbolicClosed& c, const SymbolicOpen& u);
SymbolicClosed closure_of(const SymbolicSpace& s, const SymbolicPoint& p);
bool is_point_closure(const SymbolicSpace& s, const SymbolicClosed& c);
/// p below q in the specialization order.
bool specialization_leq(const SymbolicSpace& s, const SymbolicPoint& p, const SymbolicPoint& q);

/// Finite representative samples used to quantify over points, opens and closed sets.
std::vector<SymbolicPoint> sample_points(const SymbolicSpace& s);
std::vector<SymbolicOpen> sample_opens(const SymbolicSpace& s);
std::vector<SymbolicClosed> sample_closed(const SymbolicSpace& s);

std::string render(const SymbolicSpace& s, const SymbolicPoint& p);
std::string render(const SymbolicSpace& s, const SymbolicClosed& c);
std::string render(const SymbolicSpace& s, const SymbolicOpen& u);

// --- families ---------------------------------------------------------------

enum class SymFamily { Sc, Dc, RD, Irr, KSob, KD, KWF };

SymFamily k_selector(CategoryTag c);
std::string_view to_string(SymFamily f);

/// A family of closed sets of a symbolic space, described as "every point closure,
/// plus possibly the whole space". In the infinite variants every closed set that is
/// not a point closure is either empty, the whole space, or a reducible finite set, so
/// this form is exhaustive for the families computed here. An Interval family carries
/// separate lower and upper flags.
struct SymbolicFamily {
  SymbolicSpace space;
  SymFamily which;
  FamilyStatus status = FamilyStatus::Exact;
  bool adds_whole = false;
  bool upper_adds_whole = false;

  bool contains(const SymbolicClosed& c) const;
  bool subset_of(const SymbolicFamily& other) const;
  /// Exact and equal to S_c.
  bool is_point_closures() const;
  std::string describe() const;
};

/// Closed-form families of a symbolic space. Whole-space membership is decided per
/// family: Irr by pairwise intersection of nonempty opens, D_c by directedness of the
/// carrier, RD through a filtered family of compact saturated sets that every proper
/// closed subset misses; WF and d are pinned by the inclusions
/// D_c <= RD <= WF <= Irr and D_c <= d <= WF (and d = S_c once the space is a d-space).
SymbolicFamily sym_family(const SymbolicSpace& s, SymFamily which);

struct SymbolicPredicates {
  bool sober = false;
  bool d_space = false;
  bool well_filtered = false;
  bool compact = false;
  std::string compact_certificate;
  bool satisfies(CategoryTag c) const;
};

SymbolicPredicates sym_predicates(const SymbolicSpace& s);

// --- reflections ------------------------------------------------------------

struct SymbolicReflection {
  CategoryTag category;
  SymbolicSpace base;
  SymbolicFamily family;
  SymbolicSpace space;
  /// Present when the base is FiniteEmbedded.
  std::optional<Reflection> finite;

  /// eta: x -> cl{x}, as a point of `space`.
  SymbolicPoint embed(const SymbolicPoint& p) const;
  /// The member of the family that a point of `space` stands for.
  SymbolicClosed member(const SymbolicPoint& q) const;
  /// diamond(U) as an open of `space`.
  SymbolicOpen diamond(const SymbolicOpen& u) const;
  /// eta^{-1}(W) as an open of the base.
  SymbolicOpen pullback(const SymbolicOpen& w) const;
};

/// X^k = P_H(K(X)) in closed form. The lower Vietoris topology is checked on the sample
/// points and opens: a point lies in diamond(U) iff its member meets U.
SymbolicReflection sym_reflect(const SymbolicSpace& s, CategoryTag c);

/// U -> diamond(U) is an order isomorphism between the base opens and the opens of the
/// reflection (checked on sample opens).
bool sym_frame_isomorphism_holds(const SymbolicReflection& r);

/// Descriptor-level homeomorphism: equal kinds for the infinite variants, a
/// homeomorphism search for embedded finite spaces.
bool sym_homeomorphic(const SymbolicSpace& a, const SymbolicSpace& b, const Caps& caps = {});

// --- products ---------------------------------------------------------------

/// A family of closed sets of s x f, each of the form B x C with B described by class.
struct SymbolicProductFamily {
  enum class LeftClass { PointClosure, Whole };
  SymbolicSpace left;
  FiniteSpace right;
  SymFamily which;
  FamilyStatus status = FamilyStatus::Exact;
  std::vector<std::pair<LeftClass, PointSet>> members;

  /// Every member is cl{x} x cl{y}.
  bool all_point_closures() const;
  std::string describe() const;
};

/// Irr_c(s x f) = { B x C : B in Irr_c(s), C in Irr_c(f) }.
SymbolicProductFamily sym_product_irr(const SymbolicSpace& s, const FiniteSpace& f);

/// Products of the Irr, D_c and K families (K via the factor-wise characterisation of
/// K-sets in finite products). RD has no product law here: UnsupportedVariant.
SymbolicProductFamily sym_product_family(const SymbolicSpace& s, const FiniteSpace& f, SymFamily which);

struct SymbolicKSpaceProductCheck {
  bool product_is_kspace = false;
  bool factors_are_kspaces = false;
  bool holds() const noexcept { return product_is_kspace == factors_are_kspaces; }
};

SymbolicKSpaceProductCheck check_kspace_product(const SymbolicSpace& s, const FiniteSpace& f, CategoryTag c);

// --- D-completion -----------------------------------------------------------

struct SymbolicCompletion {
  SymbolicSpace base;
  SymbolicSpace completed;
  SymbolicPoint unit(const SymbolicPoint& p) const { return p; }
};

/// D-completion of the omega chain: omega + 1. Other variants raise UnsupportedVariant.
SymbolicCompletion d_completion(const SymbolicSpace& s);

}  // namespace topolab
