#include "topolab/symbolic.hpp"

#include <algorithm>

#include "topolab/error.hpp"
#include "topolab/properties.hpp"

namespace topolab {
namespace {

bool omega_kind(const SymbolicSpace& s) {
  return s.kind() == SymbolicKind::OmegaChainScott || s.kind() == SymbolicKind::OmegaPlusOneScott;
}

bool cofinite_kind(const SymbolicSpace& s) {
  return s.kind() == SymbolicKind::CofiniteNat || s.kind() == SymbolicKind::CofiniteGeneric;
}

[[noreturn]] void shape_mismatch(const SymbolicSpace& s, const char* what) {
  throw ContractViolation(std::string(what) + " is not a valid shape in " + std::string(s.variant_name()));
}

void require_point(const SymbolicSpace& s, const SymbolicPoint& p) {
  const bool ok = s.is_finite() ? p.tag == SymbolicPoint::Tag::Finite && p.n < s.finite().size()
                                : p.tag == SymbolicPoint::Tag::Nat || (p.tag == SymbolicPoint::Tag::Top && s.has_top());
  if (!ok) shape_mismatch(s, "point");
}

SymbolicOpen whole_open(const SymbolicSpace& s) {
  if (s.is_finite()) return SymbolicOpen::of(PointSet::full(s.finite().size()));
  return omega_kind(s) ? SymbolicOpen::up(0) : SymbolicOpen::cofinite({});
}

std::string render_set(const std::set<std::uint64_t>& xs) {
  std::string out = "{";
  for (auto it = xs.begin(); it != xs.end(); ++it) out += (it == xs.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

std::string render_subset(const FiniteSpace& x, PointSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    out += (first ? "" : ",") + x.label(i);
    first = false;
  });
  return out + "}";
}

std::vector<SymbolicPoint> sample_nats(const SymbolicSpace& s) {
  std::vector<SymbolicPoint> out;
  for (const SymbolicPoint& p : sample_points(s)) {
    if (p.tag == SymbolicPoint::Tag::Nat) out.push_back(p);
  }
  return out;
}

// The whole space is irreducible iff any two nonempty opens meet.
bool whole_irreducible(const SymbolicSpace& s) {
  const auto opens = sample_opens(s);
  for (const auto& u : opens) {
    for (const auto& v : opens) {
      if (!is_empty(s, u) && !is_empty(s, v) && is_empty(s, intersect(s, u, v))) return false;
    }
  }
  return true;
}

// The carrier N is directed in the specialization order; its closure is then the whole
// space because every proper closed set misses some natural number. When the order is
// discrete (T1), the only directed sets are singletons and no directed closure is the
// whole space.
bool whole_directed_closure(const SymbolicSpace& s) {
  const auto nats = sample_nats(s);
  for (const auto& p : nats) {
    for (const auto& q : nats) {
      const SymbolicPoint m = SymbolicPoint::nat(std::max(p.n, q.n));
      const bool bounded = (specialization_leq(s, p, m) && specialization_leq(s, q, m)) ||
                           (specialization_leq(s, p, q) && specialization_leq(s, q, q)) ||
                           (specialization_leq(s, q, p) && specialization_leq(s, p, p));
      if (!bounded) return false;
    }
  }
  for (const auto& c : sample_closed(s)) {
    if (c.shape == SymbolicClosed::Shape::All) continue;
    // Proper closed sets are bounded: Down(n) misses n+1, a finite set misses max+1.
    const std::uint64_t beyond = c.shape == SymbolicClosed::Shape::Down     ? c.n + 1
                                 : c.shape == SymbolicClosed::Shape::Finite ? *c.elements.rbegin() + 1
                                                                            : 0;
    if (contains(s, c, SymbolicPoint::nat(beyond))) {
      throw ContractViolation("proper closed set " + render(s, c) + " is not bounded");
    }
  }
  return true;
}

// Rudin membership of the whole space. A directed closure is a Rudin set (take the
// filtered family of principal filters ↑d). Otherwise, in a T1 space whose nonempty opens
// all have finite complement, every subset is compact and saturated, and the complements
// of the proper closed sets form a filtered family (proper closed sets are closed under
// finite unions when the whole space is irreducible); every proper closed set misses its
// own complement, so the whole space is minimal among closed sets meeting the family.
bool whole_rudin(const SymbolicSpace& s) {
  if (whole_directed_closure(s)) return true;
  const auto nats = sample_nats(s);
  for (const auto& p : nats) {
    for (const auto& q : nats) {
      if (!(p == q) && specialization_leq(s, p, q)) return false;
    }
  }
  for (const auto& u : sample_opens(s)) {
    if (is_empty(s, u)) continue;
    if (u.shape != SymbolicOpen::Shape::Cofinite) return false;
  }
  if (!whole_irreducible(s)) return false;
  for (const auto& c : sample_closed(s)) {
    if (c.shape == SymbolicClosed::Shape::All || c.shape == SymbolicClosed::Shape::Empty) continue;
    const SymbolicOpen k = SymbolicOpen::cofinite(c.elements);
    if (is_empty(s, k) || meets(s, c, k)) return false;
  }
  return true;
}

ClosedFamily finite_family(const FiniteSpace& x, SymFamily which) {
  switch (which) {
    case SymFamily::Sc: return point_closures(x);
    case SymFamily::Dc: return directed_closures(x);
    case SymFamily::RD: return rudin_sets(x).family;
    case SymFamily::Irr: return irreducible_closed(x);
    case SymFamily::KSob: return k_family(x, CategoryTag::Sobriety);
    case SymFamily::KD: return k_family(x, CategoryTag::DSpace);
    case SymFamily::KWF: return k_family(x, CategoryTag::WellFiltered);
  }
  throw ContractViolation("unknown family");
}

}  // namespace

// --- spaces ------------------------------------------------------------------

SymbolicSpace SymbolicSpace::omega_chain() { return {SymbolicKind::OmegaChainScott, "omega_chain"}; }
SymbolicSpace SymbolicSpace::omega_plus_one() { return {SymbolicKind::OmegaPlusOneScott, "omega_plus_one"}; }
SymbolicSpace SymbolicSpace::cofinite() { return {SymbolicKind::CofiniteNat, "cofinite"}; }
SymbolicSpace SymbolicSpace::cofinite_generic() { return {SymbolicKind::CofiniteGeneric, "cofinite_generic"}; }

SymbolicSpace SymbolicSpace::embed(FiniteSpace x) {
  SymbolicSpace out(SymbolicKind::FiniteEmbedded, x.name());
  out.finite_ = std::move(x);
  return out;
}

std::optional<SymbolicSpace> SymbolicSpace::from_variant_name(std::string_view name) {
  if (name == "omega_chain") return omega_chain();
  if (name == "omega_plus_one") return omega_plus_one();
  if (name == "cofinite") return cofinite();
  if (name == "cofinite_generic") return cofinite_generic();
  return std::nullopt;
}

std::string_view SymbolicSpace::variant_name() const {
  switch (kind_) {
    case SymbolicKind::OmegaChainScott: return "omega_chain";
    case SymbolicKind::OmegaPlusOneScott: return "omega_plus_one";
    case SymbolicKind::CofiniteNat: return "cofinite";
    case SymbolicKind::CofiniteGeneric: return "cofinite_generic";
    case SymbolicKind::FiniteEmbedded: return "finite";
  }
  return "unknown";
}

SymbolicSpace SymbolicSpace::renamed(std::string name) const {
  SymbolicSpace out = *this;
  out.name_ = std::move(name);
  if (out.finite_) out.finite_ = out.finite_->renamed(out.name_);
  return out;
}

const FiniteSpace& SymbolicSpace::finite() const {
  if (!finite_) throw UnsupportedVariant(std::string(variant_name()) + " is not a finite space");
  return *finite_;
}

bool SymbolicSpace::has_top() const noexcept {
  return kind_ == SymbolicKind::OmegaPlusOneScott || kind_ == SymbolicKind::CofiniteGeneric;
}

SymbolicClosed SymbolicClosed::finite_set(std::set<std::uint64_t> elements) {
  if (elements.empty()) return empty();
  return {Shape::Finite, 0, std::move(elements), {}};
}

// --- point-level algebra -----------------------------------------------------

bool contains(const SymbolicSpace& s, const SymbolicOpen& u, const SymbolicPoint& p) {
  require_point(s, p);
  switch (u.shape) {
    case SymbolicOpen::Shape::Empty: return false;
    case SymbolicOpen::Shape::Up:
      if (!omega_kind(s)) shape_mismatch(s, "Up");
      return p.tag == SymbolicPoint::Tag::Top || p.n >= u.n;
    case SymbolicOpen::Shape::Cofinite:
      if (!cofinite_kind(s)) shape_mismatch(s, "Cofinite");
      return p.tag == SymbolicPoint::Tag::Top || !u.excluded.count(p.n);
    case SymbolicOpen::Shape::Subset:
      if (!s.is_finite()) shape_mismatch(s, "Subset");
      return u.subset.test(p.n);
  }
  return false;
}

bool contains(const SymbolicSpace& s, const SymbolicClosed& c, const SymbolicPoint& p) {
  require_point(s, p);
  switch (c.shape) {
    case SymbolicClosed::Shape::Empty: return false;
    case SymbolicClosed::Shape::All: return true;
    case SymbolicClosed::Shape::Down:
      if (!omega_kind(s)) shape_mismatch(s, "Down");
      return p.tag == SymbolicPoint::Tag::Nat && p.n <= c.n;
    case SymbolicClosed::Shape::Finite:
      if (!cofinite_kind(s)) shape_mismatch(s, "Finite");
      return p.tag == SymbolicPoint::Tag::Nat && c.elements.count(p.n);
    case SymbolicClosed::Shape::Subset:
      if (!s.is_finite()) shape_mismatch(s, "Subset");
      return c.subset.test(p.n);
  }
  return false;
}

bool is_open_in(const SymbolicSpace& s, const SymbolicOpen& u) {
  switch (u.shape) {
    case SymbolicOpen::Shape::Empty: return true;
    case SymbolicOpen::Shape::Up: return omega_kind(s);
    case SymbolicOpen::Shape::Cofinite: return cofinite_kind(s);
    case SymbolicOpen::Shape::Subset: return s.is_finite() && s.finite().is_open(u.subset);
  }
  return false;
}

bool is_closed_in(const SymbolicSpace& s, const SymbolicClosed& c) {
  switch (c.shape) {
    case SymbolicClosed::Shape::Empty:
    case SymbolicClosed::Shape::All: return true;
    case SymbolicClosed::Shape::Down: return omega_kind(s);
    case SymbolicClosed::Shape::Finite: return cofinite_kind(s) && !c.elements.empty();
    case SymbolicClosed::Shape::Subset: return s.is_finite() && s.finite().is_closed(c.subset);
  }
  return false;
}

SymbolicClosed complement(const SymbolicSpace& s, const SymbolicOpen& u) {
  if (!is_open_in(s, u)) shape_mismatch(s, "open");
  switch (u.shape) {
    case SymbolicOpen::Shape::Empty: return SymbolicClosed::all();
    case SymbolicOpen::Shape::Up: return u.n == 0 ? SymbolicClosed::empty() : SymbolicClosed::down(u.n - 1);
    case SymbolicOpen::Shape::Cofinite: return SymbolicClosed::finite_set(u.excluded);
    case SymbolicOpen::Shape::Subset: return SymbolicClosed::of(PointSet::full(s.finite().size()) - u.subset);
  }
  return SymbolicClosed::empty();
}

SymbolicOpen intersect(const SymbolicSpace& s, const SymbolicOpen& u, const SymbolicOpen& v) {
  if (!is_open_in(s, u) || !is_open_in(s, v)) shape_mismatch(s, "open");
  if (u.shape == SymbolicOpen::Shape::Empty || v.shape == SymbolicOpen::Shape::Empty) return SymbolicOpen::empty();
  switch (u.shape) {
    case SymbolicOpen::Shape::Up: return SymbolicOpen::up(std::max(u.n, v.n));
    case SymbolicOpen::Shape::Cofinite: {
      std::set<std::uint64_t> excluded = u.excluded;
      excluded.insert(v.excluded.begin(), v.excluded.end());
      return SymbolicOpen::cofinite(std::move(excluded));
    }
    case SymbolicOpen::Shape::Subset: return SymbolicOpen::of(u.subset & v.subset);
    case SymbolicOpen::Shape::Empty: break;
  }
  return SymbolicOpen::empty();
}

bool is_empty(const SymbolicSpace& s, const SymbolicOpen& u) {
  if (!is_open_in(s, u)) shape_mismatch(s, "open");
  // Up(n) and cofinite sets of N are infinite.
  return u.shape == SymbolicOpen::Shape::Empty || (u.shape == SymbolicOpen::Shape::Subset && u.subset.empty());
}

bool open_subset(const SymbolicSpace& s, const SymbolicOpen& u, const SymbolicOpen& v) {
  if (is_empty(s, u)) return true;
  if (is_empty(s, v)) return false;
  switch (u.shape) {
    case SymbolicOpen::Shape::Up: return u.n >= v.n;
    case SymbolicOpen::Shape::Cofinite:
      return std::includes(u.excluded.begin(), u.excluded.end(), v.excluded.begin(), v.excluded.end());
    case SymbolicOpen::Shape::Subset: return u.subset.subset_of(v.subset);
    case SymbolicOpen::Shape::Empty: break;
  }
  return true;
}

bool meets(const SymbolicSpace& s, const SymbolicClosed& c, const SymbolicOpen& u) {
  if (!is_closed_in(s, c)) shape_mismatch(s, "closed set");
  if (is_empty(s, u) || c.shape == SymbolicClosed::Shape::Empty) return false;
  switch (c.shape) {
    case SymbolicClosed::Shape::All: return true;
    case SymbolicClosed::Shape::Down: return u.n <= c.n;
    case SymbolicClosed::Shape::Finite:
      return std::any_of(c.elements.begin(), c.elements.end(), [&](std::uint64_t e) { return !u.excluded.count(e); });
    case SymbolicClosed::Shape::Subset: return c.subset.intersects(u.subset);
    case SymbolicClosed::Shape::Empty: break;
  }
  return false;
}

SymbolicClosed closure_of(const SymbolicSpace& s, const SymbolicPoint& p) {
  require_point(s, p);
  if (s.is_finite()) return SymbolicClosed::of(s.finite().point_closure(p.n));
  if (p.tag == SymbolicPoint::Tag::Top) return SymbolicClosed::all();
  return omega_kind(s) ? SymbolicClosed::down(p.n) : SymbolicClosed::finite_set({p.n});
}

bool is_point_closure(const SymbolicSpace& s, const SymbolicClosed& c) {
  if (!is_closed_in(s, c)) return false;
  switch (c.shape) {
    case SymbolicClosed::Shape::Empty: return false;
    case SymbolicClosed::Shape::All:
      return s.has_top() || (s.is_finite() && s.finite().generic_point(PointSet::full(s.finite().size())));
    case SymbolicClosed::Shape::Down: return true;
    case SymbolicClosed::Shape::Finite: return c.elements.size() == 1;
    case SymbolicClosed::Shape::Subset: return !c.subset.empty() && s.finite().generic_point(c.subset).has_value();
  }
  return false;
}

bool specialization_leq(const SymbolicSpace& s, const SymbolicPoint& p, const SymbolicPoint& q) {
  return contains(s, closure_of(s, q), p);
}

std::vector<SymbolicPoint> sample_points(const SymbolicSpace& s) {
  std::vector<SymbolicPoint> out;
  if (s.is_finite()) {
    for (std::size_t i = 0; i < s.finite().size(); ++i) out.push_back(SymbolicPoint::finite(i));
    return out;
  }
  for (std::uint64_t n = 0; n < 6; ++n) out.push_back(SymbolicPoint::nat(n));
  if (s.has_top()) out.push_back(SymbolicPoint::top());
  return out;
}

std::vector<SymbolicOpen> sample_opens(const SymbolicSpace& s) {
  if (s.is_finite()) {
    std::vector<SymbolicOpen> out;
    for (const PointSet& u : s.finite().opens()) out.push_back(SymbolicOpen::of(u));
    return out;
  }
  if (omega_kind(s)) {
    return {SymbolicOpen::empty(), SymbolicOpen::up(0), SymbolicOpen::up(1), SymbolicOpen::up(2), SymbolicOpen::up(5)};
  }
  return {SymbolicOpen::empty(),        SymbolicOpen::cofinite({}),     SymbolicOpen::cofinite({0}),
          SymbolicOpen::cofinite({1}),  SymbolicOpen::cofinite({0, 1}), SymbolicOpen::cofinite({2, 4, 5})};
}

std::vector<SymbolicClosed> sample_closed(const SymbolicSpace& s) {
  std::vector<SymbolicClosed> out;
  auto add = [&](SymbolicClosed c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  };
  for (const auto& u : sample_opens(s)) add(complement(s, u));
  for (const auto& p : sample_points(s)) add(closure_of(s, p));
  if (!s.is_finite()) add(SymbolicClosed::all());
  return out;
}

std::string render(const SymbolicSpace& s, const SymbolicPoint& p) {
  switch (p.tag) {
    case SymbolicPoint::Tag::Nat: return std::to_string(p.n);
    case SymbolicPoint::Tag::Top: return std::string(omega_kind(s) ? kOmegaLabel : kGenericPointLabel);
    case SymbolicPoint::Tag::Finite: return s.finite().label(p.n);
  }
  return "?";
}

std::string render(const SymbolicSpace& s, const SymbolicClosed& c) {
  switch (c.shape) {
    case SymbolicClosed::Shape::Empty: return "{}";
    case SymbolicClosed::Shape::All: return "All";
    case SymbolicClosed::Shape::Down: return "Down(" + std::to_string(c.n) + ")";
    case SymbolicClosed::Shape::Finite: return render_set(c.elements);
    case SymbolicClosed::Shape::Subset: return render_subset(s.finite(), c.subset);
  }
  return "?";
}

std::string render(const SymbolicSpace& s, const SymbolicOpen& u) {
  switch (u.shape) {
    case SymbolicOpen::Shape::Empty: return "{}";
    case SymbolicOpen::Shape::Up: return "Up(" + std::to_string(u.n) + ")";
    case SymbolicOpen::Shape::Cofinite: return "Cofinite(" + render_set(u.excluded) + ")";
    case SymbolicOpen::Shape::Subset: return render_subset(s.finite(), u.subset);
  }
  return "?";
}

// --- families ----------------------------------------------------------------

SymFamily k_selector(CategoryTag c) {
  switch (c) {
    case CategoryTag::Sobriety: return SymFamily::KSob;
    case CategoryTag::DSpace: return SymFamily::KD;
    case CategoryTag::WellFiltered: return SymFamily::KWF;
  }
  return SymFamily::KSob;
}

std::string_view to_string(SymFamily f) {
  switch (f) {
    case SymFamily::Sc: return "S_c";
    case SymFamily::Dc: return "D_c";
    case SymFamily::RD: return "RD";
    case SymFamily::Irr: return "Irr_c";
    case SymFamily::KSob: return "K(sob)";
    case SymFamily::KD: return "K(d)";
    case SymFamily::KWF: return "K(wf)";
  }
  return "?";
}

bool SymbolicFamily::contains(const SymbolicClosed& c) const {
  if (!is_closed_in(space, c)) return false;
  if (is_point_closure(space, c)) return true;
  return c.shape == SymbolicClosed::Shape::All && adds_whole;
}

bool SymbolicFamily::subset_of(const SymbolicFamily& other) const {
  if (!(space == other.space)) throw ContractViolation("families over different spaces");
  return !adds_whole || other.adds_whole;
}

bool SymbolicFamily::is_point_closures() const { return status == FamilyStatus::Exact && !adds_whole; }

std::string SymbolicFamily::describe() const {
  const std::string base = "{cl{x} : x in X}";
  if (status == FamilyStatus::Interval) {
    return "between " + base + (adds_whole ? " + {X}" : "") + " and " + base + (upper_adds_whole ? " + {X}" : "");
  }
  return base + (adds_whole ? " + {X}" : "");
}

SymbolicFamily sym_family(const SymbolicSpace& s, SymFamily which) {
  SymbolicFamily out{s, which};
  if (s.is_finite()) {
    // Finite T0 spaces are sober, so every family collapses to the point closures.
    if (!(finite_family(s.finite(), which) == point_closures(s.finite()))) {
      throw ContractViolation(std::string(to_string(which)) + " of a finite space differs from S_c");
    }
    return out;
  }
  if (s.has_top()) return out;  // the whole space is cl{top}

  bool lower = false;
  bool upper = false;
  switch (which) {
    case SymFamily::Sc: break;
    case SymFamily::Dc:
    case SymFamily::KD:
      // A d-space has K_d = S_c; otherwise D_c adds the whole space, and d sits
      // between D_c and WF <= Irr, so it adds it too.
      lower = upper = whole_directed_closure(s);
      break;
    case SymFamily::RD: lower = upper = whole_rudin(s); break;
    case SymFamily::Irr:
    case SymFamily::KSob: lower = upper = whole_irreducible(s); break;
    case SymFamily::KWF:
      lower = whole_rudin(s);
      upper = whole_irreducible(s);
      break;
  }
  if (lower && !upper) throw ContractViolation("inconsistent family bounds");
  out.adds_whole = lower;
  out.upper_adds_whole = upper;
  out.status = lower == upper ? FamilyStatus::Exact : FamilyStatus::Interval;
  return out;
}

bool SymbolicPredicates::satisfies(CategoryTag c) const {
  switch (c) {
    case CategoryTag::Sobriety: return sober;
    case CategoryTag::DSpace: return d_space;
    case CategoryTag::WellFiltered: return well_filtered;
  }
  return false;
}

SymbolicPredicates sym_predicates(const SymbolicSpace& s) {
  SymbolicPredicates out;
  if (s.is_finite()) {
    const PropertyReport r = predicates(s.finite());
    out.sober = r.sober;
    out.d_space = r.d_space;
    out.well_filtered = r.well_filtered;
    out.compact = r.compact;
    out.compact_certificate = "finite";
    return out;
  }
  out.sober = sym_family(s, SymFamily::Irr).is_point_closures();
  out.d_space = sym_family(s, SymFamily::Dc).is_point_closures();
  out.well_filtered = sym_family(s, SymFamily::KWF).is_point_closures();

  const SymbolicOpen whole = whole_open(s);
  const auto opens = sample_opens(s);
  for (const auto& p : sample_points(s)) {
    bool only_whole = true;
    for (const auto& u : opens) {
      if (contains(s, u, p) && !open_subset(s, whole, u)) only_whole = false;
    }
    if (only_whole) {
      out.compact = true;
      out.compact_certificate = "the only open neighbourhood of " + render(s, p) + " is the whole space";
      return out;
    }
  }
  const bool cofinite_opens = std::all_of(opens.begin(), opens.end(), [&](const SymbolicOpen& u) {
    return is_empty(s, u) || u.shape == SymbolicOpen::Shape::Cofinite;
  });
  if (cofinite_opens) {
    out.compact = true;
    out.compact_certificate = "every nonempty open has finite complement";
  }
  return out;
}

// --- reflections -------------------------------------------------------------

SymbolicPoint SymbolicReflection::embed(const SymbolicPoint& p) const {
  require_point(base, p);
  if (finite) return SymbolicPoint::finite(finite->embedding(p.n));
  return p;
}

SymbolicClosed SymbolicReflection::member(const SymbolicPoint& q) const {
  require_point(space, q);
  if (finite) return SymbolicClosed::of(finite->family.members()[q.n]);
  if (q.tag == SymbolicPoint::Tag::Top) return base.has_top() ? closure_of(base, q) : SymbolicClosed::all();
  return closure_of(base, q);
}

SymbolicOpen SymbolicReflection::diamond(const SymbolicOpen& u) const {
  if (!is_open_in(base, u)) shape_mismatch(base, "open");
  if (finite) return SymbolicOpen::of(topolab::diamond(finite->family, u.subset));
  // Up(n) and Cofinite(F) are read in the reflection, where they also contain the
  // adjoined point (the whole space meets every nonempty open).
  return u;
}

SymbolicOpen SymbolicReflection::pullback(const SymbolicOpen& w) const {
  if (!is_open_in(space, w)) shape_mismatch(space, "open");
  if (finite) return SymbolicOpen::of(finite->embedding.preimage(w.subset));
  return w;
}

SymbolicReflection sym_reflect(const SymbolicSpace& s, CategoryTag c) {
  SymbolicFamily family = sym_family(s, k_selector(c));
  if (family.status != FamilyStatus::Exact) {
    throw ContractViolation("K-family of " + s.name() + " is only known up to an interval");
  }
  const std::string name = s.name().empty() ? std::string{} : s.name() + "^" + std::string(short_name(c));
  std::optional<Reflection> finite;
  std::optional<SymbolicSpace> space;
  if (s.is_finite()) {
    finite = reflect(s.finite(), c);
    space = SymbolicSpace::embed(finite->space);
  } else if (!family.adds_whole) {
    space = s.renamed(name);
  } else if (s.kind() == SymbolicKind::OmegaChainScott) {
    space = SymbolicSpace::omega_plus_one().renamed(name);
  } else if (s.kind() == SymbolicKind::CofiniteNat) {
    space = SymbolicSpace::cofinite_generic().renamed(name);
  } else {
    throw UnsupportedVariant("no closed form for the reflection of " + std::string(s.variant_name()));
  }
  SymbolicReflection r{c, s, std::move(family), std::move(*space), std::move(finite)};

  for (const auto& p : sample_points(s)) {
    if (!(r.member(r.embed(p)) == closure_of(s, p))) {
      throw ContractViolation("eta(" + render(s, p) + ") does not stand for the closure of the point");
    }
  }
  for (const auto& u : sample_opens(s)) {
    const SymbolicOpen du = r.diamond(u);
    if (!is_open_in(r.space, du)) throw ContractViolation("diamond(" + render(s, u) + ") is not open");
    for (const auto& q : sample_points(r.space)) {
      if (!r.family.contains(r.member(q))) throw ContractViolation("reflection point outside the family");
      if (contains(r.space, du, q) != meets(s, r.member(q), u)) {
        throw ContractViolation("diamond(" + render(s, u) + ") disagrees with the lower Vietoris topology at " +
                                render(r.space, q));
      }
    }
    if (!(r.pullback(du) == u)) throw ContractViolation("eta does not pull diamond(U) back to U");
  }
  if (!sym_predicates(r.space).satisfies(c)) {
    throw ContractViolation("P_H(K(X)) is not a " + std::string(short_name(c)) + "-space");
  }
  return r;
}

bool sym_frame_isomorphism_holds(const SymbolicReflection& r) {
  if (r.finite) return frame_isomorphism_holds(*r.finite);
  const auto opens = sample_opens(r.base);
  for (const auto& u : opens) {
    for (const auto& v : opens) {
      if (open_subset(r.base, u, v) != open_subset(r.space, r.diamond(u), r.diamond(v))) return false;
      if (!(u == v) && r.diamond(u) == r.diamond(v)) return false;
      if (!(r.diamond(intersect(r.base, u, v)) == intersect(r.space, r.diamond(u), r.diamond(v)))) return false;
    }
  }
  for (const auto& w : sample_opens(r.space)) {
    if (!(r.diamond(r.pullback(w)) == w)) return false;
  }
  return true;
}

bool sym_homeomorphic(const SymbolicSpace& a, const SymbolicSpace& b, const Caps& caps) {
  if (a.is_finite() && b.is_finite()) return find_homeomorphism(a.finite(), b.finite(), caps).has_value();
  // The infinite variants are pairwise distinguished by sobriety, T1 and the existence
  // of a top point.
  return a.kind() == b.kind();
}

// --- products ----------------------------------------------------------------

bool SymbolicProductFamily::all_point_closures() const {
  if (status != FamilyStatus::Exact) return false;
  return std::all_of(members.begin(), members.end(), [&](const auto& m) {
    return m.first == LeftClass::PointClosure && right.generic_point(m.second).has_value();
  });
}

std::string SymbolicProductFamily::describe() const {
  std::string out;
  for (const auto& [cls, c] : members) {
    if (!out.empty()) out += ", ";
    out += (cls == LeftClass::Whole ? std::string("X") : std::string("cl{x}")) + " x " + render_subset(right, c);
  }
  return "{" + out + "}";
}

SymbolicProductFamily sym_product_family(const SymbolicSpace& s, const FiniteSpace& f, SymFamily which) {
  if (which == SymFamily::RD) throw UnsupportedVariant("no product law for Rudin sets");
  const SymbolicFamily left = sym_family(s, which);
  const ClosedFamily right = finite_family(f, which);
  SymbolicProductFamily out{s, f, which, left.status, {}};
  for (const PointSet& c : right.members()) out.members.emplace_back(SymbolicProductFamily::LeftClass::PointClosure, c);
  if (left.adds_whole) {
    for (const PointSet& c : right.members()) out.members.emplace_back(SymbolicProductFamily::LeftClass::Whole, c);
  }
  return out;
}

SymbolicProductFamily sym_product_irr(const SymbolicSpace& s, const FiniteSpace& f) {
  return sym_product_family(s, f, SymFamily::Irr);
}

SymbolicKSpaceProductCheck check_kspace_product(const SymbolicSpace& s, const FiniteSpace& f, CategoryTag c) {
  SymbolicKSpaceProductCheck out;
  out.product_is_kspace = sym_product_family(s, f, k_selector(c)).all_point_closures();
  out.factors_are_kspaces = sym_predicates(s).satisfies(c) && predicates(f).satisfies(c);
  return out;
}

// --- D-completion ------------------------------------------------------------

SymbolicCompletion d_completion(const SymbolicSpace& s) {
  if (s.kind() != SymbolicKind::OmegaChainScott) {
    throw UnsupportedVariant("d_completion: no closed form for " + std::string(s.variant_name()));
  }
  const SymbolicReflection r = sym_reflect(s, CategoryTag::DSpace);
  if (!sym_predicates(r.space).d_space) throw ContractViolation("d_completion: result is not a d-space");
  // N is the only directed subset without a maximum; its supremum must be the new top.
  for (const auto& p : sample_points(s)) {
    if (!specialization_leq(r.space, r.embed(p), SymbolicPoint::top())) {
      throw ContractViolation("d_completion: top does not bound the chain");
    }
    for (const auto& q : sample_points(s)) {
      if (specialization_leq(s, p, q) != specialization_leq(r.space, r.embed(p), r.embed(q))) {
        throw ContractViolation("d_completion: unit is not an order embedding");
      }
    }
  }
  return SymbolicCompletion{s, r.space};
}

}  // namespace topolab
