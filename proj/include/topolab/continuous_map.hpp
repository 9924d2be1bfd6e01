#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "topolab/caps.hpp"
#include "topolab/finite_space.hpp"

namespace topolab {

/// A total point function between finite spaces; continuity is not assumed.
struct PointMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<std::size_t> fn;
};

struct ContinuityCheck {
  bool continuous = true;
  /// An open of the target whose preimage is not open, when discontinuous.
  std::optional<PointSet> witness;
  explicit operator bool() const noexcept { return continuous; }
};

/// Checks the open-preimage property over every open of the target. Throws
/// ContractViolation when `fn` is not a total function into the target.
ContinuityCheck check_continuous(const PointMap& f);

/// A point function whose continuity has been verified.
class ContinuousMap {
 public:
  /// Throws ContractViolation (carrying the offending open) if `f` is not continuous.
  explicit ContinuousMap(PointMap f);

  static ContinuousMap identity(const FiniteSpace& x);
  static ContinuousMap constant(const FiniteSpace& x, const FiniteSpace& y, std::size_t point);

  const FiniteSpace& source() const noexcept { return map_.source; }
  const FiniteSpace& target() const noexcept { return map_.target; }
  const std::vector<std::size_t>& values() const noexcept { return map_.fn; }
  std::size_t operator()(std::size_t x) const { return map_.fn.at(x); }

  PointSet image(PointSet a) const;
  PointSet preimage(PointSet b) const;

  /// Pointwise equality of the functions (sources and targets compared as spaces).
  friend bool operator==(const ContinuousMap& a, const ContinuousMap& b) {
    return a.map_.fn == b.map_.fn && a.map_.source == b.map_.source && a.map_.target == b.map_.target;
  }

 private:
  PointMap map_;
};

/// g after f. Throws ContractViolation if f's target is not g's source.
ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f);

/// Every continuous map x -> y, in lexicographic order of the value vectors.
/// Throws ResourceError when |y|^|x| exceeds caps.max_maps.
std::vector<ContinuousMap> enumerate_continuous_maps(const FiniteSpace& x, const FiniteSpace& y,
                                                     const Caps& caps = {});

/// Whether `f` is injective, continuous and open onto its image.
bool is_embedding(const ContinuousMap& f);

/// A homeomorphism x -> y found by bijection search pruned by closure and
/// neighbourhood sizes. Throws ResourceError above caps.max_homeo_points.
std::optional<ContinuousMap> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y,
                                                const Caps& caps = {});

/// Whether the bijection `fn` maps the opens of x exactly onto the opens of y.
bool is_homeomorphism(const PointMap& f);

}  // namespace topolab
