#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace topolab {

/// Subset of a carrier of at most 128 points, stored as a fixed-width bit mask
/// indexed by carrier position.
///
/// Ordering is canonical: first by cardinality, then by numeric value of the mask
/// (high word first). Every family in the library is kept sorted by this order,
/// which also serves as the tie-breaking rule for minimal-set searches.
class PointSet {
 public:
  static constexpr std::size_t kWidth = 128;

  constexpr PointSet() noexcept = default;

  static constexpr PointSet singleton(std::size_t i) noexcept {
    PointSet s;
    s.set(i);
    return s;
  }

  /// The first `n` positions.
  static constexpr PointSet full(std::size_t n) noexcept {
    PointSet s;
    if (n >= 64) {
      s.lo_ = ~std::uint64_t{0};
      s.hi_ = n >= 128 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 64)) - 1;
    } else {
      s.lo_ = (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  static constexpr PointSet from_words(std::uint64_t lo, std::uint64_t hi = 0) noexcept {
    PointSet s;
    s.lo_ = lo;
    s.hi_ = hi;
    return s;
  }

  constexpr bool test(std::size_t i) const noexcept {
    return i < 64 ? (lo_ >> i) & 1u : (hi_ >> (i - 64)) & 1u;
  }
  constexpr void set(std::size_t i) noexcept {
    if (i < 64) {
      lo_ |= std::uint64_t{1} << i;
    } else {
      hi_ |= std::uint64_t{1} << (i - 64);
    }
  }
  constexpr void reset(std::size_t i) noexcept {
    if (i < 64) {
      lo_ &= ~(std::uint64_t{1} << i);
    } else {
      hi_ &= ~(std::uint64_t{1} << (i - 64));
    }
  }

  constexpr std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::popcount(lo_) + std::popcount(hi_));
  }
  constexpr bool empty() const noexcept { return (lo_ | hi_) == 0; }
  constexpr std::uint64_t low_word() const noexcept { return lo_; }
  constexpr std::uint64_t high_word() const noexcept { return hi_; }

  constexpr bool subset_of(const PointSet& o) const noexcept {
    return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0;
  }
  constexpr bool proper_subset_of(const PointSet& o) const noexcept {
    return subset_of(o) && *this != o;
  }
  constexpr bool intersects(const PointSet& o) const noexcept {
    return ((lo_ & o.lo_) | (hi_ & o.hi_)) != 0;
  }

  constexpr PointSet& operator|=(const PointSet& o) noexcept {
    lo_ |= o.lo_;
    hi_ |= o.hi_;
    return *this;
  }
  constexpr PointSet& operator&=(const PointSet& o) noexcept {
    lo_ &= o.lo_;
    hi_ &= o.hi_;
    return *this;
  }
  /// Set difference.
  constexpr PointSet& operator-=(const PointSet& o) noexcept {
    lo_ &= ~o.lo_;
    hi_ &= ~o.hi_;
    return *this;
  }
  friend constexpr PointSet operator|(PointSet a, const PointSet& b) noexcept { return a |= b; }
  friend constexpr PointSet operator&(PointSet a, const PointSet& b) noexcept { return a &= b; }
  friend constexpr PointSet operator-(PointSet a, const PointSet& b) noexcept { return a -= b; }

  friend constexpr bool operator==(const PointSet&, const PointSet&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) noexcept {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return a.lo_ <=> b.lo_;
  }

  /// Lowest member, or kWidth when empty.
  constexpr std::size_t first() const noexcept {
    if (lo_ != 0) return static_cast<std::size_t>(std::countr_zero(lo_));
    if (hi_ != 0) return 64 + static_cast<std::size_t>(std::countr_zero(hi_));
    return kWidth;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t w = lo_; w != 0; w &= w - 1) f(static_cast<std::size_t>(std::countr_zero(w)));
    for (std::uint64_t w = hi_; w != 0; w &= w - 1) f(64 + static_cast<std::size_t>(std::countr_zero(w)));
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept {
    std::uint64_t h = s.low_word() * 0x9E3779B97F4A7C15ull;
    h ^= s.high_word() + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

}  // namespace topolab
