#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace topolab {

/// Resource bounds. Exceeding one raises ResourceError, never a silent truncation.
struct Caps {
  std::size_t max_points = 12;          // user-constructed spaces (posets, DSL, random)
  std::size_t max_hyper_base = 7;       // base spaces fed to smyth_power
  std::size_t max_product_points = 16;  // carrier of a product space
  std::size_t max_opens = std::size_t{1} << 17;
  std::uint64_t max_maps = std::uint64_t{1} << 20;  // |Y|^|X| bound for map enumeration
  std::size_t max_homeo_points = 8;     // brute-force homeomorphism search
  std::size_t max_subset_points = 12;   // exhaustive subset sweeps (directed sets etc.)

  /// Parses an override string: either a bare integer (sets max_points) or a comma
  /// separated list of key=value pairs with keys points, hyper, product, opens, maps,
  /// homeo, subsets. Throws Error on malformed input.
  static Caps parse(std::string_view text, Caps base);
  static Caps parse(std::string_view text);

  /// Defaults overridden by the TOPOLAB_CAP environment variable when it is set.
  static Caps from_env();
};

}  // namespace topolab
