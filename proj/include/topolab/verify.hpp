#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "topolab/caps.hpp"
#include "topolab/families.hpp"
#include "topolab/hyperspaces.hpp"

namespace topolab {

struct VerifyConfig {
  std::uint64_t seed = 1;
  /// Random spaces (or pairs, or instances) per sampled suite.
  std::size_t samples = 40;
  /// Upper bound on random sample sizes; individual suites may use a smaller bound.
  std::size_t max_points = 5;
  std::vector<CategoryTag> categories{kAllCategories.begin(), kAllCategories.end()};
  Caps caps;
  /// Name of a PropertyReport flag to invert everywhere (harness self-test).
  std::optional<std::string> mutation;
  /// Suites to run; empty runs all of them.
  std::vector<std::string> suites;
};

/// "collapse", "symbolic", "universal", "closure", "products", "rudin", "transfer", "io".
const std::vector<std::string>& suite_names();

/// Throws Error for non-positive counts, max_points above caps.max_points, unknown
/// suites or an unknown mutation flag.
void validate(const VerifyConfig& config);

struct CheckCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  /// Resource-cap skips, reported apart from failures.
  std::size_t skip = 0;
};

struct VerifyReport {
  std::map<std::string, CheckCounts> checks;
  std::vector<std::string> failures;
  bool ok() const;
  std::string render_text() const;
  nlohmann::json to_json() const;
};

/// Runs the selected invariant suites over seeded random samples, the zoo and the
/// symbolic spaces. Output ordering is canonical (checks sorted by name).
VerifyReport verify(const VerifyConfig& config);

/// A random input for the Rudin witness search: compact saturated sets forming an
/// irreducible subset of the Smyth power space, and a closed set meeting each of them.
struct RudinInstance {
  FiniteSpace space;
  std::vector<PointSet> compacts;
  PointSet closed;
};

RudinInstance random_rudin_instance(std::uint64_t seed, std::uint64_t index, std::size_t max_points,
                                    const Caps& caps = {});

}  // namespace topolab
