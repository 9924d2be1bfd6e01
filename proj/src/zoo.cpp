#include "topolab/zoo.hpp"

#include <array>
#include <random>
#include <utility>

#include "topolab/continuous_map.hpp"
#include "topolab/error.hpp"

namespace topolab {
namespace {

struct Entry {
  std::string_view name;
  std::string_view source;
};

constexpr std::array<Entry, 9> kEntries{{
    {"point", "space point\npoints x\n"},
    {"sierpinski", "space sierpinski\npoints bot top\norder bot < top\n"},
    {"discrete2", "space discrete2\npoints a b\n"},
    {"chain3", "space chain3\npoints 0 1 2\norder 0 < 1 < 2\n"},
    {"vee", "space vee\npoints a b t\norder a < t\norder b < t\n"},
    {"wedge", "space wedge\npoints t a b\norder t < a\norder t < b\n"},
    {"diamond", "space diamond\npoints bot a b top\norder bot < a < top\norder bot < b < top\n"},
    {"omega_chain", "space omega_chain\nsymbolic omega_chain\n"},
    {"cofinite", "space cofinite\nsymbolic cofinite\n"},
}};

std::vector<FiniteSpace> build_catalog() {
  std::vector<FiniteSpace> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) pairs.emplace_back(i, j);
      }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<FiniteSpace> level;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
      // Keep only relations that are already partial orders.
      std::vector<PointSet> up(n);
      for (std::size_t i = 0; i < n; ++i) up[i].set(i);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (bits >> k & 1) up[pairs[k].first].set(pairs[k].second);
      }
      bool order = true;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!up[i].test(j)) continue;
          if (!up[j].subset_of(up[i]) || (j != i && up[j].test(i))) order = false;
        }
      }
      if (!order) continue;
      FiniteSpace x = from_poset(FinitePoset(labels, up));
      bool seen = false;
      for (const FiniteSpace& y : level) {
        if (find_homeomorphism(x, y)) {
          seen = true;
          break;
        }
      }
      if (!seen) level.push_back(x.renamed("cat" + std::to_string(n) + "_" + std::to_string(level.size())));
    }
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

const std::vector<std::string>& zoo_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Entry& e : kEntries) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

std::optional<std::string_view> zoo_source(std::string_view name) {
  for (const Entry& e : kEntries) {
    if (e.name == name) return e.source;
  }
  return std::nullopt;
}

AnySpace zoo(std::string_view name, const Caps& caps) {
  auto source = zoo_source(name);
  if (!source) throw Error("unknown zoo space '" + std::string(name) + "'");
  return parse_space(*source, caps);
}

FiniteSpace zoo_finite(std::string_view name) {
  AnySpace s = zoo(name);
  if (auto* x = std::get_if<FiniteSpace>(&s)) return *x;
  throw UnsupportedVariant("zoo space '" + std::string(name) + "' is not finite");
}

const std::vector<FiniteSpace>& sober_catalog() {
  static const std::vector<FiniteSpace> catalog = build_catalog();
  return catalog;
}

std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

FiniteSpace random_space(std::uint64_t seed, std::size_t n, const Caps& caps) {
  if (n == 0) throw ContractViolation("random_space needs at least one point");
  if (n > caps.max_points) {
    throw ResourceError("random_space: " + std::to_string(n) + " points exceeds cap of " +
                        std::to_string(caps.max_points));
  }
  std::mt19937_64 rng(splitmix64(seed));
  std::vector<std::pair<std::size_t, std::size_t>> below;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() >> 63) below.emplace_back(i, j);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return from_poset(FinitePoset::from_relation(std::move(labels), below),
                    "rand_" + std::to_string(seed) + "_" + std::to_string(n), caps);
}

FiniteSpace random_sample(std::uint64_t seed, std::uint64_t index, std::size_t max_points, const Caps& caps) {
  if (max_points == 0) throw ContractViolation("random_sample needs max_points >= 1");
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_points);
  return random_space(rng(), n, caps);
}

}  // namespace topolab
