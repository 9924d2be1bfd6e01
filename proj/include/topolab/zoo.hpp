#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/caps.hpp"
#include "topolab/io.hpp"

namespace topolab {

/// Names of the built-in spaces, in display order.
const std::vector<std::string>& zoo_names();

/// The DSL source of a zoo entry; nullopt for unknown names.
std::optional<std::string_view> zoo_source(std::string_view name);

/// Parses a zoo entry. Throws Error for unknown names.
AnySpace zoo(std::string_view name, const Caps& caps = Caps::from_env());

/// A finite zoo entry. Throws Error for unknown names and UnsupportedVariant for symbolic ones.
FiniteSpace zoo_finite(std::string_view name);

/// Every T0 space on 1..4 points up to homeomorphism (= every poset up to isomorphism),
/// 1 + 2 + 5 + 16 = 24 spaces. All of them are sober. Built once and cached.
const std::vector<FiniteSpace>& sober_catalog();

/// SplitMix64 finaliser applied to x + 0x9e3779b97f4a7c15.
std::uint64_t splitmix64(std::uint64_t x);

/// Random finite T0 space on n points labelled p0..p{n-1}.
///
/// A std::mt19937_64 engine is seeded with splitmix64(seed). For each pair i < j, in
/// order i = 0..n-1 then j = i+1..n-1, one 64-bit output is drawn and the relation
/// p_i < p_j is added when its top bit is set (probability 1/2). The reflexive
/// transitive closure of this DAG is the specialization order; the space carries its
/// Alexandrov topology. Throws ResourceError if n exceeds caps.max_points and
/// ContractViolation if n is 0.
FiniteSpace random_space(std::uint64_t seed, std::size_t n, const Caps& caps = {});

/// The index-th sample of a seeded sweep: the size is drawn uniformly from
/// 1..max_points and the space from random_space with a derived seed.
FiniteSpace random_sample(std::uint64_t seed, std::uint64_t index, std::size_t max_points, const Caps& caps = {});

}  // namespace topolab
