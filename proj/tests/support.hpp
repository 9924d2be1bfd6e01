#pragma once

#include <string>
#include <utility>
#include <vector>

#include "topolab/finite_space.hpp"
#include "topolab/zoo.hpp"

namespace support {

using topolab::FinitePoset;
using topolab::FiniteSpace;
using topolab::PointSet;

inline FiniteSpace poset_space(std::vector<std::string> labels,
                               const std::vector<std::pair<std::size_t, std::size_t>>& below, std::string name = {}) {
  return topolab::from_poset(FinitePoset::from_relation(std::move(labels), below), std::move(name));
}

inline FiniteSpace point() { return poset_space({"x"}, {}, "point"); }
inline FiniteSpace sierpinski() { return poset_space({"bot", "top"}, {{0, 1}}, "sierpinski"); }
inline FiniteSpace discrete2() { return poset_space({"a", "b"}, {}, "discrete2"); }
/// a, b below t.
inline FiniteSpace vee() { return poset_space({"a", "b", "t"}, {{0, 2}, {1, 2}}, "vee"); }

inline PointSet bits(std::initializer_list<std::size_t> points) {
  PointSet s;
  for (std::size_t p : points) s.set(p);
  return s;
}

/// Seeded random spaces for sweeps.
inline FiniteSpace sample(std::uint64_t stream, std::uint64_t i, std::size_t max_points) {
  return topolab::random_sample(0xC0FFEE + stream, i, max_points);
}

}  // namespace support
