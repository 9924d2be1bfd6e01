#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "topolab/caps.hpp"
#include "topolab/finite_space.hpp"
#include "topolab/hyperspaces.hpp"
#include "topolab/properties.hpp"
#include "topolab/reflections.hpp"
#include "topolab/symbolic.hpp"

namespace topolab {

using AnySpace = std::variant<FiniteSpace, SymbolicSpace>;

/// Version of every JSON document emitted by render_json.
inline constexpr int kSchemaVersion = 1;

// Space DSL, one directive per line, '#' starts a comment:
//
//   space NAME
//   points a b "c d"          labels; quote labels containing spaces or punctuation
//   order a < b < c           poset form (any number of lines)
//   opens {} {b} {a b}        topology form (any number of lines)
//   symbolic cofinite         a closed-form variant instead of points
//
// A document uses either order lines or opens lines, never both. Points without order or
// opens lines give the discrete space. Syntax errors raise ParseError with the 1-based
// line number; axiom violations surface as AxiomError; more points than caps.max_points
// raise ResourceError.
AnySpace parse_space(std::string_view text, const Caps& caps = Caps::from_env());

/// Renders in poset form (order lines are the covers of the specialization order).
std::string render_dsl(const FiniteSpace& x);
std::string render_dsl(const SymbolicSpace& s);
std::string render_dsl(const AnySpace& s);

nlohmann::json to_json(const FiniteSpace& x);
nlohmann::json to_json(const SymbolicSpace& s);
nlohmann::json to_json(const AnySpace& s);
nlohmann::json to_json(const ClosedFamily& f);
nlohmann::json to_json(const Reflection& r);
nlohmann::json to_json(const SymbolicReflection& r);
nlohmann::json to_json(const SymbolicFamily& f);
nlohmann::json to_json(const PropertyReport& r);
nlohmann::json to_json(const SymbolicPredicates& p, const SymbolicSpace& s);

/// Adds "schema_version" to a top-level object and pretty-prints it.
std::string render_json(nlohmann::json document);

/// Hasse diagram of the specialization order, bottom to top.
std::string render_dot(const FiniteSpace& x);
/// Hyperspace points are labelled by their member sets.
std::string render_dot(const HyperSpace& h);
/// The first few points, an ellipsis node standing for the rest, and any adjoined point.
std::string render_dot(const SymbolicSpace& s);
std::string render_dot(const AnySpace& s);

/// Quotes a label for the DSL when it is not a bare token.
std::string quote_label(std::string_view label);

}  // namespace topolab
