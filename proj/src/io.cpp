#include "topolab/io.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "topolab/error.hpp"

namespace topolab {
namespace {

using nlohmann::json;

struct Token {
  std::string text;
  bool quoted = false;
  bool is(std::string_view symbol) const { return !quoted && text == symbol; }
};

bool special(char c) { return c == '{' || c == '}' || c == '<' || c == '"' || c == ',' || c == '#'; }
bool space_char(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (space_char(c) || c == ',') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '{' || c == '}' || c == '<') {
      out.push_back({std::string(1, c), false});
      ++i;
    } else if (c == '"') {
      std::string text;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '\\' && i + 1 < line.size()) {
          text += line[i + 1];
          i += 2;
        } else if (line[i] == '"') {
          closed = true;
          ++i;
          break;
        } else {
          text += line[i++];
        }
      }
      if (!closed) throw ParseError(line_no, "unterminated quoted label");
      out.push_back({std::move(text), true});
    } else {
      const std::size_t start = i;
      while (i < line.size() && !space_char(line[i]) && !special(line[i])) ++i;
      out.push_back({std::string(line.substr(start, i - start)), false});
    }
  }
  return out;
}

std::string escape_dot(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

json subset_json(const FiniteSpace& x, PointSet s) {
  json arr = json::array();
  s.for_each([&](std::size_t i) { arr.push_back(x.label(i)); });
  return arr;
}

std::string family_name(SymFamily f) { return std::string(to_string(f)); }

}  // namespace

std::string quote_label(std::string_view label) {
  const bool bare = !label.empty() && std::none_of(label.begin(), label.end(), [](char c) {
    return space_char(c) || special(c) || c == '\\' || c == '\n';
  });
  if (bare) return std::string(label);
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

AnySpace parse_space(std::string_view text, const Caps& caps) {
  std::string name;
  std::optional<std::size_t> name_line;
  std::optional<std::vector<std::string>> points;
  std::vector<std::pair<std::size_t, std::size_t>> below;
  std::vector<PointSet> opens;
  bool saw_order = false;
  bool saw_opens = false;
  std::optional<std::string> variant;
  std::size_t variant_line = 0;

  std::map<std::string, std::size_t> index;
  auto lookup = [&](const Token& t, std::size_t line_no) {
    if (!points) throw ParseError(line_no, "'points' must come before order or opens lines");
    auto it = index.find(t.text);
    if (it == index.end()) throw ParseError(line_no, "unknown point '" + t.text + "'");
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();
    if (head.quoted) throw ParseError(line_no, "expected a directive");
    const std::string& directive = head.text;

    if (directive == "space") {
      if (name_line) throw ParseError(line_no, "duplicate 'space' directive");
      if (tokens.size() != 2 || (!tokens[1].quoted && special(tokens[1].text.front()))) {
        throw ParseError(line_no, "expected 'space NAME'");
      }
      name = tokens[1].text;
      name_line = line_no;
    } else if (directive == "points") {
      if (points) throw ParseError(line_no, "duplicate 'points' directive");
      if (variant) throw ParseError(line_no, "'points' cannot be combined with 'symbolic'");
      points.emplace();
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!tokens[i].quoted && (tokens[i].text == "{" || tokens[i].text == "}" || tokens[i].text == "<")) {
          throw ParseError(line_no, "unexpected '" + tokens[i].text + "' in points");
        }
        if (index.count(tokens[i].text)) throw ParseError(line_no, "duplicate point '" + tokens[i].text + "'");
        index[tokens[i].text] = points->size();
        points->push_back(tokens[i].text);
      }
      if (points->empty()) throw ParseError(line_no, "'points' needs at least one label");
    } else if (directive == "order") {
      if (saw_opens) throw ParseError(line_no, "order lines cannot be mixed with opens lines");
      saw_order = true;
      if (tokens.size() < 2) throw ParseError(line_no, "expected 'order a < b'");
      std::optional<std::size_t> prev;
      bool expect_label = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (expect_label) {
          if (tokens[i].is("<") || tokens[i].is("{") || tokens[i].is("}")) {
            throw ParseError(line_no, "expected a point label");
          }
          const std::size_t cur = lookup(tokens[i], line_no);
          if (prev) below.emplace_back(*prev, cur);
          prev = cur;
        } else if (!tokens[i].is("<")) {
          throw ParseError(line_no, "expected '<' between labels");
        }
        expect_label = !expect_label;
      }
      if (expect_label || tokens.size() < 4) throw ParseError(line_no, "order line must read 'a < b [< c ...]'");
    } else if (directive == "opens") {
      if (saw_order) throw ParseError(line_no, "opens lines cannot be mixed with order lines");
      saw_opens = true;
      std::optional<PointSet> current;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i].is("{")) {
          if (current) throw ParseError(line_no, "nested '{'");
          current.emplace();
        } else if (tokens[i].is("}")) {
          if (!current) throw ParseError(line_no, "unmatched '}'");
          opens.push_back(*current);
          current.reset();
        } else if (tokens[i].is("<")) {
          throw ParseError(line_no, "unexpected '<' in opens");
        } else {
          if (!current) throw ParseError(line_no, "labels in opens must be inside braces");
          current->set(lookup(tokens[i], line_no));
        }
      }
      if (current) throw ParseError(line_no, "missing '}'");
    } else if (directive == "symbolic") {
      if (variant) throw ParseError(line_no, "duplicate 'symbolic' directive");
      if (points) throw ParseError(line_no, "'symbolic' cannot be combined with 'points'");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'symbolic VARIANT'");
      variant = tokens[1].text;
      variant_line = line_no;
    } else {
      throw ParseError(line_no, "unknown directive '" + directive + "'");
    }
  }

  if (variant) {
    if (saw_order || saw_opens) throw ParseError(variant_line, "'symbolic' cannot be combined with order or opens");
    auto s = SymbolicSpace::from_variant_name(*variant);
    if (!s) throw ParseError(variant_line, "unknown symbolic variant '" + *variant + "'");
    return name.empty() ? *s : s->renamed(name);
  }
  if (!points) throw ParseError(line_no, "missing 'points' directive");
  if (points->size() > caps.max_points) {
    throw ResourceError("space has " + std::to_string(points->size()) + " points, cap is " +
                        std::to_string(caps.max_points));
  }
  if (saw_opens) return FiniteSpace(std::move(*points), std::move(opens), name);
  return from_poset(FinitePoset::from_relation(std::move(*points), below), name, caps);
}

std::string render_dsl(const FiniteSpace& x) {
  std::ostringstream out;
  if (!x.name().empty()) out << "space " << quote_label(x.name()) << '\n';
  out << "points";
  for (const auto& l : x.labels()) out << ' ' << quote_label(l);
  out << '\n';
  for (const auto& [a, b] : specialization_order(x).covers()) {
    out << "order " << quote_label(x.label(a)) << " < " << quote_label(x.label(b)) << '\n';
  }
  return out.str();
}

std::string render_dsl(const SymbolicSpace& s) {
  if (s.is_finite()) return render_dsl(s.finite());
  std::string out;
  if (!s.name().empty()) out += "space " + quote_label(s.name()) + "\n";
  return out + "symbolic " + std::string(s.variant_name()) + "\n";
}

std::string render_dsl(const AnySpace& s) {
  return std::visit([](const auto& v) { return render_dsl(v); }, s);
}

json to_json(const FiniteSpace& x) {
  json j;
  j["kind"] = "space";
  j["name"] = x.name();
  j["points"] = x.labels();
  json opens = json::array();
  for (const PointSet& u : x.opens()) opens.push_back(subset_json(x, u));
  j["opens"] = std::move(opens);
  json order = json::array();
  for (const auto& [a, b] : specialization_order(x).covers()) order.push_back({x.label(a), x.label(b)});
  j["covers"] = std::move(order);
  return j;
}

json to_json(const SymbolicSpace& s) {
  if (s.is_finite()) return to_json(s.finite());
  json j;
  j["kind"] = "symbolic_space";
  j["name"] = s.name();
  j["variant"] = std::string(s.variant_name());
  return j;
}

json to_json(const AnySpace& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

json to_json(const ClosedFamily& f) {
  json j;
  j["kind"] = "family";
  j["status"] = f.status() == FamilyStatus::Exact ? "exact" : "interval";
  json members = json::array();
  for (const PointSet& m : f.members()) members.push_back(subset_json(f.base(), m));
  j["members"] = std::move(members);
  return j;
}

json to_json(const Reflection& r) {
  json j;
  j["kind"] = "reflection";
  j["category"] = std::string(short_name(r.category));
  j["base"] = to_json(r.base);
  j["family"] = to_json(r.family);
  j["space"] = to_json(r.space);
  json emb = json::object();
  for (std::size_t x = 0; x < r.base.size(); ++x) emb[r.base.label(x)] = r.space.label(r.embedding(x));
  j["embedding"] = std::move(emb);
  return j;
}

json to_json(const SymbolicReflection& r) {
  if (r.finite) return to_json(*r.finite);
  json j;
  j["kind"] = "symbolic_reflection";
  j["category"] = std::string(short_name(r.category));
  j["base"] = to_json(r.base);
  j["family"] = to_json(r.family);
  j["space"] = to_json(r.space);
  return j;
}

json to_json(const SymbolicFamily& f) {
  json j;
  j["kind"] = "symbolic_family";
  j["family"] = family_name(f.which);
  j["status"] = f.status == FamilyStatus::Exact ? "exact" : "interval";
  j["adds_whole"] = f.adds_whole;
  if (f.status == FamilyStatus::Interval) j["upper_adds_whole"] = f.upper_adds_whole;
  j["description"] = f.describe();
  return j;
}

json to_json(const PropertyReport& r) {
  json j;
  j["kind"] = "property_report";
  j["space"] = r.space;
  json flags = json::object();
  for (const auto& n : PropertyReport::names()) flags[n] = *r.flag(n);
  j["flags"] = std::move(flags);
  j["witnesses"] = r.witnesses;
  return j;
}

json to_json(const SymbolicPredicates& p, const SymbolicSpace& s) {
  json j;
  j["kind"] = "property_report";
  j["space"] = s.name();
  j["flags"] = {{"sober", p.sober}, {"d_space", p.d_space}, {"well_filtered", p.well_filtered}, {"compact", p.compact}};
  j["witnesses"] = {{"compact", p.compact_certificate}};
  return j;
}

std::string render_json(json document) {
  if (document.is_object()) document["schema_version"] = kSchemaVersion;
  return document.dump(2) + "\n";
}

std::string render_dot(const FiniteSpace& x) {
  std::ostringstream out;
  out << "digraph \"" << escape_dot(x.name().empty() ? "space" : x.name()) << "\" {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < x.size(); ++i) out << "  n" << i << " [label=\"" << escape_dot(x.label(i)) << "\"];\n";
  for (const auto& [a, b] : specialization_order(x).covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string render_dot(const HyperSpace& h) { return render_dot(h.space); }

std::string render_dot(const SymbolicSpace& s) {
  if (s.is_finite()) return render_dot(s.finite());
  constexpr std::uint64_t shown = 3;
  std::ostringstream out;
  out << "digraph \"" << escape_dot(s.name().empty() ? std::string(s.variant_name()) : s.name()) << "\" {\n";
  out << "  rankdir=BT;\n";
  for (std::uint64_t n = 0; n < shown; ++n) out << "  n" << n << " [label=\"" << n << "\"];\n";
  out << "  more [label=\"...\", shape=plaintext];\n";
  const bool chain = s.kind() == SymbolicKind::OmegaChainScott || s.kind() == SymbolicKind::OmegaPlusOneScott;
  if (chain) {
    for (std::uint64_t n = 0; n + 1 < shown; ++n) out << "  n" << n << " -> n" << n + 1 << ";\n";
    out << "  n" << shown - 1 << " -> more;\n";
  }
  if (s.has_top()) {
    out << "  top [label=\"" << render(s, SymbolicPoint::top()) << "\"];\n";
    if (chain) {
      out << "  more -> top;\n";
    } else {
      for (std::uint64_t n = 0; n < shown; ++n) out << "  n" << n << " -> top;\n";
      out << "  more -> top;\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string render_dot(const AnySpace& s) {
  return std::visit([](const auto& v) { return render_dot(v); }, s);
}

}  // namespace topolab
