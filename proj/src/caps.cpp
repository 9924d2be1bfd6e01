#include "topolab/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "topolab/error.hpp"

namespace topolab {
namespace {

std::uint64_t parse_number(std::string_view text) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw Error("invalid cap value '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Caps Caps::parse(std::string_view text, Caps base) {
  if (text.empty()) return base;
  if (text.find('=') == std::string_view::npos) {
    base.max_points = parse_number(text);
    return base;
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error("invalid cap entry '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::uint64_t value = parse_number(item.substr(eq + 1));
    if (key == "points") {
      base.max_points = value;
    } else if (key == "hyper") {
      base.max_hyper_base = value;
    } else if (key == "product") {
      base.max_product_points = value;
    } else if (key == "opens") {
      base.max_opens = value;
    } else if (key == "maps") {
      base.max_maps = value;
    } else if (key == "homeo") {
      base.max_homeo_points = value;
    } else if (key == "subsets") {
      base.max_subset_points = value;
    } else {
      throw Error("unknown cap key '" + std::string(key) + "'");
    }
  }
  return base;
}

Caps Caps::parse(std::string_view text) { return parse(text, Caps{}); }

Caps Caps::from_env() {
  const char* value = std::getenv("TOPOLAB_CAP");
  return value == nullptr ? Caps{} : parse(value);
}

}  // namespace topolab
