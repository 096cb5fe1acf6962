#pragma once

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "latcon/error.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

// ".lat" text: the first line holds n, every further non-empty line "a b"
// states that a is covered by b. '#' starts a comment.

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool parse_unsigned(std::string_view& s, std::size_t& value) {
  s = trim(s);
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end == s.data()) return false;
  s.remove_prefix(static_cast<std::size_t>(end - s.data()));
  return true;
}

}  // namespace detail

inline FiniteLattice parse_lat(std::string_view text) {
  std::size_t n = 0;
  bool have_size = false;
  std::vector<PrimeInterval> covers;
  std::size_t line_no = 0;
  auto error = [&](const std::string& why) {
    return LatconError(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + why);
  };
  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (!have_size) {
      if (!detail::parse_unsigned(line, n) || !detail::trim(line).empty()) throw error("expected the element count");
      if (n == 0 || n > kMaxElements) {
        throw error("element count must be in 1.." + std::to_string(kMaxElements));
      }
      have_size = true;
      continue;
    }
    std::size_t a = 0;
    std::size_t b = 0;
    if (!detail::parse_unsigned(line, a) || !detail::parse_unsigned(line, b) || !detail::trim(line).empty()) {
      throw error("expected a covering pair \"a b\"");
    }
    for (auto label : {a, b}) {
      if (label >= n) throw error("label " + std::to_string(label) + " outside 0.." + std::to_string(n - 1));
    }
    covers.push_back({static_cast<Element>(a), static_cast<Element>(b)});
  }
  if (!have_size) throw LatconError(ErrorKind::ParseError, "empty input");
  return FiniteLattice::from_covers(n, covers);
}

inline FiniteLattice read_lat(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_lat(text);
}

/// Covers are already sorted lexicographically.
inline std::string write_lat(const FiniteLattice& lattice, std::span<const std::string> comments = {}) {
  std::ostringstream out;
  out << lattice.size() << '\n';
  for (const auto& line : comments) out << "# " << line << '\n';
  for (const auto& [a, b] : lattice.covers()) out << a << ' ' << b << '\n';
  return out.str();
}

/// Hasse diagram drawn bottom-up, one rank per height.
inline std::string to_dot(const FiniteLattice& lattice, std::string_view name = "lattice") {
  auto height = heights(lattice);
  std::size_t levels = 0;
  for (auto h : height) levels = std::max(levels, h + 1);
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (std::size_t level = 0; level < levels; ++level) {
    out << "  { rank=same;";
    for (std::size_t x = 0; x < lattice.size(); ++x) {
      if (height[x] == level) out << ' ' << x << ';';
    }
    out << " }\n";
  }
  for (const auto& [a, b] : lattice.covers()) out << "  " << a << " -> " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace latcon
