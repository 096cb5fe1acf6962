#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "latcon/constructors.hpp"
#include "latcon/error.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

namespace detail {

/// Recursive descent over
///   expr := "chain:" k | "b2" | "n5" | "m3" | "cbc:" p ":" q
///         | "dual" "(" expr ")" | ("prod" | "glue") "(" expr ("," expr)+ ")"
class BuildParser {
 public:
  explicit BuildParser(std::string_view text) : text_(text) {}

  FiniteLattice parse() {
    auto lattice = expression();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return lattice;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw LatconError(ErrorKind::ParseError,
                      "build expression \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_space();
    auto start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || value == 0) fail("expected a positive integer");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  FiniteLattice expression() {
    auto name = word();
    if (name == "b2") return boolean_b2();
    if (name == "n5") return pentagon_n5();
    if (name == "m3") return diamond_m3();
    if (name == "chain") {
      expect(':');
      return chain(number());
    }
    if (name == "cbc") {
      expect(':');
      auto p = number();
      expect(':');
      auto q = number();
      return chain_b2_chain(p, q);
    }
    if (name == "dual") {
      expect('(');
      auto inner = expression();
      expect(')');
      return dual(inner);
    }
    if (name == "prod" || name == "glue") {
      expect('(');
      auto result = expression();
      std::size_t operands = 1;
      while (accept(',')) {
        auto next = expression();
        result = name == "prod" ? direct_product(result, next) : glued_sum(result, next);
        ++operands;
      }
      expect(')');
      if (operands < 2) fail(name + " needs at least two operands");
      return result;
    }
    fail(name.empty() ? "expected a lattice name" : "unknown lattice \"" + name + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Builds a lattice from an expression such as "glue(n5,chain:2)".
inline FiniteLattice build_expression(std::string_view text) { return detail::BuildParser(text).parse(); }

}  // namespace latcon
