#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "latcon/latcon.hpp"
#include "support/oracles.hpp"

using namespace latcon;

namespace {

std::string error_of_parse(const std::string& text) {
  try {
    parse_lat(text);
  } catch (const LatconError& e) {
    return e.what();
  }
  return "";
}

std::string error_of_build(const std::string& text) {
  try {
    build_expression(text);
  } catch (const LatconError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(LatFormat, Parse) {
  auto lattice = parse_lat("# square\n4\n0 1\n0 2\n\n1 3   # right\n2 3\n");
  EXPECT_EQ(lattice, boolean_b2());
  EXPECT_EQ(parse_lat("1\n").size(), 1u);
  EXPECT_EQ(parse_lat("3\r\n0 1\r\n1 2\r\n"), chain(3));
}

TEST(LatFormat, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(error_of_parse(""), "ParseError: empty input");
  EXPECT_EQ(error_of_parse("# nothing\n"), "ParseError: empty input");
  EXPECT_EQ(error_of_parse("x\n"), "ParseError: line 1: expected the element count");
  EXPECT_EQ(error_of_parse("3\n0 1\n1 x\n"), "ParseError: line 3: expected a covering pair \"a b\"");
  EXPECT_EQ(error_of_parse("3\n0 1 2\n"), "ParseError: line 2: expected a covering pair \"a b\"");
  EXPECT_EQ(error_of_parse("2\n\n0 5\n"), "ParseError: line 3: label 5 outside 0..1");
  EXPECT_EQ(error_of_parse("0\n"), "ParseError: line 1: element count must be in 1..4096");
}

TEST(LatFormat, ParseReportsOrderErrors) {
  EXPECT_EQ(error_of_parse("4\n0 2\n0 3\n1 2\n1 3\n"), "NotALattice: elements 0,1 have no join");
  EXPECT_EQ(error_of_parse("3\n0 1\n1 2\n2 0\n").rfind("NotAPoset", 0), 0u);
}

TEST(LatFormat, WriteRoundTrip) {
  for (const auto& catalog : enumerate_lattices_up_to(7)) {
    for (const auto& lattice : catalog.members) {
      auto text = write_lat(lattice);
      EXPECT_EQ(parse_lat(text), lattice);
      std::istringstream in(text);
      EXPECT_EQ(read_lat(in), lattice);
    }
  }
  const std::vector<std::string> comments = {"hello", "block_map 0 0"};
  EXPECT_EQ(write_lat(chain(2), comments), "2\n# hello\n# block_map 0 0\n0 1\n");
  EXPECT_EQ(parse_lat(write_lat(chain(2), comments)), chain(2));
}

TEST(Dot, Pentagon) {
  auto dot = to_dot(pentagon_n5(), "n5");
  EXPECT_EQ(dot,
            "digraph n5 {\n"
            "  rankdir=BT;\n"
            "  node [shape=circle];\n"
            "  { rank=same; 0; }\n"
            "  { rank=same; 1; 3; }\n"
            "  { rank=same; 2; }\n"
            "  { rank=same; 4; }\n"
            "  0 -> 1;\n"
            "  0 -> 3;\n"
            "  1 -> 2;\n"
            "  2 -> 4;\n"
            "  3 -> 4;\n"
            "}\n");
}

TEST(BuildExpression, Names) {
  EXPECT_EQ(build_expression("chain:4"), chain(4));
  EXPECT_EQ(build_expression("b2"), boolean_b2());
  EXPECT_EQ(build_expression("n5"), pentagon_n5());
  EXPECT_EQ(build_expression("m3"), diamond_m3());
  EXPECT_EQ(build_expression("cbc:3:3"), chain_b2_chain(3, 3));
  EXPECT_EQ(build_expression(" glue( n5 , chain:3 ) "), glued_sum(pentagon_n5(), chain(3)));
  EXPECT_EQ(build_expression("prod(chain:2,chain:2,chain:2)"),
            direct_product(direct_product(chain(2), chain(2)), chain(2)));
  EXPECT_EQ(build_expression("glue(prod(b2,chain:2),m3,cbc:1:2)"),
            glued_sum(glued_sum(direct_product(boolean_b2(), chain(2)), diamond_m3()), chain_b2_chain(1, 2)));
  EXPECT_EQ(build_expression("dual(cbc:1:3)"), dual(chain_b2_chain(1, 3)));
  EXPECT_TRUE(are_isomorphic(build_expression("dual(cbc:1:3)"), chain_b2_chain(3, 1)));
  EXPECT_THROW(build_expression("dual(n5,m3)"), LatconError);
}

TEST(BuildExpression, Errors) {
  for (const std::string text : {"", "chain", "chain:", "chain:0", "cbc:1", "prod(b2)", "glue(b2,", "n6", "b2 b2",
                                  "prod(b2;b2)"}) {
    auto message = error_of_build(text);
    EXPECT_FALSE(message.empty()) << text;
  }
  EXPECT_EQ(error_of_build("n6").rfind("ParseError", 0), 0u);
}
