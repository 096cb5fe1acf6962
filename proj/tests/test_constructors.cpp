#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "latcon/latcon.hpp"
#include "support/oracles.hpp"

using namespace latcon;

TEST(Chain, Basics) {
  EXPECT_EQ(chain(1).size(), 1u);
  EXPECT_EQ(count_congruences(chain(5)), 16u);
  for (std::size_t k = 1; k <= 10; ++k) EXPECT_TRUE(is_chain(chain(k)));
  EXPECT_THROW(chain(0), LatconError);
}

TEST(Named, SizesAndCounts) {
  EXPECT_EQ(boolean_b2().size(), 4u);
  EXPECT_EQ(count_congruences(pentagon_n5()), 5u);
  EXPECT_EQ(count_congruences(diamond_m3()), 2u);
  EXPECT_FALSE(oracle::isomorphic(pentagon_n5(), diamond_m3()));
  EXPECT_EQ(oracle::count_incomparable(pentagon_n5()), 2u);
  EXPECT_EQ(oracle::count_incomparable(diamond_m3()), 3u);
}

TEST(GluedSum, Examples) {
  EXPECT_TRUE(oracle::isomorphic(glued_sum(chain(2), chain(3)), chain(4)));
  for (std::size_t p = 1; p <= 4; ++p) {
    for (std::size_t q = 1; q <= 4; ++q) {
      EXPECT_EQ(glued_sum(chain(p), glued_sum(boolean_b2(), chain(q))).size(), p + q + 2);
    }
  }
  EXPECT_EQ(count_congruences(glued_sum(pentagon_n5(), chain(2))), 10u);
  EXPECT_EQ(count_congruences(glued_sum(chain(2), pentagon_n5())), 10u);
}

TEST(GluedSum, Associative) {
  const std::vector<FiniteLattice> named = {chain(1), chain(2), chain(3), boolean_b2(), pentagon_n5(), diamond_m3()};
  for (const auto& a : named) {
    for (const auto& b : named) {
      for (const auto& c : named) {
        auto left = glued_sum(glued_sum(a, b), c);
        auto right = glued_sum(a, glued_sum(b, c));
        ASSERT_TRUE(are_isomorphic(left, right));
        ASSERT_EQ(left, right);
      }
    }
  }
}

TEST(ChainB2Chain, Examples) {
  EXPECT_TRUE(oracle::isomorphic(chain_b2_chain(1, 1), boolean_b2()));
  auto figure = chain_b2_chain(3, 3);
  EXPECT_EQ(figure.size(), 8u);
  EXPECT_EQ(count_congruences(figure), 64u);
  for (std::size_t p = 1; p <= 7; ++p) {
    for (std::size_t q = 1; p + q <= 8; ++q) {
      EXPECT_EQ(count_congruences(chain_b2_chain(p, q)), oracle::pow2(p + q)) << p << "," << q;
    }
  }
}

TEST(DirectProduct, Examples) {
  EXPECT_TRUE(oracle::isomorphic(direct_product(chain(2), chain(2)), boolean_b2()));
  for (const auto& lattice : {pentagon_n5(), diamond_m3(), chain(4)}) {
    EXPECT_EQ(direct_product(lattice, chain(1)), lattice);
  }
  EXPECT_EQ(direct_product(chain(3), chain(3)).size(), 9u);
  auto grid = direct_product(chain(2), pentagon_n5());
  EXPECT_TRUE(oracle::isomorphic(grid, direct_product(pentagon_n5(), chain(2))));
  EXPECT_THROW(direct_product(chain(65), chain(64)), LatconError);
}

TEST(DirectProduct, ComponentwiseOrder) {
  auto lhs = pentagon_n5();
  auto rhs = chain(3);
  auto product = direct_product(lhs, rhs);
  for (Element x0 = 0; x0 < 5; ++x0) {
    for (Element y0 = 0; y0 < 3; ++y0) {
      for (Element x1 = 0; x1 < 5; ++x1) {
        for (Element y1 = 0; y1 < 3; ++y1) {
          auto a = static_cast<Element>(x0 * 3 + y0);
          auto b = static_cast<Element>(x1 * 3 + y1);
          ASSERT_EQ(product.leq(a, b), lhs.leq(x0, x1) && rhs.leq(y0, y1));
        }
      }
    }
  }
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose_chain_b2_chain(boolean_b2()), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_FALSE(decompose_chain_b2_chain(chain(6)).has_value());
  EXPECT_EQ(decompose_chain_b2_chain(chain_b2_chain(2, 4)), (std::pair<std::size_t, std::size_t>{2, 4}));
  EXPECT_FALSE(decompose_chain_b2_chain(pentagon_n5()).has_value());
  EXPECT_FALSE(decompose_chain_b2_chain(diamond_m3()).has_value());
  EXPECT_FALSE(decompose_chain_b2_chain(chain(1)).has_value());
}

TEST(Decompose, RoundTrip) {
  for (std::size_t p = 1; p <= 9; ++p) {
    for (std::size_t q = 1; p + q <= 10; ++q) {
      EXPECT_EQ(decompose_chain_b2_chain(chain_b2_chain(p, q)), (std::pair{p, q}));
    }
  }
}

TEST(Decompose, MatchesCongruenceCountOnCatalogs) {
  for (const auto& catalog : enumerate_lattices_up_to(8)) {
    if (catalog.n < 2) continue;
    for (const auto& lattice : catalog.members) {
      bool extremal = count_congruences(lattice) == oracle::pow2(catalog.n - 2);
      ASSERT_EQ(decompose_chain_b2_chain(lattice).has_value(), extremal);
    }
  }
}

TEST(Decompose, SwappedParametersAreDualNotIsomorphic) {
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      auto lhs = chain_b2_chain(p, q);
      auto rhs = chain_b2_chain(q, p);
      EXPECT_EQ(oracle::isomorphic(lhs, rhs), p == q);
      EXPECT_TRUE(oracle::isomorphic(dual(lhs), rhs));
    }
  }
}
