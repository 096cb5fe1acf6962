#include <gtest/gtest.h>

#include <vector>

#include "latcon/latcon.hpp"
#include "support/oracles.hpp"

using namespace latcon;

namespace {

std::vector<FiniteLattice> small_lattices(std::size_t max_n) {
  std::vector<FiniteLattice> out;
  for (const auto& catalog : enumerate_lattices_up_to(max_n)) {
    out.insert(out.end(), catalog.members.begin(), catalog.members.end());
  }
  return out;
}

ErrorKind kind_of_build(std::size_t n, std::vector<PrimeInterval> covers) {
  try {
    build_from_covers(n, covers);
  } catch (const LatconError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

// Pentagon labels: a = 1, c = 2, b = 3.
constexpr Element kA = 1;
constexpr Element kC = 2;
constexpr Element kB = 3;

}  // namespace

TEST(BuildFromCovers, ThreeChain) {
  const PrimeInterval covers[] = {{0, 1}, {1, 2}};
  auto lattice = build_from_covers(3, covers);
  EXPECT_EQ(lattice.size(), 3u);
  EXPECT_TRUE(is_chain(lattice));
  EXPECT_EQ(lattice.bottom(), 0);
  EXPECT_EQ(lattice.top(), 2);
}

TEST(BuildFromCovers, Square) {
  const PrimeInterval covers[] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  auto lattice = build_from_covers(4, covers);
  EXPECT_EQ(lattice, boolean_b2());
  EXPECT_FALSE(is_chain(lattice));
}

TEST(BuildFromCovers, BowtieIsNotALattice) {
  EXPECT_EQ(kind_of_build(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}), ErrorKind::NotALattice);
  try {
    build_from_covers(4, std::vector<PrimeInterval>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  } catch (const LatconError& e) {
    EXPECT_STREQ(e.what(), "NotALattice: elements 0,1 have no join");
  }
}

TEST(BuildFromCovers, Rejections) {
  EXPECT_EQ(kind_of_build(0, {}), ErrorKind::SizeBound);
  EXPECT_EQ(kind_of_build(kMaxElements + 1, {}), ErrorKind::SizeBound);
  EXPECT_EQ(kind_of_build(3, {{0, 1}, {1, 2}, {2, 0}}), ErrorKind::NotAPoset);
  EXPECT_EQ(kind_of_build(2, {{1, 1}}), ErrorKind::NotAPoset);
  EXPECT_EQ(kind_of_build(2, {{0, 2}}), ErrorKind::InvalidArgument);
  // Two maximal elements: no top, so no join.
  EXPECT_EQ(kind_of_build(3, {{0, 1}, {0, 2}}), ErrorKind::NotALattice);
  // Disconnected pieces.
  EXPECT_EQ(kind_of_build(2, {}), ErrorKind::NotALattice);
}

TEST(BuildFromCovers, NormalizesToLinearExtension) {
  // Chain 2 < 0 < 1 given in scrambled labels.
  const PrimeInterval covers[] = {{2, 0}, {0, 1}};
  std::vector<Element> new_label;
  auto lattice = FiniteLattice::from_covers(3, covers, &new_label);
  EXPECT_EQ(new_label, (std::vector<Element>{1, 2, 0}));
  for (const auto& [a, b] : lattice.covers()) EXPECT_LT(a, b);
}

TEST(BuildFromCovers, TransitiveEdgesAreReduced) {
  const PrimeInterval covers[] = {{0, 1}, {1, 2}, {0, 2}};
  auto lattice = build_from_covers(3, covers);
  EXPECT_EQ(lattice.covers().size(), 2u);
  EXPECT_EQ(lattice, chain(3));
}

TEST(MeetJoin, Examples) {
  auto b2 = boolean_b2();
  EXPECT_EQ(meet(b2, 1, 2), 0);
  EXPECT_EQ(join(b2, 1, 2), 3);
  EXPECT_EQ(join(chain(3), 0, 2), 2);
  auto n5 = pentagon_n5();
  EXPECT_EQ(meet(n5, kA, kB), 0);
  EXPECT_EQ(join(n5, kA, kB), 4);
  EXPECT_TRUE(leq(n5, kA, kC));
  EXPECT_FALSE(leq(n5, kB, kC));
}

TEST(PrimeIntervals, Counts) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(prime_intervals(chain(n)).size(), n - 1);
  EXPECT_EQ(prime_intervals(boolean_b2()).size(), 4u);
  EXPECT_EQ(prime_intervals(pentagon_n5()).size(), 5u);
}

TEST(Irreducibles, Examples) {
  EXPECT_EQ(join_irreducibles(chain(4)), (std::vector<Element>{1, 2, 3}));
  EXPECT_EQ(meet_irreducibles(chain(4)), (std::vector<Element>{0, 1, 2}));
  EXPECT_EQ(join_irreducibles(boolean_b2()), (std::vector<Element>{1, 2}));
  EXPECT_EQ(meet_irreducibles(boolean_b2()), (std::vector<Element>{1, 2}));
  EXPECT_EQ(join_irreducibles(pentagon_n5()), (std::vector<Element>{kA, kC, kB}));
  EXPECT_EQ(meet_irreducibles(pentagon_n5()), (std::vector<Element>{kA, kC, kB}));
  EXPECT_TRUE(join_irreducibles(chain(1)).empty());
}

TEST(Narrows, Examples) {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto c = chain(n);
    for (const auto& edge : c.covers()) EXPECT_TRUE(is_narrows(c, edge));
  }
  EXPECT_FALSE(is_narrows(boolean_b2(), {0, 1}));
  EXPECT_TRUE(is_narrows(pentagon_n5(), {kA, kC}));
  EXPECT_FALSE(is_narrows(pentagon_n5(), {0, kA}));
}

TEST(IsChain, Examples) {
  EXPECT_TRUE(is_chain(chain(5)));
  EXPECT_FALSE(is_chain(boolean_b2()));
  EXPECT_TRUE(is_chain(chain(1)));
}

TEST(Dual, Examples) {
  EXPECT_TRUE(are_isomorphic(dual(chain(4)), chain(4)));
  EXPECT_TRUE(are_isomorphic(dual(boolean_b2()), boolean_b2()));
  EXPECT_TRUE(are_isomorphic(dual(pentagon_n5()), pentagon_n5()));
}

TEST(Dual, InvolutionOnSmallLattices) {
  for (const auto& lattice : small_lattices(6)) {
    EXPECT_EQ(dual(dual(lattice)), lattice);
    EXPECT_TRUE(are_isomorphic(dual(dual(lattice)), lattice));
  }
}

TEST(Heights, Pentagon) {
  EXPECT_EQ(heights(pentagon_n5()), (std::vector<std::size_t>{0, 1, 2, 1, 3}));
}

TEST(Invariants, TablesMatchBruteForce) {
  for (const auto& lattice : small_lattices(7)) {
    oracle::Order order(lattice);
    const auto n = lattice.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto ex = static_cast<Element>(x);
        auto ey = static_cast<Element>(y);
        ASSERT_EQ(lattice.leq(ex, ey), order.leq(x, y));
        ASSERT_EQ(lattice.meet(ex, ey), *order.meet(x, y));
        ASSERT_EQ(lattice.join(ex, ey), *order.join(x, y));
      }
    }
  }
}

TEST(Invariants, AbsorptionAndBounds) {
  for (const auto& lattice : small_lattices(7)) {
    const auto n = lattice.size();
    for (std::size_t x = 0; x < n; ++x) {
      auto ex = static_cast<Element>(x);
      EXPECT_TRUE(lattice.leq(lattice.bottom(), ex));
      EXPECT_TRUE(lattice.leq(ex, lattice.top()));
      for (std::size_t y = 0; y < n; ++y) {
        auto ey = static_cast<Element>(y);
        ASSERT_EQ(lattice.meet(ex, lattice.join(ex, ey)), ex);
        ASSERT_EQ(lattice.join(ex, lattice.meet(ex, ey)), ex);
        ASSERT_EQ(lattice.meet(ex, ey), lattice.meet(ey, ex));
      }
    }
  }
}

TEST(Invariants, CoversAreTransitiveReduction) {
  for (const auto& lattice : small_lattices(7)) {
    oracle::Order order(lattice);
    const auto n = lattice.size();
    std::vector<PrimeInterval> expected;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || !order.leq(a, b)) continue;
        bool between = false;
        for (std::size_t z = 0; z < n && !between; ++z) {
          between = z != a && z != b && order.leq(a, z) && order.leq(z, b);
        }
        if (!between) expected.push_back({static_cast<Element>(a), static_cast<Element>(b)});
      }
    }
    std::sort(expected.begin(), expected.end());
    ASSERT_TRUE(std::equal(expected.begin(), expected.end(), lattice.covers().begin(), lattice.covers().end()));
    for (const auto& [a, b] : lattice.covers()) EXPECT_LT(a, b);
  }
}

TEST(Invariants, NarrowsDuality) {
  for (const auto& lattice : small_lattices(7)) {
    auto d = dual(lattice);
    const auto last = static_cast<Element>(lattice.size() - 1);
    for (const auto& edge : lattice.covers()) {
      PrimeInterval reversed{static_cast<Element>(last - edge.b), static_cast<Element>(last - edge.a)};
      EXPECT_EQ(is_narrows(lattice, edge), is_narrows(d, reversed));
    }
  }
}

TEST(Relabel, PreservesIsomorphismClass) {
  auto n5 = pentagon_n5();
  const Element perm[] = {4, 2, 0, 3, 1};
  auto moved = relabel(n5, perm);
  EXPECT_TRUE(oracle::isomorphic(moved, n5));
  const Element short_perm[] = {0, 1};
  EXPECT_THROW(relabel(n5, short_perm), LatconError);
}

TEST(LargeLattices, ProductOfChainsAtTheSizeBound) {
  auto grid = direct_product(chain(64), chain(64));
  EXPECT_EQ(grid.size(), 4096u);
  EXPECT_EQ(grid.join(1, 64), 65);
  EXPECT_EQ(grid.meet(65, 128), 64);
  EXPECT_EQ(grid.meet(4095, 100), 100);
}
