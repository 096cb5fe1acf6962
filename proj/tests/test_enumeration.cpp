#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "latcon/latcon.hpp"
#include "support/oracles.hpp"

using namespace latcon;

namespace {

std::set<CanonicalCertificate> certificate_set(const LatticeCatalog& catalog) {
  return {catalog.certificates.begin(), catalog.certificates.end()};
}

}  // namespace

TEST(Enumerate, ClassCounts) {
  const std::size_t expected[] = {1, 1, 1, 2, 5, 15, 53, 222, 1078};
  auto catalogs = enumerate_lattices_up_to(9);
  ASSERT_EQ(catalogs.size(), 9u);
  for (std::size_t i = 0; i < catalogs.size(); ++i) {
    EXPECT_EQ(catalogs[i].n, i + 1);
    EXPECT_EQ(catalogs[i].members.size(), expected[i]) << "n=" << i + 1;
  }
  EXPECT_EQ(enumerate_lattices(4).members.size(), 2u);
  EXPECT_EQ(enumerate_lattices(5).members.size(), 5u);
  EXPECT_EQ(enumerate_lattices(7).members.size(), 53u);
}

TEST(Enumerate, MatchesNaiveOracle) {
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(certificate_set(enumerate_lattices(n)), certificate_set(naive_enumerate_lattices(n))) << "n=" << n;
  }
}

TEST(Enumerate, NaiveExamples) {
  EXPECT_EQ(naive_enumerate_lattices(1).members.size(), 1u);
  auto three = naive_enumerate_lattices(3);
  ASSERT_EQ(three.members.size(), 1u);
  EXPECT_TRUE(is_chain(three.members[0]));
  EXPECT_EQ(naive_enumerate_lattices(6).members.size(), 15u);
  EXPECT_THROW(naive_enumerate_lattices(8), LatconError);
}

TEST(Enumerate, MembersAreCanonicalAndDistinct) {
  for (const auto& catalog : enumerate_lattices_up_to(8)) {
    ASSERT_EQ(catalog.members.size(), catalog.certificates.size());
    for (std::size_t i = 0; i < catalog.members.size(); ++i) {
      EXPECT_EQ(catalog.members[i].size(), catalog.n);
      EXPECT_EQ(certificate_of_labeled(catalog.members[i]), catalog.certificates[i]);
      EXPECT_EQ(canonical_form(catalog.members[i]), catalog.certificates[i]);
      if (i > 0) {
        EXPECT_LT(catalog.certificates[i - 1], catalog.certificates[i]);
      }
    }
  }
}

TEST(Enumerate, DeterministicAcrossJobCounts) {
  auto serial = enumerate_lattices(8, {9, 1});
  auto parallel = enumerate_lattices(8, {9, 4});
  EXPECT_EQ(serial.certificates, parallel.certificates);
}

TEST(Enumerate, Limits) {
  try {
    enumerate_lattices(10);
    FAIL() << "expected an error";
  } catch (const LatconError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LimitExceeded);
  }
  EXPECT_THROW(enumerate_lattices(0), LatconError);
  EXPECT_THROW(enumerate_lattices(6, {5, 1}), LatconError);
}

TEST(Spectrum, SmallSizes) {
  EXPECT_EQ(spectrum(1).counts, (std::map<std::uint64_t, std::uint64_t>{{1, 1}}));
  EXPECT_EQ(spectrum(2).counts, (std::map<std::uint64_t, std::uint64_t>{{2, 1}}));
  auto five = spectrum(5);
  EXPECT_EQ(five.counts, (std::map<std::uint64_t, std::uint64_t>{{2, 1}, {5, 1}, {8, 2}, {16, 1}}));
  EXPECT_EQ(five.total_classes, 5u);
}

TEST(Spectrum, Invariants) {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto catalog = enumerate_lattices(n);
    auto report = spectrum(catalog, 4);
    std::uint64_t total = 0;
    for (const auto& [count, classes] : report.counts) total += classes;
    EXPECT_EQ(total, report.total_classes);
    EXPECT_EQ(report.total_classes, catalog.members.size());
    const auto top = oracle::pow2(n - 1);
    EXPECT_EQ(report.counts.rbegin()->first, top);
    EXPECT_EQ(report.counts.rbegin()->second, 1u);
    if (n >= 2) {
      const auto half = oracle::pow2(n - 2);
      for (const auto& [count, classes] : report.counts) EXPECT_FALSE(count > half && count < top) << count;
      std::uint64_t decomposable = 0;
      for (const auto& lattice : catalog.members) decomposable += decompose_chain_b2_chain(lattice).has_value();
      auto it = report.counts.find(half);
      EXPECT_EQ(it == report.counts.end() ? 0 : it->second, decomposable);
    }
  }
}

TEST(Spectrum, EightElementExtremalClasses) {
  auto report = spectrum(8);
  EXPECT_EQ(report.counts.at(128), 1u);
  std::set<CanonicalCertificate> family;
  for (std::size_t p = 1; p <= 5; ++p) family.insert(canonical_form(chain_b2_chain(p, 6 - p)));
  EXPECT_EQ(report.counts.at(64), family.size());
  EXPECT_EQ(family.size(), 5u);
}
