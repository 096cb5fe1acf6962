#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "latcon/error.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

inline FiniteLattice chain(std::size_t k) {
  if (k == 0) throw LatconError(ErrorKind::InvalidArgument, "a chain needs at least one element");
  std::vector<PrimeInterval> covers;
  for (std::size_t i = 0; i + 1 < k; ++i) covers.push_back({static_cast<Element>(i), static_cast<Element>(i + 1)});
  return FiniteLattice::from_covers(k, covers);
}

/// The covering square 0 < 1,2 < 3.
inline FiniteLattice boolean_b2() {
  const PrimeInterval covers[] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return FiniteLattice::from_covers(4, covers);
}

/// Pentagon 0 < 1 < 2 < 4 and 0 < 3 < 4; [1,2] is its narrows.
inline FiniteLattice pentagon_n5() {
  const PrimeInterval covers[] = {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return FiniteLattice::from_covers(5, covers);
}

/// Diamond with atoms 1, 2, 3.
inline FiniteLattice diamond_m3() {
  const PrimeInterval covers[] = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return FiniteLattice::from_covers(5, covers);
}

/// One-point glued sum: the top of `lower` is identified with the bottom of
/// `upper`, and everything in `lower` lies below everything in `upper`.
inline FiniteLattice glued_sum(const FiniteLattice& lower, const FiniteLattice& upper) {
  const auto offset = lower.size() - 1;
  std::vector<PrimeInterval> covers(lower.covers().begin(), lower.covers().end());
  for (const auto& [a, b] : upper.covers()) {
    covers.push_back({static_cast<Element>(a + offset), static_cast<Element>(b + offset)});
  }
  return FiniteLattice::from_covers(lower.size() + upper.size() - 1, covers);
}

/// C_p ∔ B_2 ∔ C_q with p, q counting the chain elements before gluing.
inline FiniteLattice chain_b2_chain(std::size_t p, std::size_t q) {
  return glued_sum(chain(p), glued_sum(boolean_b2(), chain(q)));
}

/// Componentwise order on pairs; pair (x, y) gets label x * |rhs| + y.
inline FiniteLattice direct_product(const FiniteLattice& lhs, const FiniteLattice& rhs) {
  const auto n0 = lhs.size();
  const auto n1 = rhs.size();
  if (n0 * n1 > kMaxElements) {
    throw LatconError(ErrorKind::SizeBound, "product of " + std::to_string(n0) + " and " + std::to_string(n1) +
                                                " elements exceeds the maximum of " + std::to_string(kMaxElements));
  }
  auto pair = [n1](std::size_t x, std::size_t y) { return static_cast<Element>(x * n1 + y); };
  std::vector<PrimeInterval> covers;
  for (const auto& [a, b] : lhs.covers()) {
    for (std::size_t y = 0; y < n1; ++y) covers.push_back({pair(a, y), pair(b, y)});
  }
  for (std::size_t x = 0; x < n0; ++x) {
    for (const auto& [a, b] : rhs.covers()) covers.push_back({pair(x, a), pair(x, b)});
  }
  return FiniteLattice::from_covers(n0 * n1, covers);
}

/// Recognizes C_p ∔ B_2 ∔ C_q. Such a lattice has exactly one incomparable
/// pair {u, v}; then C_p is the ideal below u ∧ v and C_q the filter above
/// u ∨ v.
inline std::optional<std::pair<std::size_t, std::size_t>> decompose_chain_b2_chain(const FiniteLattice& lattice) {
  const auto n = lattice.size();
  std::optional<std::pair<Element, Element>> incomparable;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto x = static_cast<Element>(i);
      auto y = static_cast<Element>(j);
      if (lattice.leq(x, y) || lattice.leq(y, x)) continue;
      if (incomparable) return std::nullopt;
      incomparable.emplace(x, y);
    }
  }
  if (!incomparable) return std::nullopt;
  auto [u, v] = *incomparable;
  auto low = lattice.meet(u, v);
  auto high = lattice.join(u, v);
  const auto p = detail::count_bits(lattice.down_row(low));
  const auto q = detail::count_bits(lattice.up_row(high));
  if (p + q + 2 != n) return std::nullopt;
  return std::pair{p, q};
}

}  // namespace latcon
