#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "latcon/error.hpp"
#include "latcon/lattice.hpp"
#include "latcon/partition.hpp"

namespace latcon {

/// A pair x ≡ y whose translates by z land in different blocks.
struct CongruenceViolation {
  Element x = 0;
  Element y = 0;
  Element z = 0;
  bool through_join = false;
  Element left = 0;   // x ∧ z or x ∨ z
  Element right = 0;  // y ∧ z or y ∨ z

  std::string describe() const {
    const char* op = through_join ? "join" : "meet";
    return "witness pair (" + std::to_string(left) + ", " + std::to_string(right) + "): " + std::to_string(x) +
           " and " + std::to_string(y) + " share a block but their " + op + "s with " + std::to_string(z) +
           " do not";
  }
};

inline void require_same_size(const FiniteLattice& lattice, const Partition& p) {
  if (p.size() != lattice.size()) {
    throw LatconError(ErrorKind::InvalidArgument, "partition of " + std::to_string(p.size()) +
                                                      " elements does not match lattice of " +
                                                      std::to_string(lattice.size()));
  }
}

/// First failure of meet/join compatibility, scanning pairs x < y in the same
/// block, then z ascending, meet before join.
inline std::optional<CongruenceViolation> find_congruence_violation(const FiniteLattice& lattice,
                                                                    const Partition& p) {
  require_same_size(lattice, p);
  const auto n = lattice.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto x = static_cast<Element>(i);
      auto y = static_cast<Element>(j);
      if (!p.same_block(x, y)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        auto z = static_cast<Element>(k);
        auto mx = lattice.meet(x, z);
        auto my = lattice.meet(y, z);
        if (!p.same_block(mx, my)) return CongruenceViolation{x, y, z, false, mx, my};
        auto jx = lattice.join(x, z);
        auto jy = lattice.join(y, z);
        if (!p.same_block(jx, jy)) return CongruenceViolation{x, y, z, true, jx, jy};
      }
    }
  }
  return std::nullopt;
}

inline bool is_congruence(const FiniteLattice& lattice, const Partition& p) {
  return !find_congruence_violation(lattice, p).has_value();
}

namespace detail {

using ElementPair = std::pair<Element, Element>;

/// Closes the equivalence held in `sets` under meet and join translates.
/// `pending` lists the merge edges whose translates are still owed; every
/// successful merge adds its own edge, so the result is compatible.
inline Partition close_under_translates(const FiniteLattice& lattice, UnionFind& sets,
                                        std::vector<ElementPair> pending) {
  const auto n = lattice.size();
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (std::size_t k = 0; k < n; ++k) {
      auto z = static_cast<Element>(k);
      auto mx = lattice.meet(x, z);
      auto my = lattice.meet(y, z);
      if (sets.unite(mx, my)) pending.emplace_back(mx, my);
      auto jx = lattice.join(x, z);
      auto jy = lattice.join(y, z);
      if (sets.unite(jx, jy)) pending.emplace_back(jx, jy);
    }
  }
  return Partition::from_union_find(sets, n);
}

/// Transitive closure of the union of two equivalences. For two congruences
/// this is already their join in Con(L).
inline Partition equivalence_join(const Partition& lhs, const Partition& rhs,
                                  std::vector<ElementPair>* edges = nullptr) {
  const auto n = lhs.size();
  UnionFind sets(n);
  std::vector<Element> first_l(lhs.block_count(), 0);
  std::vector<Element> first_r(rhs.block_count(), 0);
  for (std::size_t i = n; i-- > 0;) {
    first_l[lhs.block_of(static_cast<Element>(i))] = static_cast<Element>(i);
    first_r[rhs.block_of(static_cast<Element>(i))] = static_cast<Element>(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto x = static_cast<Element>(i);
    for (auto rep : {first_l[lhs.block_of(x)], first_r[rhs.block_of(x)]}) {
      if (sets.unite(x, rep) && edges != nullptr) edges->emplace_back(rep, x);
    }
  }
  return Partition::from_union_find(sets, n);
}

/// Covering pairs of an order given by reflexive bit rows.
inline std::vector<PrimeInterval> covers_of_order(const BitRows& up, std::size_t n) {
  std::vector<PrimeInterval> covers;
  std::vector<std::uint64_t> above(up.words());
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(above.begin(), above.end(), 0);
    for_each_bit(up.row(x), [&](std::size_t z) {
      if (z == x) return;
      auto row = up.row(z);
      for (std::size_t w = 0; w < above.size(); ++w) {
        auto strict = w == z / 64 ? row[w] & ~(std::uint64_t{1} << (z % 64)) : row[w];
        above[w] |= strict;
      }
    });
    for_each_bit(up.row(x), [&](std::size_t y) {
      if (y != x && ((above[y / 64] >> (y % 64)) & 1u) == 0) {
        covers.push_back({static_cast<Element>(x), static_cast<Element>(y)});
      }
    });
  }
  return covers;
}

}  // namespace detail

/// Least congruence collapsing a and b.
inline Partition principal_congruence(const FiniteLattice& lattice, Element a, Element b) {
  detail::UnionFind sets(lattice.size());
  std::vector<detail::ElementPair> pending;
  if (sets.unite(a, b)) pending.emplace_back(a, b);
  return detail::close_under_translates(lattice, sets, std::move(pending));
}

/// Least congruence above both arguments.
inline Partition join_congruence(const FiniteLattice& lattice, const Partition& lhs, const Partition& rhs) {
  require_same_size(lattice, lhs);
  require_same_size(lattice, rhs);
  std::vector<detail::ElementPair> edges;
  detail::equivalence_join(lhs, rhs, &edges);
  detail::UnionFind sets(lattice.size());
  for (auto [x, y] : edges) sets.unite(x, y);
  return detail::close_under_translates(lattice, sets, std::move(edges));
}

/// Common refinement (blockwise intersection).
inline Partition meet_congruence(const FiniteLattice& lattice, const Partition& lhs, const Partition& rhs) {
  require_same_size(lattice, lhs);
  require_same_size(lattice, rhs);
  std::vector<std::size_t> labels(lhs.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto x = static_cast<Element>(i);
    labels[i] = std::size_t{lhs.block_of(x)} * lhs.size() + rhs.block_of(x);
  }
  return Partition::from_labels(std::span<const std::size_t>(labels));
}

struct CongruenceOptions {
  /// Largest |Con(L)| that all_congruences will materialize.
  std::size_t cap = std::size_t{1} << 24;
};

/// The congruences of a lattice, sorted by decreasing number of blocks and
/// then by block ids, so Δ comes first, ∇ last, and the order is a linear
/// extension of refinement.
class ConSet {
 public:
  ConSet(FiniteLattice host, std::vector<Partition> members) : host_(std::move(host)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), [](const Partition& lhs, const Partition& rhs) {
      if (lhs.block_count() != rhs.block_count()) return lhs.block_count() > rhs.block_count();
      return lhs < rhs;
    });
    index_.reserve(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], i);
  }

  const FiniteLattice& host() const noexcept { return host_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::span<const Partition> members() const noexcept { return members_; }
  const Partition& operator[](std::size_t i) const noexcept { return members_[i]; }

  std::optional<std::size_t> index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Partition& p) const { return index_.contains(p); }

  /// Refinement order between members.
  bool leq(std::size_t i, std::size_t j) const { return members_[i].refines(members_[j]); }

 private:
  FiniteLattice host_;
  std::vector<Partition> members_;
  std::unordered_map<Partition, std::size_t, PartitionHash> index_;
};

/// Principal congruences of the prime intervals, deduplicated, in cover order.
inline std::vector<Partition> prime_interval_congruences(const FiniteLattice& lattice) {
  std::vector<Partition> generators;
  std::unordered_set<Partition, PartitionHash> seen;
  for (const auto& [a, b] : lattice.covers()) {
    auto p = principal_congruence(lattice, a, b);
    if (seen.insert(p).second) generators.push_back(std::move(p));
  }
  return generators;
}

/// Every congruence is a join of prime-interval congruences, so Con(L) is
/// the join-closure of those generators together with Δ. Expands breadth
/// first from Δ.
inline ConSet all_congruences(const FiniteLattice& lattice, const CongruenceOptions& options = {}) {
  const auto generators = prime_interval_congruences(lattice);
  std::unordered_set<Partition, PartitionHash> seen;
  std::vector<Partition> members;
  auto admit = [&](Partition p) -> bool {
    if (!seen.insert(p).second) return false;
    if (seen.size() > options.cap) {
      throw LatconError(ErrorKind::MemoryBudgetExceeded,
                        "more than " + std::to_string(options.cap) + " congruences on a lattice of " +
                            std::to_string(lattice.size()) + " elements");
    }
    members.push_back(std::move(p));
    return true;
  };
  admit(Partition::discrete(lattice.size()));
  std::vector<Partition> frontier{members.front()};
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        if (g.refines(p)) continue;
        auto joined = detail::equivalence_join(p, g);
        if (admit(joined)) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  return ConSet(lattice, std::move(members));
}

inline std::uint64_t count_congruences(const FiniteLattice& lattice, const CongruenceOptions& options = {}) {
  return all_congruences(lattice, options).size();
}

/// Con(L) as a lattice; element i of `lattice` is the congruence `partitions[i]`.
struct CongruenceLattice {
  FiniteLattice lattice;
  std::vector<Partition> partitions;
};

inline CongruenceLattice congruence_lattice(const ConSet& cons) {
  const auto m = cons.size();
  if (m > kMaxElements) {
    throw LatconError(ErrorKind::SizeBound, "congruence lattice of " + std::to_string(m) +
                                                " elements exceeds the maximum of " + std::to_string(kMaxElements));
  }
  detail::BitRows up(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (cons.leq(i, j)) up.set(i, j);
    }
  }
  std::vector<Element> new_label;
  auto lattice = FiniteLattice::from_covers(m, detail::covers_of_order(up, m), &new_label);
  std::vector<Partition> partitions(m);
  for (std::size_t i = 0; i < m; ++i) partitions[new_label[i]] = cons[i];
  return {std::move(lattice), std::move(partitions)};
}

inline CongruenceLattice congruence_lattice(const FiniteLattice& lattice, const CongruenceOptions& options = {}) {
  return congruence_lattice(all_congruences(lattice, options));
}

/// Minimal members of Con(L) above Δ.
inline std::vector<Partition> atoms_of_con(const ConSet& cons) {
  std::vector<Partition> atoms;
  const auto members = cons.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].is_discrete()) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < members.size() && minimal; ++j) {
      if (j == i || members[j].is_discrete()) continue;
      if (members[j].block_count() > members[i].block_count() && members[j].refines(members[i])) minimal = false;
    }
    if (minimal) atoms.push_back(members[i]);
  }
  return atoms;
}

inline std::vector<Partition> atoms_of_con(const FiniteLattice& lattice, const CongruenceOptions& options = {}) {
  return atoms_of_con(all_congruences(lattice, options));
}

/// L/Θ together with the projection sending each element to its block.
struct Quotient {
  FiniteLattice lattice;
  std::vector<Element> block_map;
};

inline Quotient quotient(const FiniteLattice& lattice, const Partition& theta) {
  if (auto violation = find_congruence_violation(lattice, theta)) {
    throw LatconError(ErrorKind::NotACongruence, violation->describe());
  }
  const auto k = theta.block_count();
  std::vector<Element> rep(k, 0);
  for (std::size_t i = lattice.size(); i-- > 0;) rep[theta.block_of(static_cast<Element>(i))] = static_cast<Element>(i);

  detail::BitRows up(k, k);
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t c = 0; c < k; ++c) {
      if (theta.same_block(lattice.meet(rep[b], rep[c]), rep[b])) up.set(b, c);
    }
  }
  std::vector<Element> new_label;
  auto result = FiniteLattice::from_covers(k, detail::covers_of_order(up, k), &new_label);
  std::vector<Element> block_map(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) block_map[i] = new_label[theta.block_of(static_cast<Element>(i))];
  return {std::move(result), std::move(block_map)};
}

}  // namespace latcon
