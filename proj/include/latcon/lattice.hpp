#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latcon/error.hpp"

namespace latcon {

/// Element label. Elements of an n-element lattice are 0..n-1.
using Element = std::uint16_t;

/// Largest lattice the library will materialize. Congruence lattices of
/// 12-element chains glued with a 2-chain reach this size.
inline constexpr std::size_t kMaxElements = 4096;

/// Covering pair a < b with nothing strictly between.
struct PrimeInterval {
  Element a = 0;
  Element b = 0;

  friend auto operator<=>(const PrimeInterval&, const PrimeInterval&) = default;
};

namespace detail {

/// Dense square bit matrix stored row by row.
class BitRows {
 public:
  BitRows() = default;
  BitRows(std::size_t rows, std::size_t bits) : words_((bits + 63) / 64), data_(rows * words_, 0) {}

  std::size_t words() const noexcept { return words_; }

  std::span<std::uint64_t> row(std::size_t r) noexcept { return {data_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t r) const noexcept {
    return {data_.data() + r * words_, words_};
  }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return ((data_[r * words_ + c / 64] >> (c % 64)) & 1u) != 0;
  }
  void set(std::size_t r, std::size_t c) noexcept {
    data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }

  bool operator==(const BitRows&) const = default;

 private:
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

inline void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) noexcept {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

inline void and_of(std::span<std::uint64_t> dst, std::span<const std::uint64_t> lhs,
                   std::span<const std::uint64_t> rhs) noexcept {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = lhs[i] & rhs[i];
}

inline bool equal_bits(std::span<const std::uint64_t> lhs, std::span<const std::uint64_t> rhs) noexcept {
  return std::equal(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

inline std::size_t count_bits(std::span<const std::uint64_t> bits) noexcept {
  std::size_t total = 0;
  for (auto w : bits) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

inline std::optional<std::size_t> lowest_bit(std::span<const std::uint64_t> bits) noexcept {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(bits[i]));
  }
  return std::nullopt;
}

inline std::optional<std::size_t> highest_bit(std::span<const std::uint64_t> bits) noexcept {
  for (std::size_t i = bits.size(); i-- > 0;) {
    if (bits[i] != 0) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(bits[i]));
  }
  return std::nullopt;
}

template <class F>
void for_each_bit(std::span<const std::uint64_t> bits, F&& f) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    for (std::uint64_t w = bits[i]; w != 0; w &= w - 1) {
      f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
}

}  // namespace detail

struct BuildFailure {
  ErrorKind kind = ErrorKind::NotALattice;
  std::string detail;
};

/// A finite lattice given by its Hasse diagram.
///
/// Labels always form a linear extension of the order (a < b as integers
/// whenever a is covered by b), so the bottom is 0 and the top is n-1.
/// The order is kept as bit rows in both directions and meets and joins
/// are tabulated at construction. Values are immutable.
class FiniteLattice {
 public:
  /// Builds and validates a lattice from (a superset of) its covering pairs.
  /// Input labels are renumbered by a topological sort that breaks ties by
  /// the smaller input label; `new_label`, when given, receives the map from
  /// input label to stored label.
  static FiniteLattice from_covers(std::size_t n, std::span<const PrimeInterval> edges,
                                   std::vector<Element>* new_label = nullptr) {
    BuildFailure failure;
    auto lattice = try_from_covers(n, edges, &failure, new_label);
    if (!lattice) throw LatconError(failure.kind, failure.detail);
    return std::move(*lattice);
  }

  /// Non-throwing variant of from_covers, used on generator hot paths.
  static std::optional<FiniteLattice> try_from_covers(std::size_t n, std::span<const PrimeInterval> edges,
                                                      BuildFailure* failure = nullptr,
                                                      std::vector<Element>* new_label = nullptr);

  std::size_t size() const noexcept { return n_; }
  Element bottom() const noexcept { return 0; }
  Element top() const noexcept { return static_cast<Element>(n_ - 1); }

  bool leq(Element x, Element y) const noexcept { return up_.test(x, y); }
  Element meet(Element x, Element y) const noexcept { return meet_[std::size_t{x} * n_ + y]; }
  Element join(Element x, Element y) const noexcept { return join_[std::size_t{x} * n_ + y]; }

  /// Covering pairs, sorted lexicographically.
  std::span<const PrimeInterval> covers() const noexcept { return covers_; }

  std::span<const Element> lower_covers(Element x) const noexcept {
    return {lower_.data() + lower_offsets_[x], lower_offsets_[x + 1] - lower_offsets_[x]};
  }
  std::span<const Element> upper_covers(Element x) const noexcept {
    return {upper_.data() + upper_offsets_[x], upper_offsets_[x + 1] - upper_offsets_[x]};
  }

  /// Bit y of up_row(x) is set iff x <= y; bit y of down_row(x) iff y <= x.
  std::span<const std::uint64_t> up_row(Element x) const noexcept { return up_.row(x); }
  std::span<const std::uint64_t> down_row(Element x) const noexcept { return down_.row(x); }

  /// Identical labeled lattices (same size and same covers).
  friend bool operator==(const FiniteLattice& lhs, const FiniteLattice& rhs) {
    return lhs.n_ == rhs.n_ && lhs.covers_ == rhs.covers_;
  }

 private:
  FiniteLattice() = default;

  bool finish(BuildFailure* failure, std::span<const Element> input_label);

  std::size_t n_ = 0;
  detail::BitRows up_;
  detail::BitRows down_;
  std::vector<PrimeInterval> covers_;
  std::vector<std::size_t> lower_offsets_;
  std::vector<std::size_t> upper_offsets_;
  std::vector<Element> lower_;
  std::vector<Element> upper_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
};

inline std::optional<FiniteLattice> FiniteLattice::try_from_covers(std::size_t n,
                                                                   std::span<const PrimeInterval> edges,
                                                                   BuildFailure* failure,
                                                                   std::vector<Element>* new_label) {
  auto fail = [&](ErrorKind kind, std::string detail) -> std::optional<FiniteLattice> {
    if (failure != nullptr) *failure = BuildFailure{kind, std::move(detail)};
    return std::nullopt;
  };
  if (n == 0) return fail(ErrorKind::SizeBound, "the empty lattice is not supported");
  if (n > kMaxElements) {
    return fail(ErrorKind::SizeBound,
                "n=" + std::to_string(n) + " exceeds the maximum of " + std::to_string(kMaxElements));
  }

  std::vector<std::vector<Element>> succ(n);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      return fail(ErrorKind::InvalidArgument,
                  "edge " + std::to_string(a) + " " + std::to_string(b) + " references a label outside 0.." +
                      std::to_string(n - 1));
    }
    if (a == b) return fail(ErrorKind::NotAPoset, "element " + std::to_string(a) + " lies above itself");
    succ[a].push_back(b);
  }
  std::vector<std::size_t> indegree(n, 0);
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (auto b : s) ++indegree[b];
  }

  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x) {
    if (indegree[x] == 0) ready.push(static_cast<Element>(x));
  }
  std::vector<Element> order;
  order.reserve(n);
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    order.push_back(x);
    for (auto s : succ[x]) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (order.size() != n) {
    std::size_t stuck = 0;
    while (indegree[stuck] == 0) ++stuck;
    return fail(ErrorKind::NotAPoset, "cycle through element " + std::to_string(stuck));
  }

  std::vector<Element> label(n);
  for (std::size_t i = 0; i < n; ++i) label[order[i]] = static_cast<Element>(i);

  FiniteLattice lattice;
  lattice.n_ = n;
  lattice.up_ = detail::BitRows(n, n);
  for (std::size_t i = n; i-- > 0;) {
    lattice.up_.set(i, i);
    for (auto s : succ[order[i]]) detail::or_into(lattice.up_.row(i), lattice.up_.row(label[s]));
  }
  if (!lattice.finish(failure, order)) return std::nullopt;
  if (new_label != nullptr) *new_label = std::move(label);
  return lattice;
}

inline bool FiniteLattice::finish(BuildFailure* failure, std::span<const Element> input_label) {
  const std::size_t n = n_;
  down_ = detail::BitRows(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    detail::for_each_bit(up_.row(x), [&](std::size_t y) { down_.set(y, x); });
  }

  // Upper covers of x are the minimal elements strictly above x. Scanning in
  // label order visits every cover before anything above it.
  std::vector<std::vector<Element>> uppers(n);
  std::vector<std::uint64_t> reached(up_.words());
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(reached.begin(), reached.end(), 0);
    detail::for_each_bit(up_.row(x), [&](std::size_t y) {
      if (y == x || ((reached[y / 64] >> (y % 64)) & 1u) != 0) return;
      uppers[x].push_back(static_cast<Element>(y));
      detail::or_into(reached, up_.row(y));
    });
  }
  std::vector<std::vector<Element>> lowers(n);
  covers_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y : uppers[x]) {
      covers_.push_back({static_cast<Element>(x), y});
      lowers[y].push_back(static_cast<Element>(x));
    }
  }
  auto flatten = [n](const std::vector<std::vector<Element>>& lists, std::vector<std::size_t>& offsets,
                     std::vector<Element>& flat) {
    offsets.assign(n + 1, 0);
    flat.clear();
    for (std::size_t x = 0; x < n; ++x) {
      flat.insert(flat.end(), lists[x].begin(), lists[x].end());
      offsets[x + 1] = flat.size();
    }
  };
  flatten(uppers, upper_offsets_, upper_);
  flatten(lowers, lower_offsets_, lower_);

  auto no_bound = [&](std::size_t x, std::size_t y, const char* what) {
    if (failure != nullptr) {
      auto a = input_label[x];
      auto b = input_label[y];
      if (a > b) std::swap(a, b);
      *failure = BuildFailure{ErrorKind::NotALattice,
                              "elements " + std::to_string(a) + "," + std::to_string(b) + " have no " + what};
    }
    return false;
  };

  // Labels are a linear extension, so up rows only have bits at or above
  // their element and down rows only at or below it; scans skip the rest.
  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  const std::size_t words = up_.words();
  for (std::size_t x = 0; x < n; ++x) {
    join_[x * n + x] = static_cast<Element>(x);
    const auto ux = up_.row(x);
    for (std::size_t y = x + 1; y < n; ++y) {
      Element j = static_cast<Element>(y);
      if (!up_.test(x, y)) {
        const auto uy = up_.row(y);
        std::optional<std::size_t> least;
        for (std::size_t w = y / 64; w < words && !least; ++w) {
          if (auto common = ux[w] & uy[w]; common != 0) {
            least = w * 64 + static_cast<std::size_t>(std::countr_zero(common));
          }
        }
        if (!least) return no_bound(x, y, "join");
        const auto ul = up_.row(*least);
        for (std::size_t w = y / 64; w < words; ++w) {
          if ((ux[w] & uy[w]) != ul[w]) return no_bound(x, y, "join");
        }
        j = static_cast<Element>(*least);
      }
      join_[x * n + y] = j;
      join_[y * n + x] = j;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    meet_[x * n + x] = static_cast<Element>(x);
    const auto dx = down_.row(x);
    for (std::size_t y = x + 1; y < n; ++y) {
      Element m = static_cast<Element>(x);
      if (!up_.test(x, y)) {
        const auto dy = down_.row(y);
        std::optional<std::size_t> greatest;
        for (std::size_t w = x / 64 + 1; w-- > 0 && !greatest;) {
          if (auto common = dx[w] & dy[w]; common != 0) {
            greatest = w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(common));
          }
        }
        if (!greatest) return no_bound(x, y, "meet");
        const auto dg = down_.row(*greatest);
        for (std::size_t w = 0; w <= x / 64; ++w) {
          if ((dx[w] & dy[w]) != dg[w]) return no_bound(x, y, "meet");
        }
        m = static_cast<Element>(*greatest);
      }
      meet_[x * n + y] = m;
      meet_[y * n + x] = m;
    }
  }
  return true;
}

inline FiniteLattice build_from_covers(std::size_t n, std::span<const PrimeInterval> covers) {
  return FiniteLattice::from_covers(n, covers);
}

inline Element meet(const FiniteLattice& lattice, Element x, Element y) { return lattice.meet(x, y); }
inline Element join(const FiniteLattice& lattice, Element x, Element y) { return lattice.join(x, y); }
inline bool leq(const FiniteLattice& lattice, Element x, Element y) { return lattice.leq(x, y); }

inline std::vector<PrimeInterval> prime_intervals(const FiniteLattice& lattice) {
  return {lattice.covers().begin(), lattice.covers().end()};
}

/// Nonzero elements with exactly one lower cover.
inline std::vector<Element> join_irreducibles(const FiniteLattice& lattice) {
  std::vector<Element> result;
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    if (lattice.lower_covers(static_cast<Element>(x)).size() == 1) result.push_back(static_cast<Element>(x));
  }
  return result;
}

/// Non-top elements with exactly one upper cover.
inline std::vector<Element> meet_irreducibles(const FiniteLattice& lattice) {
  std::vector<Element> result;
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    if (lattice.upper_covers(static_cast<Element>(x)).size() == 1) result.push_back(static_cast<Element>(x));
  }
  return result;
}

/// A prime interval [a,b] whose bottom is meet-irreducible and whose top is
/// join-irreducible.
inline bool is_narrows(const FiniteLattice& lattice, PrimeInterval p) {
  return lattice.upper_covers(p.a).size() == 1 && lattice.lower_covers(p.b).size() == 1;
}

inline bool is_chain(const FiniteLattice& lattice) {
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    auto e = static_cast<Element>(x);
    if (detail::count_bits(lattice.up_row(e)) + detail::count_bits(lattice.down_row(e)) != lattice.size() + 1) {
      return false;
    }
  }
  return true;
}

/// Order-reversed lattice. Element x becomes n-1-x.
inline FiniteLattice dual(const FiniteLattice& lattice) {
  const auto last = static_cast<Element>(lattice.size() - 1);
  std::vector<PrimeInterval> edges;
  edges.reserve(lattice.covers().size());
  for (const auto& [a, b] : lattice.covers()) {
    edges.push_back({static_cast<Element>(last - b), static_cast<Element>(last - a)});
  }
  return FiniteLattice::from_covers(lattice.size(), edges);
}

/// Rebuilds the lattice with element x renamed to perm[x] before label
/// normalization. Used to exercise relabeling invariance.
inline FiniteLattice relabel(const FiniteLattice& lattice, std::span<const Element> perm) {
  if (perm.size() != lattice.size()) throw LatconError(ErrorKind::InvalidArgument, "permutation size mismatch");
  std::vector<PrimeInterval> edges;
  edges.reserve(lattice.covers().size());
  for (const auto& [a, b] : lattice.covers()) edges.push_back({perm[a], perm[b]});
  return FiniteLattice::from_covers(lattice.size(), edges);
}

/// Length of the longest chain from the bottom to each element.
inline std::vector<std::size_t> heights(const FiniteLattice& lattice) {
  std::vector<std::size_t> height(lattice.size(), 0);
  for (const auto& [a, b] : lattice.covers()) height[b] = std::max(height[b], height[a] + 1);
  return height;
}

}  // namespace latcon
