#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "latcon/lattice.hpp"

namespace latcon {

/// Complete isomorphism invariant: n followed by the covering pairs under
/// the canonical labeling, all as 16-bit big-endian integers.
struct CanonicalCertificate {
  std::vector<std::uint8_t> bytes;

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
      out += kDigits[b >> 4];
      out += kDigits[b & 15];
    }
    return out;
  }

  friend auto operator<=>(const CanonicalCertificate&, const CanonicalCertificate&) = default;
};

namespace detail {

using Coloring = std::vector<std::uint32_t>;

/// Cover adjacency of one or more lattices laid side by side.
struct CoverGraph {
  std::vector<std::vector<std::uint32_t>> up;
  std::vector<std::vector<std::uint32_t>> down;

  std::size_t size() const noexcept { return up.size(); }

  void append(const FiniteLattice& lattice) {
    const auto offset = static_cast<std::uint32_t>(size());
    up.resize(offset + lattice.size());
    down.resize(offset + lattice.size());
    for (const auto& [a, b] : lattice.covers()) {
      up[offset + a].push_back(offset + b);
      down[offset + b].push_back(offset + a);
    }
  }
};

/// Replaces arbitrary color values by dense ranks ordered by `keys`.
template <class Key>
std::size_t rank_by(const std::vector<Key>& keys, Coloring& colors) {
  std::vector<std::uint32_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](auto lhs, auto rhs) { return keys[lhs] < keys[rhs]; });
  colors.assign(keys.size(), 0);
  std::uint32_t rank = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && keys[order[i - 1]] < keys[order[i]]) ++rank;
    colors[order[i]] = rank;
  }
  return keys.empty() ? 0 : rank + 1;
}

/// Height first, so every refinement of this coloring orders elements in a
/// way compatible with the lattice order.
inline void initial_keys(const FiniteLattice& lattice, std::vector<std::array<std::uint32_t, 4>>& keys) {
  auto height = heights(lattice);
  std::vector<std::size_t> depth(lattice.size(), 0);
  for (auto it = lattice.covers().rbegin(); it != lattice.covers().rend(); ++it) {
    depth[it->a] = std::max(depth[it->a], depth[it->b] + 1);
  }
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    auto e = static_cast<Element>(x);
    keys.push_back({static_cast<std::uint32_t>(height[x]), static_cast<std::uint32_t>(depth[x]),
                    static_cast<std::uint32_t>(lattice.lower_covers(e).size()),
                    static_cast<std::uint32_t>(lattice.upper_covers(e).size())});
  }
}

/// Splits color classes by the multisets of neighbor colors until stable.
/// Ranks stay ordered by the incoming colors.
inline std::size_t refine(const CoverGraph& graph, Coloring& colors) {
  std::vector<std::uint32_t> dense_keys(colors.begin(), colors.end());
  std::size_t classes = rank_by(dense_keys, colors);
  std::vector<std::vector<std::uint32_t>> signature(graph.size());
  while (classes < graph.size()) {
    for (std::size_t v = 0; v < graph.size(); ++v) {
      auto& sig = signature[v];
      sig.clear();
      sig.push_back(colors[v]);
      sig.push_back(static_cast<std::uint32_t>(graph.up[v].size()));
      auto mark = sig.size();
      for (auto u : graph.up[v]) sig.push_back(colors[u]);
      std::sort(sig.begin() + static_cast<std::ptrdiff_t>(mark), sig.end());
      mark = sig.size();
      for (auto d : graph.down[v]) sig.push_back(colors[d]);
      std::sort(sig.begin() + static_cast<std::ptrdiff_t>(mark), sig.end());
    }
    Coloring next;
    auto refined = rank_by(signature, next);
    colors = std::move(next);
    if (refined == classes) break;
    classes = refined;
  }
  return classes;
}

/// Twin classes: elements with identical upper and lower covers. Swapping
/// two twins is an automorphism that fixes everything else.
inline std::vector<std::uint32_t> twin_classes(const CoverGraph& graph) {
  std::map<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>, std::uint32_t> ids;
  std::vector<std::uint32_t> twin(graph.size());
  for (std::size_t v = 0; v < graph.size(); ++v) {
    auto up = graph.up[v];
    auto down = graph.down[v];
    std::sort(up.begin(), up.end());
    std::sort(down.begin(), down.end());
    auto [it, fresh] = ids.try_emplace({std::move(up), std::move(down)}, static_cast<std::uint32_t>(ids.size()));
    twin[v] = it->second;
  }
  return twin;
}

/// Individualizes v (and w, when given) inside their shared color class.
inline Coloring individualize(const Coloring& colors, std::uint32_t v, std::optional<std::uint32_t> w = {}) {
  Coloring next(colors.size());
  const auto target = colors[v];
  for (std::size_t u = 0; u < colors.size(); ++u) {
    bool chosen = u == v || (w && u == *w);
    next[u] = 2 * colors[u] + (colors[u] == target && !chosen ? 1 : 0);
  }
  return next;
}

inline std::optional<std::uint32_t> first_split_cell(const Coloring& colors, std::size_t classes,
                                                     std::size_t members_per_singleton) {
  std::vector<std::size_t> count(classes, 0);
  for (auto c : colors) ++count[c];
  for (std::size_t c = 0; c < classes; ++c) {
    if (count[c] > members_per_singleton) return static_cast<std::uint32_t>(c);
  }
  return std::nullopt;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const FiniteLattice& lattice) : lattice_(lattice) {
    graph_.append(lattice);
    twin_ = twin_classes(graph_);
  }

  std::vector<Element> run() {
    std::vector<std::array<std::uint32_t, 4>> keys;
    initial_keys(lattice_, keys);
    Coloring colors;
    rank_by(keys, colors);
    descend(std::move(colors));
    return best_label_;
  }

 private:
  void descend(Coloring colors) {
    auto classes = refine(graph_, colors);
    auto cell = first_split_cell(colors, classes, 1);
    if (!cell) {
      leaf(colors);
      return;
    }
    std::vector<bool> tried(graph_.size(), false);
    for (std::uint32_t v = 0; v < graph_.size(); ++v) {
      if (colors[v] != *cell || tried[twin_[v]]) continue;
      tried[twin_[v]] = true;
      descend(individualize(colors, v));
    }
  }

  void leaf(const Coloring& colors) {
    std::vector<PrimeInterval> encoding;
    encoding.reserve(lattice_.covers().size());
    for (const auto& [a, b] : lattice_.covers()) {
      encoding.push_back({static_cast<Element>(colors[a]), static_cast<Element>(colors[b])});
    }
    std::sort(encoding.begin(), encoding.end());
    if (best_label_.empty() || encoding < best_) {
      best_ = std::move(encoding);
      best_label_.assign(colors.begin(), colors.end());
    }
  }

  const FiniteLattice& lattice_;
  CoverGraph graph_;
  std::vector<std::uint32_t> twin_;
  std::vector<PrimeInterval> best_;
  std::vector<Element> best_label_;
};

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteLattice& lhs, const FiniteLattice& rhs) : lhs_(lhs), rhs_(rhs) {
    graph_.append(lhs);
    graph_.append(rhs);
    twin_ = twin_classes(graph_);
  }

  std::optional<std::vector<Element>> run() {
    std::vector<std::array<std::uint32_t, 4>> keys;
    initial_keys(lhs_, keys);
    initial_keys(rhs_, keys);
    Coloring colors;
    rank_by(keys, colors);
    return descend(std::move(colors));
  }

 private:
  std::optional<std::vector<Element>> descend(Coloring colors) {
    const auto n = lhs_.size();
    auto classes = refine(graph_, colors);
    std::vector<std::size_t> balance(classes, 0);
    for (std::size_t v = 0; v < n; ++v) ++balance[colors[v]];
    for (std::size_t v = n; v < 2 * n; ++v) {
      if (balance[colors[v]]-- == 0) return std::nullopt;
    }
    auto cell = first_split_cell(colors, classes, 2);
    if (!cell) return leaf(colors);

    std::uint32_t v = 0;
    while (colors[v] != *cell) ++v;
    std::vector<bool> tried(graph_.size(), false);
    for (auto w = static_cast<std::uint32_t>(n); w < 2 * n; ++w) {
      if (colors[w] != *cell || tried[twin_[w]]) continue;
      tried[twin_[w]] = true;
      if (auto found = descend(individualize(colors, v, w))) return found;
    }
    return std::nullopt;
  }

  std::optional<std::vector<Element>> leaf(const Coloring& colors) const {
    const auto n = lhs_.size();
    std::vector<Element> by_color(n);
    for (std::size_t w = n; w < 2 * n; ++w) by_color[colors[w]] = static_cast<Element>(w - n);
    std::vector<Element> map(n);
    for (std::size_t v = 0; v < n; ++v) map[v] = by_color[colors[v]];
    auto target = rhs_.covers();
    for (const auto& [a, b] : lhs_.covers()) {
      if (!std::binary_search(target.begin(), target.end(), PrimeInterval{map[a], map[b]})) return std::nullopt;
    }
    return map;
  }

  const FiniteLattice& lhs_;
  const FiniteLattice& rhs_;
  CoverGraph graph_;
  std::vector<std::uint32_t> twin_;
};

}  // namespace detail

/// Canonical labeling: maps each element to its canonical label. The labels
/// form a linear extension, so relabeling keeps the lattice normalized.
inline std::vector<Element> canonical_labeling(const FiniteLattice& lattice) {
  return detail::CanonicalSearch(lattice).run();
}

inline FiniteLattice canonical_lattice(const FiniteLattice& lattice) {
  auto label = canonical_labeling(lattice);
  std::vector<PrimeInterval> covers;
  covers.reserve(lattice.covers().size());
  for (const auto& [a, b] : lattice.covers()) covers.push_back({label[a], label[b]});
  return FiniteLattice::from_covers(lattice.size(), covers);
}

inline CanonicalCertificate certificate_of_labeled(const FiniteLattice& lattice) {
  CanonicalCertificate cert;
  auto put = [&cert](std::size_t value) {
    cert.bytes.push_back(static_cast<std::uint8_t>(value >> 8));
    cert.bytes.push_back(static_cast<std::uint8_t>(value & 0xff));
  };
  put(lattice.size());
  for (const auto& [a, b] : lattice.covers()) {
    put(a);
    put(b);
  }
  return cert;
}

inline CanonicalCertificate canonical_form(const FiniteLattice& lattice) {
  return certificate_of_labeled(canonical_lattice(lattice));
}

/// An isomorphism lhs -> rhs as a label map, verified against the covers.
inline std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& lhs, const FiniteLattice& rhs) {
  if (lhs.size() != rhs.size() || lhs.covers().size() != rhs.covers().size()) return std::nullopt;
  return detail::IsomorphismSearch(lhs, rhs).run();
}

inline bool are_isomorphic(const FiniteLattice& lhs, const FiniteLattice& rhs) {
  return find_isomorphism(lhs, rhs).has_value();
}

}  // namespace latcon
