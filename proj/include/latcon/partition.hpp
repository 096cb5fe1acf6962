#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latcon/error.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

namespace detail {

/// Disjoint sets with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true when x and y were in different sets.
  bool unite(std::size_t x, std::size_t y) noexcept {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace detail

/// Set partition of 0..n-1 in canonical form: block ids are assigned in
/// order of first occurrence, so block 0 contains element 0 and the blocks
/// are numbered by their least elements.
class Partition {
 public:
  Partition() = default;

  /// Canonicalizes an arbitrary block labeling.
  template <class Int>
  static Partition from_labels(std::span<const Int> labels) {
    Partition p;
    p.block_.resize(labels.size());
    std::vector<std::pair<Int, Element>> seen;
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == labels[x]; });
      if (it == seen.end()) {
        seen.emplace_back(labels[x], static_cast<Element>(seen.size()));
        p.block_[x] = seen.back().second;
      } else {
        p.block_[x] = it->second;
      }
    }
    p.blocks_ = seen.size();
    return p;
  }

  /// Identity relation Δ: all singletons.
  static Partition discrete(std::size_t n) {
    Partition p;
    p.block_.resize(n);
    std::iota(p.block_.begin(), p.block_.end(), Element{0});
    p.blocks_ = n;
    return p;
  }

  /// Full relation ∇: one block.
  static Partition full(std::size_t n) {
    Partition p;
    p.block_.assign(n, 0);
    p.blocks_ = n == 0 ? 0 : 1;
    return p;
  }

  static Partition from_union_find(detail::UnionFind& sets, std::size_t n) {
    Partition p;
    p.block_.resize(n);
    std::vector<std::size_t> id_of_root(n, n);
    std::size_t next = 0;
    for (std::size_t x = 0; x < n; ++x) {
      auto root = sets.find(x);
      if (id_of_root[root] == n) id_of_root[root] = next++;
      p.block_[x] = static_cast<Element>(id_of_root[root]);
    }
    p.blocks_ = next;
    return p;
  }

  /// Parses the text form "0,1|2,3". The blocks must cover 0..n-1 exactly once.
  static Partition parse(std::string_view text) {
    std::vector<std::vector<std::size_t>> blocks(1);
    std::size_t count = 0;
    std::size_t pos = 0;
    auto bad = [&](const std::string& why) {
      return LatconError(ErrorKind::ParseError, "partition \"" + std::string(text) + "\": " + why);
    };
    while (pos <= text.size()) {
      while (pos < text.size() && text[pos] == ' ') ++pos;
      std::size_t value = 0;
      auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{}) throw bad("expected an element at offset " + std::to_string(pos));
      blocks.back().push_back(value);
      ++count;
      pos = static_cast<std::size_t>(end - text.data());
      while (pos < text.size() && text[pos] == ' ') ++pos;
      if (pos == text.size()) break;
      if (text[pos] == '|') {
        blocks.emplace_back();
      } else if (text[pos] != ',') {
        throw bad(std::string("unexpected character '") + text[pos] + "'");
      }
      ++pos;
    }
    if (count > kMaxElements) throw bad("too many elements");
    std::vector<std::size_t> labels(count, count);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (auto x : blocks[b]) {
        if (x >= count) throw bad("element " + std::to_string(x) + " out of range 0.." + std::to_string(count - 1));
        if (labels[x] != count) throw bad("element " + std::to_string(x) + " listed twice");
        labels[x] = b;
      }
    }
    return from_labels(std::span<const std::size_t>(labels));
  }

  std::size_t size() const noexcept { return block_.size(); }
  std::size_t block_count() const noexcept { return blocks_; }
  Element block_of(Element x) const noexcept { return block_[x]; }
  bool same_block(Element x, Element y) const noexcept { return block_[x] == block_[y]; }
  std::span<const Element> block_ids() const noexcept { return block_; }

  bool is_discrete() const noexcept { return blocks_ == block_.size(); }
  bool is_full() const noexcept { return blocks_ <= 1; }

  /// Blocks in canonical order, each sorted ascending.
  std::vector<std::vector<Element>> blocks() const {
    std::vector<std::vector<Element>> result(blocks_);
    for (std::size_t x = 0; x < block_.size(); ++x) result[block_[x]].push_back(static_cast<Element>(x));
    return result;
  }

  /// True when every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const noexcept {
    if (coarser.blocks_ > blocks_ || coarser.block_.size() != block_.size()) return false;
    constexpr Element kUnset = static_cast<Element>(-1);
    std::array<Element, 64> small;
    std::vector<Element> large;
    std::span<Element> image;
    if (blocks_ <= small.size()) {
      image = std::span<Element>(small.data(), blocks_);
    } else {
      large.resize(blocks_);
      image = large;
    }
    std::fill(image.begin(), image.end(), kUnset);
    for (std::size_t x = 0; x < block_.size(); ++x) {
      auto& target = image[block_[x]];
      if (target == kUnset) {
        target = coarser.block_[x];
      } else if (target != coarser.block_[x]) {
        return false;
      }
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    bool first_block = true;
    for (const auto& block : blocks()) {
      if (!first_block) out += '|';
      first_block = false;
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(block[i]);
      }
    }
    return out;
  }

  friend bool operator==(const Partition& lhs, const Partition& rhs) noexcept { return lhs.block_ == rhs.block_; }
  friend auto operator<=>(const Partition& lhs, const Partition& rhs) noexcept { return lhs.block_ <=> rhs.block_; }

 private:
  std::vector<Element> block_;
  std::size_t blocks_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept {
    auto ids = p.block_ids();
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(ids.data()), ids.size() * sizeof(Element)));
  }
};

}  // namespace latcon
