#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/constructors.hpp"
#include "latcon/error.hpp"
#include "latcon/isomorphism.hpp"
#include "latcon/lattice.hpp"
#include "latcon/parallel.hpp"

namespace latcon {

/// Pairwise non-isomorphic, canonically labeled lattices of one size, in
/// certificate order.
struct LatticeCatalog {
  std::size_t n = 0;
  std::vector<FiniteLattice> members;
  std::vector<CanonicalCertificate> certificates;
};

struct EnumerationOptions {
  std::size_t limit = 9;
  std::size_t jobs = 1;
};

/// Maps congruence count to the number of isomorphism classes attaining it.
struct SpectrumReport {
  std::size_t n = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t total_classes = 0;
};

namespace detail {

using CertifiedSet = std::map<CanonicalCertificate, FiniteLattice>;

inline void insert_canonical(CertifiedSet& set, const FiniteLattice& lattice) {
  auto canonical = canonical_lattice(lattice);
  auto cert = certificate_of_labeled(canonical);
  set.try_emplace(std::move(cert), std::move(canonical));
}

inline LatticeCatalog to_catalog(std::size_t n, CertifiedSet&& set) {
  LatticeCatalog catalog;
  catalog.n = n;
  for (auto& [cert, lattice] : set) {
    catalog.certificates.push_back(cert);
    catalog.members.push_back(std::move(lattice));
  }
  return catalog;
}

/// Every lattice with n >= 2 elements arises from an (n-1)-element lattice K
/// by adding a join-irreducible element j: j sits directly above some c in K
/// and below an up-set U of elements strictly above c. The result is a
/// lattice iff, for every x not below c, the elements of U above x have a
/// least one (U may be empty only when c is the top).
template <class Sink>
void extend_by_join_irreducible(const FiniteLattice& base, Sink&& sink) {
  const auto m = base.size();
  const auto j = static_cast<Element>(m);
  std::vector<std::uint64_t> up(m);
  for (std::size_t x = 0; x < m; ++x) up[x] = base.up_row(static_cast<Element>(x))[0];

  std::vector<PrimeInterval> covers(base.covers().begin(), base.covers().end());
  auto emit = [&](std::size_t c, std::uint64_t upset) {
    for (std::size_t x = 0; x < m; ++x) {
      if (base.leq(static_cast<Element>(x), static_cast<Element>(c))) continue;
      const auto above = upset & up[x];
      if (above == 0 || up[std::countr_zero(above)] != above) return;
    }
    auto edges = covers;
    edges.push_back({static_cast<Element>(c), j});
    for (auto u = upset; u != 0; u &= u - 1) edges.push_back({j, static_cast<Element>(std::countr_zero(u))});
    if (auto child = FiniteLattice::try_from_covers(m + 1, edges)) sink(*child);
  };

  for (std::size_t c = 0; c < m; ++c) {
    if (c == m - 1) {
      emit(c, 0);
      continue;
    }
    std::vector<std::size_t> strictly_above;
    for (auto u = up[c] & ~(std::uint64_t{1} << c); u != 0; u &= u - 1) {
      strictly_above.push_back(static_cast<std::size_t>(std::countr_zero(u)));
    }
    // Decide membership from the highest label down, so everything above a
    // candidate has already been decided.
    auto recurse = [&](auto&& self, std::size_t index, std::uint64_t upset) -> void {
      if (index == 0) {
        if (upset != 0) emit(c, upset);
        return;
      }
      const auto s = strictly_above[index - 1];
      self(self, index - 1, upset);
      const auto strict_up = up[s] & ~(std::uint64_t{1} << s);
      if ((strict_up & ~upset) == 0) self(self, index - 1, upset | (std::uint64_t{1} << s));
    };
    recurse(recurse, strictly_above.size(), 0);
  }
}

inline void check_limit(std::size_t n, std::size_t limit) {
  if (n == 0) throw LatconError(ErrorKind::InvalidArgument, "lattices have at least one element");
  if (n > limit) {
    throw LatconError(ErrorKind::LimitExceeded,
                      "n=" + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(limit));
  }
  if (n > 64) throw LatconError(ErrorKind::LimitExceeded, "enumeration supports at most 64 elements");
}

}  // namespace detail

/// Catalogs for every size 1..n.
inline std::vector<LatticeCatalog> enumerate_lattices_up_to(std::size_t n, const EnumerationOptions& options = {}) {
  detail::check_limit(n, options.limit);
  std::vector<LatticeCatalog> catalogs;
  {
    detail::CertifiedSet one;
    detail::insert_canonical(one, chain(1));
    catalogs.push_back(detail::to_catalog(1, std::move(one)));
  }
  for (std::size_t size = 2; size <= n; ++size) {
    const auto& parents = catalogs.back().members;
    detail::CertifiedSet merged;
    std::mutex merge_mutex;
    const auto jobs = std::max<std::size_t>(options.jobs, 1);
    parallel_for(jobs, jobs, [&](std::size_t worker) {
      detail::CertifiedSet local;
      for (std::size_t i = worker; i < parents.size(); i += jobs) {
        detail::extend_by_join_irreducible(parents[i], [&](const FiniteLattice& child) {
          detail::insert_canonical(local, child);
        });
      }
      std::lock_guard lock(merge_mutex);
      merged.merge(local);
    });
    catalogs.push_back(detail::to_catalog(size, std::move(merged)));
  }
  return catalogs;
}

inline LatticeCatalog enumerate_lattices(std::size_t n, const EnumerationOptions& options = {}) {
  return std::move(enumerate_lattices_up_to(n, options).back());
}

/// Brute force: every strict order on 0..n-1 with 0 at the bottom, n-1 at
/// the top and only pairs i < j related (each poset has such a natural
/// labeling), kept when it is a lattice.
inline LatticeCatalog naive_enumerate_lattices(std::size_t n) {
  if (n == 0) throw LatconError(ErrorKind::InvalidArgument, "lattices have at least one element");
  if (n > 7) throw LatconError(ErrorKind::LimitExceeded, "the naive enumerator is limited to n <= 7");
  detail::CertifiedSet found;
  if (n == 1) {
    detail::insert_canonical(found, chain(1));
    return detail::to_catalog(1, std::move(found));
  }
  std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) free_pairs.emplace_back(i, j);
  }
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_pairs.size()); ++mask) {
    for (auto& row : less) std::fill(row.begin(), row.end(), false);
    for (std::size_t x = 1; x < n; ++x) less[0][x] = true;
    for (std::size_t x = 0; x + 1 < n; ++x) less[x][n - 1] = true;
    for (std::size_t p = 0; p < free_pairs.size(); ++p) {
      if ((mask >> p) & 1u) less[free_pairs[p].first][free_pairs[p].second] = true;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (std::size_t j = i + 1; j < n && transitive; ++j) {
        if (!less[i][j]) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          if (less[j][k] && !less[i][k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (!transitive) continue;
    std::vector<PrimeInterval> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (less[i][j]) edges.push_back({static_cast<Element>(i), static_cast<Element>(j)});
      }
    }
    if (auto lattice = FiniteLattice::try_from_covers(n, edges)) detail::insert_canonical(found, *lattice);
  }
  return detail::to_catalog(n, std::move(found));
}

inline SpectrumReport spectrum(const LatticeCatalog& catalog, std::size_t jobs = 1,
                               const CongruenceOptions& options = {}) {
  std::vector<std::uint64_t> counts(catalog.members.size());
  parallel_for(catalog.members.size(), jobs,
               [&](std::size_t i) { counts[i] = count_congruences(catalog.members[i], options); });
  SpectrumReport report;
  report.n = catalog.n;
  for (auto c : counts) ++report.counts[c];
  report.total_classes = counts.size();
  return report;
}

inline SpectrumReport spectrum(std::size_t n, const EnumerationOptions& options = {},
                               const CongruenceOptions& congruence_options = {}) {
  return spectrum(enumerate_lattices(n, options), options.jobs, congruence_options);
}

}  // namespace latcon
