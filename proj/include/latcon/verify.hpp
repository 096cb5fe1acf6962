#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/constructors.hpp"
#include "latcon/enumeration.hpp"
#include "latcon/isomorphism.hpp"
#include "latcon/lattice.hpp"
#include "latcon/parallel.hpp"

namespace latcon {

/// Outcome of one executable statement about one lattice. `witness` is set
/// exactly when the check failed.
struct CheckResult {
  std::string check_name;
  std::string subject;
  bool passed = true;
  std::optional<std::string> witness;

  static CheckResult pass(std::string name, std::string subject) {
    return {std::move(name), std::move(subject), true, std::nullopt};
  }
  static CheckResult fail(std::string name, std::string subject, std::string witness) {
    return {std::move(name), std::move(subject), false, std::move(witness)};
  }

  /// name, subject, PASS/FAIL, witness ("-" when passing), tab separated.
  std::string tsv() const {
    return check_name + '\t' + subject + '\t' + (passed ? "PASS" : "FAIL") + '\t' + witness.value_or("-");
  }
};

namespace detail {

inline std::optional<std::uint64_t> pow2(std::size_t exponent) {
  if (exponent >= 64) return std::nullopt;
  return std::uint64_t{1} << exponent;
}

inline std::string pow2_text(std::size_t exponent) { return "2^" + std::to_string(exponent); }

/// Down-sets of the poset on `elements` (bit i set for element i) where
/// below[i] is the set of elements strictly below i. Stops counting at `stop`.
inline std::uint64_t count_down_sets(std::uint64_t elements, const std::vector<std::uint64_t>& below,
                                     const std::vector<std::uint64_t>& above,
                                     std::unordered_map<std::uint64_t, std::uint64_t>& memo, std::uint64_t stop) {
  if (elements == 0) return 1;
  if (auto it = memo.find(elements); it != memo.end()) return it->second;
  const auto x = static_cast<std::size_t>(std::countr_zero(elements));
  const auto bit = std::uint64_t{1} << x;
  // Down-sets avoiding x avoid everything above it; those containing x
  // contain everything below it.
  auto without = count_down_sets(elements & ~(above[x] | bit), below, above, memo, stop);
  auto with = without >= stop ? 0 : count_down_sets(elements & ~(below[x] | bit), below, above, memo, stop);
  auto total = std::min(without + with, stop);
  memo.emplace(elements, total);
  return total;
}

/// A finite lattice embeds into the down-sets of its join-irreducibles and
/// is distributive exactly when that embedding is onto.
inline std::optional<std::string> birkhoff_distributivity(const FiniteLattice& lattice) {
  auto irreducibles = join_irreducibles(lattice);
  if (irreducibles.size() > 64) return "more than 64 join-irreducibles";
  const auto k = irreducibles.size();
  std::vector<std::uint64_t> below(k, 0);
  std::vector<std::uint64_t> above(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && lattice.leq(irreducibles[j], irreducibles[i])) {
        below[i] |= std::uint64_t{1} << j;
        above[j] |= std::uint64_t{1} << i;
      }
    }
  }
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  const auto all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const auto stop = static_cast<std::uint64_t>(lattice.size()) + 1;
  const auto down_sets = count_down_sets(all, below, above, memo, stop);
  if (down_sets == lattice.size()) return std::nullopt;
  return std::to_string(lattice.size()) + " elements but " + (down_sets >= stop ? "more" : std::to_string(down_sets)) +
         " down-sets of join-irreducibles";
}

}  // namespace detail

inline std::string subject_of(const FiniteLattice& lattice) { return canonical_form(lattice).hex(); }

/// Every member of the congruence set is compatible with meets and joins,
/// and Δ and ∇ are present.
inline CheckResult check_congruence_guard(const ConSet& cons, const std::string& subject) {
  const std::string name = "congruence_guard";
  const auto& lattice = cons.host();
  for (const auto& p : cons.members()) {
    if (auto violation = find_congruence_violation(lattice, p)) {
      return CheckResult::fail(name, subject, "member " + p.to_string() + " is not a congruence: " + violation->describe());
    }
  }
  for (const auto& bound : {Partition::discrete(lattice.size()), Partition::full(lattice.size())}) {
    if (!cons.contains(bound)) return CheckResult::fail(name, subject, "missing " + bound.to_string());
  }
  return CheckResult::pass(name, subject);
}

/// |Con(L)| <= 2^(n-1), with equality exactly for chains.
inline CheckResult check_upper_bound(const ConSet& cons, const std::string& subject) {
  const std::string name = "upper_bound";
  const auto n = cons.host().size();
  const auto count = cons.size();
  const auto bound = detail::pow2(n - 1);
  const bool chain_like = is_chain(cons.host());
  if (bound && count > *bound) {
    return CheckResult::fail(name, subject, "|Con|=" + std::to_string(count) + " exceeds " + detail::pow2_text(n - 1));
  }
  const bool equality = bound && count == *bound;
  if (equality != chain_like) {
    return CheckResult::fail(name, subject,
                             "|Con|=" + std::to_string(count) + (equality ? " attains " : " misses ") +
                                 detail::pow2_text(n - 1) + " but the lattice is " + (chain_like ? "" : "not ") +
                                 "a chain");
  }
  return CheckResult::pass(name, subject);
}

/// |Con(L)| is 2^(n-1) or at most 2^(n-2).
inline CheckResult check_gap(const ConSet& cons, const std::string& subject) {
  const std::string name = "gap";
  const auto n = cons.host().size();
  const auto count = cons.size();
  const auto full = detail::pow2(n - 1);
  if (!full || count == *full) return CheckResult::pass(name, subject);
  if (n >= 2 && count <= *detail::pow2(n - 2)) return CheckResult::pass(name, subject);
  return CheckResult::fail(name, subject,
                           "|Con|=" + std::to_string(count) + " lies strictly between " +
                               detail::pow2_text(n >= 2 ? n - 2 : 0) + " and " + detail::pow2_text(n - 1));
}

/// |Con(L)| = 2^(n-2) iff L is C_p ∔ B_2 ∔ C_q. Vacuous for n = 1.
inline CheckResult check_extremal(const ConSet& cons, const std::string& subject) {
  const std::string name = "extremal";
  const auto n = cons.host().size();
  if (n < 2) return CheckResult::pass(name, subject);
  const auto target = detail::pow2(n - 2);
  const bool extremal = target && cons.size() == *target;
  const auto shape = decompose_chain_b2_chain(cons.host());
  if (extremal == shape.has_value()) return CheckResult::pass(name, subject);
  std::string decomposition = shape ? "(" + std::to_string(shape->first) + "," + std::to_string(shape->second) + ")"
                                    : "none";
  return CheckResult::fail(name, subject,
                           "|Con|=" + std::to_string(cons.size()) + " vs " + detail::pow2_text(n - 2) +
                               ", decomposition " + decomposition);
}

/// Con(L) has an atom and every atom is con(a,b) for a prime interval [a,b].
inline CheckResult check_atoms(const ConSet& cons, const std::string& subject) {
  const std::string name = "atoms";
  const auto& lattice = cons.host();
  if (lattice.size() < 2) return CheckResult::pass(name, subject);
  auto atoms = atoms_of_con(cons);
  if (atoms.empty()) return CheckResult::fail(name, subject, "Con(L) has no atom");
  auto generators = prime_interval_congruences(lattice);
  std::unordered_set<Partition, PartitionHash> principal(generators.begin(), generators.end());
  for (const auto& atom : atoms) {
    if (!principal.contains(atom)) {
      return CheckResult::fail(name, subject, "atom " + atom.to_string() + " is not generated by a prime interval");
    }
  }
  return CheckResult::pass(name, subject);
}

/// For every atom Θ, Ψ ↦ Θ ∨ Ψ has at most two preimages per image.
inline CheckResult check_two_preimages(const ConSet& cons, const std::string& subject) {
  const std::string name = "two_preimages";
  const auto& lattice = cons.host();
  if (lattice.size() < 2) return CheckResult::pass(name, subject);
  for (const auto& theta : atoms_of_con(cons)) {
    std::unordered_map<Partition, std::size_t, PartitionHash> preimages;
    for (const auto& psi : cons.members()) {
      auto image = join_congruence(lattice, theta, psi);
      if (++preimages[image] > 2) {
        return CheckResult::fail(name, subject,
                                 "atom " + theta.to_string() + ": image " + image.to_string() +
                                     " has more than two preimages");
      }
    }
  }
  return CheckResult::pass(name, subject);
}

/// 2·|Con(L/Θ)| >= |Con(L)| for every atom Θ.
inline CheckResult check_quotient_inequality(const ConSet& cons, const std::string& subject,
                                             const CongruenceOptions& options = {}) {
  const std::string name = "quotient_inequality";
  const auto& lattice = cons.host();
  if (lattice.size() < 2) return CheckResult::pass(name, subject);
  for (const auto& theta : atoms_of_con(cons)) {
    auto reduced = quotient(lattice, theta);
    auto count = count_congruences(reduced.lattice, options);
    if (2 * count < cons.size()) {
      return CheckResult::fail(name, subject,
                               "atom " + theta.to_string() + ": |Con(L/atom)|=" + std::to_string(count) +
                                   " < |Con(L)|/2 with |Con(L)|=" + std::to_string(cons.size()));
    }
  }
  return CheckResult::pass(name, subject);
}

/// For a narrows [a,b], {a,b} is the only non-singleton block of con(a,b).
inline CheckResult check_narrows_block(const FiniteLattice& lattice, const std::string& subject) {
  const std::string name = "narrows_block";
  for (const auto& edge : lattice.covers()) {
    if (!is_narrows(lattice, edge)) continue;
    auto theta = principal_congruence(lattice, edge.a, edge.b);
    if (theta.block_count() != lattice.size() - 1 || !theta.same_block(edge.a, edge.b)) {
      return CheckResult::fail(name, subject,
                               "narrows [" + std::to_string(edge.a) + "," + std::to_string(edge.b) +
                                   "] generates " + theta.to_string());
    }
  }
  return CheckResult::pass(name, subject);
}

/// If |Con(L)| < 2^(n-1) and a narrows generates an atom Θ, L/Θ is not a chain.
inline CheckResult check_narrows_atom_quotient(const ConSet& cons, const std::string& subject) {
  const std::string name = "narrows_atom_quotient";
  const auto& lattice = cons.host();
  const auto full = detail::pow2(lattice.size() - 1);
  if (full && cons.size() >= *full) return CheckResult::pass(name, subject);
  auto atoms = atoms_of_con(cons);
  std::unordered_set<Partition, PartitionHash> atom_set(atoms.begin(), atoms.end());
  for (const auto& edge : lattice.covers()) {
    if (!is_narrows(lattice, edge)) continue;
    auto theta = principal_congruence(lattice, edge.a, edge.b);
    if (!atom_set.contains(theta)) continue;
    if (is_chain(quotient(lattice, theta).lattice)) {
      return CheckResult::fail(name, subject,
                               "narrows [" + std::to_string(edge.a) + "," + std::to_string(edge.b) +
                                   "] generates atom " + theta.to_string() + " with a chain quotient");
    }
  }
  return CheckResult::pass(name, subject);
}

/// A prime interval that is not a narrows generates a congruence with at
/// most n-2 blocks.
inline CheckResult check_non_narrows_shrink(const FiniteLattice& lattice, const std::string& subject) {
  const std::string name = "non_narrows_shrink";
  for (const auto& edge : lattice.covers()) {
    if (is_narrows(lattice, edge)) continue;
    auto theta = principal_congruence(lattice, edge.a, edge.b);
    if (theta.block_count() + 2 > lattice.size()) {
      return CheckResult::fail(name, subject,
                               "prime interval [" + std::to_string(edge.a) + "," + std::to_string(edge.b) +
                                   "] generates " + theta.to_string() + " with " +
                                   std::to_string(theta.block_count()) + " blocks");
    }
  }
  return CheckResult::pass(name, subject);
}

/// Con(K ∔ 2) ≅ Con(2 ∔ K) ≅ Con(K) × 2.
inline CheckResult check_glue_two(const ConSet& cons, const std::string& subject,
                                  const CongruenceOptions& options = {}) {
  const std::string name = "glue_two";
  const auto& lattice = cons.host();
  const auto two = chain(2);
  auto above = congruence_lattice(glued_sum(lattice, two), options).lattice;
  auto below = congruence_lattice(glued_sum(two, lattice), options).lattice;
  auto product = direct_product(congruence_lattice(cons).lattice, two);
  if (!are_isomorphic(above, product)) {
    return CheckResult::fail(name, subject,
                             "Con(K+2) with " + std::to_string(above.size()) + " elements is not isomorphic to Con(K)x2 with " +
                                 std::to_string(product.size()));
  }
  if (!are_isomorphic(below, product)) {
    return CheckResult::fail(name, subject,
                             "Con(2+K) with " + std::to_string(below.size()) + " elements is not isomorphic to Con(K)x2 with " +
                                 std::to_string(product.size()));
  }
  return CheckResult::pass(name, subject);
}

/// Largest congruence lattice checked triple by triple; beyond it the
/// join-irreducible count characterization is used.
inline constexpr std::size_t kTripleDistributivityLimit = 512;

/// Con(L) satisfies x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z).
inline CheckResult check_distributive(const ConSet& cons, const std::string& subject) {
  const std::string name = "distributive";
  auto con = congruence_lattice(cons);
  const auto& lattice = con.lattice;
  const auto m = lattice.size();
  if (m > kTripleDistributivityLimit) {
    if (auto failure = detail::birkhoff_distributivity(lattice)) {
      return CheckResult::fail(name, subject, "Con(L) is not distributive: " + *failure);
    }
    return CheckResult::pass(name, subject);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        auto x = static_cast<Element>(i);
        auto y = static_cast<Element>(j);
        auto z = static_cast<Element>(k);
        auto lhs = lattice.meet(x, lattice.join(y, z));
        auto rhs = lattice.join(lattice.meet(x, y), lattice.meet(x, z));
        if (lhs != rhs) {
          return CheckResult::fail(name, subject,
                                   "x=" + con.partitions[i].to_string() + " y=" + con.partitions[j].to_string() +
                                       " z=" + con.partitions[k].to_string() + " violate distributivity");
        }
      }
    }
  }
  return CheckResult::pass(name, subject);
}

// Single-lattice forms.
inline CheckResult check_upper_bound(const FiniteLattice& lattice) { return check_upper_bound(all_congruences(lattice), subject_of(lattice)); }
inline CheckResult check_gap(const FiniteLattice& lattice) { return check_gap(all_congruences(lattice), subject_of(lattice)); }
inline CheckResult check_extremal(const FiniteLattice& lattice) { return check_extremal(all_congruences(lattice), subject_of(lattice)); }
inline CheckResult check_atoms(const FiniteLattice& lattice) { return check_atoms(all_congruences(lattice), subject_of(lattice)); }
inline CheckResult check_two_preimages(const FiniteLattice& lattice) { return check_two_preimages(all_congruences(lattice), subject_of(lattice)); }
inline CheckResult check_quotient_inequality(const FiniteLattice& lattice) { return check_quotient_inequality(all_congruences(lattice), subject_of(lattice)); }
inline CheckResult check_narrows_atom_quotient(const FiniteLattice& lattice) { return check_narrows_atom_quotient(all_congruences(lattice), subject_of(lattice)); }
inline CheckResult check_glue_two(const FiniteLattice& lattice) { return check_glue_two(all_congruences(lattice), subject_of(lattice)); }
inline CheckResult check_distributive(const FiniteLattice& lattice) { return check_distributive(all_congruences(lattice), subject_of(lattice)); }

inline CheckResult check_narrows_block(const FiniteLattice& lattice) {
  return check_narrows_block(lattice, subject_of(lattice));
}
inline CheckResult check_non_narrows_shrink(const FiniteLattice& lattice) {
  return check_non_narrows_shrink(lattice, subject_of(lattice));
}

/// Runs every check against `cons` (normally all_congruences of its host).
/// A check that cannot run, for example because a size cap is hit, is
/// reported as failed with the error as witness.
inline std::vector<CheckResult> run_all(const ConSet& cons, const CongruenceOptions& options = {}) {
  const auto& lattice = cons.host();
  const auto subject = subject_of(lattice);
  using Check = std::function<CheckResult()>;
  const std::vector<std::pair<const char*, Check>> checks = {
      {"congruence_guard", [&] { return check_congruence_guard(cons, subject); }},
      {"upper_bound", [&] { return check_upper_bound(cons, subject); }},
      {"gap", [&] { return check_gap(cons, subject); }},
      {"extremal", [&] { return check_extremal(cons, subject); }},
      {"atoms", [&] { return check_atoms(cons, subject); }},
      {"two_preimages", [&] { return check_two_preimages(cons, subject); }},
      {"quotient_inequality", [&] { return check_quotient_inequality(cons, subject, options); }},
      {"narrows_block", [&] { return check_narrows_block(lattice, subject); }},
      {"narrows_atom_quotient", [&] { return check_narrows_atom_quotient(cons, subject); }},
      {"non_narrows_shrink", [&] { return check_non_narrows_shrink(lattice, subject); }},
      {"glue_two", [&] { return check_glue_two(cons, subject, options); }},
      {"distributive", [&] { return check_distributive(cons, subject); }},
  };
  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (const auto& [name, check] : checks) {
    try {
      results.push_back(check());
    } catch (const LatconError& error) {
      results.push_back(CheckResult::fail(name, subject, error.what()));
    }
  }
  return results;
}

inline std::vector<CheckResult> run_all(const FiniteLattice& lattice, const CongruenceOptions& options = {}) {
  return run_all(all_congruences(lattice, options), options);
}

/// Runs every check on every catalog member; results keep catalog order.
inline std::vector<CheckResult> run_all(const LatticeCatalog& catalog, std::size_t jobs = 1,
                                        const CongruenceOptions& options = {}) {
  std::vector<std::vector<CheckResult>> per_member(catalog.members.size());
  parallel_for(catalog.members.size(), jobs,
               [&](std::size_t i) { per_member[i] = run_all(catalog.members[i], options); });
  std::vector<CheckResult> results;
  for (auto& chunk : per_member) results.insert(results.end(), chunk.begin(), chunk.end());
  return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace latcon
