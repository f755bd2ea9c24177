#pragma once

// Brute-force ground truth on small vertex counts: every labeled simple graph
// (or loopless digraph) is enumerated and its cover balls compared directly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <ranges>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ucover/graph.hpp"
#include "ucover/tree.hpp"

namespace ucover {

inline constexpr std::size_t kMaxEnumeratedGraphOrder = 7;
inline constexpr std::size_t kMaxEnumeratedDigraphOrder = 4;

/// Bit b of `mask` selects the b-th pair (i, j), i < j, in lexicographic order.
SimpleGraph graph_from_mask(std::size_t n, std::uint64_t mask);
/// Bit b of `mask` selects the b-th ordered pair (i, j), i != j, in
/// lexicographic order.
Digraph digraph_from_mask(std::size_t n, std::uint64_t mask);

/// 2^(n(n-1)/2). Throws SizeError above kMaxEnumeratedGraphOrder.
std::uint64_t graph_count(std::size_t n);
/// 2^(n(n-1)). Throws SizeError above kMaxEnumeratedDigraphOrder.
std::uint64_t digraph_count(std::size_t n);

/// Every labeled simple graph on n vertices, once each.
inline auto enumerate_graphs(std::size_t n) {
  return std::views::iota(std::uint64_t{0}, graph_count(n)) |
         std::views::transform([n](std::uint64_t mask) { return graph_from_mask(n, mask); });
}

/// Every loopless digraph on n vertices, once each.
inline auto enumerate_digraphs(std::size_t n) {
  return std::views::iota(std::uint64_t{0}, digraph_count(n)) |
         std::views::transform([n](std::uint64_t mask) { return digraph_from_mask(n, mask); });
}

/// First enumerated graph whose cover balls match `trees` index by index.
std::optional<SimpleGraph> exists_realization_bruteforce(std::span<const RootedTree> trees, int h);

/// All neighborhood collections realizable on n vertices at depth h, stored
/// as sorted code lists so that membership is a multiset test.
class RealizabilityCatalog {
 public:
  RealizabilityCatalog(std::size_t n, int h);

  std::size_t n() const noexcept { return n_; }
  int h() const noexcept { return h_; }
  bool contains(std::span<const RootedTree> trees) const;
  std::size_t size() const noexcept { return collections_.size(); }
  /// Every distinct ball seen while enumerating.
  const std::vector<CanonCode>& pool() const noexcept { return pool_; }

 private:
  std::size_t n_;
  int h_;
  std::set<std::vector<std::string>> collections_;
  std::vector<CanonCode> pool_;
};

enum class MutationKind { ReplaceWithOtherClass, Duplicate, DropDeepLeaf };

/// Structured perturbation of a realizable collection, or empty when the kind
/// does not apply (e.g. duplicating in a collection of one tree).
///  - ReplaceWithOtherClass: t_i becomes a pool tree not isomorphic to t_i.
///  - Duplicate: t_j is overwritten with a copy of a non-isomorphic t_i.
///  - DropDeepLeaf: one leaf at maximal depth of some t_i is removed.
std::optional<std::vector<RootedTree>> mutate(std::span<const RootedTree> trees, MutationKind kind,
                                              std::span<const CanonCode> pool, std::mt19937_64& rng);

struct Disagreement {
  std::vector<std::string> collection;
  bool checker;
  bool oracle;
  std::string note;
};

struct OracleReport {
  std::size_t n = 0;
  int h = 0;
  std::size_t graphs = 0;
  std::size_t cases_total = 0;
  std::size_t positive_cases = 0;
  std::size_t negative_cases = 0;
  /// Mutants the brute-force oracle found unrealizable.
  std::size_t oracle_rejections = 0;
  std::size_t agreements = 0;
  /// InternalError (e.g. SimplicityViolation) raised during the run.
  std::size_t internal_errors = 0;
  std::vector<Disagreement> disagreements;

  bool certified() const noexcept { return disagreements.empty(); }
};

/// Positive direction: every graph's harvested collection must check as
/// graphical and realize to a graph that verifies per index. Negative
/// direction: mutants of each collection must get the same verdict from the
/// checker as from the catalog.
OracleReport cross_validate(std::size_t n, int h, std::size_t mutants_per_case = 3,
                            std::uint64_t seed = 0);

}  // namespace ucover
