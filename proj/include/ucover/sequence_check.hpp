#pragma once

// Graphicality tests for degree sequences and the neighborhood verdict built
// on top of them.

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "ucover/typing.hpp"

namespace ucover {

/// Out/in degree of one vertex of a digraph.
struct DegreePair {
  int out = 0;
  int in = 0;

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
  friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

/// `witness` is the smallest violating k in [1, n], or 0 when the sum
/// condition (parity, or out/in balance) fails. Empty on success.
struct SequenceResult {
  bool ok = true;
  std::optional<int> witness;

  explicit operator bool() const noexcept { return ok; }
};

/// Erdos-Gallai: sum even and, with d sorted non-increasing,
/// d_1 + ... + d_k <= k(k-1) + sum_{i>k} min(d_i, k) for every k.
SequenceResult erdos_gallai(std::span<const int> d);

/// Fulkerson-Chen-Anstee for loopless digraphs without parallel arcs. Pairs
/// sorted by (out, in) descending; for every k,
/// sum_{i<=k} out_i <= sum_{i<=k} min(in_i, k-1) + sum_{i>k} min(in_i, k).
SequenceResult fulkerson_chen_anstee(std::span<const DegreePair> pairs);

enum class FailureKind { OddDiagonalSum, UnbalancedPair, EGViolation, DirectedEGViolation, DepthExceeded };

std::string_view to_string(FailureKind k);

struct GlobalScope {
  friend bool operator==(GlobalScope, GlobalScope) = default;
};

struct FailureRecord {
  std::variant<GlobalScope, EdgeType> type_key;
  FailureKind kind;
  std::optional<int> witness_k;

  friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

struct Verdict {
  bool graphical = true;
  std::vector<FailureRecord> failures;
};

/// Diagonal types must pass Erdos-Gallai on (d^tau_i); each A-type must pass
/// Fulkerson-Chen-Anstee on (d^tau_i, d^{tau^-1}_i). Collects every failure.
Verdict check_neighborhood(const TypedDegreeTable& table);

/// build_table + check_neighborhood, with over-deep trees reported as
/// DepthExceeded failures instead of thrown.
Verdict check_trees(std::span<const RootedTree> trees, int h);

}  // namespace ucover
