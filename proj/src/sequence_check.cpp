#include "ucover/sequence_check.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ucover/errors.hpp"

namespace ucover {

std::string_view to_string(FailureKind k) {
  switch (k) {
    case FailureKind::OddDiagonalSum: return "OddDiagonalSum";
    case FailureKind::UnbalancedPair: return "UnbalancedPair";
    case FailureKind::EGViolation: return "EGViolation";
    case FailureKind::DirectedEGViolation: return "DirectedEGViolation";
    case FailureKind::DepthExceeded: return "DepthExceeded";
  }
  return "?";
}

SequenceResult erdos_gallai(std::span<const int> d) {
  const auto n = static_cast<long long>(d.size());
  std::vector<long long> sorted(d.begin(), d.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  const long long sum = std::accumulate(sorted.begin(), sorted.end(), 0LL);
  if (sum % 2 != 0) return {false, 0};

  // suffix[i] = sorted[i] + ... + sorted[n-1]
  std::vector<long long> suffix(sorted.size() + 1, 0);
  for (auto i = n; i-- > 0;) suffix[i] = suffix[i + 1] + sorted[i];

  long long lhs = 0;
  for (long long k = 1; k <= n; ++k) {
    lhs += sorted[k - 1];
    // Among positions k..n-1 (0-based), entries >= k form a prefix.
    auto tail_begin = sorted.begin() + k;
    auto first_small =
        std::partition_point(tail_begin, sorted.end(), [k](long long v) { return v >= k; });
    const long long capped = k * (first_small - tail_begin);
    const long long rhs = k * (k - 1) + capped + suffix[first_small - sorted.begin()];
    if (lhs > rhs) return {false, static_cast<int>(k)};
  }
  // Every d_i <= n-1 is implied by k = 1; assert it so a regression shows up.
  if (!sorted.empty() && sorted.front() > n - 1) throw InternalError("erdos_gallai: range not caught");
  return {};
}

SequenceResult fulkerson_chen_anstee(std::span<const DegreePair> pairs) {
  const auto n = static_cast<long long>(pairs.size());
  std::vector<DegreePair> sorted(pairs.begin(), pairs.end());
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());

  long long outs = 0, ins = 0;
  for (const auto& p : sorted) {
    outs += p.out;
    ins += p.in;
  }
  if (outs != ins) return {false, 0};

  long long lhs = 0;
  for (long long k = 1; k <= n; ++k) {
    lhs += sorted[k - 1].out;
    long long head = 0;
    for (long long i = 0; i < k; ++i) head += std::min<long long>(sorted[i].in, k - 1);
    long long tail = 0;
    for (long long i = k; i < n; ++i) tail += std::min<long long>(sorted[i].in, k);
    if (lhs > head + tail) return {false, static_cast<int>(k)};
  }
  return {};
}

Verdict check_neighborhood(const TypedDegreeTable& table) {
  Verdict verdict;
  auto fail = [&](EdgeType tau, FailureKind kind, std::optional<int> k) {
    verdict.failures.push_back({std::move(tau), kind, k});
  };

  for (const auto& tau : table.diagonal_types()) {
    const auto col = table.column(tau);
    const auto res = erdos_gallai(col);
    if (res) continue;
    if (*res.witness == 0)
      fail(tau, FailureKind::OddDiagonalSum, std::nullopt);
    else
      fail(tau, FailureKind::EGViolation, res.witness);
  }

  for (const auto& tau : table.a_types()) {
    const auto inv = tau.inverse();
    const auto out = table.column(tau);
    const auto in = table.column(inv);
    std::vector<DegreePair> pairs(table.n());
    for (std::size_t i = 0; i < table.n(); ++i) pairs[i] = {out[i], in[i]};

    const auto res = fulkerson_chen_anstee(pairs);
    if (res) continue;
    if (*res.witness == 0)
      fail(tau, FailureKind::UnbalancedPair, std::nullopt);
    else
      fail(tau, FailureKind::DirectedEGViolation, res.witness);
  }

  verdict.graphical = verdict.failures.empty();
  return verdict;
}

Verdict check_trees(std::span<const RootedTree> trees, int h) {
  try {
    return check_neighborhood(build_table(trees, h));
  } catch (const DepthError& e) {
    Verdict v;
    v.graphical = false;
    for (std::size_t i = 0; i < e.offending().size(); ++i)
      v.failures.push_back({GlobalScope{}, FailureKind::DepthExceeded, std::nullopt});
    return v;
  }
}

}  // namespace ucover
