#include "ucover/oracle.hpp"

#include <algorithm>
#include <string>

#include "ucover/errors.hpp"
#include "ucover/realize.hpp"
#include "ucover/sequence_check.hpp"
#include "ucover/unfold.hpp"

namespace ucover {

std::uint64_t graph_count(std::size_t n) {
  if (n > kMaxEnumeratedGraphOrder)
    throw SizeError("graph enumeration limited to n <= " + std::to_string(kMaxEnumeratedGraphOrder));
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

std::uint64_t digraph_count(std::size_t n) {
  if (n > kMaxEnumeratedDigraphOrder)
    throw SizeError("digraph enumeration limited to n <= " +
                    std::to_string(kMaxEnumeratedDigraphOrder));
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)));
}

SimpleGraph graph_from_mask(std::size_t n, std::uint64_t mask) {
  SimpleGraph g(n);
  int bit = 0;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = i + 1; j < static_cast<int>(n); ++j, ++bit)
      if (mask >> bit & 1U) g.add_edge(i, j);
  return g;
}

Digraph digraph_from_mask(std::size_t n, std::uint64_t mask) {
  Digraph g(n);
  int bit = 0;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = 0; j < static_cast<int>(n); ++j) {
      if (i == j) continue;
      if (mask >> bit & 1U) g.add_arc(i, j);
      ++bit;
    }
  return g;
}

std::optional<SimpleGraph> exists_realization_bruteforce(std::span<const RootedTree> trees, int h) {
  for (auto g : enumerate_graphs(trees.size()))
    if (verify_realization(g, trees, h)) return g;
  return std::nullopt;
}

namespace {

std::vector<std::string> sorted_codes(std::span<const RootedTree> trees) {
  std::vector<std::string> codes;
  codes.reserve(trees.size());
  for (const auto& t : trees) codes.push_back(canonical_code(t).str());
  std::sort(codes.begin(), codes.end());
  return codes;
}

std::vector<std::string> sorted_codes(std::span<const CanonCode> codes) {
  std::vector<std::string> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(c.str());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t pick(std::size_t bound, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

std::size_t count_leaves_at(const RootedTree& t, int level) {
  if (level == 0) return t.is_leaf() ? 1 : 0;
  std::size_t count = 0;
  for (const auto& c : t.children()) count += count_leaves_at(c, level - 1);
  return count;
}

// Copy of t without the `ordinal`-th leaf (DFS order) found at depth `level`.
RootedTree drop_leaf_at(const RootedTree& t, int level, std::size_t& ordinal) {
  std::vector<RootedTree> kept;
  for (const auto& c : t.children()) {
    if (level == 1 && c.is_leaf()) {
      if (ordinal-- == 0) continue;
      kept.push_back(c);
    } else if (level > 1) {
      kept.push_back(drop_leaf_at(c, level - 1, ordinal));
    } else {
      kept.push_back(c);
    }
  }
  return RootedTree(std::move(kept));
}

}  // namespace

RealizabilityCatalog::RealizabilityCatalog(std::size_t n, int h) : n_(n), h_(h) {
  std::set<CanonCode> seen;
  for (auto g : enumerate_graphs(n)) {
    auto codes = neighborhood_codes(g, h);
    seen.insert(codes.begin(), codes.end());
    collections_.insert(sorted_codes(codes));
  }
  pool_.assign(seen.begin(), seen.end());
}

bool RealizabilityCatalog::contains(std::span<const RootedTree> trees) const {
  return trees.size() == n_ && collections_.contains(sorted_codes(trees));
}

std::optional<std::vector<RootedTree>> mutate(std::span<const RootedTree> trees, MutationKind kind,
                                              std::span<const CanonCode> pool, std::mt19937_64& rng) {
  const auto n = trees.size();
  if (n == 0) return std::nullopt;
  std::vector<RootedTree> out(trees.begin(), trees.end());

  switch (kind) {
    case MutationKind::ReplaceWithOtherClass: {
      const auto i = pick(n, rng);
      const auto own = canonical_code(trees[i]);
      std::vector<const CanonCode*> others;
      for (const auto& c : pool)
        if (c != own) others.push_back(&c);
      if (others.empty()) return std::nullopt;
      out[i] = parse_tree(others[pick(others.size(), rng)]->str());
      return out;
    }
    case MutationKind::Duplicate: {
      std::vector<std::pair<std::size_t, std::size_t>> choices;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && !isomorphic(trees[i], trees[j])) choices.emplace_back(i, j);
      if (choices.empty()) return std::nullopt;
      const auto [src, dst] = choices[pick(choices.size(), rng)];
      out[dst] = trees[src];
      return out;
    }
    case MutationKind::DropDeepLeaf: {
      std::vector<std::size_t> candidates;
      for (std::size_t i = 0; i < n; ++i)
        if (!trees[i].is_leaf()) candidates.push_back(i);
      if (candidates.empty()) return std::nullopt;
      const auto i = candidates[pick(candidates.size(), rng)];
      const int level = depth(trees[i]);
      std::size_t ordinal = pick(count_leaves_at(trees[i], level), rng);
      out[i] = drop_leaf_at(trees[i], level, ordinal);
      return out;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> codes_of(std::span<const RootedTree> trees) {
  std::vector<std::string> out;
  for (const auto& t : trees) out.push_back(canonical_code(t).str());
  return out;
}

// Runs checker and, when it accepts, the realizer. Returns the checker's
// verdict; `note` is set if the realization did not verify.
bool run_pipeline(std::span<const RootedTree> trees, int h, std::string& note,
                  std::size_t& internal_errors) {
  if (!check_trees(trees, h).graphical) return false;
  try {
    const auto g = realize_neighborhood(trees, h);
    if (!verify_realization(g.graph, trees, h)) note = "realization failed cover verification";
  } catch (const InternalError& e) {
    ++internal_errors;
    note = e.what();
  } catch (const NotGraphical&) {
    note = "realizer rejected a collection the checker accepted";
  }
  return true;
}

}  // namespace

OracleReport cross_validate(std::size_t n, int h, std::size_t mutants_per_case, std::uint64_t seed) {
  OracleReport report;
  report.n = n;
  report.h = h;

  const RealizabilityCatalog catalog(n, h);
  std::seed_seq seq{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(h)};
  std::mt19937_64 rng(seq);

  auto record = [&](std::span<const RootedTree> trees, bool checker, bool oracle,
                    std::string note) {
    ++report.cases_total;
    if (checker == oracle && note.empty()) {
      ++report.agreements;
      return;
    }
    report.disagreements.push_back({codes_of(trees), checker, oracle, std::move(note)});
  };

  std::size_t index = 0;
  for (auto g : enumerate_graphs(n)) {
    ++report.graphs;
    const auto trees = neighborhood_collection(g, h);

    std::string note;
    const bool checker = run_pipeline(trees, h, note, report.internal_errors);
    ++report.positive_cases;
    record(trees, checker, true, std::move(note));

    for (std::size_t m = 0; m < mutants_per_case; ++m) {
      std::optional<std::vector<RootedTree>> mutant;
      for (std::size_t attempt = 0; attempt < 3 && !mutant; ++attempt) {
        const auto kind = static_cast<MutationKind>((index + m + attempt) % 3);
        mutant = mutate(trees, kind, catalog.pool(), rng);
      }
      if (!mutant) continue;

      std::string mnote;
      const bool mchecker = run_pipeline(*mutant, h, mnote, report.internal_errors);
      ++report.negative_cases;
      const bool realizable = catalog.contains(*mutant);
      if (!realizable) ++report.oracle_rejections;
      record(*mutant, mchecker, realizable, std::move(mnote));
    }
    ++index;
  }
  return report;
}

}  // namespace ucover
