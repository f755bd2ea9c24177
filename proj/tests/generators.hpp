#pragma once

// Hand-rolled random generators for property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "ucover/graph.hpp"
#include "ucover/tree.hpp"

namespace ucover::testing {

/// Random recursive tree: node k attaches to a uniform earlier node.
inline RootedTree random_tree(std::size_t nodes, std::mt19937_64& rng) {
  std::vector<std::vector<std::size_t>> kids(nodes);
  for (std::size_t k = 1; k < nodes; ++k)
    kids[std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)].push_back(k);

  // Children always have larger ids, so build bottom-up.
  std::vector<RootedTree> built(nodes);
  for (std::size_t k = nodes; k-- > 0;) {
    std::vector<RootedTree> children;
    for (auto c : kids[k]) children.push_back(std::move(built[c]));
    built[k] = RootedTree(std::move(children));
  }
  return std::move(built[0]);
}

/// Same tree with every child list shuffled, recursively.
inline RootedTree shuffled(const RootedTree& t, std::mt19937_64& rng) {
  std::vector<RootedTree> children;
  for (const auto& c : t.children()) children.push_back(shuffled(c, rng));
  std::shuffle(children.begin(), children.end(), rng);
  return RootedTree(std::move(children));
}

inline SimpleGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = i + 1; j < static_cast<int>(n); ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline SimpleGraph cycle(std::size_t k) {
  SimpleGraph g(k);
  for (std::size_t i = 0; i < k; ++i) g.add_edge(static_cast<int>(i), static_cast<int>((i + 1) % k));
  return g;
}

inline SimpleGraph petersen() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

inline std::vector<RootedTree> parse_all(std::initializer_list<const char*> words) {
  std::vector<RootedTree> out;
  for (const auto* w : words) out.push_back(parse_tree(w));
  return out;
}

inline std::vector<RootedTree> copies(const char* word, std::size_t count) {
  return std::vector<RootedTree>(count, parse_tree(word));
}

}  // namespace ucover::testing
