#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ucover {

using Edge = std::pair<int, int>;

/// Undirected graph on vertices 0..n-1 with no loops and no parallel edges.
/// Neighbor lists are kept sorted.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n) {}
  SimpleGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  std::span<const int> neighbors(int v) const;
  bool has_edge(int u, int v) const;

  /// Throws std::invalid_argument on loops, duplicates or bad endpoints.
  void add_edge(int u, int v);

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

/// Loopless digraph without parallel arcs; (i, j) and (j, i) may coexist.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n), in_degree_(n, 0) {}

  std::size_t n() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }
  int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(int v) const;
  std::span<const int> out_neighbors(int v) const;
  bool has_arc(int from, int to) const;

  /// Throws std::invalid_argument on loops, duplicates or bad endpoints.
  void add_arc(int from, int to);

  /// Arcs in lexicographic order.
  std::vector<Edge> arcs() const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> out_;
  std::vector<int> in_degree_;
  std::size_t arc_count_ = 0;
};

}  // namespace ucover
