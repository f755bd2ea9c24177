#include "ucover/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ucover/errors.hpp"

namespace ucover {

namespace {

void check_range(int v, std::size_t n) {
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    throw IndexError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
}

// Inserts into a sorted vector; false if already present.
bool sorted_insert(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) return false;
  v.insert(it, x);
  return true;
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

std::span<const int> SimpleGraph::neighbors(int v) const {
  check_range(v, n());
  return adj_[v];
}

bool SimpleGraph::has_edge(int u, int v) const {
  check_range(u, n());
  check_range(v, n());
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void SimpleGraph::add_edge(int u, int v) {
  check_range(u, n());
  check_range(v, n());
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (!sorted_insert(adj_[u], v))
    throw std::invalid_argument("parallel edge " + std::to_string(u) + " " + std::to_string(v));
  sorted_insert(adj_[v], u);
  ++edge_count_;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (int v : adj_[u])
      if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
  return out;
}

std::vector<int> SimpleGraph::degree_sequence() const {
  std::vector<int> d(n());
  for (std::size_t v = 0; v < n(); ++v) d[v] = static_cast<int>(adj_[v].size());
  return d;
}

void Digraph::check_vertex(int v) const { check_range(v, n()); }

int Digraph::in_degree(int v) const {
  check_vertex(v);
  return in_degree_[v];
}

std::span<const int> Digraph::out_neighbors(int v) const {
  check_vertex(v);
  return out_[v];
}

bool Digraph::has_arc(int from, int to) const {
  check_vertex(from);
  check_vertex(to);
  return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

void Digraph::add_arc(int from, int to) {
  check_vertex(from);
  check_vertex(to);
  if (from == to) throw std::invalid_argument("loop at vertex " + std::to_string(from));
  if (!sorted_insert(out_[from], to))
    throw std::invalid_argument("parallel arc " + std::to_string(from) + " " + std::to_string(to));
  ++in_degree_[to];
  ++arc_count_;
}

std::vector<Edge> Digraph::arcs() const {
  std::vector<Edge> out;
  out.reserve(arc_count_);
  for (std::size_t u = 0; u < out_.size(); ++u)
    for (int v : out_[u]) out.emplace_back(static_cast<int>(u), v);
  return out;
}

}  // namespace ucover
