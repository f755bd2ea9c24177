#pragma once

// Edge types of root-incident edges and the per-vertex typed degree table.
//
// For a root edge e = (root, x) of a tree t of depth <= h, cutting e leaves
// two components. s is the component of x, rooted at x, kept whole. r is the
// root's component with every vertex at depth h of t erased, i.e. truncated
// to depth h - 1. The type of e is the ordered pair (r, s); its inverse is
// (s, r).

#include <cstddef>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "ucover/tree.hpp"

namespace ucover {

enum class TypeClass { Diagonal, A, B };

std::string_view to_string(TypeClass c);

struct EdgeType {
  CanonCode r;
  CanonCode s;

  /// Diagonal iff r == s; A iff r < s in code order; B otherwise.
  TypeClass type_class() const;
  EdgeType inverse() const { return {s, r}; }

  friend bool operator==(const EdgeType&, const EdgeType&) = default;
  friend auto operator<=>(const EdgeType&, const EdgeType&) = default;
};

/// Type of the edge from the root of `t` to its child number `child_index`
/// (storage order). Throws IndexError or DepthError.
EdgeType edge_type(const RootedTree& t, std::size_t child_index, int h);

class TypedDegreeTable {
 public:
  TypedDegreeTable(std::size_t n, int h) : n_(n), h_(h), degree_seq_(n, 0) {}

  std::size_t n() const noexcept { return n_; }
  int h() const noexcept { return h_; }

  /// d^tau_i; zero when tau does not occur at i.
  int degree(std::size_t i, const EdgeType& tau) const;
  /// N_tau; zero for types that occur nowhere.
  long long total(const EdgeType& tau) const;
  /// The full column (d^tau_i)_i, zeros for absent types.
  std::vector<int> column(const EdgeType& tau) const;

  const std::vector<int>& degree_sequence() const noexcept { return degree_seq_; }

  /// Types that occur in at least one tree, in ascending (r, s) order.
  std::vector<EdgeType> types() const;
  std::vector<EdgeType> diagonal_types() const;
  /// A-orientation of every non-diagonal type that occurs, in either
  /// orientation. An A-type is listed even if only its inverse occurs.
  std::vector<EdgeType> a_types() const;

  void add(std::size_t i, const EdgeType& tau, int count = 1);

  friend bool operator==(const TypedDegreeTable&, const TypedDegreeTable&) = default;

 private:
  std::size_t n_;
  int h_;
  std::map<EdgeType, std::vector<int>> columns_;
  std::vector<int> degree_seq_;
};

/// Throws DepthError naming every tree deeper than h.
void require_depth(std::span<const RootedTree> trees, int h);

TypedDegreeTable build_table(std::span<const RootedTree> trees, int h);

}  // namespace ucover
