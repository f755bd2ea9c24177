#pragma once

// Builds a simple graph whose universal-cover balls are a given collection:
// one realization per edge type, glued along the shared vertex set.

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ucover/graph.hpp"
#include "ucover/sequence_check.hpp"
#include "ucover/typing.hpp"

namespace ucover {

/// Havel-Hakimi. Repeatedly takes the vertex of largest residual degree
/// (lowest index on ties) and joins it to the next largest residuals.
/// Throws InternalInfeasible if `d` is not graphical.
SimpleGraph havel_hakimi(std::span<const int> d);

/// Kleitman-Wang. Repeatedly takes the vertex with lexicographically largest
/// residual (out, in) among those with out > 0 and sends all of its out-stubs
/// to distinct other vertices ordered by residual in desc, out desc, index asc.
/// Throws InternalInfeasible if `pairs` is not digraphical.
Digraph kleitman_wang(std::span<const DegreePair> pairs);

/// Edge of a glued graph with provenance. `type` is the type of the edge as
/// seen from `from`; from `to` it is `type.inverse()`. For diagonal types
/// from < to.
struct TaggedEdge {
  int from;
  int to;
  EdgeType type;
};

using TypedPart = std::variant<SimpleGraph, Digraph>;

struct Realization {
  SimpleGraph graph;
  std::vector<TaggedEdge> tags;
};

/// Union of the per-type edge sets on vertices 0..n-1. Diagonal types carry a
/// SimpleGraph, A-types a Digraph whose orientation is kept only in the tags.
/// Throws SimplicityViolation if two parts share a pair of vertices or a
/// digraph holds both (i, j) and (j, i).
Realization glue(const std::map<EdgeType, TypedPart>& parts, std::size_t n);

class NotGraphical : public std::runtime_error {
 public:
  explicit NotGraphical(Verdict verdict);
  const Verdict& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

/// build_table -> check_neighborhood -> per-type realizers -> glue.
/// Throws NotGraphical, DepthError, or an InternalError subclass.
Realization realize_neighborhood(std::span<const RootedTree> trees, int h);

/// Typed degrees read back from the tags of a realization.
TypedDegreeTable tagged_degrees(const Realization& g, int h);

}  // namespace ucover
