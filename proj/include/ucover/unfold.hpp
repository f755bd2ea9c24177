#pragma once

// Balls in the universal cover of a graph.
//
// The vertices of the universal cover T_G above v are the non-backtracking
// walks starting at v, so the radius-h ball around a lift of v is the tree of
// such walks of length <= h. The cover itself is never built.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ucover/graph.hpp"
#include "ucover/tree.hpp"

namespace ucover {

struct CoverBall {
  RootedTree tree;
  int base_vertex;
};

/// Canonical code of the radius-h cover ball at v. Throws IndexError.
CanonCode cover_ball_code(const SimpleGraph& g, int v, int h);

RootedTree cover_ball(const SimpleGraph& g, int v, int h);

std::vector<CanonCode> neighborhood_codes(const SimpleGraph& g, int h);
std::vector<RootedTree> neighborhood_collection(const SimpleGraph& g, int h);
std::vector<CoverBall> cover_balls(const SimpleGraph& g, int h);

/// First vertex i whose cover ball differs from trees[i], or empty when all
/// match. Throws std::invalid_argument if the sizes differ.
std::optional<std::size_t> first_mismatch(const SimpleGraph& g, std::span<const RootedTree> trees,
                                          int h);

/// Per-index match of every cover ball with the given tree.
bool verify_realization(const SimpleGraph& g, std::span<const RootedTree> trees, int h);

}  // namespace ucover
