#include <map>

#include "doctest.h"
#include "generators.hpp"

#include "ucover/errors.hpp"
#include "ucover/typing.hpp"
#include "ucover/unfold.hpp"

using namespace ucover;
using ucover::testing::copies;
using ucover::testing::cycle;
using ucover::testing::parse_all;
using ucover::testing::random_graph;
using ucover::testing::random_tree;
using ucover::testing::shuffled;

namespace {

EdgeType type_of(const char* r, const char* s) {
  return {canonical_code(parse_tree(r)), canonical_code(parse_tree(s))};
}

// Unmemoized non-backtracking expansion, written independently of unfold.
std::string branch(const SimpleGraph& g, int at, int from, int remaining) {
  std::vector<std::string> sub;
  if (remaining > 0)
    for (int next : g.neighbors(at))
      if (next != from) sub.push_back(branch(g, next, at, remaining - 1));
  std::string out = "(";
  std::sort(sub.begin(), sub.end(), [](const auto& a, const auto& b) { return code_less(a, b); });
  for (const auto& s : sub) out += s;
  return out + ")";
}

}  // namespace

TEST_SUITE_BEGIN("typing");

TEST_CASE("edge_type") {
  SUBCASE("single edge") {
    for (int h : {1, 2, 5}) CHECK(edge_type(parse_tree("(())"), 0, h) == type_of("()", "()"));
  }
  SUBCASE("path rooted at an end, h = 2") {
    CHECK(edge_type(parse_tree("((()))"), 0, 2) == type_of("()", "(())"));
  }
  SUBCASE("cycle ball is diagonal") {
    const auto t = parse_tree("((())(()))");
    for (std::size_t c : {0u, 1u}) {
      const auto tau = edge_type(t, c, 2);
      CHECK(tau == type_of("(())", "(())"));
      CHECK(tau.type_class() == TypeClass::Diagonal);
    }
  }
  SUBCASE("r is truncated, s is not") {
    // Root with a 2-path branch and a 1-edge branch, h = 3.
    const auto t = parse_tree("(((()))(()))");
    CHECK(edge_type(t, 0, 3) == type_of("((()))", "((()))"));
    CHECK(edge_type(t, 1, 3) == type_of("((()))", "(())"));  // remainder cut from depth 3 to 2
    // h = 2 would be violated by depth 3.
    CHECK_THROWS_AS(edge_type(t, 0, 2), DepthError);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(edge_type(parse_tree("(())"), 1, 1), IndexError);
    CHECK_THROWS_AS(edge_type(parse_tree("()"), 0, 1), IndexError);
    CHECK_THROWS_AS(edge_type(parse_tree("(())"), 0, 0), std::invalid_argument);
  }
}

TEST_CASE("type classes") {
  CHECK(type_of("()", "(())").type_class() == TypeClass::A);
  CHECK(type_of("(())", "()").type_class() == TypeClass::B);
  CHECK(type_of("()", "()").type_class() == TypeClass::Diagonal);
  CHECK(type_of("()", "(())").inverse() == type_of("(())", "()"));
}

TEST_CASE("build_table") {
  SUBCASE("two single edges at h = 1") {
    const auto table = build_table(copies("(())", 2), 1);
    REQUIRE(table.types().size() == 1);
    const auto tau = table.types()[0];
    CHECK(tau == type_of("()", "()"));
    CHECK(table.column(tau) == std::vector<int>{1, 1});
    CHECK(table.total(tau) == 2);
  }
  SUBCASE("four cycle balls") {
    const auto trees = copies("((())(()))", 4);
    const auto table = build_table(trees, 2);
    REQUIRE(table.types().size() == 1);
    const auto tau = type_of("(())", "(())");
    CHECK(table.column(tau) == std::vector<int>{2, 2, 2, 2});
    CHECK(table.total(tau) == 8);
    // Same table from the cover balls of the 4-cycle itself.
    CHECK(build_table(neighborhood_collection(cycle(4), 2), 2) == table);
  }
  SUBCASE("canonical non-graphical instance") {
    const auto table = build_table(parse_all({"(())", "((()))"}), 2);
    CHECK(table.types().size() == 2);
    const auto diag = type_of("()", "()");
    const auto a = type_of("()", "(())");
    CHECK(table.column(diag) == std::vector<int>{1, 0});
    CHECK(table.total(a) == 1);
    CHECK(table.total(a.inverse()) == 0);
    CHECK(table.a_types() == std::vector<EdgeType>{a});
    CHECK(table.diagonal_types() == std::vector<EdgeType>{diag});
  }
  SUBCASE("a_types lists pairs seen only on the B side") {
    const auto table = build_table(parse_all({"(()())", "(())"}), 2);
    // "(()())" at h = 2: r = "(())", s = "()", class B.
    const auto b = type_of("(())", "()");
    CHECK(b.type_class() == TypeClass::B);
    CHECK(table.total(b) == 2);
    CHECK(table.a_types() == std::vector<EdgeType>{b.inverse()});
  }
  SUBCASE("depth errors list every offending index") {
    try {
      build_table(parse_all({"((()))", "(())", "(((())))"}), 1);
      FAIL("expected DepthError");
    } catch (const DepthError& e) {
      CHECK(e.offending() == std::vector<std::size_t>{0, 2});
    }
  }
  SUBCASE("empty collection and h = 0") {
    CHECK(build_table({}, 2).types().empty());
    CHECK(build_table(copies("()", 3), 0).degree_sequence() == std::vector<int>{0, 0, 0});
  }
}

TEST_CASE("property: table invariants on random trees") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RootedTree> trees;
    const auto n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    for (std::size_t i = 0; i < n; ++i)
      trees.push_back(random_tree(std::uniform_int_distribution<std::size_t>(1, 15)(rng), rng));
    int h = 1;
    for (const auto& t : trees) h = std::max(h, depth(t));
    const auto table = build_table(trees, h);

    for (std::size_t i = 0; i < n; ++i) {
      int sum = 0;
      for (const auto& tau : table.types()) sum += table.degree(i, tau);
      REQUIRE(sum == static_cast<int>(trees[i].degree()));
      REQUIRE(table.degree_sequence()[i] == sum);
    }
    for (const auto& tau : table.types()) {
      const auto inv_class = tau.inverse().type_class();
      switch (tau.type_class()) {
        case TypeClass::Diagonal: REQUIRE(inv_class == TypeClass::Diagonal); break;
        case TypeClass::A: REQUIRE(inv_class == TypeClass::B); break;
        case TypeClass::B: REQUIRE(inv_class == TypeClass::A); break;
      }
      REQUIRE(depth(parse_tree(tau.r.str())) <= h - 1);
      REQUIRE(depth(parse_tree(tau.s.str())) <= h - 1);
    }
    // Storage order of children does not matter.
    std::vector<RootedTree> permuted;
    for (const auto& t : trees) permuted.push_back(shuffled(t, rng));
    REQUIRE(build_table(permuted, h) == table);
  }
}

TEST_CASE("h = 1 collapses to a single diagonal type") {
  const auto table = build_table(parse_all({"(()()())", "(())", "(()())", "()"}), 1);
  REQUIRE(table.types().size() == 1);
  CHECK(table.types()[0] == type_of("()", "()"));
  CHECK(table.column(table.types()[0]) == std::vector<int>{3, 1, 2, 0});
}

TEST_CASE("property: edge types of graph balls match the two sides of each edge") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
    const auto g = random_graph(n, 0.35, rng);
    for (int h = 1; h <= 3; ++h) {
      const auto table = build_table(neighborhood_collection(g, h), h);
      TypedDegreeTable expected(n, h);
      for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j : g.neighbors(i))
          expected.add(i, {CanonCode::from_canonical(branch(g, i, j, h - 1)),
                           CanonCode::from_canonical(branch(g, j, i, h - 1))});
      REQUIRE(table == expected);
    }
  }
}

TEST_SUITE_END();
