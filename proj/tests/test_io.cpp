#include <sstream>

#include "doctest.h"
#include "generators.hpp"

#include "ucover/errors.hpp"
#include "ucover/io.hpp"

using namespace ucover;
using ucover::testing::parse_all;
using ucover::testing::random_graph;

namespace {

std::size_t parse_error_line(const std::string& text, bool graph) {
  std::istringstream in(text);
  try {
    if (graph)
      read_graph(in);
    else
      read_trees(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("tree collection files") {
  std::istringstream in("# header\n\n(())\n  ((()))  \n# another\n()\n");
  std::vector<std::size_t> lines;
  const auto trees = read_trees(in, &lines);
  REQUIRE(trees.size() == 3);
  CHECK(serialize(trees[1]) == "((()))");
  CHECK(lines == std::vector<std::size_t>{3, 4, 6});

  CHECK(parse_error_line("(())\n(()\n", false) == 2);
  CHECK(parse_error_line("\n\n())\n", false) == 3);

  std::ostringstream out;
  write_trees(out, parse_all({"((())())", "()"}));
  CHECK(out.str() == "(()(()))\n()\n");
}

TEST_CASE("graph files") {
  std::istringstream in("# comment\nn=4\n0 1\n\n3 2\n# tail\n");
  const auto g = read_graph(in);
  CHECK(g.n() == 4);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});

  std::ostringstream out;
  write_graph(out, g);
  CHECK(out.str() == "n=4\n0 1\n2 3\n");

  std::ostringstream dot;
  write_dot(dot, g);
  CHECK(dot.str() == "graph G {\n  0;\n  1;\n  2;\n  3;\n  0 -- 1;\n  2 -- 3;\n}\n");

  std::istringstream empty("n=0\n");
  CHECK(read_graph(empty).n() == 0);
}

TEST_CASE("malformed graph files") {
  CHECK(parse_error_line("", true) == 0);  // missing header, no line to blame
  CHECK(parse_error_line("0 1\n", true) == 1);
  CHECK(parse_error_line("n=x\n", true) == 1);
  CHECK(parse_error_line("n=3\n0 1 2\n", true) == 2);
  CHECK(parse_error_line("n=3\n0\n", true) == 2);
  CHECK(parse_error_line("n=3\n1 1\n", true) == 2);
  CHECK(parse_error_line("n=3\n0 1\n1 0\n", true) == 3);
  CHECK(parse_error_line("n=3\n0 3\n", true) == 2);
  CHECK(parse_error_line("n=3\n-1 2\n", true) == 2);

  std::istringstream none("# nothing\n");
  CHECK_THROWS_AS(read_graph(none), ParseError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("property: graph files round trip") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph(std::uniform_int_distribution<std::size_t>(0, 15)(rng), 0.3, rng);
    std::stringstream buf;
    write_graph(buf, g);
    REQUIRE(read_graph(buf) == g);
  }
}

TEST_CASE("table JSON") {
  const auto table = build_table(parse_all({"(())", "((()))"}), 2);
  const auto j = to_json(table);
  CHECK(j["h"] == 2);
  CHECK(j["n"] == 2);
  REQUIRE(j["types"].size() == 2);
  // Types in ascending (r, s) order.
  CHECK(j["types"][0] == nlohmann::json{{"r", "()"}, {"s", "()"}, {"class", "diag"}, {"N", 1}, {"degrees", {1, 0}}});
  CHECK(j["types"][1] == nlohmann::json{{"r", "()"}, {"s", "(())"}, {"class", "A"}, {"N", 1}, {"degrees", {0, 1}}});
}

TEST_CASE("verdict JSON") {
  const auto v = check_neighborhood(build_table(parse_all({"(())", "((()))"}), 2));
  const auto j = to_json(v, 2);
  CHECK(j["graphical"] == false);
  CHECK(j["h"] == 2);
  REQUIRE(j["failures"].size() == 2);
  CHECK(j["failures"][0] == nlohmann::json{{"type", {{"r", "()"}, {"s", "()"}}}, {"kind", "OddDiagonalSum"}, {"k", nullptr}});
  CHECK(j["failures"][1] == nlohmann::json{{"type", {{"r", "()"}, {"s", "(())"}}}, {"kind", "UnbalancedPair"}, {"k", nullptr}});

  const auto depth_fail = to_json(check_trees(parse_all({"((()))"}), 1), 1);
  CHECK(depth_fail["failures"][0]["type"] == "global");
}

TEST_SUITE_END();
