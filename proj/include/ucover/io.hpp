#pragma once

// File formats and JSON documents.
//
// Tree collection: one balanced-parentheses word per line, line order gives
// vertex indices; blank lines and lines starting with '#' are skipped.
//
// Graph: a line "n=<N>" followed by one "u v" line per edge (0-indexed).
// Written with u < v and edges sorted; '#' comments are allowed on input.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "ucover/graph.hpp"
#include "ucover/oracle.hpp"
#include "ucover/sequence_check.hpp"
#include "ucover/tree.hpp"
#include "ucover/typing.hpp"

namespace ucover {

/// Throws ParseError carrying the 1-based line number. When `lines` is given
/// it receives the source line of each tree.
std::vector<RootedTree> read_trees(std::istream& in, std::vector<std::size_t>* lines = nullptr);
std::vector<RootedTree> read_trees_file(const std::string& path,
                                        std::vector<std::size_t>* lines = nullptr);
void write_trees(std::ostream& out, std::span<const RootedTree> trees);
void write_codes(std::ostream& out, std::span<const CanonCode> codes);

/// Throws ParseError on a missing header, malformed line, loop, duplicate
/// edge or out-of-range endpoint.
SimpleGraph read_graph(std::istream& in);
SimpleGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const SimpleGraph& g);
void write_dot(std::ostream& out, const SimpleGraph& g);

nlohmann::json to_json(const TypedDegreeTable& table);
nlohmann::json to_json(const Verdict& verdict, int h);
nlohmann::json to_json(const OracleReport& report);
nlohmann::json graph_to_json(const SimpleGraph& g);

}  // namespace ucover
