#include "ucover/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ucover/errors.hpp"

namespace ucover {

namespace {

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

int parse_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || value < 0)
    throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line_no);
  return value;
}

}  // namespace

std::vector<RootedTree> read_trees(std::istream& in, std::vector<std::size_t>* lines) {
  if (lines) lines->clear();
  std::vector<RootedTree> trees;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip(raw);
    if (skippable(line)) continue;
    try {
      trees.push_back(parse_tree(line));
      if (lines) lines->push_back(line_no);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return trees;
}

std::vector<RootedTree> read_trees_file(const std::string& path, std::vector<std::size_t>* lines) {
  auto in = open_or_throw(path);
  return read_trees(in, lines);
}

void write_trees(std::ostream& out, std::span<const RootedTree> trees) {
  for (const auto& t : trees) out << serialize(t) << '\n';
}

void write_codes(std::ostream& out, std::span<const CanonCode> codes) {
  for (const auto& c : codes) out << c.str() << '\n';
}

SimpleGraph read_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<SimpleGraph> g;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip(raw);
    if (skippable(line)) continue;

    if (!g) {
      if (!line.starts_with("n=")) throw ParseError("expected header 'n=<N>'", line_no);
      g.emplace(static_cast<std::size_t>(parse_int(strip(line.substr(2)), line_no)));
      continue;
    }

    std::istringstream fields{std::string(line)};
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra))
      throw ParseError("expected an edge 'u v'", line_no);
    const int u = parse_int(a, line_no);
    const int v = parse_int(b, line_no);
    try {
      g->add_edge(u, v);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!g) throw ParseError("missing header 'n=<N>'");
  return std::move(*g);
}

SimpleGraph read_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << "n=" << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dot(std::ostream& out, const SimpleGraph& g) {
  out << "graph G {\n";
  for (std::size_t v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

nlohmann::json to_json(const TypedDegreeTable& table) {
  auto types = nlohmann::json::array();
  for (const auto& tau : table.types()) {
    types.push_back({{"r", tau.r.str()},
                     {"s", tau.s.str()},
                     {"class", std::string(to_string(tau.type_class()))},
                     {"N", table.total(tau)},
                     {"degrees", table.column(tau)}});
  }
  return {{"h", table.h()}, {"n", table.n()}, {"types", std::move(types)}};
}

nlohmann::json to_json(const Verdict& verdict, int h) {
  auto failures = nlohmann::json::array();
  for (const auto& f : verdict.failures) {
    nlohmann::json entry;
    if (const auto* tau = std::get_if<EdgeType>(&f.type_key))
      entry["type"] = {{"r", tau->r.str()}, {"s", tau->s.str()}};
    else
      entry["type"] = "global";
    entry["kind"] = std::string(to_string(f.kind));
    entry["k"] = f.witness_k ? nlohmann::json(*f.witness_k) : nlohmann::json(nullptr);
    failures.push_back(std::move(entry));
  }
  return {{"graphical", verdict.graphical}, {"h", h}, {"failures", std::move(failures)}};
}

nlohmann::json to_json(const OracleReport& report) {
  auto disagreements = nlohmann::json::array();
  for (const auto& d : report.disagreements)
    disagreements.push_back({{"collection", d.collection},
                             {"checker", d.checker},
                             {"oracle", d.oracle},
                             {"note", d.note}});
  return {{"n", report.n},
          {"h", report.h},
          {"graphs", report.graphs},
          {"cases_total", report.cases_total},
          {"positive_cases", report.positive_cases},
          {"negative_cases", report.negative_cases},
          {"oracle_rejections", report.oracle_rejections},
          {"agreements", report.agreements},
          {"internal_errors", report.internal_errors},
          {"disagreements", std::move(disagreements)}};
}

nlohmann::json graph_to_json(const SimpleGraph& g) {
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

}  // namespace ucover
