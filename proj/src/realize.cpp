#include "ucover/realize.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ucover/errors.hpp"

namespace ucover {

SimpleGraph havel_hakimi(std::span<const int> d) {
  const auto n = d.size();
  if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("havel_hakimi: negative degree");

  std::vector<int> residual(d.begin(), d.end());
  std::vector<int> order(n);
  SimpleGraph g(n);

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return residual[a] > residual[b]; });
    if (n == 0 || residual[order[0]] == 0) break;

    const int v = order[0];
    const int need = residual[v];
    if (static_cast<std::size_t>(need) > n - 1 || residual[order[need]] == 0)
      throw InternalInfeasible("havel_hakimi: vertex " + std::to_string(v) + " cannot place " +
                               std::to_string(need) + " edges");
    for (int t = 1; t <= need; ++t) {
      g.add_edge(v, order[t]);
      --residual[order[t]];
    }
    residual[v] = 0;
  }

  if (!std::equal(d.begin(), d.end(), g.degree_sequence().begin()))
    throw InternalInfeasible("havel_hakimi: degree sequence mismatch");
  return g;
}

Digraph kleitman_wang(std::span<const DegreePair> pairs) {
  const auto n = pairs.size();
  if (std::any_of(pairs.begin(), pairs.end(), [](auto p) { return p.out < 0 || p.in < 0; }))
    throw std::invalid_argument("kleitman_wang: negative degree");

  std::vector<DegreePair> residual(pairs.begin(), pairs.end());
  Digraph g(n);
  std::vector<int> targets;

  while (true) {
    int source = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (residual[v].out == 0) continue;
      if (source < 0 || residual[v] > residual[source]) source = static_cast<int>(v);
    }
    if (source < 0) break;

    targets.clear();
    for (std::size_t u = 0; u < n; ++u)
      if (static_cast<int>(u) != source && residual[u].in > 0) targets.push_back(static_cast<int>(u));
    std::stable_sort(targets.begin(), targets.end(), [&](int a, int b) {
      if (residual[a].in != residual[b].in) return residual[a].in > residual[b].in;
      return residual[a].out > residual[b].out;
    });

    const int need = residual[source].out;
    if (targets.size() < static_cast<std::size_t>(need))
      throw InternalInfeasible("kleitman_wang: vertex " + std::to_string(source) + " cannot place " +
                               std::to_string(need) + " arcs");
    for (int t = 0; t < need; ++t) {
      g.add_arc(source, targets[t]);
      --residual[targets[t]].in;
    }
    residual[source].out = 0;
  }

  for (std::size_t v = 0; v < n; ++v) {
    const int vi = static_cast<int>(v);
    if (g.out_degree(vi) != pairs[v].out || g.in_degree(vi) != pairs[v].in)
      throw InternalInfeasible("kleitman_wang: bi-degree mismatch at vertex " + std::to_string(v));
  }
  return g;
}

namespace {

std::string pair_name(int u, int v) { return "{" + std::to_string(u) + ", " + std::to_string(v) + "}"; }

}  // namespace

Realization glue(const std::map<EdgeType, TypedPart>& parts, std::size_t n) {
  Realization out{SimpleGraph(n), {}};

  auto place = [&](int u, int v, const EdgeType& tau) {
    if (out.graph.has_edge(u, v))
      throw SimplicityViolation("glue: pair " + pair_name(u, v) + " contributed twice");
    out.graph.add_edge(u, v);
    out.tags.push_back({u, v, tau});
  };

  for (const auto& [tau, part] : parts) {
    const bool diagonal = tau.type_class() == TypeClass::Diagonal;
    if (const auto* g = std::get_if<SimpleGraph>(&part)) {
      if (!diagonal) throw std::invalid_argument("glue: undirected part for a non-diagonal type");
      if (g->n() != n) throw std::invalid_argument("glue: part on a different vertex count");
      for (auto [u, v] : g->edges()) place(u, v, tau);
    } else {
      const auto& dg = std::get<Digraph>(part);
      if (tau.type_class() != TypeClass::A)
        throw std::invalid_argument("glue: directed part must be keyed by an A-type");
      if (dg.n() != n) throw std::invalid_argument("glue: part on a different vertex count");
      for (auto [i, j] : dg.arcs()) {
        if (dg.has_arc(j, i))
          throw SimplicityViolation("glue: opposite arcs " + pair_name(i, j) + " in one type");
        place(i, j, tau);
      }
    }
  }
  return out;
}

NotGraphical::NotGraphical(Verdict verdict)
    : std::runtime_error("collection is not graphical (" + std::to_string(verdict.failures.size()) +
                         " failing conditions)"),
      verdict_(std::move(verdict)) {}

Realization realize_neighborhood(std::span<const RootedTree> trees, int h) {
  const auto table = build_table(trees, h);
  auto verdict = check_neighborhood(table);
  if (!verdict.graphical) throw NotGraphical(std::move(verdict));

  std::map<EdgeType, TypedPart> parts;
  for (const auto& tau : table.diagonal_types()) parts.emplace(tau, havel_hakimi(table.column(tau)));
  for (const auto& tau : table.a_types()) {
    const auto out = table.column(tau);
    const auto in = table.column(tau.inverse());
    std::vector<DegreePair> pairs(table.n());
    for (std::size_t i = 0; i < table.n(); ++i) pairs[i] = {out[i], in[i]};
    parts.emplace(tau, kleitman_wang(pairs));
  }
  return glue(parts, table.n());
}

TypedDegreeTable tagged_degrees(const Realization& g, int h) {
  TypedDegreeTable table(g.graph.n(), h);
  for (const auto& e : g.tags) {
    table.add(static_cast<std::size_t>(e.from), e.type);
    table.add(static_cast<std::size_t>(e.to), e.type.inverse());
  }
  return table;
}

}  // namespace ucover
