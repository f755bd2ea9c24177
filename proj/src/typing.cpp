#include "ucover/typing.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "ucover/errors.hpp"

namespace ucover {

std::string_view to_string(TypeClass c) {
  switch (c) {
    case TypeClass::Diagonal: return "diag";
    case TypeClass::A: return "A";
    case TypeClass::B: return "B";
  }
  return "?";
}

TypeClass EdgeType::type_class() const {
  if (r == s) return TypeClass::Diagonal;
  return r < s ? TypeClass::A : TypeClass::B;
}

EdgeType edge_type(const RootedTree& t, std::size_t child_index, int h) {
  if (h < 1) throw std::invalid_argument("edge_type: depth must be at least 1");
  if (child_index >= t.degree())
    throw IndexError("edge_type: child " + std::to_string(child_index) + " of a root with " +
                     std::to_string(t.degree()) + " children");
  if (const int d = depth(t); d > h)
    throw DepthError("edge_type: tree depth " + std::to_string(d) + " exceeds " + std::to_string(h),
                     {});

  std::vector<RootedTree> rest;
  rest.reserve(t.degree() - 1);
  for (std::size_t c = 0; c < t.degree(); ++c)
    if (c != child_index) rest.push_back(t.children()[c]);

  return {canonical_code(truncate(RootedTree(std::move(rest)), h - 1)),
          canonical_code(t.children()[child_index])};
}

int TypedDegreeTable::degree(std::size_t i, const EdgeType& tau) const {
  if (i >= n_) throw IndexError("TypedDegreeTable: vertex out of range");
  auto it = columns_.find(tau);
  return it == columns_.end() ? 0 : it->second[i];
}

long long TypedDegreeTable::total(const EdgeType& tau) const {
  auto it = columns_.find(tau);
  if (it == columns_.end()) return 0;
  return std::accumulate(it->second.begin(), it->second.end(), 0LL);
}

std::vector<int> TypedDegreeTable::column(const EdgeType& tau) const {
  auto it = columns_.find(tau);
  return it == columns_.end() ? std::vector<int>(n_, 0) : it->second;
}

std::vector<EdgeType> TypedDegreeTable::types() const {
  std::vector<EdgeType> out;
  out.reserve(columns_.size());
  for (const auto& [tau, _] : columns_) out.push_back(tau);
  return out;
}

std::vector<EdgeType> TypedDegreeTable::diagonal_types() const {
  std::vector<EdgeType> out;
  for (const auto& [tau, _] : columns_)
    if (tau.type_class() == TypeClass::Diagonal) out.push_back(tau);
  return out;
}

std::vector<EdgeType> TypedDegreeTable::a_types() const {
  std::set<EdgeType> keys;
  for (const auto& [tau, _] : columns_) {
    switch (tau.type_class()) {
      case TypeClass::A: keys.insert(tau); break;
      case TypeClass::B: keys.insert(tau.inverse()); break;
      case TypeClass::Diagonal: break;
    }
  }
  return {keys.begin(), keys.end()};
}

void TypedDegreeTable::add(std::size_t i, const EdgeType& tau, int count) {
  if (i >= n_) throw IndexError("TypedDegreeTable: vertex out of range");
  auto [it, _] = columns_.try_emplace(tau, n_, 0);
  it->second[i] += count;
  degree_seq_[i] += count;
}

void require_depth(std::span<const RootedTree> trees, int h) {
  if (h < 0) throw std::invalid_argument("depth must be non-negative");
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < trees.size(); ++i)
    if (depth(trees[i]) > h) bad.push_back(i);
  if (bad.empty()) return;

  std::string msg = "trees deeper than " + std::to_string(h) + " at index";
  for (auto i : bad) msg += " " + std::to_string(i);
  throw DepthError(msg, std::move(bad));
}

TypedDegreeTable build_table(std::span<const RootedTree> trees, int h) {
  require_depth(trees, h);
  TypedDegreeTable table(trees.size(), h);
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t c = 0; c < trees[i].degree(); ++c) table.add(i, edge_type(trees[i], c, h));
  return table;
}

}  // namespace ucover
