#include "ucover/unfold.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "ucover/errors.hpp"

namespace ucover {

namespace {

// Expansion of a walk depends only on (current vertex, previous vertex,
// remaining depth), so codes are memoized on that triple.
class Unfolder {
 public:
  Unfolder(const SimpleGraph& g, int h) : g_(g), h_(h) {
    if (h < 0) throw std::invalid_argument("cover ball radius must be non-negative");
  }

  const std::string& code(int at, int from, int remaining) {
    const auto key = pack(at, from, remaining);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::string out = "(";
    if (remaining > 0) {
      std::vector<std::string> sub;
      for (int next : g_.neighbors(at))
        if (next != from) sub.push_back(code(next, at, remaining - 1));
      std::sort(sub.begin(), sub.end(),
                [](const auto& a, const auto& b) { return code_less(a, b); });
      for (const auto& s : sub) out += s;
    }
    out += ')';
    return memo_.emplace(key, std::move(out)).first->second;
  }

  CanonCode root_code(int v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g_.n())
      throw IndexError("cover_ball: vertex " + std::to_string(v) + " out of range");
    return CanonCode::from_canonical(code(v, -1, h_));
  }

 private:
  std::uint64_t pack(int at, int from, int remaining) const {
    const auto n = static_cast<std::uint64_t>(g_.n()) + 1;
    return (static_cast<std::uint64_t>(at) * n + static_cast<std::uint64_t>(from + 1)) *
               static_cast<std::uint64_t>(h_ + 1) +
           static_cast<std::uint64_t>(remaining);
  }

  const SimpleGraph& g_;
  int h_;
  std::unordered_map<std::uint64_t, std::string> memo_;
};

}  // namespace

CanonCode cover_ball_code(const SimpleGraph& g, int v, int h) { return Unfolder(g, h).root_code(v); }

RootedTree cover_ball(const SimpleGraph& g, int v, int h) {
  return parse_tree(cover_ball_code(g, v, h).str());
}

std::vector<CanonCode> neighborhood_codes(const SimpleGraph& g, int h) {
  Unfolder unfolder(g, h);
  std::vector<CanonCode> out;
  out.reserve(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) out.push_back(unfolder.root_code(static_cast<int>(v)));
  return out;
}

std::vector<RootedTree> neighborhood_collection(const SimpleGraph& g, int h) {
  std::vector<RootedTree> out;
  for (const auto& c : neighborhood_codes(g, h)) out.push_back(parse_tree(c.str()));
  return out;
}

std::vector<CoverBall> cover_balls(const SimpleGraph& g, int h) {
  std::vector<CoverBall> out;
  int v = 0;
  for (auto& t : neighborhood_collection(g, h)) out.push_back({std::move(t), v++});
  return out;
}

std::optional<std::size_t> first_mismatch(const SimpleGraph& g, std::span<const RootedTree> trees,
                                          int h) {
  if (trees.size() != g.n())
    throw std::invalid_argument("graph has " + std::to_string(g.n()) + " vertices but " +
                                std::to_string(trees.size()) + " trees were given");
  Unfolder unfolder(g, h);
  for (std::size_t i = 0; i < trees.size(); ++i)
    if (unfolder.root_code(static_cast<int>(i)) != canonical_code(trees[i])) return i;
  return std::nullopt;
}

bool verify_realization(const SimpleGraph& g, std::span<const RootedTree> trees, int h) {
  if (trees.size() != g.n()) return false;
  return !first_mismatch(g, trees, h).has_value();
}

}  // namespace ucover
