#include "ucover/tree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ucover/errors.hpp"

namespace ucover {

bool code_less(std::string_view a, std::string_view b) noexcept {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return x != y && x == ')';
  });
}

std::size_t RootedTree::node_count() const {
  std::size_t count = 1;
  for (const auto& c : children_) count += c.node_count();
  return count;
}

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Iterative so that deep paths do not exhaust the stack.
RootedTree parse_word(std::string_view word) {
  if (word.empty()) throw ParseError("empty tree word");
  if (word.front() != '(') throw ParseError("tree word must start with '('");

  std::vector<std::vector<RootedTree>> open;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const char c = word[pos];
    if (c == '(') {
      open.emplace_back();
    } else if (c == ')') {
      if (open.empty()) throw ParseError("unbalanced ')' at column " + std::to_string(pos + 1));
      RootedTree node(std::move(open.back()));
      open.pop_back();
      if (open.empty()) {
        if (pos + 1 != word.size())
          throw ParseError("trailing characters after tree at column " + std::to_string(pos + 2));
        return node;
      }
      open.back().push_back(std::move(node));
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' at column " +
                       std::to_string(pos + 1));
    }
  }
  throw ParseError("unbalanced '(': missing " + std::to_string(open.size()) + " closing");
}

void append_code(const RootedTree& t, std::string& out) {
  std::vector<std::string> sub;
  sub.reserve(t.degree());
  for (const auto& c : t.children()) {
    std::string s;
    append_code(c, s);
    sub.push_back(std::move(s));
  }
  std::sort(sub.begin(), sub.end(), [](const auto& a, const auto& b) { return code_less(a, b); });
  out.push_back('(');
  for (const auto& s : sub) out += s;
  out.push_back(')');
}

}  // namespace

RootedTree parse_tree(std::string_view text) { return parse_word(trim(text)); }

CanonCode canonical_code(const RootedTree& t) {
  std::string code;
  append_code(t, code);
  return CanonCode::from_canonical(std::move(code));
}

int depth(const RootedTree& t) {
  int d = 0;
  for (const auto& c : t.children()) d = std::max(d, 1 + depth(c));
  return d;
}

RootedTree truncate(const RootedTree& t, int k) {
  if (k < 0) throw std::invalid_argument("truncate: negative radius");
  if (k == 0) return RootedTree{};
  std::vector<RootedTree> kept;
  kept.reserve(t.degree());
  for (const auto& c : t.children()) kept.push_back(truncate(c, k - 1));
  return RootedTree(std::move(kept));
}

std::string serialize(const RootedTree& t) { return canonical_code(t).str(); }

}  // namespace ucover
