#pragma once

// Unlabeled rooted trees and their AHU canonical form.
//
// The balanced-parentheses word is both the file encoding and the canonical
// form: a leaf is "()", an internal node is "(" followed by its children's
// codes in ascending code order, then ")". Two trees are isomorphic iff
// their codes are equal.
//
// Code order is lexicographic over the alphabet ')' < '(', so "()" sorts
// before "(())" and a bare root before any larger tree.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ucover {

/// Lexicographic comparison with ')' ranked below '('.
bool code_less(std::string_view a, std::string_view b) noexcept;

class RootedTree {
 public:
  /// Single node.
  RootedTree() = default;
  explicit RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {}

  const std::vector<RootedTree>& children() const noexcept { return children_; }
  std::size_t degree() const noexcept { return children_.size(); }
  bool is_leaf() const noexcept { return children_.empty(); }

  std::size_t node_count() const;

 private:
  std::vector<RootedTree> children_;
};

/// AHU code of a rooted tree. Only constructible from a tree or from a word
/// already known to be canonical.
class CanonCode {
 public:
  CanonCode() : code_("()") {}

  /// Wraps `code` without checking it. Use `canonical_code(parse_tree(s))`
  /// for untrusted text.
  static CanonCode from_canonical(std::string code) { return CanonCode(std::move(code)); }

  const std::string& str() const noexcept { return code_; }
  std::size_t node_count() const noexcept { return code_.size() / 2; }

  friend bool operator==(const CanonCode&, const CanonCode&) = default;
  friend std::strong_ordering operator<=>(const CanonCode& a, const CanonCode& b) {
    if (a.code_ == b.code_) return std::strong_ordering::equal;
    return code_less(a.code_, b.code_) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  explicit CanonCode(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

/// Parses one balanced-parentheses word. Surrounding whitespace is ignored.
/// Throws ParseError on empty, unbalanced or trailing input.
RootedTree parse_tree(std::string_view text);

CanonCode canonical_code(const RootedTree& t);

int depth(const RootedTree& t);

/// Ball of radius k around the root.
RootedTree truncate(const RootedTree& t, int k);

/// Always the canonical word.
std::string serialize(const RootedTree& t);

inline bool isomorphic(const RootedTree& a, const RootedTree& b) {
  return canonical_code(a) == canonical_code(b);
}

}  // namespace ucover
