#pragma once

// Dependency structures are general labeled digraphs over a token sequence:
// multiple heads, cycles and several roots are all representable so that the
// axiom checks can diagnose them. Phrase markers are ordered trees whose
// internal nodes mark one head child.

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dg/grammar.hpp"

namespace dg {

using TokenIndex = std::size_t;  // 1-based; 0 means "no head" in head vectors

struct Token {
  TokenIndex index;
  std::string form;
  Category category;

  friend auto operator<=>(const Token&, const Token&) = default;
  friend bool operator==(const Token&, const Token&) = default;
};

// Builds tokens 1..n from parallel form/category lists.
std::vector<Token> make_tokens(const std::vector<std::pair<std::string, std::string>>& form_cats);

struct Arc {
  TokenIndex head;
  TokenIndex dep;
  std::string label = std::string(kNoLabel);

  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;
};

class DependencyStructure {
 public:
  // Throws StructureError on non-sequential token indices, empty forms,
  // out-of-range arc endpoints, self-loops and duplicate (head, dep) pairs.
  DependencyStructure(std::vector<Token> tokens, std::vector<Arc> arcs);

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  const Token& token(TokenIndex i) const { return tokens_.at(i - 1); }
  // Sorted by (head, dep).
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  bool valid_index(TokenIndex i) const noexcept { return i >= 1 && i <= tokens_.size(); }

  std::set<TokenIndex> heads_of(TokenIndex i) const;
  // Direct dependents of `i` in surface order.
  std::vector<TokenIndex> dependents_of(TokenIndex i) const;
  std::vector<TokenIndex> independents() const;
  bool has_unique_heads() const;

  // Transitive dependents of `i`, excluding `i`. Requires unique heads.
  std::set<TokenIndex> descendants(TokenIndex i) const;
  // Smallest and largest index in {i} and its descendants.
  std::pair<TokenIndex, TokenIndex> projection_span(TokenIndex i) const;

  // heads[i-1] is the head of token i, 0 when independent. Requires unique heads.
  std::vector<TokenIndex> head_vector() const;
  // Label of each token's incoming arc; empty for independent tokens.
  std::vector<std::string> label_vector() const;
  std::set<std::pair<TokenIndex, TokenIndex>> unlabeled_arcs() const;

  friend bool operator==(const DependencyStructure&, const DependencyStructure&) = default;

 private:
  void require_index(TokenIndex i) const;
  void require_unique_heads() const;

  std::vector<Token> tokens_;
  std::vector<Arc> arcs_;
};

// Builds a DS from a head vector (0 = independent) and optional labels.
DependencyStructure ds_from_heads(std::vector<Token> tokens, const std::vector<TokenIndex>& heads,
                                  const std::vector<std::string>& labels = {});

class PhraseMarker {
 public:
  struct Node {
    std::vector<PhraseMarker> children;
    std::size_t head_child;

    friend bool operator==(const Node&, const Node&) = default;
  };

  static PhraseMarker leaf(Token token);
  // Throws StructureError when `children` is empty, `head_child` is out of
  // range, or the concatenated fringe is not a run of consecutive indices.
  static PhraseMarker node(std::vector<PhraseMarker> children, std::size_t head_child);

  bool is_leaf() const noexcept { return std::holds_alternative<Token>(value_); }
  const Token& token() const { return std::get<Token>(value_); }
  const Node& as_node() const { return std::get<Node>(value_); }

  // Left-to-right leaves.
  std::vector<Token> fringe() const;
  TokenIndex first_index() const;
  TokenIndex last_index() const;
  // The token reached by following head children down to a leaf.
  const Token& lexical_head() const;

  friend bool operator==(const PhraseMarker&, const PhraseMarker&) = default;

 private:
  explicit PhraseMarker(std::variant<Token, Node> v) : value_(std::move(v)) {}

  std::variant<Token, Node> value_;
};

}  // namespace dg
