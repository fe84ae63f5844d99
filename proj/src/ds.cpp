#include "dg/ds.hpp"

#include <algorithm>

#include "dg/error.hpp"

namespace dg {

std::vector<Token> make_tokens(const std::vector<std::pair<std::string, std::string>>& form_cats) {
  std::vector<Token> out;
  out.reserve(form_cats.size());
  for (const auto& [form, cat] : form_cats) out.push_back({out.size() + 1, form, Category(cat)});
  return out;
}

DependencyStructure::DependencyStructure(std::vector<Token> tokens, std::vector<Arc> arcs)
    : tokens_(std::move(tokens)), arcs_(std::move(arcs)) {
  for (std::size_t k = 0; k < tokens_.size(); ++k) {
    if (tokens_[k].index != k + 1) {
      throw StructureError("token " + std::to_string(k + 1) + " has index " + std::to_string(tokens_[k].index));
    }
    if (tokens_[k].form.empty()) throw StructureError("token " + std::to_string(k + 1) + " has an empty form");
  }
  for (const auto& a : arcs_) {
    if (!valid_index(a.head) || !valid_index(a.dep)) {
      throw StructureError("arc (" + std::to_string(a.head) + "," + std::to_string(a.dep) + ") index out of range");
    }
    if (a.head == a.dep) throw StructureError("self-loop at token " + std::to_string(a.head));
    if (a.label.empty()) throw StructureError("arc with empty label");
  }
  std::sort(arcs_.begin(), arcs_.end());
  auto dup = std::adjacent_find(arcs_.begin(), arcs_.end(),
                                [](const Arc& x, const Arc& y) { return x.head == y.head && x.dep == y.dep; });
  if (dup != arcs_.end()) {
    throw StructureError("duplicate arc (" + std::to_string(dup->head) + "," + std::to_string(dup->dep) + ")");
  }
}

void DependencyStructure::require_index(TokenIndex i) const {
  if (!valid_index(i)) throw StructureError("token index " + std::to_string(i) + " out of range");
}

void DependencyStructure::require_unique_heads() const {
  if (!has_unique_heads()) throw StructureError("structure has tokens with more than one head");
}

std::set<TokenIndex> DependencyStructure::heads_of(TokenIndex i) const {
  require_index(i);
  std::set<TokenIndex> out;
  for (const auto& a : arcs_) {
    if (a.dep == i) out.insert(a.head);
  }
  return out;
}

std::vector<TokenIndex> DependencyStructure::dependents_of(TokenIndex i) const {
  require_index(i);
  std::vector<TokenIndex> out;
  // arcs_ is sorted by head then dep, so these come out in surface order.
  for (const auto& a : arcs_) {
    if (a.head == i) out.push_back(a.dep);
  }
  return out;
}

std::vector<TokenIndex> DependencyStructure::independents() const {
  std::vector<bool> has_head(size() + 1, false);
  for (const auto& a : arcs_) has_head[a.dep] = true;
  std::vector<TokenIndex> out;
  for (TokenIndex i = 1; i <= size(); ++i) {
    if (!has_head[i]) out.push_back(i);
  }
  return out;
}

bool DependencyStructure::has_unique_heads() const {
  std::vector<int> count(size() + 1, 0);
  for (const auto& a : arcs_) {
    if (++count[a.dep] > 1) return false;
  }
  return true;
}

std::set<TokenIndex> DependencyStructure::descendants(TokenIndex i) const {
  require_index(i);
  require_unique_heads();
  std::set<TokenIndex> seen;
  std::vector<TokenIndex> stack{i};
  while (!stack.empty()) {
    TokenIndex cur = stack.back();
    stack.pop_back();
    for (const auto& a : arcs_) {
      if (a.head == cur && a.dep != i && seen.insert(a.dep).second) stack.push_back(a.dep);
    }
  }
  return seen;
}

std::pair<TokenIndex, TokenIndex> DependencyStructure::projection_span(TokenIndex i) const {
  auto d = descendants(i);
  TokenIndex lo = i, hi = i;
  if (!d.empty()) {
    lo = std::min(lo, *d.begin());
    hi = std::max(hi, *d.rbegin());
  }
  return {lo, hi};
}

std::vector<TokenIndex> DependencyStructure::head_vector() const {
  require_unique_heads();
  std::vector<TokenIndex> heads(size(), 0);
  for (const auto& a : arcs_) heads[a.dep - 1] = a.head;
  return heads;
}

std::vector<std::string> DependencyStructure::label_vector() const {
  require_unique_heads();
  std::vector<std::string> labels(size());
  for (const auto& a : arcs_) labels[a.dep - 1] = a.label;
  return labels;
}

std::set<std::pair<TokenIndex, TokenIndex>> DependencyStructure::unlabeled_arcs() const {
  std::set<std::pair<TokenIndex, TokenIndex>> out;
  for (const auto& a : arcs_) out.emplace(a.head, a.dep);
  return out;
}

DependencyStructure ds_from_heads(std::vector<Token> tokens, const std::vector<TokenIndex>& heads,
                                  const std::vector<std::string>& labels) {
  if (heads.size() != tokens.size()) throw StructureError("head vector length differs from token count");
  if (!labels.empty() && labels.size() != tokens.size()) {
    throw StructureError("label vector length differs from token count");
  }
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < heads.size(); ++k) {
    if (heads[k] == 0) continue;
    arcs.push_back({heads[k], k + 1, labels.empty() ? std::string(kNoLabel) : labels[k]});
  }
  return DependencyStructure(std::move(tokens), std::move(arcs));
}

PhraseMarker PhraseMarker::leaf(Token token) { return PhraseMarker(std::move(token)); }

PhraseMarker PhraseMarker::node(std::vector<PhraseMarker> children, std::size_t head_child) {
  if (children.empty()) throw StructureError("phrase marker node without children");
  if (head_child >= children.size()) {
    throw StructureError("head child " + std::to_string(head_child) + " out of range");
  }
  for (std::size_t k = 1; k < children.size(); ++k) {
    if (children[k].first_index() != children[k - 1].last_index() + 1) {
      throw StructureError("phrase marker fringe is not contiguous at token " +
                           std::to_string(children[k].first_index()));
    }
  }
  return PhraseMarker(Node{std::move(children), head_child});
}

std::vector<Token> PhraseMarker::fringe() const {
  if (is_leaf()) return {token()};
  std::vector<Token> out;
  for (const auto& c : as_node().children) {
    auto f = c.fringe();
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

TokenIndex PhraseMarker::first_index() const {
  return is_leaf() ? token().index : as_node().children.front().first_index();
}

TokenIndex PhraseMarker::last_index() const {
  return is_leaf() ? token().index : as_node().children.back().last_index();
}

const Token& PhraseMarker::lexical_head() const {
  const PhraseMarker* cur = this;
  while (!cur->is_leaf()) cur = &cur->as_node().children[cur->as_node().head_child];
  return cur->token();
}

}  // namespace dg
