#include <algorithm>

#include "dg/axioms.hpp"
#include "dg/error.hpp"
#include "dg/parser.hpp"
#include "parser_internal.hpp"

namespace dg {

namespace {

// Advances a mixed-radix counter; false once it wraps around to all zeros.
bool next_counter(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (++digits[k] < radix[k]) return true;
    digits[k] = 0;
  }
  return false;
}

// Rules of `cat` whose slot categories match the given dependents exactly;
// std::nullopt stands for a leaf declaration.
std::vector<std::optional<Rule>> matching_rules(const Grammar& g, const Category& cat,
                                                const std::vector<Category>& left,
                                                const std::vector<Category>& right) {
  std::vector<std::optional<Rule>> out;
  if (left.empty() && right.empty()) {
    if (detail::is_leaf_category(g, cat)) out.emplace_back(std::nullopt);
    return out;
  }
  auto same = [](const std::vector<Slot>& slots, const std::vector<Category>& cats) {
    return std::equal(slots.begin(), slots.end(), cats.begin(), cats.end(),
                      [](const Slot& s, const Category& c) { return s.category == c; });
  };
  for (const Rule* r : g.rules_for(cat)) {
    if (same(r->left, left) && same(r->right, right)) out.emplace_back(*r);
  }
  return out;
}

// All labeled analyses over one unlabeled tree: the product of the rules
// each token can use given its dependents' categories and sides.
void add_labelings(const Grammar& g, const DependencyStructure& tree, std::vector<Analysis>& out,
                   std::size_t max_analyses) {
  const std::size_t n = tree.size();
  std::vector<std::vector<std::optional<Rule>>> per_token;
  for (TokenIndex i = 1; i <= n; ++i) {
    std::vector<Category> left, right;
    for (auto d : tree.dependents_of(i)) (d < i ? left : right).push_back(tree.token(d).category);
    per_token.push_back(matching_rules(g, tree.token(i).category, left, right));
    if (per_token.back().empty()) return;
  }
  std::vector<std::size_t> radix;
  for (const auto& choices : per_token) radix.push_back(choices.size());

  const auto heads = tree.head_vector();
  std::vector<std::size_t> pick(n, 0);
  do {
    std::vector<std::string> labels(n, std::string(kNoLabel));
    std::vector<std::optional<Rule>> trace(n);
    for (TokenIndex i = 1; i <= n; ++i) {
      trace[i - 1] = per_token[i - 1][pick[i - 1]];
      if (!trace[i - 1]) continue;
      auto deps = tree.dependents_of(i);
      auto dep = deps.begin();
      for (const auto& slot : trace[i - 1]->left) labels[*dep++ - 1] = slot.arc_label();
      for (const auto& slot : trace[i - 1]->right) labels[*dep++ - 1] = slot.arc_label();
    }
    out.push_back({ds_from_heads(tree.tokens(), heads, labels), std::move(trace)});
    if (out.size() > max_analyses) throw TruncationError(max_analyses);
  } while (next_counter(pick, radix));
}

}  // namespace

std::vector<Analysis> enumerate_oracle(const Grammar& g, const Sentence& s, const ParseOptions& options) {
  auto word_cats = detail::lookup_words(g, s);
  const std::size_t n = s.forms.size();
  if (n > kOracleMaxLength) {
    throw ParseError("oracle is limited to " + std::to_string(kOracleMaxLength) + " words, got " + std::to_string(n));
  }
  std::vector<std::vector<Category>> choices;
  std::vector<std::size_t> cat_radix;
  for (const auto& cats : word_cats) {
    choices.emplace_back(cats.begin(), cats.end());
    cat_radix.push_back(cats.size());
  }
  const std::vector<std::size_t> head_radix(n, n + 1);

  std::vector<Analysis> out;
  std::vector<std::size_t> cat_pick(n, 0);
  do {
    std::vector<Token> tokens;
    for (std::size_t k = 0; k < n; ++k) tokens.push_back({k + 1, s.forms[k], choices[k][cat_pick[k]]});

    std::vector<std::size_t> heads(n, 0);
    do {
      if (std::count(heads.begin(), heads.end(), 0u) != 1) continue;
      bool self_loop = false;
      for (std::size_t k = 0; k < n; ++k) self_loop = self_loop || heads[k] == k + 1;
      if (self_loop) continue;
      auto tree = ds_from_heads(tokens, heads);
      auto root = std::find(heads.begin(), heads.end(), 0u) - heads.begin();
      if (!g.root_cats.count(tokens[root].category) || !validate(tree).empty()) continue;
      add_labelings(g, tree, out, options.max_analyses);
    } while (next_counter(heads, head_radix));
  } while (next_counter(cat_pick, cat_radix));

  canonicalize(out);
  return out;
}

}  // namespace dg
