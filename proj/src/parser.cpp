#include "dg/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include "dg/error.hpp"
#include "parser_internal.hpp"

namespace dg {

namespace detail {

std::vector<std::set<Category>> lookup_words(const Grammar& g, const Sentence& s) {
  if (s.forms.empty()) throw ParseError("empty sentence");
  std::vector<std::set<Category>> out;
  for (std::size_t k = 0; k < s.forms.size(); ++k) {
    auto it = g.lexicon.find(s.forms[k]);
    if (it == g.lexicon.end() || it->second.empty()) {
      throw ParseError("unknown word '" + s.forms[k] + "' at position " + std::to_string(k + 1));
    }
    out.push_back(it->second);
  }
  return out;
}

bool is_leaf_category(const Grammar& g, const Category& c) {
  if (g.leaf_cats.count(c)) return true;
  return std::any_of(g.rules.begin(), g.rules.end(), [&](const Rule& r) { return r.head == c && r.arity() == 0; });
}

Analysis assemble(const Sentence& s, const Partial& p) {
  const std::size_t n = s.forms.size();
  std::vector<std::optional<Category>> cats(n);
  for (const auto& [i, c] : p.cats) cats[i - 1] = c;
  std::vector<Token> tokens;
  for (std::size_t k = 0; k < n; ++k) tokens.push_back({k + 1, s.forms[k], *cats[k]});
  std::vector<std::optional<Rule>> trace(n);
  for (const auto& [i, r] : p.rules) trace[i - 1] = r;
  return {DependencyStructure(std::move(tokens), p.arcs), std::move(trace)};
}

Partial merge(const Partial& x, const Partial& y) {
  Partial out = x;
  out.arcs.insert(out.arcs.end(), y.arcs.begin(), y.arcs.end());
  out.cats.insert(out.cats.end(), y.cats.begin(), y.cats.end());
  out.rules.insert(out.rules.end(), y.rules.begin(), y.rules.end());
  return out;
}

}  // namespace detail

namespace {

using detail::Partial;

// Chart over half-open spans [a, b) of 1-based token positions. An entry
// for (a, b, X) lists every complete subtree covering exactly that span whose
// root has category X.
class ChartParser {
 public:
  ChartParser(const Grammar& g, std::vector<std::set<Category>> word_cats)
      : g_(g), word_cats_(std::move(word_cats)) {}

  const std::vector<Partial>& complete(std::size_t a, std::size_t b, const Category& x) {
    auto key = std::make_tuple(a, b, x);
    if (auto it = chart_.find(key); it != chart_.end()) return it->second;
    std::vector<Partial> out;
    const bool leaf = detail::is_leaf_category(g_, x);
    for (std::size_t h = a; h < b; ++h) {
      if (!word_cats_[h - 1].count(x)) continue;
      if (leaf && b - a == 1) out.push_back({h, {}, {{h, x}}, {{h, std::nullopt}}});
      for (const Rule* rule : g_.rules_for(x)) {
        if (rule->arity() == 0) continue;
        auto lefts = cover(a, h, h, rule->left, 0);
        if (lefts.empty()) continue;
        auto rights = cover(h + 1, b, h, rule->right, 0);
        for (const auto& l : lefts) {
          for (const auto& r : rights) {
            Partial p = detail::merge(l, r);
            p.head = h;
            p.cats.emplace_back(h, x);
            p.rules.emplace_back(h, *rule);
            out.push_back(std::move(p));
          }
        }
      }
    }
    return chart_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Sequences of complete subtrees covering exactly [a, b) whose categories
  // are slots[k..], each attached to `head` with its slot label.
  std::vector<Partial> cover(std::size_t a, std::size_t b, TokenIndex head, const std::vector<Slot>& slots,
                             std::size_t k) {
    const std::size_t remaining = slots.size() - k;
    if (remaining == 0) return a == b ? std::vector<Partial>{Partial{}} : std::vector<Partial>{};
    if (b < a + remaining) return {};
    std::vector<Partial> out;
    for (std::size_t e = a + 1; e + (remaining - 1) <= b; ++e) {
      const auto& firsts = complete(a, e, slots[k].category);
      if (firsts.empty()) continue;
      auto rests = cover(e, b, head, slots, k + 1);
      for (const auto& f : firsts) {
        for (const auto& r : rests) {
          Partial p = detail::merge(f, r);
          p.arcs.push_back({head, f.head, slots[k].arc_label()});
          out.push_back(std::move(p));
        }
      }
    }
    return out;
  }

  const Grammar& g_;
  std::vector<std::set<Category>> word_cats_;
  std::map<std::tuple<std::size_t, std::size_t, Category>, std::vector<Partial>> chart_;
};

}  // namespace

Sentence Sentence::from_text(std::string_view line) {
  Sentence s;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) s.forms.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return s;
}

void canonicalize(std::vector<Analysis>& analyses) {
  auto key = [](const Analysis& a) {
    std::vector<std::string> cats;
    for (const auto& t : a.ds.tokens()) cats.push_back(t.category.name());
    return std::make_tuple(a.ds.head_vector(), a.ds.label_vector(), std::move(cats));
  };
  std::vector<std::pair<decltype(key(analyses.front())), std::size_t>> keyed;
  keyed.reserve(analyses.size());
  for (std::size_t k = 0; k < analyses.size(); ++k) keyed.emplace_back(key(analyses[k]), k);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Analysis> out;
  for (std::size_t k = 0; k < keyed.size(); ++k) {
    if (k > 0 && keyed[k].first == keyed[k - 1].first) continue;
    out.push_back(std::move(analyses[keyed[k].second]));
  }
  analyses = std::move(out);
}

std::vector<Analysis> parse(const Grammar& g, const Sentence& s, const ParseOptions& options) {
  ChartParser chart(g, detail::lookup_words(g, s));
  const std::size_t n = s.forms.size();
  std::vector<Analysis> out;
  for (const auto& root : g.root_cats) {
    for (const auto& p : chart.complete(1, n + 1, root)) {
      out.push_back(detail::assemble(s, p));
      if (out.size() > options.max_analyses) throw TruncationError(options.max_analyses);
    }
  }
  canonicalize(out);
  return out;
}

bool matches_grammar(const Analysis& a, const Grammar& g) {
  const auto& ds = a.ds;
  if (a.rule_trace.size() != ds.size() || !ds.has_unique_heads()) return false;
  auto roots = ds.independents();
  if (roots.size() != 1 || !g.root_cats.count(ds.token(roots.front()).category)) return false;
  for (TokenIndex i = 1; i <= ds.size(); ++i) {
    const auto& cat = ds.token(i).category;
    auto deps = ds.dependents_of(i);
    const auto& rule = a.rule_trace[i - 1];
    if (!rule) {
      if (!deps.empty() || !detail::is_leaf_category(g, cat)) return false;
      continue;
    }
    if (!g.rules.count(*rule) || rule->head != cat) return false;
    std::vector<Slot> actual;
    for (auto d : deps) {
      const Arc* arc = nullptr;
      for (const auto& x : ds.arcs()) {
        if (x.head == i && x.dep == d) arc = &x;
      }
      actual.push_back({ds.token(d).category, arc->label == kNoLabel ? std::nullopt : std::optional(arc->label)});
    }
    auto split = std::partition_point(deps.begin(), deps.end(), [i](TokenIndex d) { return d < i; }) - deps.begin();
    std::vector<Slot> left(actual.begin(), actual.begin() + split);
    std::vector<Slot> right(actual.begin() + split, actual.end());
    if (left != rule->left || right != rule->right) return false;
  }
  return true;
}

}  // namespace dg
