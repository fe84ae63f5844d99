// CKY recognition and exhaustive forest unpacking over a Gaifman CFG.
// Productions are binarized right-branching through intermediate symbols;
// unpacking folds the intermediate symbols back so every derivation tree
// uses only the original productions.

#include <algorithm>
#include <map>
#include <memory>

#include "dg/error.hpp"
#include "dg/parser.hpp"
#include "parser_internal.hpp"

namespace dg {

namespace {

using detail::Partial;

struct Tree {
  std::size_t production;
  std::vector<std::shared_ptr<const Tree>> children;
  TokenIndex position = 0;  // set for lexical productions
};
using TreePtr = std::shared_ptr<const Tree>;

Category category_of(const std::string& symbol) {
  if (symbol.size() <= 4) throw Error("CFG symbol '" + symbol + "' carries no category");
  return Category(symbol.substr(0, symbol.size() - 4));
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

class BinarizedCfg {
 public:
  struct Binary {
    int lhs, left, right;
    std::size_t production;
  };
  struct Unary {
    int lhs, child;
    std::size_t production;
  };

  explicit BinarizedCfg(const Cfg& cfg) : cfg_(cfg) {
    start_ = id(cfg.start);
    for (std::size_t pi = 0; pi < cfg.productions.size(); ++pi) {
      const auto& p = cfg.productions[pi];
      const int lhs = id(p.lhs);
      if (p.rhs.empty()) throw Error("empty production for " + p.lhs);
      if (p.rhs.size() == 1) {
        if (!cfg.nonterminals.count(p.rhs[0])) {
          lexical_[p.rhs[0]].push_back({lhs, -1, pi});
        } else {
          unary_.push_back({lhs, id(p.rhs[0]), pi});
        }
        continue;
      }
      for (const auto& s : p.rhs) {
        if (!cfg.nonterminals.count(s)) throw Error("terminal '" + s + "' inside a non-lexical production");
      }
      int cur = lhs;
      for (std::size_t m = 0; m + 2 < p.rhs.size(); ++m) {
        int next = fresh();
        binary_.push_back({cur, id(p.rhs[m]), next, pi});
        cur = next;
      }
      binary_.push_back({cur, id(p.rhs[p.rhs.size() - 2]), id(p.rhs.back()), pi});
    }
    check_unary_acyclic();
  }

  const Cfg& cfg() const { return cfg_; }
  int start() const { return start_; }
  std::size_t symbol_count() const { return intermediate_.size(); }
  bool intermediate(int s) const { return intermediate_[s]; }
  const std::vector<Binary>& binary() const { return binary_; }
  const std::vector<Unary>& unary() const { return unary_; }

  const std::vector<Unary>* lexical(const std::string& word) const {
    auto it = lexical_.find(word);
    return it == lexical_.end() ? nullptr : &it->second;
  }

 private:
  int id(const std::string& name) {
    auto [it, inserted] = ids_.emplace(name, static_cast<int>(intermediate_.size()));
    if (inserted) intermediate_.push_back(false);
    return it->second;
  }

  int fresh() {
    intermediate_.push_back(true);
    return static_cast<int>(intermediate_.size()) - 1;
  }

  void check_unary_acyclic() const {
    // Kahn-style peeling on the unary graph; leftovers lie on a cycle.
    std::vector<int> indegree(intermediate_.size(), 0);
    for (const auto& u : unary_) ++indegree[u.child];
    std::vector<int> queue;
    for (std::size_t s = 0; s < indegree.size(); ++s) {
      if (indegree[s] == 0) queue.push_back(static_cast<int>(s));
    }
    std::size_t seen = 0;
    while (!queue.empty()) {
      int s = queue.back();
      queue.pop_back();
      ++seen;
      for (const auto& u : unary_) {
        if (u.lhs == s && --indegree[u.child] == 0) queue.push_back(u.child);
      }
    }
    if (seen != indegree.size()) throw Error("CFG has a unary cycle; derivations would be unbounded");
  }

  const Cfg& cfg_;
  std::map<std::string, int> ids_;
  std::vector<bool> intermediate_;
  std::vector<Binary> binary_;
  std::vector<Unary> unary_;
  std::map<std::string, std::vector<Unary>> lexical_;
  int start_ = 0;
};

class Cky {
 public:
  Cky(const BinarizedCfg& bin, const Sentence& s) : bin_(bin), s_(s), n_(s.forms.size()) {
    cells_.assign((n_ + 1) * (n_ + 1), std::vector<bool>(bin.symbol_count(), false));
    for (std::size_t i = 0; i < n_; ++i) {
      if (const auto* lex = bin.lexical(s.forms[i])) {
        for (const auto& l : *lex) cell(i, i + 1)[l.lhs] = true;
      }
      close_unary(i, i + 1);
    }
    for (std::size_t len = 2; len <= n_; ++len) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        const std::size_t j = i + len;
        for (std::size_t k = i + 1; k < j; ++k) {
          for (const auto& b : bin.binary()) {
            if (cell(i, k)[b.left] && cell(k, j)[b.right]) cell(i, j)[b.lhs] = true;
          }
        }
        close_unary(i, j);
      }
    }
  }

  std::vector<TreePtr> roots() { return has(0, n_, bin_.start()) ? trees(bin_.start(), 0, n_) : std::vector<TreePtr>{}; }

 private:
  std::vector<bool>& cell(std::size_t i, std::size_t j) { return cells_[i * (n_ + 1) + j]; }
  bool has(std::size_t i, std::size_t j, int sym) { return cell(i, j)[sym]; }

  void close_unary(std::size_t i, std::size_t j) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& u : bin_.unary()) {
        if (cell(i, j)[u.child] && !cell(i, j)[u.lhs]) {
          cell(i, j)[u.lhs] = true;
          changed = true;
        }
      }
    }
  }

  // Every derivation of `sym` over [i, j).
  const std::vector<TreePtr>& trees(int sym, std::size_t i, std::size_t j) {
    auto key = std::make_tuple(sym, i, j);
    if (auto it = trees_.find(key); it != trees_.end()) return it->second;
    std::vector<TreePtr> out;
    if (j == i + 1) {
      if (const auto* lex = bin_.lexical(s_.forms[i])) {
        for (const auto& l : *lex) {
          if (l.lhs == sym) out.push_back(std::make_shared<const Tree>(Tree{l.production, {}, i + 1}));
        }
      }
    }
    for (const auto& u : bin_.unary()) {
      if (u.lhs != sym || !has(i, j, u.child)) continue;
      for (const auto& t : trees(u.child, i, j)) out.push_back(std::make_shared<const Tree>(Tree{u.production, {t}}));
    }
    for (auto& children : sequences(sym, i, j)) {
      // Each sequence of a real symbol comes from exactly one production.
      out.push_back(std::make_shared<const Tree>(Tree{children.first, std::move(children.second)}));
    }
    return trees_.emplace(key, std::move(out)).first->second;
  }

  // Child sequences of binary expansions of `sym` over [i, j), tagged with
  // the original production. Intermediate symbols contribute their remaining
  // children inline.
  using Sequence = std::pair<std::size_t, std::vector<TreePtr>>;
  std::vector<Sequence> sequences(int sym, std::size_t i, std::size_t j) {
    std::vector<Sequence> out;
    for (const auto& b : bin_.binary()) {
      if (b.lhs != sym) continue;
      for (std::size_t k = i + 1; k < j; ++k) {
        if (!has(i, k, b.left) || !has(k, j, b.right)) continue;
        const auto& lefts = trees(b.left, i, k);
        if (bin_.intermediate(b.right)) {
          auto rests = sequences(b.right, k, j);
          for (const auto& l : lefts) {
            for (const auto& r : rests) {
              std::vector<TreePtr> seq{l};
              seq.insert(seq.end(), r.second.begin(), r.second.end());
              out.emplace_back(b.production, std::move(seq));
            }
          }
        } else {
          const auto& rights = trees(b.right, k, j);
          for (const auto& l : lefts) {
            for (const auto& r : rights) out.emplace_back(b.production, std::vector<TreePtr>{l, r});
          }
        }
      }
    }
    return out;
  }

  const BinarizedCfg& bin_;
  const Sentence& s_;
  std::size_t n_;
  std::vector<std::vector<bool>> cells_;
  std::map<std::tuple<int, std::size_t, std::size_t>, std::vector<TreePtr>> trees_;
};

// Head percolation: the lexical head of a node is the lexical head of its
// head child; every other child contributes an arc from that head. One
// result per labeling of the productions used.
std::vector<Partial> percolate(const Cfg& cfg, const Tree& t) {
  const auto& p = cfg.productions[t.production];
  if (t.children.empty()) return {Partial{t.position, {}, {{t.position, category_of(p.lhs)}}, {}}};

  std::vector<std::vector<Partial>> alternatives;
  for (const auto& c : t.children) alternatives.push_back(percolate(cfg, *c));

  std::vector<std::vector<const Partial*>> combos{{}};
  for (const auto& alts : alternatives) {
    std::vector<std::vector<const Partial*>> next;
    for (const auto& combo : combos) {
      for (const auto& a : alts) {
        auto c = combo;
        c.push_back(&a);
        next.push_back(std::move(c));
      }
    }
    combos = std::move(next);
  }

  const bool records_rule = ends_with(p.lhs, "_bar");
  std::vector<Partial> out;
  for (const auto& labels : cfg.slot_labels.at(p)) {
    for (const auto& combo : combos) {
      Partial merged;
      for (const auto* part : combo) merged = detail::merge(merged, *part);
      merged.head = combo[p.head_index]->head;
      for (std::size_t k = 0; k < combo.size(); ++k) {
        if (k != p.head_index) merged.arcs.push_back({merged.head, combo[k]->head, labels[k]});
      }
      if (records_rule) {
        std::optional<Rule> rule;
        if (p.rhs.size() > 1) {
          rule = Rule{category_of(p.lhs), {}, {}};
          for (std::size_t k = 0; k < p.rhs.size(); ++k) {
            if (k == p.head_index) continue;
            Slot slot{category_of(p.rhs[k]), labels[k] == kNoLabel ? std::nullopt : std::optional(labels[k])};
            (k < p.head_index ? rule->left : rule->right).push_back(std::move(slot));
          }
        }
        merged.rules.emplace_back(merged.head, std::move(rule));
      }
      out.push_back(std::move(merged));
    }
  }
  return out;
}

}  // namespace

std::vector<Analysis> parse_via_cfg(const Cfg& cfg, const Sentence& s, const ParseOptions& options) {
  if (s.forms.empty()) throw ParseError("empty sentence");
  for (std::size_t k = 0; k < s.forms.size(); ++k) {
    if (!cfg.terminals.count(s.forms[k])) {
      throw ParseError("unknown word '" + s.forms[k] + "' at position " + std::to_string(k + 1));
    }
  }
  BinarizedCfg bin(cfg);
  Cky cky(bin, s);
  auto roots = cky.roots();
  if (roots.size() > options.max_analyses) throw TruncationError(options.max_analyses);
  std::vector<Analysis> out;
  for (const auto& t : roots) {
    for (const auto& p : percolate(cfg, *t)) {
      out.push_back(detail::assemble(s, p));
      if (out.size() > options.max_analyses) throw TruncationError(options.max_analyses);
    }
  }
  canonicalize(out);
  return out;
}

std::vector<Analysis> parse_via_cfg(const Grammar& g, const Sentence& s, const ParseOptions& options) {
  detail::lookup_words(g, s);
  return parse_via_cfg(gaifman_cfg(g), s, options);
}

}  // namespace dg
