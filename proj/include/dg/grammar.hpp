#pragma once

// Dependency grammars: rules X(A, ..., *, ..., Z) with optional
// function labels on the dependent slots, leaf (X(*)) and root (*(X))
// declarations, a lexicon, semantic frames and lexical control.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dg {

// Label carried by arcs whose slot has no function label.
inline constexpr std::string_view kNoLabel = "_";

// True when `s` is non-empty and free of whitespace and of the reserved
// characters ( ) : * ^ #.
bool is_valid_symbol(std::string_view s);

// True when `s` can be used as a function label: a valid symbol that is not
// "_" and contains no '.' (the control path separator).
bool is_valid_label(std::string_view s);

class Category {
 public:
  // Throws GrammarError when `name` is not a valid symbol.
  explicit Category(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const Category&, const Category&) = default;
  friend bool operator==(const Category&, const Category&) = default;

 private:
  std::string name_;
};

struct Slot {
  Category category;
  std::optional<std::string> label;

  // The label an arc built from this slot carries.
  std::string arc_label() const { return label ? *label : std::string(kNoLabel); }

  friend auto operator<=>(const Slot&, const Slot&) = default;
  friend bool operator==(const Slot&, const Slot&) = default;
};

// One H1/H1' rule. The governor sits between `left` and `right`.
struct Rule {
  Category head;
  std::vector<Slot> left;
  std::vector<Slot> right;

  std::size_t arity() const noexcept { return left.size() + right.size(); }

  friend auto operator<=>(const Rule&, const Rule&) = default;
  friend bool operator==(const Rule&, const Rule&) = default;
};

// `control <trigger> : <gap_path> = SELF`. The controller is always the
// trigger node itself.
struct ControlSpec {
  std::string trigger;  // word form or category name
  std::vector<std::string> gap_path;

  friend auto operator<=>(const ControlSpec&, const ControlSpec&) = default;
  friend bool operator==(const ControlSpec&, const ControlSpec&) = default;
};

struct Grammar {
  std::set<Category> categories;
  std::set<Rule> rules;
  std::set<Category> leaf_cats;
  std::set<Category> root_cats;
  std::map<std::string, std::set<Category>> lexicon;
  std::map<std::string, std::vector<std::string>> frames;
  std::set<ControlSpec> controls;

  // Inserts a rule. A rule with no slots is the same statement as a leaf
  // declaration and is stored as one.
  void add_rule(Rule rule);

  // Rules whose head is `cat`, in canonical order.
  std::vector<const Rule*> rules_for(const Category& cat) const;

  // Frame lookup by word form first, then by category.
  const std::vector<std::string>* frame_for(const std::string& form, const Category& cat) const;

  friend bool operator==(const Grammar&, const Grammar&) = default;
};

// Reads the line-oriented grammar format. Throws GrammarError (with the line
// number) on syntax errors, unknown directives and undeclared categories.
Grammar parse_grammar(std::string_view text);

// Canonical serializer; parse_grammar(render_grammar(g)) == g.
std::string render_grammar(const Grammar& g);

struct Diagnostic {
  enum class Severity { Warning, Error };
  Severity severity;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::vector<Diagnostic> validate_grammar(const Grammar& g);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

// Context-free grammar produced by the Gaifman construction.
struct Production {
  std::string lhs;
  std::vector<std::string> rhs;
  std::size_t head_index = 0;

  friend auto operator<=>(const Production&, const Production&) = default;
  friend bool operator==(const Production&, const Production&) = default;
};

struct Cfg {
  std::set<std::string> nonterminals;
  std::set<std::string> terminals;
  std::string start;
  // Sorted by lhs, then rhs, then head_index; duplicate-free.
  std::vector<Production> productions;
  // Function labels of the rules that map onto a production, one entry per
  // rhs position ("_" at the head position and for unlabeled slots). Several
  // rules that differ only in their labels share one production.
  std::map<Production, std::set<std::vector<std::string>>> slot_labels;

  friend bool operator==(const Cfg&, const Cfg&) = default;
};

inline const std::string kCfgStart = "S^";
std::string bar_symbol(const Category& c);
std::string lex_symbol(const Category& c);

// Throws GrammarError when validate_grammar reports an error.
Cfg gaifman_cfg(const Grammar& g);

// One production per line: `LHS -> RHS... # head=<i>`.
std::string render_cfg(const Cfg& cfg);

}  // namespace dg
