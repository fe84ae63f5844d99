#pragma once

// All-parses dependency parsing under a Grammar. Three independent routes
// produce the same canonical analysis lists:
//   parse            projective chart parser working directly on the rules;
//   parse_via_cfg    CKY over the binarized Gaifman CFG, with derivation
//                    trees mapped to dependency structures by head percolation;
//   enumerate_oracle brute force over every category assignment and head
//                    vector (short sentences only).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dg/ds.hpp"
#include "dg/grammar.hpp"

namespace dg {

struct Sentence {
  std::vector<std::string> forms;

  // Splits on whitespace.
  static Sentence from_text(std::string_view line);
};

struct Analysis {
  DependencyStructure ds;
  // rule_trace[i-1] is the rule applied at token i; std::nullopt means the
  // token used a leaf declaration.
  std::vector<std::optional<Rule>> rule_trace;

  friend bool operator==(const Analysis&, const Analysis&) = default;
};

struct ParseOptions {
  static constexpr std::size_t kDefaultMaxAnalyses = 10000;
  // Exceeding this throws TruncationError.
  std::size_t max_analyses = kDefaultMaxAnalyses;
};

inline constexpr std::size_t kOracleMaxLength = 7;

// Each route throws ParseError for an empty sentence or a word missing from
// the lexicon, and TruncationError past options.max_analyses.
std::vector<Analysis> parse(const Grammar& g, const Sentence& s, const ParseOptions& options = {});
std::vector<Analysis> parse_via_cfg(const Grammar& g, const Sentence& s, const ParseOptions& options = {});
std::vector<Analysis> parse_via_cfg(const Cfg& cfg, const Sentence& s, const ParseOptions& options = {});
// Also throws ParseError for sentences longer than kOracleMaxLength.
std::vector<Analysis> enumerate_oracle(const Grammar& g, const Sentence& s, const ParseOptions& options = {});

// Sorts by head vector, then label vector, then category sequence, and drops
// duplicates. Every route returns its result in this order.
void canonicalize(std::vector<Analysis>& analyses);

// True when `a` satisfies the rule-matching contract of `g`: every token's
// left and right dependents match the categories, order and labels of its
// traced rule, dependent-free tokens use a leaf declaration, and the root's
// category is a root category.
bool matches_grammar(const Analysis& a, const Grammar& g);

}  // namespace dg
