#pragma once

// Functional structures built from labeled analyses, lexical control, and
// predicate-argument terms.
//
// The governor of every rule is also the functional head: a dependent with
// function label F becomes attribute F of its governor's f-structure.
// Control specifications install co-indexed gap variables below their
// trigger; frames give the argument order for the semantic term.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dg/grammar.hpp"
#include "dg/parser.hpp"

namespace dg {

struct Gap {
  std::string variable;  // "x1", "x2", ...
  TokenIndex controller;

  friend bool operator==(const Gap&, const Gap&) = default;
};

struct FunctionalStructure {
  std::string pred;
  Category category;
  TokenIndex index;  // token the structure was built from
  std::map<std::string, FunctionalStructure> attrs;
  std::map<std::string, Gap> gaps;

  // Number of PRED-bearing structures, this one included.
  std::size_t node_count() const;

  friend bool operator==(const FunctionalStructure&, const FunctionalStructure&) = default;
};

struct CorefNote {
  std::string variable;
  TokenIndex antecedent;

  friend bool operator==(const CorefNote&, const CorefNote&) = default;
};

struct SemanticTerm {
  enum class Kind { Const, Var, App };

  Kind kind;
  std::string name;  // word form, variable id, or functor
  std::vector<SemanticTerm> args;

  static SemanticTerm constant(std::string form) { return {Kind::Const, std::move(form), {}}; }
  static SemanticTerm variable(std::string id) { return {Kind::Var, std::move(id), {}}; }
  static SemanticTerm app(std::string functor, std::vector<SemanticTerm> args) {
    return {Kind::App, std::move(functor), std::move(args)};
  }

  friend bool operator==(const SemanticTerm&, const SemanticTerm&) = default;
};

// Unlabeled arcs get positional functions "_1", "_2", ... by the dependent's
// rank among its governor's dependents. Throws FunctionalError when two
// dependents of one governor carry the same function.
FunctionalStructure build_fstructure(const Analysis& a, const Grammar& g);

// Applies every control spec whose trigger matches a node's form or
// category. A missing path prefix means the spec does not fire. Throws
// FunctionalError when the gap position is already an attribute or a gap of
// another controller, or when the path runs through a gap. Idempotent.
std::pair<FunctionalStructure, std::vector<CorefNote>> resolve_control(const FunctionalStructure& fs,
                                                                       const Analysis& a, const Grammar& g);

// Throws FunctionalError for a node with dependents but no frame, a frame
// naming a function that is neither an attribute nor a gap, and a gap
// variable without a coreference note.
SemanticTerm to_semantics(const FunctionalStructure& fs, const Grammar& g, const std::vector<CorefNote>& notes);

nlohmann::json fstructure_to_json(const FunctionalStructure& fs);

// `functor(arg1, arg2, ...)` with variables renumbered x1, x2, ... by first
// appearance, followed by one `# x<k> = token[<i>]` line per note.
std::string render_semantics(const SemanticTerm& term, const std::vector<CorefNote>& notes);

}  // namespace dg
