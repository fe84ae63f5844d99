#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dg/parser.hpp"

namespace dg::detail {

// A complete subtree under construction: its lexical head plus the arcs,
// category choices and rules used inside it.
struct Partial {
  TokenIndex head = 0;
  std::vector<Arc> arcs;
  std::vector<std::pair<TokenIndex, Category>> cats;
  std::vector<std::pair<TokenIndex, std::optional<Rule>>> rules;
};

std::vector<std::set<Category>> lookup_words(const Grammar& g, const Sentence& s);
bool is_leaf_category(const Grammar& g, const Category& c);
Analysis assemble(const Sentence& s, const Partial& p);
Partial merge(const Partial& x, const Partial& y);

}  // namespace dg::detail
