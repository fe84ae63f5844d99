#pragma once

// Test-only helpers: fixture loading and exhaustive enumerators. Nothing
// here calls into the code paths the enumerations are used to check.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dg/ds.hpp"
#include "dg/grammar.hpp"
#include "dg/parser.hpp"

namespace dg::test {

inline std::string data_path(const std::string& name) { return std::string(DG_TEST_DATA_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(DG_TEST_GOLDEN_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline Grammar load_fixture(const std::string& name) { return parse_grammar(read_text(data_path(name))); }

inline std::vector<Token> placeholder_tokens(std::size_t n) {
  std::vector<std::pair<std::string, std::string>> fc;
  for (std::size_t k = 1; k <= n; ++k) fc.emplace_back("w" + std::to_string(k), "X");
  return make_tokens(fc);
}

// Calls f(heads) for every h: {1..n} -> {0..n} without self-loops.
template <class F>
void for_each_head_vector(std::size_t n, F&& f) {
  std::vector<TokenIndex> heads(n, 0);
  for (;;) {
    bool loop = false;
    for (std::size_t k = 0; k < n; ++k) loop = loop || heads[k] == k + 1;
    if (!loop) f(heads);
    std::size_t k = 0;
    while (k < n && ++heads[k] == n + 1) heads[k++] = 0;
    if (k == n) return;
  }
}

// Every word sequence of length 1..max_len over the grammar's lexicon.
inline std::vector<Sentence> all_sentences(const Grammar& g, std::size_t max_len) {
  std::vector<std::string> words;
  for (const auto& [form, cats] : g.lexicon) words.push_back(form);
  std::vector<Sentence> out;
  std::vector<Sentence> frontier{Sentence{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Sentence> next;
    for (const auto& s : frontier) {
      for (const auto& w : words) {
        Sentence t = s;
        t.forms.push_back(w);
        next.push_back(t);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Projectivity by definition: every token strictly between a head and its
// dependent is a transitive dependent of that head. Head vector input.
inline bool projective_by_definition(const std::vector<TokenIndex>& heads) {
  const std::size_t n = heads.size();
  auto dominated_by = [&](TokenIndex c, TokenIndex h) {
    for (std::size_t steps = 0; c != 0 && steps <= n; ++steps) {
      if (c == h) return true;
      c = heads[c - 1];
    }
    return false;
  };
  for (TokenIndex d = 1; d <= n; ++d) {
    TokenIndex h = heads[d - 1];
    if (h == 0) continue;
    for (TokenIndex c = std::min(h, d) + 1; c < std::max(h, d); ++c) {
      if (!dominated_by(c, h)) return false;
    }
  }
  return true;
}

// Single root and no cycles.
inline bool is_tree(const std::vector<TokenIndex>& heads) {
  const std::size_t n = heads.size();
  std::size_t roots = 0;
  for (auto h : heads) roots += h == 0;
  if (roots != 1) return false;
  for (TokenIndex i = 1; i <= n; ++i) {
    TokenIndex c = i;
    std::size_t steps = 0;
    while (c != 0 && steps++ <= n) c = heads[c - 1];
    if (c != 0) return false;
  }
  return true;
}

}  // namespace dg::test
