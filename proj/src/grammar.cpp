#include "dg/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "dg/error.hpp"

namespace dg {

namespace {

constexpr std::string_view kReserved = "():*^#";

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string render_slot(const Slot& s) {
  return s.label ? s.category.name() + ":" + *s.label : s.category.name();
}

std::string render_rule(const Rule& r) {
  std::vector<std::string> parts{"rule", r.head.name(), ":"};
  for (const auto& s : r.left) parts.push_back(render_slot(s));
  parts.emplace_back("*");
  for (const auto& s : r.right) parts.push_back(render_slot(s));
  return join(parts, " ");
}

std::string render_control(const ControlSpec& c) {
  return "control " + c.trigger + " : " + join(c.gap_path, ".") + " = SELF";
}

std::optional<std::string> duplicate_label(const Rule& r) {
  std::set<std::string> seen;
  for (const auto* side : {&r.left, &r.right}) {
    for (const auto& s : *side) {
      if (s.label && !seen.insert(*s.label).second) return s.label;
    }
  }
  return std::nullopt;
}

// Reference to a category name recorded while reading, resolved once all
// `cat` lines are known.
struct CatRef {
  std::string name;
  std::size_t line;
};

class GrammarReader {
 public:
  Grammar read(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      std::string_view line = text.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      auto tokens = split_ws(line);
      if (!tokens.empty()) directive(tokens, line_no);
      start = end + 1;
    }
    resolve();
    return std::move(g_);
  }

 private:
  void directive(const std::vector<std::string>& t, std::size_t line) {
    const std::string& d = t[0];
    if (d == "cat" || d == "root" || d == "leaf") {
      if (t.size() < 2) throw GrammarError("'" + d + "' needs at least one category", line);
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (!is_valid_symbol(t[i])) throw GrammarError("invalid category name '" + t[i] + "'", line);
        if (d == "cat") {
          declared_.insert(t[i]);
        } else {
          (d == "root" ? roots_ : leaves_).push_back({t[i], line});
        }
      }
    } else if (d == "rule") {
      rule(t, line);
    } else if (d == "word") {
      if (t.size() < 4 || t[2] != ":") throw GrammarError("expected 'word <form> : <Cat>+'", line);
      if (t[1] == ":") throw GrammarError("word form ':' is not allowed", line);
      auto& cats = words_[t[1]];
      for (std::size_t i = 3; i < t.size(); ++i) cats.push_back({t[i], line});
    } else if (d == "frame") {
      if (t.size() < 4 || t[2] != ":") throw GrammarError("expected 'frame <form-or-Cat> : <LABEL>+'", line);
      std::vector<std::string> labels(t.begin() + 3, t.end());
      for (const auto& l : labels) {
        if (!is_valid_label(l)) throw GrammarError("invalid function label '" + l + "'", line);
      }
      auto [it, inserted] = g_.frames.emplace(t[1], labels);
      if (!inserted && it->second != labels) {
        throw GrammarError("conflicting frame for '" + t[1] + "'", line);
      }
    } else if (d == "control") {
      if (t.size() != 6 || t[2] != ":" || t[4] != "=") {
        throw GrammarError("expected 'control <form-or-Cat> : <LABEL>(.<LABEL>)* = SELF'", line);
      }
      if (t[5] != "SELF") throw GrammarError("controller must be SELF, got '" + t[5] + "'", line);
      ControlSpec spec{t[1], split_on(t[3], '.')};
      for (const auto& l : spec.gap_path) {
        if (!is_valid_label(l)) throw GrammarError("invalid function label '" + l + "' in control path", line);
      }
      g_.controls.insert(std::move(spec));
    } else {
      throw GrammarError("unknown directive '" + d + "'", line);
    }
  }

  void rule(const std::vector<std::string>& t, std::size_t line) {
    if (t.size() < 4 || t[2] != ":") throw GrammarError("expected 'rule <Head> : <slot>* * <slot>*'", line);
    auto stars = std::count(t.begin() + 3, t.end(), "*");
    if (stars != 1) throw GrammarError("rule needs exactly one '*', found " + std::to_string(stars), line);
    PendingRule pr{{t[1], line}, {}, {}, line};
    bool right = false;
    for (std::size_t i = 3; i < t.size(); ++i) {
      if (t[i] == "*") {
        right = true;
        continue;
      }
      auto colon = t[i].find(':');
      PendingSlot s{{t[i].substr(0, colon), line}, std::nullopt};
      if (colon != std::string::npos) {
        s.label = t[i].substr(colon + 1);
        if (!is_valid_label(*s.label)) throw GrammarError("invalid slot label in '" + t[i] + "'", line);
      }
      (right ? pr.right : pr.left).push_back(std::move(s));
    }
    rules_.push_back(std::move(pr));
  }

  Category category(const CatRef& ref) const {
    if (!is_valid_symbol(ref.name)) throw GrammarError("invalid category name '" + ref.name + "'", ref.line);
    if (!declared_.count(ref.name)) throw GrammarError("undeclared category " + ref.name, ref.line);
    return Category(ref.name);
  }

  void resolve() {
    for (const auto& name : declared_) g_.categories.insert(Category(name));
    for (const auto& r : roots_) g_.root_cats.insert(category(r));
    for (const auto& l : leaves_) g_.leaf_cats.insert(category(l));
    for (const auto& pr : rules_) {
      Rule r{category(pr.head), {}, {}};
      for (const auto& s : pr.left) r.left.push_back({category(s.cat), s.label});
      for (const auto& s : pr.right) r.right.push_back({category(s.cat), s.label});
      if (auto dup = duplicate_label(r)) throw GrammarError("duplicate label " + *dup + " in rule", pr.line);
      g_.add_rule(std::move(r));
    }
    for (const auto& [form, refs] : words_) {
      auto& cats = g_.lexicon[form];
      for (const auto& ref : refs) cats.insert(category(ref));
    }
  }

  struct PendingSlot {
    CatRef cat;
    std::optional<std::string> label;
  };
  struct PendingRule {
    CatRef head;
    std::vector<PendingSlot> left, right;
    std::size_t line;
  };

  Grammar g_;
  std::set<std::string> declared_;
  std::vector<CatRef> roots_, leaves_;
  std::vector<PendingRule> rules_;
  std::map<std::string, std::vector<CatRef>> words_;
};

}  // namespace

bool is_valid_symbol(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || kReserved.find(c) != std::string_view::npos;
  });
}

bool is_valid_label(std::string_view s) {
  return is_valid_symbol(s) && s != kNoLabel && s.find('.') == std::string_view::npos;
}

Category::Category(std::string name) : name_(std::move(name)) {
  if (!is_valid_symbol(name_)) throw GrammarError("invalid category name '" + name_ + "'");
}

void Grammar::add_rule(Rule rule) {
  if (rule.arity() == 0) {
    leaf_cats.insert(rule.head);
  } else {
    rules.insert(std::move(rule));
  }
}

std::vector<const Rule*> Grammar::rules_for(const Category& cat) const {
  std::vector<const Rule*> out;
  for (const auto& r : rules) {
    if (r.head == cat) out.push_back(&r);
  }
  return out;
}

const std::vector<std::string>* Grammar::frame_for(const std::string& form, const Category& cat) const {
  if (auto it = frames.find(form); it != frames.end()) return &it->second;
  if (auto it = frames.find(cat.name()); it != frames.end()) return &it->second;
  return nullptr;
}

Grammar parse_grammar(std::string_view text) { return GrammarReader().read(text); }

std::string render_grammar(const Grammar& g) {
  std::ostringstream out;
  auto cat_line = [&](std::string_view directive, const std::set<Category>& cats) {
    if (cats.empty()) return;
    out << directive;
    for (const auto& c : cats) out << ' ' << c.name();
    out << '\n';
  };
  cat_line("cat", g.categories);
  cat_line("root", g.root_cats);
  cat_line("leaf", g.leaf_cats);

  std::vector<std::string> lines;
  for (const auto& r : g.rules) lines.push_back(render_rule(r));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out << l << '\n';

  for (const auto& [form, cats] : g.lexicon) {
    if (cats.empty()) continue;
    out << "word " << form << " :";
    for (const auto& c : cats) out << ' ' << c.name();
    out << '\n';
  }
  for (const auto& [key, labels] : g.frames) out << "frame " << key << " : " << join(labels, " ") << '\n';

  lines.clear();
  for (const auto& c : g.controls) lines.push_back(render_control(c));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out << l << '\n';
  return out.str();
}

std::vector<Diagnostic> validate_grammar(const Grammar& g) {
  std::vector<Diagnostic> out;
  auto error = [&](std::string m) { out.push_back({Diagnostic::Severity::Error, std::move(m)}); };
  auto warning = [&](std::string m) { out.push_back({Diagnostic::Severity::Warning, std::move(m)}); };

  if (g.root_cats.empty()) error("no root category declared");

  std::set<Category> undeclared;
  auto use = [&](const Category& c) {
    if (!g.categories.count(c)) undeclared.insert(c);
  };
  std::set<Category> mentioned;
  std::set<Category> word_cats;
  for (const auto& c : g.root_cats) use(c);
  for (const auto& c : g.leaf_cats) {
    use(c);
    mentioned.insert(c);
  }
  for (const auto& r : g.rules) {
    use(r.head);
    mentioned.insert(r.head);
    for (const auto* side : {&r.left, &r.right}) {
      for (const auto& s : *side) {
        use(s.category);
        mentioned.insert(s.category);
        if (s.label && !is_valid_label(*s.label)) error("invalid label '" + *s.label + "' in " + render_rule(r));
      }
    }
    if (auto dup = duplicate_label(r)) error("duplicate label " + *dup + " in " + render_rule(r));
  }
  for (const auto& [form, cats] : g.lexicon) {
    for (const auto& c : cats) {
      use(c);
      mentioned.insert(c);
      word_cats.insert(c);
    }
  }
  for (const auto& c : undeclared) error("undeclared category " + c.name());

  for (const auto& c : g.categories) {
    if (!mentioned.count(c)) {
      warning("unreachable category " + c.name());
      continue;
    }
    bool has_rule = std::any_of(g.rules.begin(), g.rules.end(), [&](const Rule& r) { return r.head == c; });
    if (!has_rule && !g.leaf_cats.count(c)) {
      warning("category " + c.name() + " is usable neither via a rule nor via a leaf declaration");
    }
  }
  std::set<Category> heads;
  for (const auto& r : g.rules) heads.insert(r.head);
  for (const auto& c : heads) {
    if (!word_cats.count(c)) warning("rule head " + c.name() + " has no lexicon word");
  }

  for (const auto& c : g.controls) {
    if (c.gap_path.empty()) error("control for '" + c.trigger + "' has an empty gap path");
  }
  for (const auto& [key, labels] : g.frames) {
    if (labels.empty()) error("frame for '" + key + "' is empty");
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Diagnostic::Severity::Error; });
}

std::string bar_symbol(const Category& c) { return c.name() + "_bar"; }
std::string lex_symbol(const Category& c) { return c.name() + "_lex"; }

Cfg gaifman_cfg(const Grammar& g) {
  auto diagnostics = validate_grammar(g);
  for (const auto& d : diagnostics) {
    if (d.severity == Diagnostic::Severity::Error) throw GrammarError("invalid grammar: " + d.message);
  }

  Cfg cfg;
  cfg.start = kCfgStart;
  cfg.nonterminals.insert(kCfgStart);
  for (const auto& c : g.categories) {
    cfg.nonterminals.insert(bar_symbol(c));
    cfg.nonterminals.insert(lex_symbol(c));
  }

  auto add = [&](Production p, std::vector<std::string> labels) {
    cfg.slot_labels[p].insert(std::move(labels));
  };
  auto unlabeled = [](std::size_t n) { return std::vector<std::string>(n, std::string(kNoLabel)); };

  for (const auto& [form, cats] : g.lexicon) {
    cfg.terminals.insert(form);
    for (const auto& c : cats) add({lex_symbol(c), {form}, 0}, unlabeled(1));
  }
  for (const auto& r : g.rules) {
    Production p{bar_symbol(r.head), {}, r.left.size()};
    std::vector<std::string> labels;
    for (const auto& s : r.left) {
      p.rhs.push_back(bar_symbol(s.category));
      labels.push_back(s.arc_label());
    }
    p.rhs.push_back(lex_symbol(r.head));
    labels.emplace_back(kNoLabel);
    for (const auto& s : r.right) {
      p.rhs.push_back(bar_symbol(s.category));
      labels.push_back(s.arc_label());
    }
    add(std::move(p), std::move(labels));
  }
  for (const auto& c : g.leaf_cats) add({bar_symbol(c), {lex_symbol(c)}, 0}, unlabeled(1));
  for (const auto& c : g.root_cats) add({kCfgStart, {bar_symbol(c)}, 0}, unlabeled(1));

  for (const auto& [p, labels] : cfg.slot_labels) cfg.productions.push_back(p);
  return cfg;
}

std::string render_cfg(const Cfg& cfg) {
  std::ostringstream out;
  for (const auto& p : cfg.productions) {
    out << p.lhs << " ->";
    for (const auto& s : p.rhs) out << ' ' << s;
    out << " # head=" << p.head_index << '\n';
  }
  return out.str();
}

}  // namespace dg
