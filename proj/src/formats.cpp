#include "dg/formats.hpp"

#include <cctype>
#include <sstream>

#include "dg/error.hpp"

namespace dg {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) out.push_back(field);
  return out;
}

bool blank(const std::string& line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

TokenIndex parse_index(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw StructureError(std::string("invalid ") + what + " '" + s + "'");
  }
  return std::stoul(s);
}

class SexpReader {
 public:
  explicit SexpReader(std::string_view text) : text_(text) {}

  PhraseMarker read() {
    skip_ws();
    if (peek() == '^') throw StructureError("head marker '^' on the outermost phrase");
    bool marked = false;
    auto pm = item(marked);
    skip_ws();
    if (pos_ != text_.size()) throw StructureError("trailing input after phrase marker");
    return pm;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  PhraseMarker item(bool& marked) {
    skip_ws();
    marked = false;
    if (peek() == '^') {
      marked = true;
      ++pos_;
    }
    if (pos_ >= text_.size()) throw StructureError("unexpected end of phrase marker");
    if (peek() == ')') throw StructureError("unexpected ')'");
    if (peek() == '(') {
      ++pos_;
      std::vector<PhraseMarker> children;
      std::optional<std::size_t> head;
      for (;;) {
        skip_ws();
        if (pos_ >= text_.size()) throw StructureError("unbalanced '(' in phrase marker");
        if (peek() == ')') {
          ++pos_;
          break;
        }
        bool child_marked = false;
        children.push_back(item(child_marked));
        if (child_marked) {
          if (head) throw StructureError("node with more than one '^' head marker");
          head = children.size() - 1;
        }
      }
      if (children.empty()) throw StructureError("empty node '( )'");
      if (!head) throw StructureError("missing head annotation");
      return PhraseMarker::node(std::move(children), *head);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      ++pos_;
    }
    std::string atom(text_.substr(start, pos_ - start));
    auto slash = atom.rfind('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == atom.size()) {
      throw StructureError("leaf '" + atom + "' is not of the form form/CAT");
    }
    return PhraseMarker::leaf({++next_index_, atom.substr(0, slash), Category(atom.substr(slash + 1))});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  TokenIndex next_index_ = 0;
};

void write_sexp_into(const PhraseMarker& pm, std::string& out) {
  if (pm.is_leaf()) {
    out += pm.token().form + "/" + pm.token().category.name();
    return;
  }
  const auto& node = pm.as_node();
  out += "(";
  for (std::size_t k = 0; k < node.children.size(); ++k) {
    out += k == node.head_child ? " ^" : " ";
    write_sexp_into(node.children[k], out);
  }
  out += " )";
}

}  // namespace

std::string write_conll(const DependencyStructure& ds) {
  if (!ds.has_unique_heads()) throw StructureError("CoNLL cannot represent tokens with multiple heads; use JSON");
  auto heads = ds.head_vector();
  auto labels = ds.label_vector();
  std::ostringstream out;
  for (const auto& t : ds.tokens()) {
    const auto& label = labels[t.index - 1];
    out << t.index << '\t' << t.form << '\t' << t.category.name() << '\t' << heads[t.index - 1] << '\t'
        << (label.empty() ? std::string(kNoLabel) : label) << '\n';
  }
  return out.str();
}

std::optional<DependencyStructure> read_conll(std::istream& in) {
  std::vector<Token> tokens;
  std::vector<Arc> arcs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) {
      if (tokens.empty()) continue;
      break;
    }
    if (line[0] == '#') continue;
    auto f = split_tabs(line);
    if (f.size() != 5) throw StructureError("CoNLL line needs 5 tab-separated fields: '" + line + "'");
    TokenIndex id = parse_index(f[0], "token id");
    TokenIndex head = parse_index(f[3], "head");
    if (!is_valid_symbol(f[2])) throw StructureError("invalid category '" + f[2] + "' for token " + f[0]);
    tokens.push_back({id, f[1], Category(f[2])});
    if (head != 0) arcs.push_back({head, id, f[4].empty() ? std::string(kNoLabel) : f[4]});
  }
  if (tokens.empty()) return std::nullopt;
  return DependencyStructure(std::move(tokens), std::move(arcs));
}

std::vector<DependencyStructure> read_conll_all(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<DependencyStructure> out;
  while (auto ds = read_conll(in)) out.push_back(std::move(*ds));
  return out;
}

nlohmann::json ds_to_json(const DependencyStructure& ds) {
  nlohmann::json tokens = nlohmann::json::array();
  for (const auto& t : ds.tokens()) tokens.push_back({{"form", t.form}, {"cat", t.category.name()}});
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& a : ds.arcs()) arcs.push_back({{"head", a.head}, {"dep", a.dep}, {"label", a.label}});
  return {{"tokens", tokens}, {"arcs", arcs}};
}

DependencyStructure ds_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("tokens")) throw StructureError("DS JSON needs a 'tokens' array");
    std::vector<Token> tokens;
    for (const auto& t : j.at("tokens")) {
      tokens.push_back({tokens.size() + 1, t.at("form").get<std::string>(), Category(t.at("cat").get<std::string>())});
    }
    std::vector<Arc> arcs;
    if (j.contains("arcs")) {
      for (const auto& a : j.at("arcs")) {
        arcs.push_back({a.at("head").get<TokenIndex>(), a.at("dep").get<TokenIndex>(),
                        a.contains("label") ? a.at("label").get<std::string>() : std::string(kNoLabel)});
      }
    }
    return DependencyStructure(std::move(tokens), std::move(arcs));
  } catch (const nlohmann::json::exception& e) {
    throw StructureError(std::string("malformed DS JSON: ") + e.what());
  } catch (const GrammarError& e) {
    throw StructureError(e.what());
  }
}

std::string write_sexp(const PhraseMarker& pm) {
  std::string out;
  write_sexp_into(pm, out);
  return out;
}

PhraseMarker read_sexp(std::string_view text) {
  try {
    return SexpReader(text).read();
  } catch (const GrammarError& e) {
    throw StructureError(e.what());
  }
}

}  // namespace dg
