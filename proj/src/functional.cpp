#include "dg/functional.hpp"

#include <algorithm>

#include "dg/error.hpp"

namespace dg {

namespace {

FunctionalStructure build(const DependencyStructure& ds, TokenIndex i) {
  const auto& tok = ds.token(i);
  FunctionalStructure fs{tok.form, tok.category, i, {}, {}};
  auto deps = ds.dependents_of(i);
  for (std::size_t k = 0; k < deps.size(); ++k) {
    std::string function;
    for (const auto& a : ds.arcs()) {
      if (a.head == i && a.dep == deps[k]) function = a.label;
    }
    if (function == kNoLabel) function = "_" + std::to_string(k + 1);
    if (fs.attrs.count(function)) {
      throw FunctionalError("functional uniqueness violated: token " + std::to_string(i) + " has two " + function +
                            " dependents");
    }
    fs.attrs.emplace(function, build(ds, deps[k]));
  }
  return fs;
}

std::size_t variable_number(const std::string& var) { return std::stoul(var.substr(1)); }

void max_variable(const FunctionalStructure& fs, std::size_t& max) {
  for (const auto& [f, gap] : fs.gaps) max = std::max(max, variable_number(gap.variable));
  for (const auto& [f, sub] : fs.attrs) max_variable(sub, max);
}

void collect_notes(const FunctionalStructure& fs, std::vector<CorefNote>& out) {
  for (const auto& [f, gap] : fs.gaps) out.push_back({gap.variable, gap.controller});
  for (const auto& [f, sub] : fs.attrs) collect_notes(sub, out);
}

std::string path_str(const std::vector<std::string>& path) {
  std::string out;
  for (const auto& p : path) out += (out.empty() ? "" : ".") + p;
  return out;
}

class ControlResolver {
 public:
  ControlResolver(const DependencyStructure& ds, const Grammar& g, std::size_t next_var)
      : ds_(ds), g_(g), next_var_(next_var) {}

  void visit(FunctionalStructure& node) {
    const auto& tok = ds_.token(node.index);
    for (const auto& spec : g_.controls) {
      if (spec.trigger == tok.form || spec.trigger == tok.category.name()) fire(node, spec);
    }
    for (auto& [f, sub] : node.attrs) visit(sub);
  }

 private:
  void fire(FunctionalStructure& trigger, const ControlSpec& spec) {
    FunctionalStructure* cur = &trigger;
    for (std::size_t k = 0; k + 1 < spec.gap_path.size(); ++k) {
      const auto& f = spec.gap_path[k];
      if (cur->gaps.count(f)) {
        throw FunctionalError("control path " + path_str(spec.gap_path) + " of token " +
                              std::to_string(trigger.index) + " runs through gap " + f);
      }
      auto it = cur->attrs.find(f);
      if (it == cur->attrs.end()) return;
      cur = &it->second;
    }
    const auto& last = spec.gap_path.back();
    if (cur->attrs.count(last)) {
      throw FunctionalError("control conflict: " + path_str(spec.gap_path) + " below token " +
                            std::to_string(trigger.index) + " is already filled");
    }
    if (auto it = cur->gaps.find(last); it != cur->gaps.end()) {
      if (it->second.controller == trigger.index) return;
      throw FunctionalError("control conflict: " + path_str(spec.gap_path) + " below token " +
                            std::to_string(trigger.index) + " is controlled by token " +
                            std::to_string(it->second.controller));
    }
    cur->gaps.emplace(last, Gap{"x" + std::to_string(next_var_++), trigger.index});
  }

  const DependencyStructure& ds_;
  const Grammar& g_;
  std::size_t next_var_;
};

SemanticTerm term(const FunctionalStructure& fs, const Grammar& g, const std::vector<CorefNote>& notes) {
  const auto* frame = g.frame_for(fs.pred, fs.category);
  if (!frame) {
    if (fs.attrs.empty() && fs.gaps.empty()) return SemanticTerm::constant(fs.pred);
    throw FunctionalError("missing frame for '" + fs.pred + "' (category " + fs.category.name() + ")");
  }
  std::vector<SemanticTerm> args;
  for (const auto& f : *frame) {
    if (auto it = fs.attrs.find(f); it != fs.attrs.end()) {
      args.push_back(term(it->second, g, notes));
    } else if (auto gap = fs.gaps.find(f); gap != fs.gaps.end()) {
      const auto& var = gap->second.variable;
      auto bound = std::count_if(notes.begin(), notes.end(), [&](const CorefNote& n) { return n.variable == var; });
      if (bound != 1) {
        throw FunctionalError("variable " + var + " needs exactly one coreference note, found " +
                              std::to_string(bound));
      }
      args.push_back(SemanticTerm::variable(var));
    } else {
      throw FunctionalError("frame of '" + fs.pred + "' names " + f + ", which is neither an attribute nor a gap");
    }
  }
  return SemanticTerm::app(fs.pred, std::move(args));
}

void render_term(const SemanticTerm& t, std::map<std::string, std::string>& renames, std::string& out) {
  switch (t.kind) {
    case SemanticTerm::Kind::Const:
      out += t.name;
      return;
    case SemanticTerm::Kind::Var: {
      auto [it, inserted] = renames.emplace(t.name, "");
      if (inserted) it->second = "x" + std::to_string(renames.size());
      out += it->second;
      return;
    }
    case SemanticTerm::Kind::App:
      out += t.name + "(";
      for (std::size_t k = 0; k < t.args.size(); ++k) {
        if (k) out += ", ";
        render_term(t.args[k], renames, out);
      }
      out += ")";
      return;
  }
}

}  // namespace

std::size_t FunctionalStructure::node_count() const {
  std::size_t n = 1;
  for (const auto& [f, sub] : attrs) n += sub.node_count();
  return n;
}

FunctionalStructure build_fstructure(const Analysis& a, const Grammar&) {
  auto roots = a.ds.independents();
  if (roots.size() != 1 || !a.ds.has_unique_heads()) {
    throw FunctionalError("f-structures need a single-rooted tree");
  }
  return build(a.ds, roots.front());
}

std::pair<FunctionalStructure, std::vector<CorefNote>> resolve_control(const FunctionalStructure& fs,
                                                                       const Analysis& a, const Grammar& g) {
  FunctionalStructure out = fs;
  std::size_t max = 0;
  max_variable(out, max);
  ControlResolver(a.ds, g, max + 1).visit(out);
  std::vector<CorefNote> notes;
  collect_notes(out, notes);
  std::sort(notes.begin(), notes.end(), [](const CorefNote& x, const CorefNote& y) {
    return variable_number(x.variable) < variable_number(y.variable);
  });
  return {std::move(out), std::move(notes)};
}

SemanticTerm to_semantics(const FunctionalStructure& fs, const Grammar& g, const std::vector<CorefNote>& notes) {
  return term(fs, g, notes);
}

nlohmann::json fstructure_to_json(const FunctionalStructure& fs) {
  nlohmann::json attrs = nlohmann::json::object();
  for (const auto& [f, sub] : fs.attrs) attrs[f] = fstructure_to_json(sub);
  nlohmann::json gaps = nlohmann::json::object();
  for (const auto& [f, gap] : fs.gaps) gaps[f] = gap.variable;
  return {{"pred", fs.pred}, {"index", fs.index}, {"attrs", attrs}, {"gaps", gaps}};
}

std::string render_semantics(const SemanticTerm& t, const std::vector<CorefNote>& notes) {
  std::map<std::string, std::string> renames;
  std::string out;
  render_term(t, renames, out);
  out += '\n';
  for (const auto& n : notes) {
    auto [it, inserted] = renames.emplace(n.variable, "");
    if (inserted) it->second = "x" + std::to_string(renames.size());
    out += "# " + it->second + " = token[" + std::to_string(n.antecedent) + "]\n";
  }
  return out;
}

}  // namespace dg
