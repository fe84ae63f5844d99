#include "dg/convert.hpp"

#include "dg/error.hpp"

namespace dg {

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::string out = "ill-formed dependency structure:";
  for (const auto& v : violations) out += " [" + std::string(axiom_name(v.axiom)) + "] " + v.message + ";";
  return out;
}

PhraseMarker build(const DependencyStructure& ds, TokenIndex i) {
  auto deps = ds.dependents_of(i);
  if (deps.empty()) return PhraseMarker::leaf(ds.token(i));
  std::vector<PhraseMarker> children;
  auto d = deps.begin();
  for (; d != deps.end() && *d < i; ++d) children.push_back(build(ds, *d));
  const std::size_t head_child = children.size();
  children.push_back(PhraseMarker::leaf(ds.token(i)));
  for (; d != deps.end(); ++d) children.push_back(build(ds, *d));
  return PhraseMarker::node(std::move(children), head_child);
}

void percolate(const PhraseMarker& pm, std::vector<Arc>& arcs) {
  if (pm.is_leaf()) return;
  const auto& node = pm.as_node();
  const TokenIndex head = pm.lexical_head().index;
  for (std::size_t k = 0; k < node.children.size(); ++k) {
    if (k != node.head_child) arcs.push_back({head, node.children[k].lexical_head().index, std::string(kNoLabel)});
    percolate(node.children[k], arcs);
  }
}

}  // namespace

IllFormedStructure::IllFormedStructure(std::vector<Violation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

PhraseMarker ds_to_pm(const DependencyStructure& ds) {
  if (ds.size() == 0) throw StructureError("empty dependency structure");
  auto violations = validate(ds);
  if (!violations.empty()) throw IllFormedStructure(std::move(violations));
  return build(ds, ds.independents().front());
}

DependencyStructure pm_to_ds(const PhraseMarker& pm) {
  std::vector<Arc> arcs;
  percolate(pm, arcs);
  return DependencyStructure(pm.fringe(), std::move(arcs));
}

std::map<TokenIndex, std::string> label_side_channel(const DependencyStructure& ds) {
  std::map<TokenIndex, std::string> out;
  for (const auto& a : ds.arcs()) {
    if (a.label != kNoLabel) out[a.dep] = a.label;
  }
  return out;
}

DependencyStructure apply_labels(const DependencyStructure& ds, const std::map<TokenIndex, std::string>& labels) {
  std::vector<Arc> arcs = ds.arcs();
  for (auto& a : arcs) {
    if (auto it = labels.find(a.dep); it != labels.end()) a.label = it->second;
  }
  return DependencyStructure(ds.tokens(), std::move(arcs));
}

}  // namespace dg
