#pragma once

// Dependency structure <-> head-annotated phrase marker.

#include <map>
#include <string>
#include <vector>

#include "dg/axioms.hpp"
#include "dg/ds.hpp"
#include "dg/error.hpp"

namespace dg {

// Thrown by ds_to_pm for structures that are not well-formed projective trees.
class IllFormedStructure : public Error {
 public:
  explicit IllFormedStructure(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Minimal phrase marker: one flat node per token that has dependents, holding
// its left dependents' phrases, its own leaf and its right dependents'
// phrases in surface order. Dependent-free tokens stay bare leaves, so the
// result has no unary nodes.
PhraseMarker ds_to_pm(const DependencyStructure& ds);

// Head percolation. Every non-head child adds an arc, labeled "_", from the
// node's lexical head to the child's lexical head.
DependencyStructure pm_to_ds(const PhraseMarker& pm);

// Arc labels keyed by dependent index; phrase markers do not carry labels.
std::map<TokenIndex, std::string> label_side_channel(const DependencyStructure& ds);
DependencyStructure apply_labels(const DependencyStructure& ds, const std::map<TokenIndex, std::string>& labels);

}  // namespace dg
