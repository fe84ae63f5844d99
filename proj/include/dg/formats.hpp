#pragma once

// Text encodings of dependency structures and phrase markers.
//
//   CoNLL-like: one token per line, `ID<TAB>FORM<TAB>CAT<TAB>HEAD<TAB>LABEL`,
//     HEAD 0 for independent tokens, sentences separated by blank lines,
//     lines starting with '#' are comments. Tree-shaped structures only.
//   JSON: {"tokens": [{"form", "cat"}], "arcs": [{"head", "dep", "label"}]};
//     the only encoding that can carry multiple heads.
//   s-expression: leaf `form/CAT`, node `( c1 c2 ... )` with exactly one
//     child prefixed by `^`, e.g. `( the/D ^dog/N )`.

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dg/ds.hpp"

namespace dg {

// Throws StructureError when a token has more than one head.
std::string write_conll(const DependencyStructure& ds);

// Reads the next sentence block; std::nullopt at end of input.
std::optional<DependencyStructure> read_conll(std::istream& in);
std::vector<DependencyStructure> read_conll_all(std::string_view text);

nlohmann::json ds_to_json(const DependencyStructure& ds);
DependencyStructure ds_from_json(const nlohmann::json& j);

std::string write_sexp(const PhraseMarker& pm);
// Token indices are assigned in fringe order starting from 1.
PhraseMarker read_sexp(std::string_view text);

}  // namespace dg
