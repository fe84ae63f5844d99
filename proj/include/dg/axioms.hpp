#pragma once

// Well-formedness of dependency structures:
//   A1  exactly one element is independent;
//   A2  all others depend directly on some element (checked here together
//       with reachability from the independent element, so cycles fail);
//   A3  no element depends directly on more than one other;
//   A4  if A depends on B and C lies between them, C depends directly on A,
//       on B, or on another element between them;
//   A5  no element has a dependent on the far side of its own governor.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dg/ds.hpp"

namespace dg {

enum class Axiom { A1, A2, A3, A4, A5, Crossing, CoveredRoot, Cycle };

std::string_view axiom_name(Axiom a);

using Witness = std::variant<TokenIndex, Arc>;

struct Violation {
  Axiom axiom;
  std::vector<Witness> witnesses;
  std::string message;
  // Set for A4/A5 results computed on a structure that fails A1-A3.
  bool conditional = false;

  friend bool operator==(const Violation&, const Violation&) = default;
};

bool check_a1(const DependencyStructure& ds);
bool check_a2(const DependencyStructure& ds);
bool check_a3(const DependencyStructure& ds);
bool check_a4(const DependencyStructure& ds);
bool check_a5(const DependencyStructure& ds);
bool is_noncrossing(const DependencyStructure& ds);

std::vector<Violation> a1_violations(const DependencyStructure& ds);
std::vector<Violation> a2_violations(const DependencyStructure& ds);
std::vector<Violation> a3_violations(const DependencyStructure& ds);
std::vector<Violation> a4_violations(const DependencyStructure& ds);
std::vector<Violation> a5_violations(const DependencyStructure& ds);
std::vector<Violation> crossing_violations(const DependencyStructure& ds);

// A1-A3 always; A4, A5 and the crossing checks only when A1-A3 hold. Empty
// exactly for well-formed projective trees.
std::vector<Violation> validate(const DependencyStructure& ds);

nlohmann::json violations_to_json(const std::vector<Violation>& violations);

}  // namespace dg
