#include "dg/axioms.hpp"

#include <algorithm>
#include <sstream>

namespace dg {

namespace {

std::string arc_str(const Arc& a) { return "(" + std::to_string(a.head) + "," + std::to_string(a.dep) + ")"; }

bool a1_to_a3_hold(const DependencyStructure& ds) { return check_a1(ds) && check_a2(ds) && check_a3(ds); }

std::pair<TokenIndex, TokenIndex> span(const Arc& a) { return std::minmax(a.head, a.dep); }

}  // namespace

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::A4: return "A4";
    case Axiom::A5: return "A5";
    case Axiom::Crossing: return "CROSSING";
    case Axiom::CoveredRoot: return "COVERED_ROOT";
    case Axiom::Cycle: return "CYCLE";
  }
  return "?";
}

std::vector<Violation> a1_violations(const DependencyStructure& ds) {
  auto roots = ds.independents();
  if (roots.size() == 1) return {};
  Violation v{Axiom::A1, {}, {}};
  for (auto r : roots) v.witnesses.emplace_back(r);
  v.message = roots.empty() ? "no independent element"
                            : std::to_string(roots.size()) + " independent elements; exactly one is required";
  return {v};
}

std::vector<Violation> a2_violations(const DependencyStructure& ds) {
  std::vector<bool> reached(ds.size() + 1, false);
  std::vector<TokenIndex> stack = ds.independents();
  for (auto r : stack) reached[r] = true;
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    for (const auto& a : ds.arcs()) {
      if (a.head == cur && !reached[a.dep]) {
        reached[a.dep] = true;
        stack.push_back(a.dep);
      }
    }
  }
  Violation v{Axiom::Cycle, {}, {}};
  for (TokenIndex i = 1; i <= ds.size(); ++i) {
    if (!reached[i]) v.witnesses.emplace_back(i);
  }
  if (v.witnesses.empty()) return {};
  v.message = std::to_string(v.witnesses.size()) + " element(s) not reachable from an independent element (cycle)";
  return {v};
}

std::vector<Violation> a3_violations(const DependencyStructure& ds) {
  std::vector<Violation> out;
  for (TokenIndex i = 1; i <= ds.size(); ++i) {
    auto heads = ds.heads_of(i);
    if (heads.size() <= 1) continue;
    std::ostringstream msg;
    msg << "token " << i << " depends directly on " << heads.size() << " elements:";
    for (auto h : heads) msg << ' ' << h;
    out.push_back({Axiom::A3, {Witness(i)}, msg.str()});
  }
  return out;
}

std::vector<Violation> a4_violations(const DependencyStructure& ds) {
  const bool conditional = !a1_to_a3_hold(ds);
  std::vector<Violation> out;
  for (const auto& arc : ds.arcs()) {
    auto [p, q] = span(arc);
    Violation v{Axiom::A4, {arc}, {}, conditional};
    for (TokenIndex c = p + 1; c < q; ++c) {
      auto heads = ds.heads_of(c);
      bool inside = std::any_of(heads.begin(), heads.end(), [&](TokenIndex h) { return h >= p && h <= q; });
      if (!inside) v.witnesses.emplace_back(c);
    }
    if (v.witnesses.size() == 1) continue;
    std::ostringstream msg;
    msg << "arc " << arc_str(arc) << " spans element(s)";
    for (std::size_t k = 1; k < v.witnesses.size(); ++k) msg << ' ' << std::get<TokenIndex>(v.witnesses[k]);
    msg << " not governed within [" << p << "," << q << "]";
    v.message = msg.str();
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Violation> a5_violations(const DependencyStructure& ds) {
  const bool conditional = !a1_to_a3_hold(ds);
  std::vector<Violation> out;
  for (TokenIndex i = 1; i <= ds.size(); ++i) {
    auto deps = ds.dependents_of(i);
    for (auto g : ds.heads_of(i)) {
      auto beyond = std::find_if(deps.begin(), deps.end(), [&](TokenIndex d) {
        return std::min(i, d) < g && g < std::max(i, d);
      });
      if (beyond == deps.end()) continue;
      out.push_back({Axiom::A5,
                     {Witness(i)},
                     "token " + std::to_string(i) + " has dependent " + std::to_string(*beyond) +
                         " on the other side of its governor " + std::to_string(g),
                     conditional});
      break;
    }
  }
  return out;
}

std::vector<Violation> crossing_violations(const DependencyStructure& ds) {
  std::vector<Violation> out;
  const auto& arcs = ds.arcs();
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = 0; y < arcs.size(); ++y) {
      auto [a, b] = span(arcs[x]);
      auto [c, d] = span(arcs[y]);
      if (a < c && c < b && b < d) {
        out.push_back({Axiom::Crossing,
                       {arcs[x], arcs[y]},
                       "arcs " + arc_str(arcs[x]) + " and " + arc_str(arcs[y]) + " cross"});
      }
    }
  }
  for (auto r : ds.independents()) {
    for (const auto& arc : arcs) {
      auto [p, q] = span(arc);
      if (p < r && r < q) {
        out.push_back({Axiom::CoveredRoot,
                       {Witness(r), arc},
                       "independent element " + std::to_string(r) + " lies inside arc " + arc_str(arc)});
      }
    }
  }
  return out;
}

bool check_a1(const DependencyStructure& ds) { return ds.independents().size() == 1; }
bool check_a2(const DependencyStructure& ds) { return a2_violations(ds).empty(); }

bool check_a3(const DependencyStructure& ds) { return ds.has_unique_heads(); }
bool check_a4(const DependencyStructure& ds) { return a4_violations(ds).empty(); }
bool check_a5(const DependencyStructure& ds) { return a5_violations(ds).empty(); }
bool is_noncrossing(const DependencyStructure& ds) { return crossing_violations(ds).empty(); }

std::vector<Violation> validate(const DependencyStructure& ds) {
  std::vector<Violation> out;
  auto append = [&out](std::vector<Violation> vs) {
    for (auto& v : vs) out.push_back(std::move(v));
  };
  append(a1_violations(ds));
  append(a2_violations(ds));
  append(a3_violations(ds));
  if (!out.empty()) return out;
  append(a4_violations(ds));
  append(a5_violations(ds));
  append(crossing_violations(ds));
  return out;
}

nlohmann::json violations_to_json(const std::vector<Violation>& violations) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : violations) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : v.witnesses) {
      if (const auto* i = std::get_if<TokenIndex>(&w)) {
        witnesses.push_back(*i);
      } else {
        const auto& a = std::get<Arc>(w);
        witnesses.push_back({{"head", a.head}, {"dep", a.dep}, {"label", a.label}});
      }
    }
    nlohmann::json item{{"axiom", axiom_name(v.axiom)}, {"witnesses", witnesses}, {"message", v.message}};
    if (v.conditional) item["conditional"] = true;
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace dg
