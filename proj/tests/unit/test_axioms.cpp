#include <doctest.h>

#include "dg/axioms.hpp"
#include "dg/formats.hpp"
#include "support/fixtures.hpp"

using namespace dg;

namespace {

DependencyStructure make(std::size_t n, std::vector<Arc> arcs) {
  return DependencyStructure(test::placeholder_tokens(n), std::move(arcs));
}

DependencyStructure fixture(const std::string& name) {
  return ds_from_json(nlohmann::json::parse(test::read_text(test::data_path(name))));
}

std::vector<Axiom> kinds(const std::vector<Violation>& vs) {
  std::vector<Axiom> out;
  for (const auto& v : vs) out.push_back(v.axiom);
  return out;
}

}  // namespace

TEST_CASE("A1: exactly one independent element") {
  CHECK(check_a1(make(2, {{2, 1}})));
  CHECK_FALSE(check_a1(make(2, {})));
  CHECK_FALSE(check_a1(make(2, {{1, 2}, {2, 1}})));
  auto vs = a1_violations(make(2, {{1, 2}, {2, 1}}));
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].witnesses.empty());
  CHECK(a1_violations(make(2, {}))[0].witnesses == std::vector<Witness>{TokenIndex{1}, TokenIndex{2}});
}

TEST_CASE("A2: every other element reachable from an independent one") {
  CHECK(check_a2(make(3, {{2, 1}, {2, 3}})));
  CHECK_FALSE(check_a2(make(3, {{1, 2}, {2, 1}})));
  CHECK(check_a2(make(1, {})));
  auto vs = a2_violations(make(3, {{1, 2}, {2, 1}}));
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].axiom == Axiom::Cycle);
  CHECK(vs[0].witnesses == std::vector<Witness>{TokenIndex{1}, TokenIndex{2}});
}

TEST_CASE("A3: at most one governor") {
  auto shared = fixture("head_sharing.json");
  CHECK_FALSE(check_a3(shared));
  auto vs = a3_violations(shared);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].witnesses == std::vector<Witness>{TokenIndex{3}});
  CHECK(check_a3(make(3, {{2, 1}, {2, 3}})));
  CHECK(check_a3(make(3, {})));
}

TEST_CASE("A4: intervening elements are governed inside the span") {
  auto dutch = fixture("covered_root.json");
  CHECK_FALSE(check_a4(dutch));
  auto vs = a4_violations(dutch);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].witnesses == std::vector<Witness>{Arc{3, 1}, TokenIndex{2}});
  CHECK(vs[1].witnesses == std::vector<Witness>{Arc{4, 2}, TokenIndex{3}});
  CHECK_FALSE(vs[1].conditional);

  CHECK(check_a4(make(3, {{2, 1}, {2, 3}})));
  CHECK_FALSE(check_a4(make(3, {{2, 1}, {1, 3}})));
  CHECK(a4_violations(make(3, {{2, 1}, {1, 3}}))[0].witnesses == std::vector<Witness>{Arc{1, 3}, TokenIndex{2}});
}

TEST_CASE("A4 on non-trees is reported as conditional") {
  auto vs = a4_violations(make(3, {{1, 3}}));
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].conditional);
}

TEST_CASE("A5: no dependent beyond the governor") {
  CHECK_FALSE(check_a5(make(3, {{2, 1}, {1, 3}})));
  CHECK(a5_violations(make(3, {{2, 1}, {1, 3}}))[0].witnesses == std::vector<Witness>{TokenIndex{1}});
  CHECK(check_a5(make(3, {{2, 1}, {2, 3}})));
  CHECK(check_a5(make(5, {{3, 1}, {3, 5}, {1, 2}})));
  // mirror image
  CHECK_FALSE(check_a5(make(3, {{2, 3}, {3, 1}})));
}

TEST_CASE("crossing arcs and covered roots") {
  CHECK(is_noncrossing(make(3, {{2, 1}, {2, 3}})));
  auto crossing = make(4, {{1, 3}, {2, 4}});
  CHECK_FALSE(is_noncrossing(crossing));
  // token 2 is a second independent element inside (1,3)
  CHECK(kinds(crossing_violations(crossing)) == std::vector<Axiom>{Axiom::Crossing, Axiom::CoveredRoot});
  auto dutch = fixture("covered_root.json");
  CHECK_FALSE(is_noncrossing(dutch));
  auto vs = crossing_violations(dutch);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].axiom == Axiom::Crossing);
  CHECK(vs[0].witnesses == std::vector<Witness>{Arc{3, 1}, Arc{4, 2}});
  CHECK(vs[1].axiom == Axiom::CoveredRoot);
  CHECK(vs[1].witnesses == std::vector<Witness>{TokenIndex{3}, Arc{4, 2}});
  // arcs sharing an endpoint never cross
  CHECK(is_noncrossing(make(3, {{1, 2}, {1, 3}})));
}

TEST_CASE("validate") {
  CHECK(validate(make(3, {{2, 1}, {2, 3}})).empty());
  CHECK(validate(make(1, {})).empty());
  CHECK(kinds(validate(fixture("head_sharing.json"))) == std::vector<Axiom>{Axiom::A3});

  auto vs = validate(make(3, {{2, 1}, {1, 3}}));
  CHECK(kinds(vs) == std::vector<Axiom>{Axiom::A4, Axiom::A5, Axiom::CoveredRoot});
  CHECK(vs[0].witnesses.front() == Witness{Arc{1, 3}});
  CHECK(vs[1].witnesses.front() == Witness{TokenIndex{1}});

  // A4/A5 are not reported when A1-A3 fail
  CHECK(kinds(validate(make(3, {{1, 3}}))) == std::vector<Axiom>{Axiom::A1});
}

TEST_CASE("violation report JSON") {
  auto j = violations_to_json(validate(fixture("covered_root.json")));
  CHECK(j.dump() ==
        R"j([{"axiom":"A4","message":"arc (3,1) spans element(s) 2 not governed within [1,3]","witnesses":[{"dep":1,"head":3,"label":"_"},2]},)j"
        R"j({"axiom":"A4","message":"arc (4,2) spans element(s) 3 not governed within [2,4]","witnesses":[{"dep":2,"head":4,"label":"_"},3]},)j"
        R"j({"axiom":"A5","message":"token 4 has dependent 2 on the other side of its governor 3","witnesses":[4]},)j"
        R"j({"axiom":"CROSSING","message":"arcs (3,1) and (4,2) cross","witnesses":[{"dep":1,"head":3,"label":"_"},{"dep":2,"head":4,"label":"_"}]},)j"
        R"j({"axiom":"COVERED_ROOT","message":"independent element 3 lies inside arc (4,2)","witnesses":[3,{"dep":2,"head":4,"label":"_"}]}])j");
}

TEST_CASE("A4 implies A5 and matches the crossing characterization on small trees") {
  std::size_t trees = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    test::for_each_head_vector(n, [&](const std::vector<TokenIndex>& heads) {
      auto ds = ds_from_heads(test::placeholder_tokens(n), heads);
      const bool base = check_a1(ds) && check_a2(ds) && check_a3(ds);
      REQUIRE(base == test::is_tree(heads));
      if (!base) return;
      ++trees;
      const bool a4 = check_a4(ds);
      if (a4) REQUIRE(check_a5(ds));
      REQUIRE(a4 == is_noncrossing(ds));
      REQUIRE(a4 == test::projective_by_definition(heads));
      REQUIRE(validate(ds).empty() == a4);
    });
  }
  // labeled rooted trees on n nodes: n^(n-1)
  CHECK(trees == 1 + 2 + 9 + 64 + 625);
}
