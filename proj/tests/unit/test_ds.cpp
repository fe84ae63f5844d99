#include <doctest.h>

#include "dg/axioms.hpp"
#include "dg/error.hpp"
#include "dg/formats.hpp"
#include "support/fixtures.hpp"

using namespace dg;

namespace {

DependencyStructure make(std::size_t n, std::vector<Arc> arcs) {
  return DependencyStructure(test::placeholder_tokens(n), std::move(arcs));
}

}  // namespace

TEST_CASE("build_ds") {
  auto single = DependencyStructure(make_tokens({{"w1", "V"}}), {});
  CHECK(single.size() == 1);
  CHECK(single.arcs().empty());

  auto two = DependencyStructure(make_tokens({{"w1", "D"}, {"w2", "N"}}), {{2, 1, "DET"}});
  CHECK(two.arcs() == std::vector<Arc>{{2, 1, "DET"}});

  CHECK_THROWS_WITH_AS(make(1, {{1, 1}}), doctest::Contains("self-loop"), StructureError);
  CHECK_THROWS_AS(make(2, {{3, 1}}), StructureError);
  CHECK_THROWS_AS(make(2, {{0, 1}}), StructureError);
  CHECK_THROWS_WITH_AS(make(2, {{2, 1, "A"}, {2, 1, "B"}}), doctest::Contains("duplicate"), StructureError);
  CHECK_THROWS_AS(DependencyStructure({{2, "w", Category("X")}}, {}), StructureError);
  CHECK_THROWS_AS(DependencyStructure({{1, "", Category("X")}}, {}), StructureError);
}

TEST_CASE("general graphs are representable") {
  auto cyclic = make(2, {{1, 2}, {2, 1}});
  CHECK(cyclic.independents().empty());
  auto shared = make(5, {{2, 3}, {5, 3}});
  CHECK_FALSE(shared.has_unique_heads());
}

TEST_CASE("heads_of") {
  auto ds = make(2, {{2, 1, "DET"}});
  CHECK(ds.heads_of(1) == std::set<TokenIndex>{2});
  CHECK(ds.heads_of(2).empty());
  CHECK(make(5, {{2, 3}, {5, 3}}).heads_of(3) == std::set<TokenIndex>{2, 5});
  CHECK_THROWS_AS(ds.heads_of(3), StructureError);
}

TEST_CASE("descendants") {
  auto chain = make(3, {{1, 2}, {2, 3}});
  CHECK(chain.descendants(1) == std::set<TokenIndex>{2, 3});
  CHECK(chain.descendants(3).empty());
  auto star = make(4, {{2, 1}, {2, 3}, {2, 4}});
  CHECK(star.descendants(2) == std::set<TokenIndex>{1, 3, 4});
  CHECK_THROWS_AS(make(3, {{1, 3}, {2, 3}}).descendants(1), StructureError);
  // cyclic input terminates
  CHECK(make(3, {{1, 2}, {2, 3}, {3, 1}}).descendants(1) == std::set<TokenIndex>{2, 3});
}

TEST_CASE("projection_span") {
  CHECK(make(1, {}).projection_span(1) == std::pair<TokenIndex, TokenIndex>{1, 1});
  CHECK(make(3, {{1, 2}, {2, 3}}).projection_span(1) == std::pair<TokenIndex, TokenIndex>{1, 3});
  CHECK(make(3, {{2, 1}, {2, 3}}).projection_span(2) == std::pair<TokenIndex, TokenIndex>{1, 3});
}

TEST_CASE("descendant sets of siblings are disjoint and cover the sentence") {
  for (std::size_t n = 1; n <= 6; ++n) {
    test::for_each_head_vector(n, [&](const std::vector<TokenIndex>& heads) {
      if (!test::is_tree(heads)) return;
      auto ds = ds_from_heads(test::placeholder_tokens(n), heads);
      TokenIndex root = ds.independents().front();
      std::set<TokenIndex> covered{root};
      for (TokenIndex i = 1; i <= n; ++i) {
        auto deps = ds.dependents_of(i);
        covered.insert(deps.begin(), deps.end());
        std::set<TokenIndex> seen;
        for (auto d : deps) {
          auto sub = ds.descendants(d);
          sub.insert(d);
          for (auto x : sub) REQUIRE(seen.insert(x).second);
        }
      }
      REQUIRE(covered.size() == n);
      if (check_a4(ds)) REQUIRE(ds.projection_span(root) == std::pair<TokenIndex, TokenIndex>{1, n});
    });
  }
}

TEST_CASE("phrase marker invariants") {
  auto toks = make_tokens({{"the", "D"}, {"dog", "N"}, {"barks", "V"}});
  auto np = PhraseMarker::node({PhraseMarker::leaf(toks[0]), PhraseMarker::leaf(toks[1])}, 1);
  CHECK(np.lexical_head().form == "dog");
  CHECK(np.first_index() == 1);
  CHECK(np.last_index() == 2);
  CHECK_THROWS_AS(PhraseMarker::node({}, 0), StructureError);
  CHECK_THROWS_AS(PhraseMarker::node({PhraseMarker::leaf(toks[0])}, 1), StructureError);
  CHECK_THROWS_AS(PhraseMarker::node({PhraseMarker::leaf(toks[0]), PhraseMarker::leaf(toks[2])}, 0),
                  StructureError);
  CHECK_THROWS_AS(PhraseMarker::node({PhraseMarker::leaf(toks[1]), PhraseMarker::leaf(toks[0])}, 0),
                  StructureError);
}

TEST_CASE("CoNLL encoding") {
  auto text = test::read_text(test::data_path("dog.conll"));
  auto all = read_conll_all(text);
  REQUIRE(all.size() == 1);
  const auto& ds = all.front();
  CHECK(ds.arcs() == std::vector<Arc>{{2, 1, "DET"}, {3, 2, "SUBJ"}});
  CHECK(ds.token(3).category == Category("V"));
  CHECK(write_conll(ds) + "\n" == text);

  CHECK(read_conll_all("# comment\n1\ta\tX\t0\t_\n\n\n1\tb\tX\t0\t_\n2\tc\tX\t1\tL\n").size() == 2);
  CHECK_THROWS_AS(read_conll_all("1\ta\tX\t0\n"), StructureError);
  CHECK_THROWS_AS(read_conll_all("1\ta\tX\tzero\t_\n"), StructureError);
  CHECK_THROWS_WITH_AS(write_conll(make(5, {{2, 3}, {5, 3}})), doctest::Contains("multiple heads"), StructureError);
}

TEST_CASE("JSON encoding carries multiple heads") {
  auto j = nlohmann::json::parse(test::read_text(test::data_path("head_sharing.json")));
  auto ds = ds_from_json(j);
  CHECK(ds.heads_of(3) == std::set<TokenIndex>{2, 5});
  CHECK(ds_from_json(ds_to_json(ds)) == ds);
  CHECK_THROWS_AS(ds_from_json(nlohmann::json::parse(R"({"tokens": [{"form": "a"}]})")), StructureError);
  CHECK_THROWS_AS(ds_from_json(nlohmann::json::parse(R"({"tokens": [{"form": "a", "cat": "X"}], "arcs": [{"head": 1, "dep": 1}]})")),
                  StructureError);
}

TEST_CASE("s-expression encoding") {
  auto pm = read_sexp("( ( the/D ^dog/N ) ^barks/V )");
  CHECK(write_sexp(pm) == "( ( the/D ^dog/N ) ^barks/V )");
  CHECK(pm.lexical_head().index == 3);
  CHECK(pm.fringe().size() == 3);
  CHECK(read_sexp("runs/V").is_leaf());
  CHECK(read_sexp("  a/b/N ").token().form == "a/b");
  CHECK_THROWS_WITH_AS(read_sexp("( the/D dog/N )"), doctest::Contains("missing head annotation"), StructureError);
  CHECK_THROWS_AS(read_sexp("( ^the/D ^dog/N )"), StructureError);
  CHECK_THROWS_AS(read_sexp("( ^the/D dog/N"), StructureError);
  CHECK_THROWS_AS(read_sexp("( )"), StructureError);
  CHECK_THROWS_AS(read_sexp("( ^the dog/N )"), StructureError);
  CHECK_THROWS_AS(read_sexp("^the/D"), StructureError);
  CHECK_THROWS_AS(read_sexp("a/N b/N"), StructureError);
}
