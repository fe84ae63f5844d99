#include <doctest.h>

#include "dg/error.hpp"
#include "dg/functional.hpp"
#include "support/fixtures.hpp"

using namespace dg;

namespace {

Analysis only_analysis(const Grammar& g, const char* text) {
  auto out = parse(g, Sentence::from_text(text));
  REQUIRE(out.size() == 1);
  return out.front();
}

std::set<std::string> preds(const FunctionalStructure& fs) {
  std::set<std::string> out{fs.pred};
  for (const auto& [f, sub] : fs.attrs) out.merge(preds(sub));
  return out;
}

}  // namespace

TEST_CASE("f-structure of a labeled analysis") {
  auto g = test::load_fixture("toy.dg");
  auto a = only_analysis(g, "the dog barks");
  auto fs = build_fstructure(a, g);
  CHECK(fs.pred == "barks");
  REQUIRE(fs.attrs.count("SUBJ"));
  CHECK(fs.attrs.at("SUBJ").pred == "dog");
  CHECK(fs.attrs.at("SUBJ").attrs.at("DET").pred == "the");
  CHECK(fs.node_count() == 3);
  CHECK(fstructure_to_json(fs).dump() ==
        R"({"attrs":{"SUBJ":{"attrs":{"DET":{"attrs":{},"gaps":{},"index":1,"pred":"the"}},"gaps":{},"index":2,)"
        R"("pred":"dog"}},"gaps":{},"index":3,"pred":"barks"})");
}

TEST_CASE("unlabeled arcs get positional functions") {
  auto g = parse_grammar("cat V N\nroot V\nleaf N\nrule V : N * N\nword v : V\nword n : N\n");
  auto a = only_analysis(g, "n v n");
  auto fs = build_fstructure(a, g);
  CHECK(fs.attrs.count("_1"));
  CHECK(fs.attrs.count("_2"));
}

TEST_CASE("functional uniqueness") {
  // grammars cannot repeat a label within a rule, so build the analysis by hand
  auto g = test::load_fixture("toy.dg");
  auto ds = ds_from_heads(make_tokens({{"dog", "N"}, {"barks", "V"}, {"dog", "N"}}), {2, 0, 2}, {"ARG", "_", "ARG"});
  Analysis a{ds, {std::nullopt, std::nullopt, std::nullopt}};
  CHECK_THROWS_AS(build_fstructure(a, g), FunctionalError);
}

TEST_CASE("topic construction with control") {
  auto g = test::load_fixture("topic.dg");
  auto a = only_analysis(g, "ba die gan chou");
  auto fs = build_fstructure(a, g);
  CHECK(fs.pred == "ba");
  const auto& comment = fs.attrs.at("COMMENT");
  CHECK(comment.pred == "gan");
  CHECK(comment.gaps.empty());

  auto [resolved, notes] = resolve_control(fs, a, g);
  const auto& gaps = resolved.attrs.at("COMMENT").gaps;
  REQUIRE(gaps.size() == 1);
  CHECK(gaps.at("OBJ") == Gap{"x1", 1});
  REQUIRE(notes.size() == 1);
  CHECK(notes[0] == CorefNote{"x1", 1});

  auto term = to_semantics(resolved, g, notes);
  CHECK(term == SemanticTerm::app("ba", {SemanticTerm::app("gan", {SemanticTerm::constant("die"),
                                                                   SemanticTerm::constant("chou"),
                                                                   SemanticTerm::variable("x1")})}));
  CHECK(render_semantics(term, notes) == "ba(gan(die, chou, x1))\n# x1 = token[1]\n");
}

TEST_CASE("resolve_control is idempotent") {
  auto g = test::load_fixture("topic.dg");
  auto a = only_analysis(g, "ba die gan chou");
  auto once = resolve_control(build_fstructure(a, g), a, g);
  auto twice = resolve_control(once.first, a, g);
  CHECK(twice.first == once.first);
  CHECK(twice.second == once.second);
}

TEST_CASE("control without specs or with a missing path prefix does nothing") {
  auto g = test::load_fixture("toy.dg");
  auto a = only_analysis(g, "the dog barks");
  auto fs = build_fstructure(a, g);
  auto [same, notes] = resolve_control(fs, a, g);
  CHECK(same == fs);
  CHECK(notes.empty());

  g.controls.insert({"V", {"COMMENT", "OBJ"}});
  auto [still, none] = resolve_control(fs, a, g);
  CHECK(still == fs);
  CHECK(none.empty());
}

TEST_CASE("control conflicts") {
  auto g = test::load_fixture("topic.dg");
  auto a = only_analysis(g, "ba die gan chou");
  auto fs = build_fstructure(a, g);

  auto filled = g;
  filled.controls = {{"X", {"COMMENT", "SUBJ"}}};
  CHECK_THROWS_AS(resolve_control(fs, a, filled), FunctionalError);

  auto two = g;
  two.controls.insert({"gan", {"OBJ"}});
  CHECK_THROWS_AS(resolve_control(fs, a, two), FunctionalError);

  auto through = g;
  through.controls.insert({"ba", {"COMMENT", "OBJ", "SUBJ"}});
  CHECK_THROWS_AS(resolve_control(resolve_control(fs, a, g).first, a, through), FunctionalError);
}

TEST_CASE("semantic term errors") {
  auto g = test::load_fixture("topic.dg");
  auto a = only_analysis(g, "ba die gan chou");
  auto fs = build_fstructure(a, g);
  // OBJ is neither filled nor a gap before control runs
  CHECK_THROWS_AS(to_semantics(fs, g, {}), FunctionalError);

  auto [resolved, notes] = resolve_control(fs, a, g);
  CHECK_THROWS_AS(to_semantics(resolved, g, {}), FunctionalError);

  auto no_frames = g;
  no_frames.frames.clear();
  CHECK_THROWS_AS(to_semantics(resolved, no_frames, notes), FunctionalError);
}

TEST_CASE("variables are renumbered by first appearance") {
  auto t = SemanticTerm::app("f", {SemanticTerm::variable("x7"), SemanticTerm::variable("x3"),
                                   SemanticTerm::variable("x7")});
  CHECK(render_semantics(t, {{"x3", 2}, {"x7", 4}}) == "f(x1, x2, x1)\n# x2 = token[2]\n# x1 = token[4]\n");
}

TEST_CASE("topic-outermost and clause-outermost analyses differ only in polarity") {
  auto dg_side = parse_grammar("cat X Y\nroot X\nleaf Y\nrule X : * Y:COMMENT\nword ba : X\nword gan : Y\n");
  auto lf_side = parse_grammar("cat X Y\nroot Y\nleaf X\nrule Y : X:TOPIC *\nword ba : X\nword gan : Y\n");
  auto a = only_analysis(dg_side, "ba gan");
  auto b = only_analysis(lf_side, "ba gan");
  auto fa = build_fstructure(a, dg_side);
  auto fb = build_fstructure(b, lf_side);

  CHECK(fa.pred == "ba");
  CHECK(fb.pred == "gan");
  REQUIRE(fa.attrs.size() == 1);
  REQUIRE(fb.attrs.size() == 1);
  const auto& inner_a = fa.attrs.begin()->second;
  const auto& inner_b = fb.attrs.begin()->second;
  // swapping outer and inner maps one onto the other
  CHECK(inner_a.pred == fb.pred);
  CHECK(inner_b.pred == fa.pred);
  CHECK(inner_a.attrs.empty());
  CHECK(inner_b.attrs.empty());
  CHECK(preds(fa) == preds(fb));
  CHECK(fa.node_count() == fb.node_count());
}
