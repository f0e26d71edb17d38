#include "catch_amalgamated.hpp"

#include "heckeloc/json_io.hpp"

using namespace heckeloc;

TEST_CASE("one-color suites pass on every generator", "[relations]") {
  for (const auto& name : {"A1", "A2", "I2(3)-q", "I2(5)"}) {
    auto r = builtin::make(name);
    auto rep = verify(build_suite(r, "one-color"), 2);
    CAPTURE(name);
    REQUIRE(rep.all_passed());
  }
}

TEST_CASE("a corrupted generator table fails with a localized diff", "[relations]") {
  // Negative control: dot-dot against a wrong barbell must fail and name the entry.
  auto A2 = builtin::make("A2");
  DPtr lhs = d_vcomp(d_onecolor(*A2, GenKind::DotTop, 0), d_onecolor(*A2, GenKind::DotBottom, 0));
  DPtr rhs = d_polybox(*A2, Frac(Poly::variable(A2->ring(), 1)));  // alpha_t, not alpha_s
  auto c = make_equal_case("negative-control", A2, lhs, rhs, {});
  LambdaEval ev(A2);
  auto err = c.run(ev);
  REQUIRE(err.has_value());
  REQUIRE(err->find("row") != std::string::npos);
  REQUIRE(err->find("a_s") != std::string::npos);
}

TEST_CASE("cyclicity cases evaluate both bent forms", "[relations]") {
  for (const auto& name : {"A1xA1", "A2"}) {
    auto r = builtin::make(name);
    auto rep = verify(build_suite(r, "cyclicity"), 2);
    CAPTURE(name);
    REQUIRE(rep.all_passed());
    REQUIRE(rep.results.size() == 1);
  }
}

TEST_CASE("jw suite includes the dots and pitchfork deaths", "[relations]") {
  auto A2 = builtin::make("A2");
  auto cases = build_suite(A2, "jw");
  REQUIRE(cases.size() == 5);  // relation + all-dots + 3 pitchfork positions
  REQUIRE(verify(cases, 2).all_passed());
}

TEST_CASE("the dot pulls straight through the vertex up to pitchfork terms", "[relations]") {
  // On balanced realizations both shadings pull through with coefficient 1;
  // the all-ones row of the remainder vanishes.
  for (const auto& name : {"A1xA1", "A2", "B2"}) {
    auto r = builtin::make(name);
    std::vector<RelationCase> cases{build_most_terms_p(r, 0, 1, 0),
                                    build_most_terms_p(r, 0, 1, 1)};
    CAPTURE(name);
    REQUIRE(verify(cases, 2).all_passed());
  }
}

TEST_CASE("suite selection skips pairs without a rotatable projector", "[relations]") {
  auto bad = builtin::make("I2(6)-a-1");
  REQUIRE(build_suite(bad, "cyclicity").empty());
  REQUIRE(build_suite(bad, "jw").empty());
  REQUIRE_FALSE(build_suite(bad, "one-color").empty());
}

TEST_CASE("the A3 sides have matching boundaries and all-ones behavior", "[relations]") {
  auto a3 = builtin::make("A3");
  auto [lhs, rhs] = zamolodchikov_a3_sides(a3, 0, 1, 2);
  REQUIRE(lhs->src == rhs->src);
  REQUIRE(lhs->tgt == rhs->tgt);
  LambdaEval ev(a3);
  LocMatrix ml = ev.eval(lhs);
  // Both sides send [11...1] to [11...1] with coefficient 1.
  std::uint32_t ones = (1u << 6) - 1;
  REQUIRE(ml.at(ones, ones).is_one());
  LocMatrix mr = ev.eval(rhs);
  REQUIRE(mr.at(ones, ones).is_one());
}

TEST_CASE("report ordering and rendering", "[relations]") {
  auto r = builtin::make("A1");
  auto rep = verify(build_suite(r, "one-color"), 3);
  for (std::size_t i = 1; i < rep.results.size(); ++i)
    REQUIRE(rep.results[i - 1].name <= rep.results[i].name);
  REQUIRE(rep.render().find("[PASS]") != std::string::npos);
}

TEST_CASE("json round trips", "[relations][json]") {
  auto A2 = builtin::make("A2");

  SECTION("fractions") {
    Poly as = Poly::variable(A2->ring(), 0), at = Poly::variable(A2->ring(), 1);
    Frac f(as * as - at, as + at);
    Json j = frac_to_json(f);
    REQUIRE(frac_from_json(j, *A2) == f);
  }
  SECTION("diagrams evaluate identically after a round trip") {
    std::vector<DPtr> samples{
        d_vcomp(d_onecolor(*A2, GenKind::Merge, 0), d_onecolor(*A2, GenKind::Split, 0)),
        d_hcomp(d_id(*A2, {0}), d_onecolor(*A2, GenKind::Cup, 1)),
        d_pair(*A2, GenKind::Vertex2m, 0, 1, 0),
        d_scaled(Frac::from_int(A2->ring(), 3), d_onecolor(*A2, GenKind::DotTop, 1)),
        d_sum({d_onecolor(*A2, GenKind::DotTop, 0), d_onecolor(*A2, GenKind::DotTop, 0)})};
    LambdaEval ev(A2);
    for (const auto& d : samples) {
      Json j = diagram_to_json(d, *A2);
      DPtr back = diagram_from_json(j, *A2);
      REQUIRE(ev.eval(back) == ev.eval(d));
      REQUIRE(diagram_to_json(back, *A2) == j);
    }
  }
  SECTION("matrix dump shape") {
    LambdaEval ev(A2);
    Json j = matrix_to_json(ev.eval(d_onecolor(*A2, GenKind::Split, 0)), *A2);
    REQUIRE(j.at("source_word").size() == 1);
    REQUIRE(j.at("target_word").size() == 2);
    REQUIRE(j.at("entries").size() == 4);
    REQUIRE(j.at("entries")[0].contains("row"));
    REQUIRE(j.at("entries")[0].contains("col"));
    REQUIRE(j.at("entries")[0].at("value").contains("num"));
  }
  SECTION("report json is deterministic and time-free") {
    auto r = builtin::make("A1");
    auto rep1 = verify(build_suite(r, "one-color"), 1);
    auto rep2 = verify(build_suite(r, "one-color"), 3);
    REQUIRE(report_to_json(rep1).dump() == report_to_json(rep2).dump());
    REQUIRE(report_to_json(rep1).dump().find("millis") == std::string::npos);
  }
}

TEST_CASE("custom zamolodchikov harness accepts json pairs", "[relations]") {
  auto a3 = builtin::make("A3");
  auto [lhs, rhs] = zamolodchikov_a3_sides(a3, 0, 1, 2);
  Json pair{{"lhs", diagram_to_json(lhs, *a3)}, {"rhs", diagram_to_json(rhs, *a3)}};
  DPtr l2 = diagram_from_json(pair.at("lhs"), *a3);
  DPtr r2 = diagram_from_json(pair.at("rhs"), *a3);
  auto c = verify_zamolodchikov_custom(a3, l2, r2, "roundtrip");
  LambdaEval ev(a3);
  REQUIRE_FALSE(c.run(ev).has_value());
}
