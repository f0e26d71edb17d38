#include "catch_amalgamated.hpp"

#include <random>

#include "heckeloc/diagram.hpp"

using namespace heckeloc;

namespace {

LocMatrix gen_mat(LambdaEval& ev, const Realization& r, GenKind k, int s) {
  return ev.eval(d_onecolor(r, k, s));
}

}  // namespace

TEST_CASE("sum object endpoints and class partition", "[groupoid]") {
  auto A2 = builtin::make("A2");
  auto obj = SumObject::make(A2->words(), alternating_word(0, 1, 3));
  REQUIRE(obj->size() == 8);
  // Endpoints partition the 8 labels into |W|-many classes, block by block.
  REQUIRE(obj->classes.size() == 6);
  std::size_t total = 0;
  for (const auto& cls : obj->classes) total += cls.size();
  REQUIRE(total == 8);
  // sts and tst agree: labels 111 and the sts-word share a class with none other.
  REQUIRE(obj->endpoints[7] == A2->words()->canonical({1, 0, 1}));
}

TEST_CASE("endpoint guard is a constructor error", "[groupoid]") {
  auto A2 = builtin::make("A2");
  auto cache = LocMatrix::object_cache(*A2);
  auto obj = cache(CoxWord{0});
  LocMatrix m(obj, obj, A2->ring());
  REQUIRE_NOTHROW(m.set(0, 0, Frac::one(A2->ring())));
  REQUIRE_THROWS_AS(m.set(0, 1, Frac::one(A2->ring())), std::logic_error);
  // Zero values are dropped, not stored.
  m.set(1, 0, Frac::zero(A2->ring()));
  REQUIRE(m.entries().size() == 1);
}

TEST_CASE("composition fixtures from the one-color computations", "[groupoid]") {
  auto A2 = builtin::make("A2");
  LambdaEval ev(A2);

  SECTION("dot after dot is the barbell alpha") {
    auto prod = compose(gen_mat(ev, *A2, GenKind::DotTop, 0), gen_mat(ev, *A2, GenKind::DotBottom, 0));
    REQUIRE(prod.at(0, 0) == Frac(Poly::variable(A2->ring(), 0)));
  }
  SECTION("identity is neutral") {
    auto split = gen_mat(ev, *A2, GenKind::Split, 0);
    auto id1 = ev.eval(d_id(*A2, {0}));
    auto id2 = ev.eval(d_id(*A2, {0, 0}));
    REQUIRE(compose(split, id1) == split);
    REQUIRE(compose(id2, split) == split);
  }
  SECTION("the unit product is the 2x2 identity") {
    auto lhs = tensor(*A2, ev.eval(d_id(*A2, {0})), gen_mat(ev, *A2, GenKind::DotTop, 0));
    auto prod = compose(lhs, gen_mat(ev, *A2, GenKind::Split, 0));
    REQUIRE(prod == ev.eval(d_id(*A2, {0})));
  }
  SECTION("the needle product is zero") {
    auto prod = compose(gen_mat(ev, *A2, GenKind::Merge, 0), gen_mat(ev, *A2, GenKind::Split, 0));
    REQUIRE(prod.is_zero());
  }
}

TEST_CASE("tensor twists the right factor", "[groupoid]") {
  auto A2 = builtin::make("A2");
  LambdaEval ev(A2);
  Poly as = Poly::variable(A2->ring(), 0), at = Poly::variable(A2->ring(), 1);
  Frac f(as + at * Scalar::from_int(A2->field(), 2));

  SECTION("id_{B_s} (x) f = diag(f, s(f))") {
    auto m = tensor(*A2, ev.eval(d_id(*A2, {0})), ev.eval(d_polybox(*A2, f)));
    REQUIRE(m.at(0, 0) == f);
    REQUIRE(m.at(1, 1) == A2->act_on_frac({0}, f));
    REQUIRE(m.entries().size() == 2);
  }
  SECTION("f (x) id_{B_s} = diag(f, f)") {
    auto m = tensor(*A2, ev.eval(d_polybox(*A2, f)), ev.eval(d_id(*A2, {0})));
    REQUIRE(m.at(0, 0) == f);
    REQUIRE(m.at(1, 1) == f);
  }
  SECTION("id (x) id = id") {
    auto m = tensor(*A2, ev.eval(d_id(*A2, {0})), ev.eval(d_id(*A2, {1})));
    REQUIRE(m == ev.eval(d_id(*A2, {0, 1})));
  }
}

TEST_CASE("tensor is associative and satisfies the interchange law", "[groupoid]") {
  auto A2 = builtin::make("A2");
  LambdaEval ev(A2);
  std::vector<DPtr> gens{
      d_onecolor(*A2, GenKind::DotTop, 0), d_onecolor(*A2, GenKind::DotBottom, 1),
      d_onecolor(*A2, GenKind::Split, 0), d_onecolor(*A2, GenKind::Merge, 1),
      d_onecolor(*A2, GenKind::Cup, 1), d_id(*A2, {0})};
  std::mt19937 rng(41);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);

  SECTION("associativity on random triples") {
    for (int i = 0; i < 12; ++i) {
      auto a = ev.eval(gens[pick(rng)]), b = ev.eval(gens[pick(rng)]), c = ev.eval(gens[pick(rng)]);
      REQUIRE(tensor(*A2, tensor(*A2, a, b), c) == tensor(*A2, a, tensor(*A2, b, c)));
    }
  }
  SECTION("interchange: (a (x) b) o (c (x) d) = (a o c) (x) (b o d)") {
    for (int i = 0; i < 30; ++i) {
      DPtr da = gens[pick(rng)], db = gens[pick(rng)], dc = gens[pick(rng)], dd = gens[pick(rng)];
      if (da->src != dc->tgt || db->src != dd->tgt) continue;
      auto a = ev.eval(da), b = ev.eval(db), c = ev.eval(dc), d = ev.eval(dd);
      REQUIRE(compose(tensor(*A2, a, b), tensor(*A2, c, d)) ==
              tensor(*A2, compose(a, c), compose(b, d)));
    }
  }
}

TEST_CASE("matrix linear algebra", "[groupoid]") {
  auto A2 = builtin::make("A2");
  LambdaEval ev(A2);
  auto split = ev.eval(d_onecolor(*A2, GenKind::Split, 0));

  REQUIRE((split - split).is_zero());
  REQUIRE(split + LocMatrix::zero(split.src(), split.tgt(), A2->ring()) == split);
  REQUIRE(split.scaled(Frac::from_int(A2->ring(), 2)) == split + split);
  REQUIRE(-(-split) == split);
  REQUIRE_THROWS_AS(split + ev.eval(d_onecolor(*A2, GenKind::Merge, 0)), std::invalid_argument);
}

TEST_CASE("degree bookkeeping", "[groupoid]") {
  auto A2 = builtin::make("A2");
  LambdaEval ev(A2);

  // Lambda(dot B_s -> 1): degree 1, entries of graded degree 1 + 1 - 0 = 2.
  REQUIRE(ev.eval(d_onecolor(*A2, GenKind::DotTop, 0)).degree_check(1));
  REQUIRE(ev.eval(d_id(*A2, alternating_word(0, 1, 3))).degree_check(0));
  // Lambda(split): degree -1, entries -1 + 1 - 2 = -2.
  REQUIRE(ev.eval(d_onecolor(*A2, GenKind::Split, 0)).degree_check(-1));
  REQUIRE_FALSE(ev.eval(d_onecolor(*A2, GenKind::Split, 0)).degree_check(0));
}

TEST_CASE("dense rendering is deterministic", "[groupoid]") {
  auto A2 = builtin::make("A2");
  LambdaEval ev(A2);
  REQUIRE(ev.eval(d_onecolor(*A2, GenKind::DotTop, 0)).render_dense() == "[[a_s, 0]]");
  REQUIRE(ev.eval(d_onecolor(*A2, GenKind::DotBottom, 0)).render_dense() == "[[1],\n [0]]");
}
