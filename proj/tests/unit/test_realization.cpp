#include "catch_amalgamated.hpp"

#include "heckeloc/realization.hpp"

using namespace heckeloc;

TEST_CASE("built-in realizations validate; bad Cartan data is rejected", "[realization]") {
  for (const auto& name : builtin::names()) REQUIRE_NOTHROW(builtin::make(name));
  // a_st = a_ts = -1 with m = 4 has [4] = -1 != 0.
  REQUIRE_THROWS_AS(builtin::dihedral_int(4, -1, -1, "bad"), std::invalid_argument);
}

TEST_CASE("reflection action", "[realization]") {
  auto A2 = builtin::make("A2");
  Poly as = Poly::variable(A2->ring(), 0), at = Poly::variable(A2->ring(), 1);

  SECTION("s(alpha_s) = -alpha_s") {
    REQUIRE(A2->form_to_poly(A2->reflect(0, A2->alpha(0))) == -as);
  }
  SECTION("A2: s(alpha_t) = alpha_s + alpha_t") {
    REQUIRE(A2->form_to_poly(A2->reflect(0, A2->alpha(1))) == as + at);
  }
  SECTION("[2] = 0 realization: s(alpha_t) = alpha_t") {
    auto r = builtin::make("I2(4)-x0");
    REQUIRE(r->form_to_poly(r->reflect(0, r->alpha(1))) == Poly::variable(r->ring(), 1));
  }
}

TEST_CASE("W-action on polynomials and fractions", "[realization]") {
  auto A2 = builtin::make("A2");
  Poly as = Poly::variable(A2->ring(), 0);
  Frac inv_as(Poly::from_int(A2->ring(), 1), as);

  REQUIRE(A2->act_on_poly({}, as * as) == as * as);
  REQUIRE(A2->act_on_poly({0}, as * as) == as * as);
  REQUIRE(A2->act_on_frac({0}, inv_as) == -inv_as);  // s(1/alpha_s) = -1/alpha_s

  SECTION("action is multiplicative along words") {
    Poly p = as * as + Poly::variable(A2->ring(), 1);
    CoxWord w{0, 1, 0};
    Poly expect = A2->act_on_poly({0}, A2->act_on_poly({1}, A2->act_on_poly({0}, p)));
    REQUIRE(A2->act_on_poly(w, p) == expect);
  }
}

TEST_CASE("roots beta_w and beta_e", "[realization]") {
  auto A2 = builtin::make("A2");
  Poly as = Poly::variable(A2->ring(), 0), at = Poly::variable(A2->ring(), 1);

  REQUIRE(A2->form_to_poly(A2->beta({0})) == as);
  REQUIRE(A2->form_to_poly(A2->beta({0, 1})) == as + at);

  SECTION("beta of the alternating word: [k]_s alpha_s + [k-1]_t alpha_t") {
    for (const auto& name : {"A2", "B2", "G2", "I2(5)", "I2(3)-q"}) {
      auto r = builtin::make(name);
      int m = r->cox().m[0][1];
      Poly ras = Poly::variable(r->ring(), 0), rat = Poly::variable(r->ring(), 1);
      for (int k = 1; k <= m; ++k) {
        Poly beta = r->form_to_poly(r->beta(alternating_word(0, 1, k)));
        Poly expect = ras * r->qnum_at(0, 1, k, QColor::S) +
                      rat * r->qnum_at(0, 1, k - 1, QColor::T);
        REQUIRE(beta == expect);
      }
    }
  }

  SECTION("beta_sub ignores the last bit") {
    auto r = builtin::make("B2");
    CoxWord w = alternating_word(0, 1, 4);
    for (std::size_t i = 0; i < 8; ++i) {
      Subexpression e0 = sub_of_index(2 * i, 4), e1 = sub_of_index(2 * i + 1, 4);
      REQUIRE(r->beta_sub(w, e0) == r->beta_sub(w, e1));
    }
  }
}

TEST_CASE("pi fixtures", "[realization]") {
  SECTION("m = 2: pi = alpha_s alpha_t") {
    auto r = builtin::make("A1xA1");
    Poly as = Poly::variable(r->ring(), 0), at = Poly::variable(r->ring(), 1);
    REQUIRE(r->pi(0, 1) == as * at);
  }
  SECTION("m = 4 with [2] = 0: pi = alpha_s^2 alpha_t^2") {
    auto r = builtin::make("I2(4)-x0");
    Poly as = Poly::variable(r->ring(), 0), at = Poly::variable(r->ring(), 1);
    REQUIRE(r->pi(0, 1) == as * as * at * at);
    REQUIRE(r->pi(1, 0) == r->pi(0, 1));
  }
  SECTION("q-deformed m = 3: pi_{s,t} = q^{-1} alpha_s alpha_t s(alpha_t)") {
    auto r = builtin::make("I2(3)-q");
    Poly as = Poly::variable(r->ring(), 0), at = Poly::variable(r->ring(), 1);
    Scalar qinv = r->x_of(1, 0);  // [2]_t = q^{-1}
    Poly s_at = r->act_on_poly({0}, at);
    REQUIRE(r->pi(0, 1) == as * at * s_at * qinv);
  }
  SECTION("pi degree is 2m") {
    for (const auto& name : {"A2", "B2", "G2", "I2(5)"}) {
      auto r = builtin::make(name);
      int m = r->cox().m[0][1];
      REQUIRE(*Frac(r->pi(0, 1)).graded_degree() == 2 * m);
    }
  }
}

TEST_CASE("pi symmetry and anti-invariance", "[realization]") {
  for (const auto& name : {"A1xA1", "A2", "B2", "G2", "I2(5)", "I2(7)", "I2(8)",
                           "I2(4)-x0", "I2(6)-a-1", "I2(9)-a-1", "I2(3)-q"}) {
    auto r = builtin::make(name);
    int m = r->cox().m[0][1];
    Poly pst = r->pi(0, 1), pts = r->pi(1, 0);
    CAPTURE(name);
    if (m % 2 == 0) {
      REQUIRE(pst == pts);
    } else {
      Scalar bt = r->qnum_at(0, 1, m - 1, QColor::T);
      REQUIRE(pst == pts * bt);  // pi_{s,t} = [m-1]_t pi_{t,s}
    }
    bool balanced = r->is_balanced_pair(0, 1);
    Poly s_pst = r->act_on_poly({0}, pst);
    if (m % 2 == 1 || balanced) {
      REQUIRE(s_pst == -pst);
      REQUIRE(r->act_on_poly({1}, pst) == -pst);
    } else {
      REQUIRE(s_pst != -pst);
    }
  }
}

TEST_CASE("two enumerations of the positive roots agree for faithful pairs", "[realization]") {
  for (const auto& name : {"A2", "B2", "G2", "I2(5)"}) {
    auto r = builtin::make(name);
    int m = r->cox().m[0][1];
    std::vector<Poly> xs_roots, xt_roots;
    for (const auto& w : leading_subexpressions(alternating_word(0, 1, m)))
      xs_roots.push_back(r->form_to_poly(r->beta(w)));
    for (const auto& w : leading_subexpressions(alternating_word(1, 0, m)))
      xt_roots.push_back(r->form_to_poly(r->beta(w)));
    for (const auto& root : xs_roots) {
      bool found = false;
      for (const auto& other : xt_roots)
        if (root == other) { found = true; break; }
      REQUIRE(found);
    }
  }
}

TEST_CASE("zeta", "[realization]") {
  auto A2 = builtin::make("A2");
  Poly as = Poly::variable(A2->ring(), 0), at = Poly::variable(A2->ring(), 1);

  SECTION("all-ones gives pi") {
    REQUIRE(A2->zeta(0, 1, Subexpression{{1, 1, 1}}) == A2->pi(1, 0));
    REQUIRE(A2->zeta(0, 1, Subexpression{{1, 1, 1}}) == A2->pi(0, 1));  // balanced
  }
  SECTION("all-zeros gives the product of simple roots") {
    REQUIRE(A2->zeta(0, 1, Subexpression{{0, 0, 0}}) == at * as * at);
  }
  SECTION("length mismatch is an error") {
    REQUIRE_THROWS_AS(A2->zeta(0, 1, Subexpression{{1, 1}}), std::invalid_argument);
  }
}

TEST_CASE("balance scalars", "[realization]") {
  auto A2 = builtin::make("A2");
  auto [bs, bt] = A2->balance_scalar(0, 1);
  REQUIRE(bs.is_one());
  REQUIRE(bt.is_one());
  REQUIRE(A2->is_balanced_pair(0, 1));

  auto I9 = builtin::make("I2(9)-a-1");
  REQUIRE(I9->is_balanced_pair(0, 1));  // [8] = 1: balanced but not faithful

  auto I6 = builtin::make("I2(6)-a-1");
  auto [b6s, b6t] = I6->balance_scalar(0, 1);
  REQUIRE(b6s == Scalar::from_int(I6->field(), -1));  // [5] = -1: unbalanced
  REQUIRE_FALSE(I6->is_balanced_pair(0, 1));
  REQUIRE_FALSE(I6->is_even_balanced());

  auto q3 = builtin::make("I2(3)-q");
  REQUIRE_FALSE(q3->is_balanced_pair(0, 1));
  REQUIRE(q3->is_even_balanced());  // no even pairs
}

TEST_CASE("order on span", "[realization]") {
  REQUIRE(builtin::make("A2")->order_on_span(0, 1) == 3);
  REQUIRE(builtin::make("I2(4)-x0")->order_on_span(0, 1) == 2);  // non-faithful for m = 4
  REQUIRE(builtin::make("I2(9)-a-1")->order_on_span(0, 1) == 3);
  REQUIRE(builtin::make("G2")->order_on_span(0, 1) == 6);
  REQUIRE(builtin::make("I2(6)-a-1")->order_on_span(0, 1) == 3);
}

TEST_CASE("TOML realization configs", "[realization]") {
  std::string toml = R"(
name = "golden"
generators = ["s","t"]
[field]
kind = "numberfield"
modulus = ["-1","-1","1"]
variable = "x"
[coxeter]
rank = 2
m = [[1,5],[5,1]]
[cartan]
rows = [["2","-x"],["-x","2"]]
)";
  auto r = realization_from_toml(toml);
  REQUIRE(r->name() == "golden");
  REQUIRE(r->cox().m[0][1] == 5);
  REQUIRE(r->qnum_at(0, 1, 5, QColor::S).is_zero());

  SECTION("ratfunc config with q-powers") {
    std::string qt = R"(
[field]
kind = "ratfunc"
variable = "q"
[coxeter]
rank = 2
m = [[1,3],[3,1]]
[cartan]
rows = [["2","-q"],["-q^-1","2"]]
)";
    auto rq = realization_from_toml(qt);
    REQUIRE(rq->x_of(0, 1) == Scalar::generator(rq->field()));
  }
  SECTION("invalid configs are rejected with the failing quantum number") {
    std::string bad = R"(
[field]
kind = "rationals"
[coxeter]
rank = 2
m = [[1,4],[4,1]]
[cartan]
rows = [["2","-1"],["-1","2"]]
)";
    REQUIRE_THROWS_WITH(realization_from_toml(bad),
                        Catch::Matchers::ContainsSubstring("[4]"));
  }
}
