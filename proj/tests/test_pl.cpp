#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coopkit/pl.hpp"
#include "coopkit/rng.hpp"

using namespace coopkit;

namespace {

Verdict decide(const char* lhs, const char* rhs, Ambient amb) {
  return decide_equation(parse_alg_formula(lhs), parse_alg_formula(rhs), amb);
}

// piece value agrees with a reference expression wherever `extra` also holds
bool piece_value_matches(const PLTerm& t, Ambient amb, const PLPiece& p,
                         const LinConstraint& extra, const LinExpr& reference) {
  const int n = static_cast<int>(t.vars.size());
  for (int dir = 0; dir < 2; ++dir) {
    auto sys = ambient_domain(amb, n);
    sys.insert(sys.end(), p.guard.begin(), p.guard.end());
    sys.push_back(extra);
    sys.push_back(gt0(dir == 0 ? p.value - reference : reference - p.value));
    if (feasible(sys, n)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("compilation splits capped addition as expected") {
  // P -o P*P over [0,1] is P below 1/2 and 1-P above
  Formula f = parse_formula("P -o P * P");
  PLTerm t = compile_pl(f, Ambient::Interval);
  REQUIRE(t.vars == std::vector<std::string>{"P"});
  CHECK(!t.pieces.empty());
  LinExpr p = LinExpr::var(0, 1);
  LinExpr one_minus = LinExpr::constant_of(Rational(1), 1) - p;
  LinConstraint low = geq0(one_minus - p);   // 2P <= 1
  LinConstraint high = geq0(p + p - LinExpr::constant_of(Rational(1), 1));  // 2P >= 1
  for (const auto& piece : t.pieces) {
    CHECK(piece_value_matches(t, Ambient::Interval, piece, low, p));
    CHECK(piece_value_matches(t, Ambient::Interval, piece, high, one_minus));
  }
}

TEST_CASE("halving compiles linearly") {
  PLTerm t = compile_pl(parse_formula("P/2"), Ambient::Nonneg);
  REQUIRE(t.pieces.size() == 1);
  CHECK(t.pieces[0].guard.empty());
  CHECK(t.pieces[0].value.coeff[0] == Rational(1, 2));
}

TEST_CASE("the halving axioms hold identically on the interval") {
  CHECK(decide("(x/2 -> x) -> x/2", "0", Ambient::Interval).valid);  // A5
  CHECK(decide("x/2 -> x/2 -> x", "0", Ambient::Interval).valid);    // A6
}

TEST_CASE("constant 1 is rejected in the nonneg ambient") {
  CHECK_THROWS_AS(compile_pl(parse_alg_formula("x -> 1"), Ambient::Nonneg),
                  UnsupportedSymbol);
}

TEST_CASE("equational decisions match the known laws") {
  CHECK(decide("x + (x -> y)", "y + (y -> x)", Ambient::Nonneg).valid);
  CHECK(decide("x + (x -> y)", "y + (y -> x)", Ambient::Interval).valid);
  CHECK(decide("(x -> y) -> y", "(y -> x) -> x", Ambient::Interval).valid);
  CHECK(decide("(x -> y) -> y", "(y -> x) -> x", Ambient::Nonneg).valid);

  Verdict v = decide("x + x", "x", Ambient::Interval);
  REQUIRE(!v.valid);
  CHECK(v.lhs_value != v.rhs_value);
  Rational x = v.assignment.at("x");
  CHECK(Rational(0) < x);
  CHECK(x < Rational(1));
}

TEST_CASE("idempotency fails off the endpoints only") {
  // x + x = x is valid in neither ambient; nonneg witness must be positive
  Verdict v = decide("x + x", "x", Ambient::Nonneg);
  REQUIRE(!v.valid);
  CHECK(v.assignment.at("x") > 0);
}

TEST_CASE("interval pieces stay within the unit range") {
  Rng rng(55);
  const char* samples[] = {"x -> (y -> x)", "x/2 + y", "(x + y)/2 -> x",
                           "(x -> y) + (y -> x)", "x + (y -> x/2)"};
  for (const char* s : samples) {
    Formula f = parse_alg_formula(s);
    PLTerm t = compile_pl(f, Ambient::Interval);
    const int n = static_cast<int>(t.vars.size());
    for (const auto& piece : t.pieces) {
      auto below = ambient_domain(Ambient::Interval, n);
      below.insert(below.end(), piece.guard.begin(), piece.guard.end());
      auto above = below;
      below.push_back(gt0(LinExpr(n) - piece.value));  // value < 0 somewhere?
      above.push_back(gt0(piece.value - LinExpr::constant_of(Rational(1), n)));
      CHECK(!feasible(below, n));
      CHECK(!feasible(above, n));
    }
  }
}

TEST_CASE("matrix parsing and universal decisions") {
  MatrixExpr wajsberg = parse_matrix("(x -> y) -> y = (y -> x) -> x");
  CHECK(decide_universal(wajsberg, {Ambient::Nonneg, Ambient::Interval}).valid);

  MatrixExpr cancel = parse_matrix("x + y = x ==> y = 0");
  Verdict v = decide_universal(cancel, {Ambient::Nonneg, Ambient::Interval});
  REQUIRE(!v.valid);
  CHECK(*v.ambient == Ambient::Interval);  // cancellative nonneg model satisfies it
  // the countermodel falsifies the matrix exactly
  CHECK(!cancel.eval(v.assignment, RationalModel::capped(Rational(1))));

  CHECK(decide_universal(parse_matrix("x = x"), {Ambient::Nonneg, Ambient::Interval}).valid);
  CHECK(decide_universal(parse_matrix("x <= x + y"), {Ambient::Nonneg}).valid);
  CHECK(!decide_universal(parse_matrix("!(x = x + y) | y = 0"), {Ambient::Nonneg}).valid);
  CHECK(decide_universal(parse_matrix("x <= y & y <= x ==> x = y"), {Ambient::Interval}).valid);
}

TEST_CASE("matrix syntax errors") {
  CHECK_THROWS_AS(parse_matrix("x + y"), SyntaxError);          // no comparator
  CHECK_THROWS_AS(parse_matrix("x = y ==>"), SyntaxError);      // dangling implication
  CHECK_THROWS_AS(parse_matrix("(x = y"), SyntaxError);
}

TEST_CASE("halving elimination introduces one variable per subterm") {
  HornClause simple{{}, {parse_alg_formula("x/2 + x/2"), parse_alg_formula("x")}};
  HornClause out = eliminate_halving(simple);
  REQUIRE(out.hypotheses.size() == 1);
  CHECK(render_alg_formula(out.hypotheses[0].first) == "v1");
  CHECK(render_alg_formula(out.hypotheses[0].second) == "v1 -> x");
  CHECK(render_alg_formula(out.conclusion.first) == "v1 + v1");
  CHECK(render_alg_formula(out.conclusion.second) == "x");

  HornClause nested{{}, {parse_alg_formula("x/2/2"), parse_alg_formula("y")}};
  HornClause out2 = eliminate_halving(nested);
  REQUIRE(out2.hypotheses.size() == 2);
  CHECK(render_alg_formula(out2.hypotheses[0].second) == "v1 -> x");
  CHECK(render_alg_formula(out2.hypotheses[1].second) == "v2 -> v1");
  CHECK(render_alg_formula(out2.conclusion.first) == "v2");

  HornClause unchanged{{}, {parse_alg_formula("x + y"), parse_alg_formula("y")}};
  HornClause out3 = eliminate_halving(unchanged);
  CHECK(out3.hypotheses.empty());
  CHECK(render_alg_formula(out3.conclusion.first) == "x + y");
}

TEST_CASE("halving elimination avoids captured names") {
  HornClause clash{{}, {parse_alg_formula("v1 + x/2"), parse_alg_formula("v1")}};
  HornClause out = eliminate_halving(clash);
  REQUIRE(out.hypotheses.size() == 1);
  CHECK(render_alg_formula(out.hypotheses[0].first) == "v2");
}

TEST_CASE("halving elimination is semantically faithful on coop models") {
  // evaluating with v_t := t/2 satisfies the added hypotheses and keeps
  // the conclusion's truth value
  HornClause clause{{{parse_alg_formula("x/2"), parse_alg_formula("y")}},
                    {parse_alg_formula("x/2 + y"), parse_alg_formula("x")}};
  HornClause out = eliminate_halving(clause);
  RationalModel unit = RationalModel::capped(Rational(1));
  Rng rng(404);
  for (int i = 0; i < 200; ++i) {
    std::map<std::string, Rational> env;
    env["x"] = sample_value(unit, rng);
    env["y"] = sample_value(unit, rng);
    env["v1"] = env["x"] / 2;
    auto holds = [&](const std::pair<Formula, Formula>& eq) {
      return eval_formula(eq.first, env, unit) == eval_formula(eq.second, env, unit);
    };
    for (std::size_t h = 0; h < out.hypotheses.size(); ++h)
      if (h == 0) CHECK(holds(out.hypotheses[0]));  // v1 = v1 -> x
    CHECK(holds(clause.conclusion) == holds(out.conclusion));
    CHECK(holds(clause.hypotheses[0]) == holds(out.hypotheses.back()));
  }
}

TEST_CASE("grid oracle agreement on a small sample") {
  // decide_equation(t, 0, Interval) agrees with dense dyadic grid evaluation
  Rng rng(77);
  const char* terms[] = {"x -> y -> x", "x + y -> x", "x/2 -> x", "(x -> y) -> y",
                         "x -> x + x", "x + x -> x"};
  DyadicModel unit = DyadicModel::capped(Dyadic(1));
  for (const char* s : terms) {
    Formula f = parse_alg_formula(s);
    Verdict v = decide_equation(f, Formula::zero(), Ambient::Interval);
    bool grid_zero = true;
    const unsigned k = 6;
    for (std::uint64_t xi = 0; xi <= (1u << k) && grid_zero; ++xi)
      for (std::uint64_t yi = 0; yi <= (1u << k) && grid_zero; ++yi) {
        Assignment<DyadicModel> env{{"x", Dyadic(BigInt(xi), k)}, {"y", Dyadic(BigInt(yi), k)}};
        if (!eval_formula(f, env, unit).is_zero()) grid_zero = false;
      }
    CAPTURE(s);
    CHECK(v.valid == grid_zero);
  }
}
