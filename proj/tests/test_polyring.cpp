#include "doctest.h"
#include "gen.hpp"

#include "weylgf/polyring.hpp"

using namespace weylgf;
using testgen::Gen;

namespace {

ParamPoly a(int k) { return ParamPoly::param(ParamId::a(k)); }
LaurentPoly x(int rank, int i, int half_units = 2) { return LaurentPoly::variable(rank, i, half_units); }
LaurentPoly one(int rank) { return LaurentPoly::constant(rank, ParamPoly(1)); }

std::map<ParamId, Rational> sample_params(Gen& g) {
  std::map<ParamId, Rational> out;
  for (int h = 0; h <= 3; ++h) out[ParamId{h}] = g.nonzero_rational();
  return out;
}

}  // namespace

TEST_SUITE("polyring") {

TEST_CASE("half-unit formatting") {
  CHECK(format_half(4) == "2");
  CHECK(format_half(-3) == "-3/2");
  CHECK(format_half(0) == "0");
  CHECK(parse_half("1/2") == 1);
  CHECK(parse_half("-5/2") == -5);
  CHECK(parse_half("3") == 6);
  CHECK_THROWS_AS(parse_half("1/3"), Error);
  CHECK_THROWS_AS(parse_half("x"), Error);
  CHECK(ParamId{1}.name() == "a1/2");
  CHECK(ParamId::a(2).name() == "a2");
}

TEST_CASE("param poly examples") {
  CHECK((a(1) + (-a(1))).is_zero());
  ParamPoly prod = a(1) * a(2);
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.terms().begin()->second == 1);
  CHECK((a(0) + a(2)) * (a(0) - a(2)) == a(0).pow(2) - a(2).pow(2));
  CHECK(((a(0) + a(2)) * (a(0) - a(2))).to_string() == "a0^2 - a2^2");
  CHECK(ParamPoly(0).is_zero());
  CHECK(ParamPoly(7).is_constant());
  CHECK(ParamPoly(7).constant_term() == 7);
}

TEST_CASE("param poly ring axioms") {
  Gen g(11);
  for (int it = 0; it < 300; ++it) {
    ParamPoly p = g.param_poly(), q = g.param_poly(), r = g.param_poly();
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK(p * ParamPoly(1) == p);
    CHECK((p * ParamPoly(0)).is_zero());
  }
}

TEST_CASE("param poly evaluation is a ring homomorphism") {
  Gen g(12);
  for (int it = 0; it < 200; ++it) {
    ParamPoly p = g.param_poly(), q = g.param_poly();
    auto v = sample_params(g);
    CHECK((p + q).eval(v) == p.eval(v) + q.eval(v));
    CHECK((p * q).eval(v) == p.eval(v) * q.eval(v));
  }
}

TEST_CASE("param poly parse round trip") {
  Gen g(13);
  for (int it = 0; it < 200; ++it) {
    ParamPoly p = g.param_poly();
    CHECK(ParamPoly::parse(p.to_string()) == p);
  }
  CHECK(ParamPoly::parse("a1/2 - 2*a3/2^2 + 1") == ParamPoly::param(ParamId{1}) -
                                                       ParamPoly(2) * ParamPoly::param(ParamId{3}, 2) + ParamPoly(1));
  CHECK_THROWS_AS(ParamPoly::parse("a1 +"), Error);
}

TEST_CASE("param poly substitution and exact division") {
  Gen g(14);
  for (int it = 0; it < 100; ++it) {
    ParamPoly p = g.param_poly(), q = g.param_poly();
    if (q.is_zero()) continue;
    CHECK((p * q).exact_div(q) == p);
  }
  CHECK_THROWS_AS(a(1).exact_div(a(2)), Error);
  CHECK_THROWS_AS(a(1).exact_div(ParamPoly()), Error);
  ParamPoly p = a(0) * a(0) - a(1);
  CHECK(p.substitute({{ParamId::a(1), a(0) * a(0)}}).is_zero());
  try {
    (void)a(3).eval({});
    FAIL("expected MissingAssignment");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingAssignment);
  }
}

TEST_CASE("laurent poly examples") {
  LaurentPoly s = x(1, 0) + x(1, 0, -2);
  CHECK(s * s == x(1, 0, 4) + LaurentPoly::constant(1, ParamPoly(2)) + x(1, 0, -4));
  CHECK((s * s).to_string() == "x1^2 + 2 + x1^-2");
  CHECK(s * one(1) == s);
  LaurentPoly f1 = LaurentPoly::constant(2, a(0)) + x(2, 0) * a(1);
  LaurentPoly f2 = LaurentPoly::constant(2, a(0)) + x(2, 1) * a(1);
  LaurentPoly want = LaurentPoly::constant(2, a(0) * a(0)) + (x(2, 0) + x(2, 1)) * (a(0) * a(1)) +
                     x(2, 0) * x(2, 1) * (a(1) * a(1));
  CHECK(f1 * f2 == want);
  CHECK_THROWS_AS(x(1, 0) + x(2, 0), Error);
}

TEST_CASE("laurent exact division") {
  LaurentPoly num = x(2, 0, 4) - x(2, 1, 4);
  CHECK(num.exact_div(x(2, 0) - x(2, 1)) == x(2, 0) + x(2, 1));
  // Sp(2), lambda = (2): mu = (3), rho = (1).
  LaurentPoly alt_mu = x(1, 0, 6) - x(1, 0, -6);
  LaurentPoly alt_rho = x(1, 0) - x(1, 0, -2);
  LaurentPoly q = alt_mu.exact_div(alt_rho);
  CHECK(q == x(1, 0, 4) + one(1) + x(1, 0, -4));
  CHECK(q * alt_rho == alt_mu);
  CHECK_THROWS_AS((x(1, 0) + one(1)).exact_div(x(1, 0) - one(1)), Error);
  CHECK_THROWS_AS(x(1, 0).exact_div(LaurentPoly(1)), Error);
}

TEST_CASE("laurent division inverts multiplication") {
  Gen g(15);
  for (int it = 0; it < 150; ++it) {
    int rank = g.int_in(1, 3);
    LaurentPoly p = g.laurent(rank), d = g.laurent(rank, 3);
    if (d.is_zero()) continue;
    CHECK((p * d).exact_div(d) == p);
  }
}

TEST_CASE("laurent ring axioms and parse round trip") {
  Gen g(16);
  for (int it = 0; it < 150; ++it) {
    int rank = g.int_in(1, 3);
    bool half = g.coin();
    LaurentPoly p = g.laurent(rank, 4, 2, half), q = g.laurent(rank), r = g.laurent(rank);
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(LaurentPoly::parse(p.to_string(), rank) == p);
  }
}

TEST_CASE("laurent evaluation") {
  CHECK((x(1, 0) + x(1, 0, -2)).eval({}, {VarValue(2)}) == Rational(5, 2));
  LaurentPoly f = LaurentPoly::constant(1, a(0)) + (x(1, 0) + x(1, 0, -2)) * a(1);
  CHECK(f.eval({{ParamId::a(0), 2}, {ParamId::a(1), 1}}, {VarValue(1)}) == 4);

  LaurentPoly lhs = one(2);
  for (int i = 0; i < 2; ++i) lhs *= one(2) + x(2, i, 4) + x(2, i, -4);
  Rational want = (Rational(1) + 4 + Rational(1, 4)) * (Rational(1) + 9 + Rational(1, 9));
  CHECK(lhs.eval({}, {VarValue(2), VarValue(3)}) == want);
  CHECK(want == Rational(21, 4) * Rational(91, 9));

  LaurentPoly half = x(1, 0, 1) + x(1, 0, -1);
  CHECK(half.eval({}, {VarValue::from_sqrt(Rational(2))}) == Rational(5, 2));
  CHECK_THROWS_AS(half.eval({}, {VarValue(4)}), Error);
  CHECK_THROWS_AS(x(1, 0, -2).eval({}, {VarValue(0)}), Error);
}

TEST_CASE("laurent evaluation is a ring homomorphism") {
  Gen g(17);
  for (int it = 0; it < 150; ++it) {
    int rank = g.int_in(1, 3);
    LaurentPoly p = g.laurent(rank, 4, 2, true), q = g.laurent(rank);
    std::vector<VarValue> vars;
    for (int i = 0; i < rank; ++i) vars.push_back(g.square_value());
    auto params = sample_params(g);
    CHECK((p + q).eval(params, vars) == p.eval(params, vars) + q.eval(params, vars));
    CHECK((p * q).eval(params, vars) == p.eval(params, vars) * q.eval(params, vars));
  }
}

TEST_CASE("embed and negate_variables") {
  LaurentPoly p = x(1, 0) * a(1) + one(1);
  LaurentPoly e = p.embed(3, 2);
  CHECK(e == x(3, 2) * a(1) + one(3));
  CHECK_THROWS_AS(p.embed(1, 1), Error);
  CHECK((x(2, 0) * x(2, 1, 4)).negate_variables() == -(x(2, 0) * x(2, 1, 4)));
  CHECK((x(2, 0, 1) * x(2, 1, 1)).negate_variables() == -(x(2, 0, 1) * x(2, 1, 1)));
  CHECK_THROWS_AS(x(1, 0, 1).negate_variables(), Error);
}

TEST_CASE("rational helpers") {
  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(rational_pow(Rational(5), 0) == 1);
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), Error);
  CHECK(format_rational(Rational(-3, 4)) == "-3/4");
  CHECK(format_rational(Rational(2)) == "2");
  CHECK(format_rational(Rational(-1, 2)) == "-1/2");
}

}
