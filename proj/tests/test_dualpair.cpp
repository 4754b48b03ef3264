#include "doctest.h"
#include "gen.hpp"

#include "weylgf/charformula.hpp"
#include "weylgf/dualpair.hpp"
#include "weylgf/oracle.hpp"
#include "weylgf/recur.hpp"

using namespace weylgf;
using testgen::Gen;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

long binomial(int n, int k) {
  long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

GroupId x_group(int id, int n) {
  if (id == 1) return GroupId{Family::Sp, n};
  if (id == 2 || id == 5) return GroupId{Family::SOodd, n};
  return GroupId{Family::Oeven, n};
}

}  // namespace

TEST_SUITE("dualpair") {

TEST_CASE("partitions") {
  CHECK(P({3, 2, 0, 0}).parts == std::vector<int>{3, 2});
  CHECK(P({3, 2}).size() == 5);
  CHECK(P({3, 2}).part(5) == 0);
  CHECK(P({2, 1}).weight(3) == Weight::from_ints({2, 1, 0}));
  CHECK(P({}).to_string() == "()");
  CHECK_THROWS_AS(P({1, 2}), Error);
  CHECK_THROWS_AS(P({-1}), Error);
  CHECK_THROWS_AS(P({1, 1, 1}).weight(2), Error);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P({3, 2})) == P({2, 2, 1}));
  CHECK(conjugate(P({})) == P({}));
  CHECK(conjugate(P({2, 2, 1})) == P({3, 2}));
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const Partition& l : box_partitions(n, m)) CHECK(conjugate(conjugate(l)) == l);
}

TEST_CASE("complement in the box") {
  CHECK(tilde(P({2, 1}), 3, 2) == P({2, 1}));
  CHECK(tilde(P({3, 2, 1}), 3, 3) == P({2, 1, 0}));
  CHECK(tilde(P({}), 2, 2) == P({2, 2}));
  CHECK_THROWS_AS(tilde(P({3}), 2, 2), Error);
  CHECK_THROWS_AS(tilde(P({1, 1, 1}), 2, 2), Error);
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      auto box = box_partitions(n, m);
      CHECK(static_cast<long>(box.size()) == binomial(n + m, n));
      CHECK(std::is_sorted(box.begin(), box.end()));
      for (const Partition& l : box) {
        Partition t = tilde(l, n, m);
        CHECK(t.length() <= m);
        CHECK(t.part(0) <= n);
        CHECK(t.size() == n * m - l.size());
        CHECK(tilde(t, m, n) == l);
      }
    }
  }
}

TEST_CASE("dual Cauchy identities") {
  CHECK(check_dual_cauchy(1, 1));
  CHECK(check_dual_cauchy(2, 2));
  CHECK(check_dual_cauchy(3, 2));
  CHECK(check_spn_spm(1, 1));
  CHECK(check_spn_spm(2, 1));
  CHECK(check_spn_spm(2, 2));
}

TEST_CASE("dual pairs") {
  CHECK(check_dual_pair(1, 1, 1));
  CHECK(check_dual_pair(3, 1, 1));
  CHECK(check_dual_pair(5, 1, 1));
  for (int id = 1; id <= 5; ++id) {
    CHECK(check_dual_pair(id, 2, 1));
    CHECK(check_dual_pair(id, 1, 2));
  }
  CHECK(dual_pair_label(4, P({1}), 2) == Weight::from_half_units({3, 1}));
  CHECK_THROWS_AS(dual_pair_lhs(6, 1, 1), Error);
  CHECK_THROWS_AS(dual_pair_coefficient(0, P({}), 1, 1), Error);
}

TEST_CASE("sign convention of the SO(2n+1) x SO(2m+1) pair") {
  // With (-1)^{|lambda|} in place of (-1)^{|lambda~|} the identity fails exactly when nm is odd.
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    LaurentPoly rhs(n + m);
    for (const Partition& l : box_partitions(n, m)) {
      LaurentPoly cx = character(GroupId{Family::SOodd, n}, l.weight(n)).embed(n + m, 0);
      LaurentPoly cy = character(GroupId{Family::SOodd, m}, tilde(l, n, m).weight(m)).negate_variables();
      if (l.size() % 2) cy = -cy;
      rhs += cx * cy.embed(n + m, n);
    }
    bool printed_holds = dual_pair_lhs(2, n, m) == rhs;
    CHECK(printed_holds == ((n * m) % 2 == 0));
  }
}

TEST_CASE("decomposition recovers the dual coefficients") {
  for (int id = 1; id <= 5; ++id) {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
      auto d = decompose(x_group(id, n), dual_pair_lhs(id, n, m));
      auto box = box_partitions(n, m);
      CHECK(d.size() == box.size());
      for (const Partition& l : box) {
        auto it = d.find(dual_pair_label(id, l, n));
        REQUIRE(it != d.end());
        CHECK(it->second == dual_pair_coefficient(id, l, n, m));
      }
    }
  }
}

TEST_CASE("psi through GL dual characters") {
  CHECK(psi_via_dual_gl(2, {VarValue(1), VarValue(1)}, 0, 3) == 4);
  CHECK(psi_via_dual_gl(3, {VarValue(1), VarValue(1), VarValue(1)}, 1, 1) == 8);
  CHECK(psi_via_dual_gl(2, {VarValue(1), VarValue(-1)}, 0, 2) == 1);
  CHECK_THROWS_AS(psi_via_dual_gl(4, {1, 1, 1, 1}, 0, 0), Error);
  CHECK_THROWS_AS(psi_via_dual_gl(2, {1}, 0, 0), Error);
  CHECK_THROWS_AS(psi_via_dual_gl(2, {1, 0}, 0, 0), Error);
  CHECK_THROWS_AS(psi_via_dual_gl(2, {1, 1}, -1, 0), Error);
}

TEST_CASE("psi through GL dual characters matches the recurrence") {
  // prod_j (x + y_j) gives a = (e_m(y), ..., e_1(y), 1).
  Gen g(51);
  std::vector<ParamPoly> sym;
  for (int k = 0; k <= 2; ++k) sym.push_back(ParamPoly::param(ParamId::a(k)));
  PolyGrid grid3 = coeff_grid(Family::GL, Mode::Full, {sym[0], sym[1], sym[2], ParamPoly(1)}, 5, 5);
  RecurrenceTable t2 = gl_coeffs({sym[0], sym[1], ParamPoly(1), ParamPoly()}, 0, 6);
  for (int it = 0; it < 5; ++it) {
    std::vector<Rational> y{g.nonzero_rational(), g.nonzero_rational(), g.nonzero_rational()};
    std::map<ParamId, Rational> e3{{ParamId::a(0), y[0] * y[1] * y[2]},
                                   {ParamId::a(1), y[0] * y[1] + y[0] * y[2] + y[1] * y[2]},
                                   {ParamId::a(2), y[0] + y[1] + y[2]}};
    std::vector<VarValue> y3{y[0], y[1], y[2]};
    for (int q = 0; q <= 5; ++q)
      for (int r = 0; r <= 5; ++r) CHECK(psi_via_dual_gl(3, y3, q, r) == grid3(q, r).eval(e3));
    std::map<ParamId, Rational> e2{{ParamId::a(0), y[0] * y[1]}, {ParamId::a(1), y[0] + y[1]}};
    for (int r = 0; r <= 6; ++r) CHECK(psi_via_dual_gl(2, {y[0], y[1]}, 0, r) == t2.phi(r).eval(e2));
  }
}

TEST_CASE("spin and non-spin relations") {
  CHECK(check_phi_psi_relations(1, 10));
  CHECK(check_phi_psi_relations(2, 10));
  CHECK(check_phi_psi_relations(3, 6));
  CHECK(check_phi_psi_relations(4, 8));
  CHECK_THROWS_AS(check_phi_psi_relations(5, 3), Error);
  CHECK_THROWS_AS(check_phi_psi_relations(1, -1), Error);
}

}
