#include "doctest.h"
#include "gen.hpp"

#include "weylgf/charformula.hpp"

using namespace weylgf;
using testgen::Gen;

namespace {

LaurentPoly x(int rank, int i, int half_units = 2) { return LaurentPoly::variable(rank, i, half_units); }
LaurentPoly one(int rank) { return LaurentPoly::constant(rank, ParamPoly(1)); }

Rational det(std::vector<std::vector<Rational>> m) {
  int n = static_cast<int>(m.size());
  Rational out = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      out = -out;
    }
    out *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return out;
}

// det[s_j^{mu_i} + sign * s_j^{-mu_i}] with x_j = s_j^2 and mu in half-units.
Rational bialternant(const std::vector<Rational>& s, const Weight& mu, int sign) {
  int n = mu.rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = rational_pow(s[j], mu.comps[i]) + sign * rational_pow(s[j], -mu.comps[i]);
  return det(m);
}

// Weyl's formula as a ratio of determinants at a numeric point.
std::optional<Rational> determinant_character(const GroupId& g, const Weight& lambda, const std::vector<Rational>& s) {
  Weight r = rho(g);
  Weight mu = lambda + r;
  Rational num, den;
  switch (g.family) {
    case Family::GL: {
      int n = g.rank;
      std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n)), b = a;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          a[i][j] = rational_pow(s[j], mu.comps[i]);
          b[i][j] = rational_pow(s[j], r.comps[i]);
        }
      num = det(a);
      den = det(b);
      break;
    }
    case Family::Sp:
    case Family::SOodd:
      num = bialternant(s, mu, -1);
      den = bialternant(s, r, -1);
      break;
    case Family::SOeven:
    case Family::Oeven: {
      num = bialternant(s, mu, 1) + bialternant(s, mu, -1);
      den = bialternant(s, r, 1);
      if (g.family == Family::Oeven && lambda.comps.back() != 0) {
        Weight minus = mu;
        minus.comps.back() = -minus.comps.back();
        num += bialternant(s, minus, 1) + bialternant(s, minus, -1);
      }
      break;
    }
  }
  if (den == 0) return std::nullopt;
  return num / den;
}

// Weyl's dimension formula.
Rational dimension(const GroupId& g, const Weight& lambda) {
  Weight r = rho(g);
  Weight mu = lambda + r;
  int n = g.rank;
  Rational out = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out *= Rational(mu.comps[i] - mu.comps[j], r.comps[i] - r.comps[j]);
      if (g.family != Family::GL) out *= Rational(mu.comps[i] + mu.comps[j], r.comps[i] + r.comps[j]);
    }
    if (g.family == Family::Sp || g.family == Family::SOodd) out *= Rational(mu.comps[i], r.comps[i]);
  }
  if (g.family == Family::Oeven && lambda.comps.back() != 0) out *= 2;
  out.canonicalize();
  return out;
}

LaurentPoly act(const SignedWeylElement& w, const LaurentPoly& p) {
  LaurentPoly out(p.rank());
  for (const auto& [e, c] : p.terms()) out += LaurentPoly::monomial(p.rank(), w.apply(Weight(e)).comps, c);
  return out;
}

std::vector<Weight> dominant_weights(const GroupId& g, int top, bool half) {
  std::vector<Weight> out;
  int lo = g.family == Family::GL ? -1 : 0;
  for (const auto& t : testgen::all_tuples(g.rank, lo, top)) {
    std::vector<int> h;
    for (int v : t) h.push_back(half ? 2 * v + 1 : 2 * v);
    Weight w(h);
    if (is_dominant(g, w)) out.push_back(w);
  }
  return out;
}

std::vector<bool> spin_options(Family f) {
  if (f == Family::SOodd || f == Family::SOeven || f == Family::Oeven) return {false, true};
  return {false};
}

}  // namespace

TEST_SUITE("charformula") {

TEST_CASE("alternant examples") {
  CHECK(alternant(GroupId{Family::GL, 2}, Weight::from_ints({1, 0})) == x(2, 0) - x(2, 1));
  CHECK(alternant(GroupId{Family::Sp, 1}, Weight::from_ints({1})) == x(1, 0) - x(1, 0, -2));
  CHECK(alternant(GroupId{Family::SOodd, 1}, Weight::from_half_units({1})) == x(1, 0, 1) - x(1, 0, -1));
}

TEST_CASE("character examples") {
  CHECK(character(GroupId{Family::GL, 2}, Weight::from_ints({1, 0})) == x(2, 0) + x(2, 1));
  CHECK(character(GroupId{Family::SOodd, 1}, Weight::from_ints({1})) == x(1, 0) + one(1) + x(1, 0, -2));
  CHECK(character(GroupId{Family::Sp, 2}, Weight::from_ints({1, 0})) ==
        x(2, 0) + x(2, 0, -2) + x(2, 1) + x(2, 1, -2));
  CHECK(character(GroupId{Family::SOodd, 2}, delta(2)) == basic_spin_product(2));
  CHECK(character(GroupId{Family::Sp, 1}, Weight::from_ints({2})) == x(1, 0, 4) + one(1) + x(1, 0, -4));
  CHECK(character(CharLabel{GroupId{Family::SOodd, 1}, Weight::from_half_units({1}), true}).to_string() ==
        "x1^1/2 + x1^-1/2");
}

TEST_CASE("O(2n) folding") {
  CHECK(character_O_even(2, Weight::from_ints({1, 0})) == character(GroupId{Family::SOeven, 2}, Weight::from_ints({1, 0})));
  CHECK(character_O_even(2, Weight::from_ints({1, 1})) ==
        character(GroupId{Family::SOeven, 2}, Weight::from_ints({1, 1})) +
            character(GroupId{Family::SOeven, 2}, Weight::from_ints({1, -1})));
  CHECK(character_O_even(1, Weight::from_ints({1})) == x(1, 0) + x(1, 0, -2));
  CHECK(character(GroupId{Family::Oeven, 2}, Weight::from_ints({1, 1})).to_string() ==
        "x1*x2 + x1*x2^-1 + 2 + x1^-1*x2 + x1^-1*x2^-1");
}

TEST_CASE("alternant coherence") {
  for (Family f : testgen::all_families()) {
    for (int n = 1; n <= 3; ++n) {
      GroupId g{f, n};
      auto elems = weyl_elements(g);
      for (bool half : spin_options(f)) {
        for (const Weight& lambda : dominant_weights(g, 2, half)) {
          if (f == Family::Oeven) continue;
          Weight mu = lambda + rho(g);
          LaurentPoly a = alternant(g, mu);
          CHECK(character(g, lambda) * alternant(g, rho(g)) == a);
          for (const auto& w : elems) {
            LaurentPoly aw = alternant(g, w.apply(mu));
            CHECK(aw == (w.sign > 0 ? a : -a));
            CHECK(act(w, a) == (w.sign > 0 ? a : -a));
          }
        }
      }
      // Weights fixed by a reflection give a zero alternant.
      Weight wall(std::vector<int>(n, 2));
      if (n > 1) CHECK(alternant(g, wall).is_zero());
    }
  }
}

TEST_CASE("characters are Weyl invariant") {
  for (Family f : testgen::all_families()) {
    for (int n = 1; n <= 3; ++n) {
      GroupId g{f, n};
      auto elems = weyl_elements(g);
      for (bool half : spin_options(f)) {
        for (const Weight& lambda : dominant_weights(g, 2, half)) {
          LaurentPoly ch = character(g, lambda);
          for (const auto& w : elems) CHECK(act(w, ch) == ch);
          if (f == Family::Oeven) {
            SignedWeylElement flip{std::vector<int>(n), std::vector<int>(n, 1), 1};
            for (int i = 0; i < n; ++i) flip.perm[i] = i;
            flip.flips[n - 1] = -1;
            CHECK(act(flip, ch) == ch);
          }
        }
      }
    }
  }
}

TEST_CASE("characters agree with the determinant formula at rational points") {
  Gen gen(31);
  for (Family f : testgen::all_families()) {
    for (int n = 1; n <= 3; ++n) {
      GroupId g{f, n};
      for (bool half : spin_options(f)) {
        for (const Weight& lambda : dominant_weights(g, 2, half)) {
          LaurentPoly ch = character(g, lambda);
          for (int it = 0; it < 3; ++it) {
            std::vector<Rational> s;
            std::vector<VarValue> vars;
            for (int i = 0; i < n; ++i) {
              Rational v = gen.nonzero_rational(7);
              s.push_back(v);
              vars.push_back(VarValue::from_sqrt(v));
            }
            auto want = determinant_character(g, lambda, s);
            if (!want) continue;
            CHECK(ch.eval({}, vars) == *want);
          }
        }
      }
    }
  }
}

TEST_CASE("dimensions") {
  CHECK(dimension(GroupId{Family::GL, 3}, Weight::from_ints({2, 1, 0})) == 8);
  CHECK(dimension(GroupId{Family::Sp, 2}, Weight::from_ints({1, 1})) == 5);
  CHECK(dimension(GroupId{Family::SOodd, 2}, delta(2)) == 4);
  for (Family f : testgen::all_families()) {
    for (int n = 1; n <= 3; ++n) {
      GroupId g{f, n};
      std::vector<VarValue> ones(n, VarValue::from_sqrt(Rational(1)));
      for (bool half : spin_options(f))
        for (const Weight& lambda : dominant_weights(g, 3, half))
          CHECK(character(g, lambda).eval({}, ones) == dimension(g, lambda));
    }
  }
}

TEST_CASE("weyl quotient of non-dominant weights") {
  GroupId g{Family::Sp, 2};
  CHECK(weyl_quotient(g, Weight::from_ints({-1, 2})) == -character(g, Weight::from_ints({1, 0})));
  CHECK(weyl_quotient(g, Weight::from_ints({-2, 0})).is_zero());
}

TEST_CASE("ratio identities") {
  CHECK(check_ratio_identities(1, Weight::from_ints({0})));
  CHECK(check_ratio_identities(1, Weight::from_ints({1})));
  CHECK(check_ratio_identities(2, Weight::from_ints({1, 1})));
  for (int m = 1; m <= 2; ++m)
    for (const auto& t : testgen::all_tuples(m, 0, 3)) {
      Weight w = Weight::from_ints(t);
      if (is_dominant(GroupId{Family::Sp, m}, w)) CHECK(check_ratio_identities(m, w));
    }
  CHECK_FALSE(check_ratio_identities(2, Weight::from_ints({1})));
}

TEST_CASE("character cache") {
  clear_character_cache();
  CHECK(character_cache_size() == 0);
  LaurentPoly a = character(GroupId{Family::Sp, 2}, Weight::from_ints({2, 1}));
  CHECK(character_cache_size() > 0);
  CHECK(character(GroupId{Family::Sp, 2}, Weight::from_ints({2, 1})) == a);
}

TEST_CASE("character errors") {
  CHECK_THROWS_AS(character(GroupId{Family::Sp, 2}, Weight::from_ints({0, 1})), Error);
  CHECK_THROWS_AS(character(GroupId{Family::Sp, 2}, Weight::from_ints({1})), Error);
  CHECK_THROWS_AS(character(GroupId{Family::Sp, 1}, Weight::from_half_units({1})), Error);
  CHECK_THROWS_AS(character(GroupId{Family::Oeven, 2}, Weight::from_ints({1, -1})), Error);
}

}
