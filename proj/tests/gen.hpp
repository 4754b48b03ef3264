#pragma once

#include <random>
#include <vector>

#include "weylgf/polyring.hpp"
#include "weylgf/rootsys.hpp"

namespace testgen {

using namespace weylgf;

// Small random generators for property tests; a fixed seed keeps runs reproducible.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int int_in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return int_in(0, 1) == 1; }

  ParamPoly param_poly(int max_terms = 4, int max_param = 3, int max_exp = 2, int coeff = 5) {
    ParamPoly out;
    int terms = int_in(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      ParamPoly mono(int_in(-coeff, coeff));
      int vars = int_in(0, 2);
      for (int v = 0; v < vars; ++v)
        mono *= ParamPoly::param(ParamId{int_in(0, max_param)}, static_cast<unsigned>(int_in(1, max_exp)));
      out += mono;
    }
    return out;
  }

  // Integral exponents in [-span, span] unless half is set.
  LaurentPoly laurent(int rank, int max_terms = 4, int span = 2, bool half = false) {
    LaurentPoly out(rank);
    int terms = int_in(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> e(rank);
      for (int& x : e) x = half ? 2 * int_in(-span, span) + 1 : 2 * int_in(-span, span);
      out += LaurentPoly::monomial(rank, e, param_poly(2, 2, 1, 3));
    }
    return out;
  }

  Rational nonzero_rational(int span = 5) {
    Rational q;
    do q = Rational(int_in(-span, span), int_in(1, span));
    while (q == 0);
    q.canonicalize();
    return q;
  }

  // Square of a random nonzero rational, with its square root attached.
  VarValue square_value(int span = 4) { return VarValue::from_sqrt(nonzero_rational(span)); }

  std::vector<int> ints(int n, int lo, int hi) {
    std::vector<int> v(n);
    for (int& x : v) x = int_in(lo, hi);
    return v;
  }

private:
  std::mt19937_64 rng_;
};

// Every vector of length n with entries in [lo, hi].
inline std::vector<std::vector<int>> all_tuples(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, lo);
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == hi) cur[i--] = lo;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

inline std::vector<Family> all_families() {
  return {Family::GL, Family::Sp, Family::SOodd, Family::SOeven, Family::Oeven};
}

}  // namespace testgen
