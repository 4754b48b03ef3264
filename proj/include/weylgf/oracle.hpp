#pragma once

#include <map>
#include <utility>
#include <vector>

#include "weylgf/polyring.hpp"
#include "weylgf/rootsys.hpp"

namespace weylgf {

enum class AKind { GLPowers, Symmetrized, SpinSymmetrized };

// Single-variable factor of the product generating function:
//   GLPowers         sum_k a_k x^k
//   Symmetrized      a_0 + sum_{k>=1} a_k (x^k + x^-k)
//   SpinSymmetrized  sum_k a_k (x^k + x^-k), k half-odd
struct ASpec {
  AKind kind = AKind::GLPowers;
  std::map<int, ParamPoly> entries;  // half-unit power -> coefficient

  // Symbolic parameters a_0..a_m (spin: a_{1/2}..a_{m-1/2}).
  static ASpec symbolic(AKind kind, int m);
  // Coefficients listed by increasing power, starting at 0 (spin: at 1/2).
  static ASpec from_values(AKind kind, const std::vector<ParamPoly>& coeffs);

  // (exponent in half-units, coefficient) options for one coordinate.
  std::vector<std::pair<int, ParamPoly>> choices() const;
  LaurentPoly factor(int rank, int i) const;
  LaurentPoly product(int n) const;
};

struct ExpansionTable {
  GroupId group;
  int n = 0;
  std::map<Weight, ParamPoly> entries;
};

constexpr double kMaxMonomials = 1e7;

ExpansionTable expand(const GroupId& group, const ASpec& aspec, int jobs = 1);
ExpansionTable substitute(const ExpansionTable& table, const std::map<ParamId, ParamPoly>& values);
// Sum of entry * character over the table.
LaurentPoly expansion_rhs(const ExpansionTable& table);
bool verify_identity(const GroupId& group, const ASpec& aspec,
                     const std::map<ParamId, ParamPoly>& param_vals = {});

// Coefficient of the character lambda in aspec.product(rank), read off as the
// coefficient of x^{lambda+rho} in alternant(rho) * product.  The Weyl sum collapses
// to a determinant in the univariate coefficients, so large ranks stay cheap.
ParamPoly coefficient(const GroupId& group, const ASpec& aspec, const Weight& lambda);

// Decomposes f, a polynomial in x_1..x_n (n = group rank) followed by further
// variables, into characters of the group in x; coefficients live in the remaining variables.
std::map<Weight, LaurentPoly> decompose(const GroupId& group, const LaurentPoly& f);

}  // namespace weylgf
