#pragma once

#include <string>
#include <vector>

#include "weylgf/polyring.hpp"
#include "weylgf/rootsys.hpp"

namespace weylgf {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, no trailing zeros

  Partition() = default;
  // Sorts nothing; throws ParseError unless weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> p);

  int length() const { return static_cast<int>(parts.size()); }
  int size() const;
  int part(int i) const { return i < length() ? parts[i] : 0; }  // 0-based, zero past the end
  // Integer weight (lambda_1..lambda_n), padded with zeros.
  Weight weight(int n) const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
};

Partition conjugate(const Partition& lambda);
// (n - lambda'_m, ..., n - lambda'_1); lambda must fit in the (m^n) box.
Partition tilde(const Partition& lambda, int n, int m);
// Partitions with at most n parts, each at most m.
std::vector<Partition> box_partitions(int n, int m);

bool check_dual_cauchy(int n, int m);
bool check_spn_spm(int n, int m);

// Left side of the id-th dual pair product in x_1..x_n, y_1..y_m (ids 1..5):
//   1  Sp(2n) x Sp(2m)         2  SO(2n+1) x SO(2m+1)    3  O(2n) x O(2m)
//   4  spin O(2n) x SO(2m+1)   5  spin SO(2n+1) x Sp(2m)
LaurentPoly dual_pair_lhs(int id, int n, int m);
// Right side: sum over the box of ch_lambda(x) * (dual coefficient in y).
LaurentPoly dual_pair_rhs(int id, int n, int m);
// Highest weight of the x-character paired with lambda (Delta + lambda for ids 4, 5).
Weight dual_pair_label(int id, const Partition& lambda, int n);
// y-coefficient paired with lambda, as a polynomial in y_1..y_m.
LaurentPoly dual_pair_coefficient(int id, const Partition& lambda, int n, int m);
bool check_dual_pair(int id, int n, int m);

// ch^{GL(m)}_{(q+r,r)}(y) for m = 3, ch^{GL(2)}_{(r)}(y) for m = 2.
Rational psi_via_dual_gl(int m, const std::vector<VarValue>& y, int q, int r);

// Relations between spin and non-spin coefficients, indices up to bound:
//   1  phi_r, spin SO(2n+1) (a, 1)        vs  Sp(2n) (a - 1, 1)
//   2  phi_r, spin O(2n) (a, 1)           vs  (-1)^r SO(2n+1) (1 - a, 1)
//   3  psi_qr, spin SO(2n+1) (a, b, 1)    vs  Sp(2n) (a - b + 1, b - 1, 1)
//   4  psi_qr, spin O(2n) (a, b, 1)       vs  (-1)^q SO(2n+1) (a - b + 1, 1 - b, 1)
// with a = a_{1/2}, b = a_{3/2} symbolic.
bool check_phi_psi_relations(int which, int bound);

}  // namespace weylgf
