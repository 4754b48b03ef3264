#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "weylgf/oracle.hpp"
#include "weylgf/polyring.hpp"
#include "weylgf/rootsys.hpp"

namespace weylgf {

enum class SeqName {
  F, G, H, T, S_oon, S_eon,
  eta_oon, zeta_oon, omega_oon,
  eta_eon, zeta_eon, omega_eon,
  sigma, tau, rho_seq,
};

std::string seq_name(SeqName name);
SeqName parse_seq_name(std::string_view s);

// Integer sequences; F follows F_0 = 0, F_1 = 1.  S_oon and S_eon depend on the
// parameters and are only available through s_coefficient.
Integer seq(SeqName name, long k);
// S_t of the SO(2n+1) or O(2n) coefficient systems; name is S_oon or S_eon.
ParamPoly s_coefficient(SeqName name, const std::array<ParamPoly, 3>& a, int t);

// Total accessor: zero for negative indices.
class PolySeq {
public:
  std::vector<ParamPoly> values;
  const ParamPoly& operator()(int i) const;
  int size() const { return static_cast<int>(values.size()); }
};

class PolyGrid {
public:
  PolyGrid() = default;
  PolyGrid(int qmax, int rmax);
  const ParamPoly& operator()(int q, int r) const;
  ParamPoly& at(int q, int r) { return cells_.at(q).at(r); }
  int qmax() const { return static_cast<int>(cells_.size()) - 1; }
  int rmax() const { return cells_.empty() ? -1 : static_cast<int>(cells_[0].size()) - 1; }

private:
  std::vector<std::vector<ParamPoly>> cells_;
};

struct RecurrenceTable {
  PolySeq Q, R, phi;
  PolyGrid chi, psi;
};

using Params2 = std::array<ParamPoly, 2>;
using Params3 = std::array<ParamPoly, 3>;
using Params4 = std::array<ParamPoly, 4>;

// GL(n), a = (a0,a1,a2,a3); phi populated when a3 = 0.
RecurrenceTable gl_coeffs(const Params4& a, int qmax, int rmax);
// a = (a0,a1,a2); phi populated when a2 = 0.
RecurrenceTable sp_coeffs(const Params3& a, int qmax, int rmax);
RecurrenceTable oon_coeffs(const Params3& a, int qmax, int rmax);
RecurrenceTable eon_coeffs(const Params3& a, int qmax, int rmax);
// Closed forms for a2 = 0 (phi from (a0,a1)) and a1 = 0 (psi from (a0,a2)).
RecurrenceTable ab_coeffs(Family family, const Params2& a01, int rmax);
RecurrenceTable ac_coeffs(Family family, const Params2& a02, int qmax, int rmax);
// Spin systems: a = (a_{1/2}, a_{3/2}) and a = (a_{1/2}, a_{5/2}); family SOodd or Oeven.
RecurrenceTable spin_ab_coeffs(Family family, const Params2& a, int rmax);
RecurrenceTable spin_ac_coeffs(Family family, const Params2& a, int qmax, int rmax);

enum class Mode { Full, AB, AC, SpinAB, SpinAC };

std::string mode_name(Mode m);  // "full", "ab", "ac", "spin-ab", "spin-ac"
Mode parse_mode(std::string_view s);

// Parameter ids used by a mode, in the order coeff expects its values.
std::vector<ParamId> mode_params(Family family, Mode mode);

// Full coefficient of the character labelled by (p,q,r) in the mode's expansion,
// prefactor included.  Labels:
//   GL Full      (3^p,2^q,1^r,0^s), coefficient a3^p psi_{q,r} a0^s
//   Full / AC    (2^p,1^q,0^r), coefficient a2^p psi_{q,r}
//   AB           (1^q,0^r), coefficient a1^q phi_r, p = 0
//   SpinAB       (3/2^q,1/2^r), coefficient a_{3/2}^q phi_r, p = 0
//   SpinAC       (5/2^p,3/2^q,1/2^r), coefficient a_{5/2}^p psi_{q,r}
// a lists values for mode_params(family, mode); for GL it may hold 1 to 4 values.
ParamPoly coeff(Family family, Mode mode, const std::vector<ParamPoly>& a, int p, int q, int r,
                int s = 0);
// Coefficients at p = 0 (and s = 0) for 0 <= q <= qmax, 0 <= r <= rmax.
PolyGrid coeff_grid(Family family, Mode mode, const std::vector<ParamPoly>& a, int qmax, int rmax);
// coeff(p,q,r) = prefactor^p * coeff_grid(q,r); zero in the AB modes.
ParamPoly coeff_prefactor(Family family, Mode mode, const std::vector<ParamPoly>& a);
// Highest weight (half-units) of the character that coeff refers to.
Weight coeff_label(Family family, Mode mode, int p, int q, int r, int s = 0);

// Single-variable factor whose product the mode expands; a as for coeff.
ASpec mode_aspec(Family family, Mode mode, const std::vector<ParamPoly>& a);
// Symbolic parameters of a mode; GL uses a_0..a_m.
std::vector<ParamPoly> symbolic_params(Family family, Mode mode, int gl_m = 3);
// (p,q,r,s) label indices present at rank n (s only for GL).
std::vector<std::array<int, 4>> mode_indices(Family family, Mode mode, int n);

// prod f(x_i) == sum coeff * character at rank n with symbolic parameters.
bool verify_expansion(Family family, Mode mode, int n, int gl_m = 3);
// Compares coeff with the oracle at rank n; returns "" or the first mismatch.
std::string compare_with_oracle(Family family, Mode mode, int n, int gl_m = 3, int jobs = 1);

}  // namespace weylgf
