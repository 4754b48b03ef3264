#include "weylgf/dualpair.hpp"

#include <algorithm>
#include <numeric>

#include "weylgf/charformula.hpp"
#include "weylgf/oracle.hpp"
#include "weylgf/recur.hpp"

namespace weylgf {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] < 0 || (i && parts[i] > parts[i - 1]))
      throw Error(ErrorCode::ParseError, "not a partition: " + to_string());
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Weight Partition::weight(int n) const {
  if (length() > n) throw Error(ErrorCode::OutOfBox, to_string() + " has more than " + std::to_string(n) + " parts");
  std::vector<int> v(n, 0);
  for (int i = 0; i < length(); ++i) v[i] = parts[i];
  return Weight::from_ints(v);
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.part(0), 0);
  for (int p : lambda.parts)
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(out);
}

Partition tilde(const Partition& lambda, int n, int m) {
  if (lambda.length() > n || lambda.part(0) > m)
    throw Error(ErrorCode::OutOfBox, lambda.to_string() + " not in the (" + std::to_string(m) + "^" +
                                         std::to_string(n) + ") box");
  Partition c = conjugate(lambda);
  std::vector<int> out(m);
  for (int j = 0; j < m; ++j) out[j] = n - c.part(m - 1 - j);
  return Partition(out);
}

std::vector<Partition> box_partitions(int n, int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    out.emplace_back(cur);
    if (left == 0) return;
    for (int v = 1; v <= cap; ++v) {
      cur.push_back(v);
      self(self, left - 1, v);
      cur.pop_back();
    }
  };
  rec(rec, n, m);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

LaurentPoly in_x(const LaurentPoly& p, int n, int m) { return p.embed(n + m, 0); }
LaurentPoly in_y(const LaurentPoly& p, int n, int m) { return p.embed(n + m, n); }

LaurentPoly cross_product(int n, int m, bool symmetric) {
  int rank = n + m;
  LaurentPoly out = LaurentPoly::constant(rank, ParamPoly(1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      LaurentPoly f = LaurentPoly::variable(rank, i) + LaurentPoly::variable(rank, n + j);
      if (symmetric) f += LaurentPoly::variable(rank, i, -2) + LaurentPoly::variable(rank, n + j, -2);
      out *= f;
    }
  }
  return out;
}

}  // namespace

bool check_dual_cauchy(int n, int m) {
  LaurentPoly rhs(n + m);
  for (const Partition& lambda : box_partitions(n, m)) {
    LaurentPoly cx = character(GroupId{Family::GL, n}, lambda.weight(n));
    LaurentPoly cy = character(GroupId{Family::GL, m}, tilde(lambda, n, m).weight(m));
    rhs += in_x(cx, n, m) * in_y(cy, n, m);
  }
  return cross_product(n, m, false) == rhs;
}

bool check_spn_spm(int n, int m) { return check_dual_pair(1, n, m); }

LaurentPoly dual_pair_lhs(int id, int n, int m) {
  if (id < 1 || id > 5) throw Error(ErrorCode::UnsupportedMode, "dual pair id must be 1..5");
  LaurentPoly lhs = cross_product(n, m, true);
  if (id >= 4) lhs *= in_x(basic_spin_product(n), n, m);
  return lhs;
}

Weight dual_pair_label(int id, const Partition& lambda, int n) {
  Weight w = lambda.weight(n);
  return id >= 4 ? w + delta(n) : w;
}

LaurentPoly dual_pair_coefficient(int id, const Partition& lambda, int n, int m) {
  Partition t = tilde(lambda, n, m);
  Weight w = t.weight(m);
  switch (id) {
    case 1: return character(GroupId{Family::Sp, m}, w);
    case 2: {
      LaurentPoly c = character(GroupId{Family::SOodd, m}, w).negate_variables();
      return t.size() % 2 ? -c : c;
    }
    case 3: return character(GroupId{Family::Oeven, m}, w);
    case 4: return character(GroupId{Family::SOodd, m}, w);
    case 5: return character(GroupId{Family::Sp, m}, w);
    default: throw Error(ErrorCode::UnsupportedMode, "dual pair id must be 1..5");
  }
}

namespace {

GroupId x_group(int id, int n) {
  switch (id) {
    case 1: return GroupId{Family::Sp, n};
    case 2:
    case 5: return GroupId{Family::SOodd, n};
    default: return GroupId{Family::Oeven, n};
  }
}

}  // namespace

LaurentPoly dual_pair_rhs(int id, int n, int m) {
  if (id < 1 || id > 5) throw Error(ErrorCode::UnsupportedMode, "dual pair id must be 1..5");
  LaurentPoly rhs(n + m);
  for (const Partition& lambda : box_partitions(n, m)) {
    LaurentPoly cx = character(x_group(id, n), dual_pair_label(id, lambda, n));
    rhs += in_x(cx, n, m) * in_y(dual_pair_coefficient(id, lambda, n, m), n, m);
  }
  return rhs;
}

bool check_dual_pair(int id, int n, int m) { return dual_pair_lhs(id, n, m) == dual_pair_rhs(id, n, m); }

Rational psi_via_dual_gl(int m, const std::vector<VarValue>& y, int q, int r) {
  if (m != 2 && m != 3) throw Error(ErrorCode::UnsupportedMode, "psi_via_dual_gl needs m = 2 or 3");
  if (static_cast<int>(y.size()) != m) throw Error(ErrorCode::RankMismatch, "psi_via_dual_gl");
  if (q < 0 || r < 0) throw Error(ErrorCode::NegativeIndex, "psi_via_dual_gl");
  for (const VarValue& v : y)
    if (v.value == 0) throw Error(ErrorCode::ZeroVariable, "dual variables must be nonzero");
  std::vector<int> label = m == 2 ? std::vector<int>{r, 0} : std::vector<int>{q + r, r, 0};
  LaurentPoly ch = character(GroupId{Family::GL, m}, Weight::from_ints(label));
  return ch.eval({}, y);
}

namespace {

const ParamPoly& a_half() {
  static const ParamPoly p = ParamPoly::param(ParamId{1});
  return p;
}

const ParamPoly& a_three_halves() {
  static const ParamPoly p = ParamPoly::param(ParamId{3});
  return p;
}

// Spin m = 2 coefficient psi_{q,r}(a, b, 1) at p = 0.
ParamPoly spin_psi(Family family, int q, int r) {
  ASpec spec{AKind::SpinSymmetrized, {{1, a_half()}, {3, a_three_halves()}, {5, ParamPoly(1)}}};
  std::vector<int> label(q, 3);
  label.insert(label.end(), r, 1);
  return coefficient(GroupId{family, q + r}, spec, Weight(label));
}

}  // namespace

bool check_phi_psi_relations(int which, int bound) {
  if (bound < 0) throw Error(ErrorCode::NegativeIndex, "relation bound");
  const ParamPoly& a = a_half();
  const ParamPoly& b = a_three_halves();
  const ParamPoly one(1);
  switch (which) {
    case 1: {
      RecurrenceTable lhs = spin_ab_coeffs(Family::SOodd, {a, one}, bound);
      RecurrenceTable rhs = ab_coeffs(Family::Sp, {a - one, one}, bound);
      for (int r = 0; r <= bound; ++r)
        if (!(lhs.phi(r) == rhs.phi(r))) return false;
      return true;
    }
    case 2: {
      RecurrenceTable lhs = spin_ab_coeffs(Family::Oeven, {a, one}, bound);
      RecurrenceTable rhs = ab_coeffs(Family::SOodd, {one - a, one}, bound);
      for (int r = 0; r <= bound; ++r)
        if (!(lhs.phi(r) == (r % 2 ? -rhs.phi(r) : rhs.phi(r)))) return false;
      return true;
    }
    case 3:
    case 4: {
      bool odd = which == 3;
      Family spin_family = odd ? Family::SOodd : Family::Oeven;
      RecurrenceTable rhs = odd ? sp_coeffs({a - b + one, b - one, one}, bound, bound)
                                : oon_coeffs({a - b + one, one - b, one}, bound, bound);
      // The b = 0 specialization is also checked against the spin AC recurrences.
      RecurrenceTable ac = spin_ac_coeffs(spin_family, {a, one}, bound, bound);
      std::map<ParamId, ParamPoly> b_zero{{ParamId{3}, ParamPoly()}};
      for (int q = 0; q <= bound; ++q) {
        for (int r = 0; r <= bound; ++r) {
          ParamPoly want = (!odd && q % 2) ? -rhs.psi(q, r) : rhs.psi(q, r);
          ParamPoly got = spin_psi(spin_family, q, r);
          if (!(got == want)) return false;
          if (!(ac.psi(q, r) == want.substitute(b_zero))) return false;
        }
      }
      return true;
    }
    default: throw Error(ErrorCode::UnsupportedMode, "relation index must be 1..4");
  }
}

}  // namespace weylgf
