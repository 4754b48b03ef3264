#include "weylgf/recur.hpp"

#include "weylgf/charformula.hpp"

#include <algorithm>

namespace weylgf {

namespace {

using P = ParamPoly;

int mod5(long k) { return static_cast<int>(((k % 5) + 5) % 5); }

const std::array<std::pair<SeqName, const char*>, 15> kSeqNames{{
    {SeqName::F, "F"},
    {SeqName::G, "G"},
    {SeqName::H, "H"},
    {SeqName::T, "T"},
    {SeqName::S_oon, "S_oon"},
    {SeqName::S_eon, "S_eon"},
    {SeqName::eta_oon, "eta_oon"},
    {SeqName::zeta_oon, "zeta_oon"},
    {SeqName::omega_oon, "omega_oon"},
    {SeqName::eta_eon, "eta_eon"},
    {SeqName::zeta_eon, "zeta_eon"},
    {SeqName::omega_eon, "omega_eon"},
    {SeqName::sigma, "sigma"},
    {SeqName::tau, "tau"},
    {SeqName::rho_seq, "rho"},
}};

Integer linear3(long k, std::array<long, 3> seeds, std::array<long, 3> coeffs) {
  if (k < 3) return Integer(seeds[k]);
  Integer x0 = seeds[0], x1 = seeds[1], x2 = seeds[2];
  for (long i = 3; i <= k; ++i) {
    Integer next = coeffs[0] * x2 + coeffs[1] * x1 + coeffs[2] * x0;
    x0 = x1;
    x1 = x2;
    x2 = next;
  }
  return x2;
}

// (-x)^k
P neg_pow(const P& x, int k) {
  P v = x.pow(static_cast<unsigned>(k));
  return k % 2 == 0 ? v : -v;
}

int sgn_of(const Integer& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

P times(long c, const P& x) { return P(c) * x; }

}  // namespace

std::string seq_name(SeqName name) {
  for (const auto& [n, s] : kSeqNames)
    if (n == name) return s;
  return "?";
}

SeqName parse_seq_name(std::string_view s) {
  for (const auto& [n, str] : kSeqNames)
    if (s == str) return n;
  throw Error(ErrorCode::ParseError, "unknown sequence '" + std::string(s) + "'");
}

Integer seq(SeqName name, long k) {
  switch (name) {
    case SeqName::F:
    case SeqName::G:
    case SeqName::H:
    case SeqName::T:
      if (k < 0) throw Error(ErrorCode::NegativeIndex, seq_name(name) + "_" + std::to_string(k));
      break;
    default: break;
  }
  int m = mod5(k);
  switch (name) {
    case SeqName::F: {
      Integer f;
      mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
      return f;
    }
    case SeqName::G: return linear3(k, {0, 0, 1}, {1, 1, 1});
    case SeqName::H: return linear3(k, {0, 0, 1}, {-1, -1, 1});
    case SeqName::T: return linear3(k, {1, 1, 0}, {1, -1, 1});
    case SeqName::S_oon:
    case SeqName::S_eon:
      throw Error(ErrorCode::UnsupportedMode,
                  seq_name(name) + " depends on the parameters; use s_coefficient");
    case SeqName::eta_oon: return m == 0 || m == 2 ? 1 : (m == 3 || m == 4 ? -1 : 0);
    case SeqName::zeta_oon: return m == 1 ? 1 : (m == 0 ? -1 : 0);
    case SeqName::omega_oon: return m == 2 ? 1 : (m == 3 ? -1 : 0);
    case SeqName::eta_eon: return m == 1 || m == 2 ? 1 : (m == 0 || m == 3 ? -1 : 0);
    case SeqName::zeta_eon: return m == 3 ? 1 : (m == 4 ? -1 : 0);
    case SeqName::omega_eon: return m == 1 ? 1 : (m == 0 ? -1 : 0);
    case SeqName::sigma: return m == 3 ? 1 : (m == 1 ? -1 : 0);
    case SeqName::tau: return m == 3 ? 1 : (m == 0 ? -1 : 0);
    case SeqName::rho_seq: return m == 2 || m == 3 ? 1 : (m == 0 ? -2 : 0);
  }
  return 0;
}

ParamPoly s_coefficient(SeqName name, const Params3& a, int t) {
  const P &a0 = a[0], &a1 = a[1], &a2 = a[2];
  if (t < 0) return P();
  if (name == SeqName::S_oon) {
    switch (t) {
      case 0: return P(1);
      case 1: return -a1;
      case 2: return times(2, a1 * a2) - a2 * a2;
      default: return times(-2, a1) * neg_pow(a2, t - 1);
    }
  }
  if (name == SeqName::S_eon) {
    P a1sq = a1 * a1;
    switch (t) {
      case 0: return P(1);
      case 1: return P();
      case 2: return a0 * a2 - a1sq;
      case 3: return -(a0 * a2.pow(2)) + times(2, a1sq * a2) - times(2, a2.pow(3));
      case 4: return times(-2, a1sq * a2.pow(2)) + a2.pow(4);
      default: return times(-2, a1sq) * neg_pow(a2, t - 2);
    }
  }
  throw Error(ErrorCode::UnsupportedMode, seq_name(name) + " is not an S sequence");
}

const ParamPoly& PolySeq::operator()(int i) const {
  static const ParamPoly zero;
  if (i < 0) return zero;
  return values.at(static_cast<std::size_t>(i));
}

PolyGrid::PolyGrid(int qmax, int rmax)
    : cells_(static_cast<std::size_t>(std::max(qmax + 1, 0)),
             std::vector<ParamPoly>(static_cast<std::size_t>(std::max(rmax + 1, 0)))) {}

const ParamPoly& PolyGrid::operator()(int q, int r) const {
  static const ParamPoly zero;
  if (q < 0 || r < 0) return zero;
  return cells_.at(static_cast<std::size_t>(q)).at(static_cast<std::size_t>(r));
}

RecurrenceTable gl_coeffs(const Params4& a, int qmax, int rmax) {
  const P &a0 = a[0], &a1 = a[1], &a2 = a[2], &a3 = a[3];
  RecurrenceTable t;
  P a1a3 = a1 * a3, a0a33 = a0 * a3 * a3, a0a2 = a0 * a2, a00a3 = a0 * a0 * a3, a0a3 = a0 * a3;
  for (int q = 0; q <= qmax; ++q)
    t.Q.values.push_back(q == 0 ? P(1) : a2 * t.Q(q - 1) - a1a3 * t.Q(q - 2) + a0a33 * t.Q(q - 3));
  for (int r = 0; r <= rmax; ++r)
    t.R.values.push_back(r == 0 ? P(1) : a1 * t.R(r - 1) - a0a2 * t.R(r - 2) + a00a3 * t.R(r - 3));
  t.psi = PolyGrid(qmax, rmax);
  for (int q = 0; q <= qmax; ++q)
    for (int r = 0; r <= rmax; ++r) t.psi.at(q, r) = t.Q(q) * t.R(r) - a0a3 * t.Q(q - 1) * t.R(r - 1);
  t.chi = t.psi;
  if (a3.is_zero()) {
    for (int r = 0; r <= rmax; ++r) {
      if (r == 0)
        t.phi.values.push_back(P(1));
      else
        t.phi.values.push_back(a1 * t.phi(r - 1) - a0a2 * t.phi(r - 2));
    }
  }
  return t;
}

namespace {

// Q, R and chi shared by the Sp, SO(2n+1) and O(2n) systems.
RecurrenceTable sp_core(const Params3& a, int qmax, int rmax) {
  const P &a0 = a[0], &a1 = a[1], &a2 = a[2];
  RecurrenceTable t;
  P a0a2 = a0 * a2, a1a22 = a1 * a2 * a2, a24 = a2.pow(4), a1sq = a1 * a1, a0a22 = a0 * a2 * a2;
  P a23 = a2.pow(3);
  std::vector<P> na2{P(1)};
  for (int s = 1; s <= std::max(rmax, 1) + 1; ++s) na2.push_back(-(na2.back() * a2));

  for (int q = 0; q <= qmax; ++q) {
    if (q == 0) {
      t.Q.values.push_back(P(1));
      continue;
    }
    t.Q.values.push_back(a1 * t.Q(q - 1) - a0a2 * t.Q(q - 2) + a1a22 * t.Q(q - 3) - a24 * t.Q(q - 4));
  }
  for (int r = 0; r <= rmax; ++r) {
    if (r == 0) {
      t.R.values.push_back(P(1));
      continue;
    }
    P v = a0 * t.R(r - 1) - a1sq * t.R(r - 2) - a0a22 * t.R(r - 3) + a24 * t.R(r - 4);
    P tail;
    for (int s = 1; s <= r - 2; ++s) tail += na2[s] * t.R(r - s - 2);
    v -= times(2, a1sq) * tail;
    t.R.values.push_back(std::move(v));
  }
  t.chi = PolyGrid(qmax, rmax);
  for (int q = 0; q <= qmax; ++q)
    for (int r = 0; r <= rmax; ++r) {
      P v = t.Q(q) * t.R(r) + a23 * t.Q(q - 2) * t.R(r - 1);
      if (!t.Q(q - 1).is_zero()) {
        P sum;
        for (int s = 1; s <= r; ++s) sum += na2[s] * t.R(r - s);
        v += a1 * t.Q(q - 1) * sum;
      }
      t.chi.at(q, r) = std::move(v);
    }
  if (a2.is_zero()) t.phi = ab_coeffs(Family::Sp, {a0, a1}, rmax).phi;
  return t;
}

}  // namespace

RecurrenceTable sp_coeffs(const Params3& a, int qmax, int rmax) {
  RecurrenceTable t = sp_core(a, qmax, rmax);
  t.psi = PolyGrid(qmax, rmax);
  for (int q = 0; q <= qmax; ++q)
    for (int r = 0; r <= rmax; ++r) t.psi.at(q, r) = t.chi(q, r) - t.chi(q, r - 1) * a[2];
  return t;
}

RecurrenceTable oon_coeffs(const Params3& a, int qmax, int rmax) {
  RecurrenceTable t = sp_core(a, qmax, rmax);
  std::vector<P> S;
  for (int s = 0; s <= rmax; ++s) S.push_back(s_coefficient(SeqName::S_oon, a, s));
  t.psi = PolyGrid(qmax, rmax);
  for (int q = 0; q <= qmax; ++q)
    for (int r = 0; r <= rmax; ++r) {
      P v;
      for (int s = 0; s <= r; ++s) v += t.chi(q, r - s) * S[s];
      v += t.chi(q - 1, 0) * neg_pow(a[2], r + 1);
      t.psi.at(q, r) = std::move(v);
    }
  if (a[2].is_zero()) t.phi = ab_coeffs(Family::SOodd, {a[0], a[1]}, rmax).phi;
  return t;
}

RecurrenceTable eon_coeffs(const Params3& a, int qmax, int rmax) {
  RecurrenceTable t = sp_core(a, qmax, rmax);
  const P &a1 = a[1], &a2 = a[2];
  std::vector<P> S;
  for (int s = 0; s <= rmax; ++s) S.push_back(s_coefficient(SeqName::S_eon, a, s));
  t.psi = PolyGrid(qmax, rmax);
  for (int q = 0; q <= qmax; ++q)
    for (int r = 0; r <= rmax; ++r) {
      P v;
      for (int s = 0; s <= r; ++s) v += t.chi(q, r - s) * S[s];
      if (r != 0) v += t.chi(q - 1, 0) * a1 * neg_pow(a2, r);
      if (r == 0) v -= t.chi(q - 2, 0) * a2.pow(2);
      if (r == 1) v += t.chi(q - 2, 0) * a2.pow(3);
      t.psi.at(q, r) = std::move(v);
    }
  if (a2.is_zero()) t.phi = ab_coeffs(Family::Oeven, {a[0], a1}, rmax).phi;
  return t;
}

RecurrenceTable ab_coeffs(Family family, const Params2& a01, int rmax) {
  const P &a0 = a01[0], &a1 = a01[1];
  P a1sq = a1 * a1;
  RecurrenceTable t;
  auto& phi = t.phi.values;
  for (int r = 0; r <= rmax; ++r) {
    if (r == 0) {
      phi.push_back(P(1));
      continue;
    }
    switch (family) {
      case Family::Sp:
        phi.push_back(r == 1 ? a0 : a0 * t.phi(r - 1) - a1sq * t.phi(r - 2));
        break;
      case Family::SOodd:
        phi.push_back(r == 1 ? a0 - a1 : a0 * t.phi(r - 1) - a1sq * t.phi(r - 2));
        break;
      case Family::Oeven:
      case Family::SOeven:
        if (r == 1)
          phi.push_back(a0);
        else if (r == 2)
          phi.push_back(a0 * a0 - times(2, a1sq));
        else
          phi.push_back(a0 * t.phi(r - 1) - a1sq * t.phi(r - 2));
        break;
      case Family::GL:
        throw Error(ErrorCode::UnsupportedMode, "GL uses gl_coeffs");
    }
  }
  return t;
}

RecurrenceTable ac_coeffs(Family family, const Params2& a02, int qmax, int rmax) {
  const P &a0 = a02[0], &a2 = a02[1];
  RecurrenceTable t;
  t.psi = PolyGrid(qmax, rmax);
  P a0a2 = a0 * a2, a0a22 = a0 * a2 * a2, a22 = a2 * a2, a23 = a2.pow(3), a24 = a2.pow(4);

  if (family == Family::SOodd) {
    int len = rmax + qmax / 2 + 1;
    PolySeq col;
    for (int r = 0; r <= len; ++r) {
      if (r == 0)
        col.values.push_back(P(1));
      else if (r == 1)
        col.values.push_back(a0);
      else
        col.values.push_back(a0 * col(r - 1) - a22 * col(r - 2));
    }
    for (int q = 0; q <= qmax; ++q)
      for (int r = 0; r <= rmax; ++r) {
        if (q % 2 == 0)
          t.psi.at(q, r) = neg_pow(a2, q / 2) * col((q + 2 * r) / 2);
        else
          t.psi.at(q, r) = neg_pow(a2, (q + 1 + 2 * r) / 2) * col((q - 1) / 2);
      }
    return t;
  }
  if (family != Family::Sp && family != Family::Oeven && family != Family::SOeven)
    throw Error(ErrorCode::UnsupportedMode, "no AC closed form for " + family_name(family));

  bool even = family != Family::Sp;
  for (int r = 0; r <= rmax; ++r) {
    P v;
    if (r == 0) {
      v = P(1);
    } else if (r == 1) {
      v = even ? a0 : a0 - a2;
    } else if (even && r == 2) {
      v = a0 * a0 + a0a2;
    } else if (even && r == 3) {
      v = a0.pow(3) + a0 * a0 * a2 - times(2, a0 * a22) - times(2, a23);
    } else if (even && r == 4) {
      v = a0.pow(4) + a0.pow(3) * a2 - times(3, a0 * a0 * a22) - times(2, a0 * a23) + times(2, a24);
    } else {
      v = a0 * t.psi(0, r - 1) - a0a22 * t.psi(0, r - 3) + a24 * t.psi(0, r - 4);
    }
    t.psi.at(0, r) = std::move(v);
  }
  for (int q = 2; q <= qmax; q += 2)
    for (int r = 0; r <= rmax; ++r) {
      P v;
      if (q == 2) {
        if (even && r == 0)
          v = -a0a2 - a22;
        else if (even && r == 1)
          v = -(a0 * a0 * a2) + times(2, a23);
        else
          v = -a0a2 * t.psi(0, r) + a23 * t.psi(0, r - 1);
      } else {
        v = -a0a2 * t.psi(q - 2, r) - a24 * t.psi(q - 4, r);
      }
      t.psi.at(q, r) = std::move(v);
    }
  return t;
}

RecurrenceTable spin_ab_coeffs(Family family, const Params2& a, int rmax) {
  const P &h1 = a[0], &h3 = a[1];
  if (family != Family::SOodd && family != Family::Oeven && family != Family::SOeven)
    throw Error(ErrorCode::UnsupportedMode, "spin systems exist for SO(2n+1) and O(2n) only");
  bool odd = family == Family::SOodd;
  RecurrenceTable t;
  P h13 = h1 * h3, h33 = h3.pow(3);
  for (int r = 0; r <= rmax; ++r) {
    P v;
    if (r == 0)
      v = P(1);
    else if (r == 1)
      v = odd ? h1 - h3 : h1;
    else if (r == 2)
      v = odd ? h1 * h1 - times(2, h13) : h1 * h1 - h13 - h3 * h3;
    else
      v = h1 * t.phi(r - 1) - h13 * t.phi(r - 2) + h33 * t.phi(r - 3);
    t.phi.values.push_back(std::move(v));
  }
  return t;
}

RecurrenceTable spin_ac_coeffs(Family family, const Params2& a, int qmax, int rmax) {
  const P &h1 = a[0], &h5 = a[1];
  if (family != Family::SOodd && family != Family::Oeven && family != Family::SOeven)
    throw Error(ErrorCode::UnsupportedMode, "spin systems exist for SO(2n+1) and O(2n) only");
  bool odd = family == Family::SOodd;
  int top = std::max(qmax, rmax) + 3;
  std::vector<P> h5p{P(1)};
  for (int s = 1; s <= top + 2; ++s) h5p.push_back(h5p.back() * h5);
  P h11 = h1 * h1;

  RecurrenceTable t;
  for (int q = 0; q <= qmax; ++q) {
    if (q == 0) {
      t.Q.values.push_back(P(1));
      continue;
    }
    t.Q.values.push_back(-(h1 * h5) * t.Q(q - 2) + h1 * h5p[2] * t.Q(q - 3) + h5p[5] * t.Q(q - 5));
  }
  for (int r = 0; r <= rmax; ++r) {
    if (r == 0) {
      t.R.values.push_back(P(1));
      continue;
    }
    P v = h1 * t.R(r - 1) - h1 * h5p[3] * t.R(r - 4) + h5p[5] * t.R(r - 5);
    for (int s = 3; s <= r; ++s) {
      int rho = static_cast<int>(seq(SeqName::rho_seq, s).get_si());
      if (rho != 0) v += times(rho, h11 * h5p[s - 2]) * t.R(r - s);
    }
    t.R.values.push_back(std::move(v));
  }
  t.chi = PolyGrid(qmax, rmax);
  for (int q = 0; q <= qmax; ++q)
    for (int r = 0; r <= rmax; ++r) {
      P v = t.Q(q) * t.R(r) - h5p[4] * t.Q(q - 3) * t.R(r - 1);
      for (int s = 1; s <= r; ++s) {
        int sg = sgn_of(seq(SeqName::sigma, s)), tg = sgn_of(seq(SeqName::tau, s));
        if (sg != 0) v += times(sg, h1 * h5p[s]) * t.Q(q - 1) * t.R(r - s);
        if (tg != 0) v += times(tg, h1 * h5p[s + 1]) * t.Q(q - 2) * t.R(r - s);
      }
      t.chi.at(q, r) = std::move(v);
    }
  SeqName eta = odd ? SeqName::eta_oon : SeqName::eta_eon;
  SeqName zeta = odd ? SeqName::zeta_oon : SeqName::zeta_eon;
  SeqName omega = odd ? SeqName::omega_oon : SeqName::omega_eon;
  t.psi = PolyGrid(qmax, rmax);
  for (int q = 0; q <= qmax; ++q)
    for (int r = 0; r <= rmax; ++r) {
      P v = t.chi(q, r);
      if (odd)
        v -= h5p[2] * t.chi(q, r - 2);
      else
        v -= h5p[3] * t.chi(q, r - 3);
      for (int s = 2; s <= r; ++s) {
        int e = sgn_of(seq(eta, s));
        if (e != 0) v += times(e, h1 * h5p[s - 1]) * t.chi(q, r - s);
      }
      int z = sgn_of(seq(zeta, r)), w = sgn_of(seq(omega, r));
      if (z != 0) v += times(z, h5p[r + 1]) * t.chi(q - 1, 0);
      if (w != 0) v += times(w, h5p[r + 2]) * t.chi(q - 2, 0);
      t.psi.at(q, r) = std::move(v);
    }
  return t;
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Full: return "full";
    case Mode::AB: return "ab";
    case Mode::AC: return "ac";
    case Mode::SpinAB: return "spin-ab";
    case Mode::SpinAC: return "spin-ac";
  }
  return "?";
}

Mode parse_mode(std::string_view s) {
  for (Mode m : {Mode::Full, Mode::AB, Mode::AC, Mode::SpinAB, Mode::SpinAC})
    if (mode_name(m) == s) return m;
  throw Error(ErrorCode::UnsupportedMode, "unknown mode '" + std::string(s) + "'");
}

std::vector<ParamId> mode_params(Family family, Mode mode) {
  if (family == Family::GL) {
    if (mode != Mode::Full) throw Error(ErrorCode::UnsupportedMode, "GL supports mode full only");
    return {ParamId::a(0), ParamId::a(1), ParamId::a(2), ParamId::a(3)};
  }
  if (family == Family::SOeven) throw Error(ErrorCode::UnsupportedMode, "use o-even for SO(2n) expansions");
  switch (mode) {
    case Mode::Full: return {ParamId::a(0), ParamId::a(1), ParamId::a(2)};
    case Mode::AB: return {ParamId::a(0), ParamId::a(1)};
    case Mode::AC: return {ParamId::a(0), ParamId::a(2)};
    case Mode::SpinAB:
    case Mode::SpinAC:
      if (family == Family::Sp) throw Error(ErrorCode::UnsupportedMode, "Sp(2n) has no spin systems");
      return mode == Mode::SpinAB ? std::vector<ParamId>{ParamId{1}, ParamId{3}}
                                  : std::vector<ParamId>{ParamId{1}, ParamId{5}};
  }
  return {};
}

namespace {

std::vector<ParamPoly> checked_params(Family family, Mode mode, const std::vector<ParamPoly>& a) {
  std::size_t want = mode_params(family, mode).size();
  if (family == Family::GL) {
    if (a.empty() || a.size() > 4) throw Error(ErrorCode::UnsupportedMode, "GL takes 1 to 4 parameters");
    std::vector<ParamPoly> g(a);
    g.resize(4);
    return g;
  }
  if (a.size() != want)
    throw Error(ErrorCode::UnsupportedMode, mode_name(mode) + " takes " + std::to_string(want) + " parameters");
  return a;
}

// Parameter carrying the p-fold prefactor.
const ParamPoly& prefactor_param(Family family, Mode mode, const std::vector<ParamPoly>& a) {
  if (family == Family::GL) return a[3];
  return mode == Mode::Full ? a[2] : a[1];
}

}  // namespace

PolyGrid coeff_grid(Family family, Mode mode, const std::vector<ParamPoly>& args, int qmax, int rmax) {
  if (qmax < 0 || rmax < 0) throw Error(ErrorCode::NegativeIndex, "coeff_grid ranges");
  std::vector<ParamPoly> a = checked_params(family, mode, args);
  PolyGrid grid(qmax, rmax);
  auto fill = [&](const PolyGrid& psi) {
    for (int q = 0; q <= qmax; ++q)
      for (int r = 0; r <= rmax; ++r) grid.at(q, r) = psi(q, r);
  };
  auto fill_phi = [&](const PolySeq& phi) {
    ParamPoly lead(1);
    for (int q = 0; q <= qmax; ++q, lead *= a[1])
      for (int r = 0; r <= rmax; ++r) grid.at(q, r) = lead * phi(r);
  };
  if (family == Family::GL) {
    fill(gl_coeffs({a[0], a[1], a[2], a[3]}, qmax, rmax).psi);
    return grid;
  }
  Family f = family == Family::SOeven ? Family::Oeven : family;
  switch (mode) {
    case Mode::Full: {
      Params3 b{a[0], a[1], a[2]};
      fill((f == Family::Sp       ? sp_coeffs(b, qmax, rmax)
            : f == Family::Oeven ? eon_coeffs(b, qmax, rmax)
                                 : oon_coeffs(b, qmax, rmax))
               .psi);
      break;
    }
    case Mode::AB: fill_phi(ab_coeffs(f, {a[0], a[1]}, rmax).phi); break;
    case Mode::AC: fill(ac_coeffs(f, {a[0], a[1]}, qmax, rmax).psi); break;
    case Mode::SpinAB: fill_phi(spin_ab_coeffs(f, {a[0], a[1]}, rmax).phi); break;
    case Mode::SpinAC: fill(spin_ac_coeffs(f, {a[0], a[1]}, qmax, rmax).psi); break;
  }
  return grid;
}

ParamPoly coeff(Family family, Mode mode, const std::vector<ParamPoly>& args, int p, int q, int r,
                int s) {
  if (p < 0 || q < 0 || r < 0 || s < 0) throw Error(ErrorCode::NegativeIndex, "coeff indices");
  std::vector<ParamPoly> a = checked_params(family, mode, args);
  if (family != Family::GL && s != 0) return P();
  if ((mode == Mode::AB || mode == Mode::SpinAB) && p != 0) return P();
  ParamPoly value = prefactor_param(family, mode, a).pow(p) * coeff_grid(family, mode, a, q, r)(q, r);
  return family == Family::GL ? value * a[0].pow(s) : value;
}

ParamPoly coeff_prefactor(Family family, Mode mode, const std::vector<ParamPoly>& args) {
  if (mode == Mode::AB || mode == Mode::SpinAB) return P();
  return prefactor_param(family, mode, checked_params(family, mode, args));
}

Weight coeff_label(Family family, Mode mode, int p, int q, int r, int s) {
  std::vector<int> c;
  auto push = [&](int count, int value) { c.insert(c.end(), count, value); };
  if (family == Family::GL) {
    push(p, 6);
    push(q, 4);
    push(r, 2);
    push(s, 0);
    return Weight(c);
  }
  switch (mode) {
    case Mode::Full:
    case Mode::AC:
      push(p, 4);
      push(q, 2);
      push(r, 0);
      break;
    case Mode::AB:
      push(q, 2);
      push(r, 0);
      break;
    case Mode::SpinAB:
      push(q, 3);
      push(r, 1);
      break;
    case Mode::SpinAC:
      push(p, 5);
      push(q, 3);
      push(r, 1);
      break;
  }
  return Weight(c);
}

ASpec mode_aspec(Family family, Mode mode, const std::vector<ParamPoly>& args) {
  std::vector<ParamPoly> a = checked_params(family, mode, args);
  if (family == Family::GL) return ASpec::from_values(AKind::GLPowers, a);
  ASpec spec;
  spec.kind = AKind::Symmetrized;
  switch (mode) {
    case Mode::Full: spec.entries = {{0, a[0]}, {2, a[1]}, {4, a[2]}}; break;
    case Mode::AB: spec.entries = {{0, a[0]}, {2, a[1]}}; break;
    case Mode::AC: spec.entries = {{0, a[0]}, {4, a[1]}}; break;
    case Mode::SpinAB:
      spec.kind = AKind::SpinSymmetrized;
      spec.entries = {{1, a[0]}, {3, a[1]}};
      break;
    case Mode::SpinAC:
      spec.kind = AKind::SpinSymmetrized;
      spec.entries = {{1, a[0]}, {5, a[1]}};
      break;
  }
  return spec;
}

std::vector<ParamPoly> symbolic_params(Family family, Mode mode, int gl_m) {
  std::vector<ParamPoly> out;
  std::vector<ParamId> ids = mode_params(family, mode);
  if (family == Family::GL) {
    if (gl_m < 0 || gl_m > 3) throw Error(ErrorCode::UnsupportedMode, "GL supports m <= 3");
    ids.resize(gl_m + 1);
  }
  for (ParamId id : ids) out.push_back(ParamPoly::param(id));
  return out;
}

std::vector<std::array<int, 4>> mode_indices(Family family, Mode mode, int n) {
  std::vector<std::array<int, 4>> out;
  bool gl = family == Family::GL;
  bool no_p = mode == Mode::AB || mode == Mode::SpinAB;
  for (int p = 0; p <= (no_p ? 0 : n); ++p)
    for (int q = 0; p + q <= n; ++q) {
      if (!gl) {
        out.push_back({p, q, n - p - q, 0});
        continue;
      }
      for (int r = 0; p + q + r <= n; ++r) out.push_back({p, q, r, n - p - q - r});
    }
  return out;
}

namespace {

GroupId mode_group(Family family, int n) { return GroupId{family == Family::SOeven ? Family::Oeven : family, n}; }

}  // namespace

bool verify_expansion(Family family, Mode mode, int n, int gl_m) {
  std::vector<ParamPoly> a = symbolic_params(family, mode, gl_m);
  ASpec spec = mode_aspec(family, mode, a);
  GroupId g = mode_group(family, n);
  LaurentPoly rhs(n);
  for (const auto& [p, q, r, s] : mode_indices(family, mode, n)) {
    ParamPoly c = coeff(family, mode, a, p, q, r, s);
    if (!c.is_zero()) rhs += character(g, coeff_label(family, mode, p, q, r, s)) * c;
  }
  return spec.product(n) == rhs;
}

std::string compare_with_oracle(Family family, Mode mode, int n, int gl_m, int jobs) {
  std::vector<ParamPoly> a = symbolic_params(family, mode, gl_m);
  GroupId g = mode_group(family, n);
  ExpansionTable table = expand(g, mode_aspec(family, mode, a), jobs);
  std::size_t matched = 0;
  for (const auto& [p, q, r, s] : mode_indices(family, mode, n)) {
    Weight label = coeff_label(family, mode, p, q, r, s);
    ParamPoly want = coeff(family, mode, a, p, q, r, s);
    auto it = table.entries.find(label);
    ParamPoly got = it == table.entries.end() ? ParamPoly() : it->second;
    if (it != table.entries.end()) ++matched;
    if (!(got == want))
      return g.label() + " " + mode_name(mode) + " " + label.to_string() + ": recurrence " + want.to_string() +
             ", oracle " + got.to_string();
  }
  if (matched != table.entries.size()) return g.label() + " " + mode_name(mode) + ": oracle has labels outside the mode";
  return "";
}

}  // namespace weylgf
