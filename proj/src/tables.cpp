#include "weylgf/tables.hpp"

#include <map>

namespace weylgf {

namespace {

using Grid = std::vector<std::vector<long>>;
using Fn = std::function<std::optional<Rational>(int, int)>;

Integer F(long k) { return seq(SeqName::F, k); }

int sign_pow(long e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

Rational ratio(const Integer& num, long den) {
  Rational out(num, Integer(den));
  out.canonicalize();
  return out;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

// Value of a base grid repeated with a sign flip per period when the sign is -1.
Fn periodic(Grid base, int sq, int sr, int r0 = 0) {
  return [base = std::move(base), sq, sr, r0](int i, int r) -> std::optional<Rational> {
    int pq = static_cast<int>(base.size());
    int pr = static_cast<int>(base[0].size());
    int j = r - r0;
    long v = base[i % pq][j % pr];
    if (sq < 0 && (i / pq) % 2) v = -v;
    if (sr < 0 && (j / pr) % 2) v = -v;
    return Rational(v);
  };
}

// Column periodic in its single index.
Fn column(std::vector<long> values, int sign = 1) {
  Grid g;
  for (long v : values) g.push_back({v});
  return periodic(std::move(g), sign, 1);
}

// Rows indexed by k with q = 2k; odd q vanish.
Fn by_k(Fn f) {
  return [f = std::move(f)](int q, int r) -> std::optional<Rational> {
    if (q % 2) return Rational(0);
    return f(q / 2, r);
  };
}

Fn split(Fn col0, Fn block) {
  return [col0 = std::move(col0), block = std::move(block)](int q, int r) {
    return r == 0 ? col0(q, 0) : block(q, r);
  };
}

// phi_r for r >= 1 after phi_0 = 1; q is the a1 power and carries no information.
Fn phi(std::function<Rational(int)> f) {
  return [f = std::move(f)](int, int r) -> std::optional<Rational> {
    return r == 0 ? Rational(1) : f(r);
  };
}

std::function<Rational(int)> phi_mod(std::vector<long> values) {
  return [values = std::move(values)](int r) {
    return Rational(values[r % static_cast<int>(values.size())]);
  };
}

PaperRow row(Family f, Mode m, std::vector<long> a, int qmax, int rmax, Fn expected) {
  PaperRow out;
  out.family = f;
  out.mode = m;
  out.a = std::move(a);
  out.qmax = qmax;
  out.rmax = rmax;
  out.expected = std::move(expected);
  return out;
}

// Periodic row in (q,r): two full periods in each index.
PaperRow periodic_row(Family f, Mode m, std::vector<long> a, Grid base, int sq, int sr) {
  int pq = static_cast<int>(base.size()), pr = static_cast<int>(base[0].size());
  return row(f, m, std::move(a), 2 * pq - 1, 2 * pr - 1, periodic(std::move(base), sq, sr));
}

// Periodic row in (k,r) with q = 2k.
PaperRow periodic_k_row(Family f, Mode m, std::vector<long> a, Grid base, int sk, int sr) {
  int pk = static_cast<int>(base.size()), pr = static_cast<int>(base[0].size());
  return row(f, m, std::move(a), 4 * pk - 1, 2 * pr - 1, by_k(periodic(std::move(base), sk, sr)));
}

constexpr int kClosedMax = 12;

PaperTable phi_values() {
  PaperTable t{"phi-values", "phi_r(a0,1) for Sp(2n), SO(2n+1), O(2n)", {}};
  auto add = [&](Family f, long a0, std::function<Rational(int)> g) {
    t.rows.push_back(row(f, Mode::AB, {a0, 1}, 0, 12, phi(std::move(g))));
  };
  const Family sp = Family::Sp, oo = Family::SOodd, eo = Family::Oeven;
  add(sp, 0, phi_mod({1, 0, -1, 0}));
  add(sp, 1, phi_mod({1, 1, 0, -1, -1, 0}));
  add(sp, -1, phi_mod({1, 0, -1}));
  t.rows.back().corrected = phi(phi_mod({1, -1, 0}));
  t.rows.back().erratum = "values for r = 1 and r = 2 mod 3 are interchanged; 1/(1+t+t^2) gives 1,-1,0";
  add(sp, 2, [](int r) { return Rational(r + 1); });
  add(sp, -2, [](int r) { return Rational(sign_pow(r) * (r + 1)); });
  add(sp, 3, [](int r) { return Rational(F(2 * r + 2)); });
  add(sp, -3, [](int r) { return Rational(sign_pow(r) * F(2 * r + 2)); });

  add(oo, 0, phi_mod({1, -1, -1, 1}));
  add(oo, 1, phi_mod({1, 0, -1, -1, 0, 1}));
  add(oo, -1, phi_mod({1, -2, 1}));
  add(oo, 2, [](int) { return Rational(1); });
  add(oo, -2, [](int r) { return Rational(sign_pow(r) * (2 * r + 1)); });
  add(oo, 3, [](int r) { return Rational(F(2 * r + 1)); });
  add(oo, -3, [](int r) { return Rational(sign_pow(r) * (F(2 * r + 2) + F(2 * r))); });

  add(eo, 0, phi_mod({2, 0, -2, 0}));
  add(eo, 1, phi_mod({2, 1, -1, -2, -1, 1}));
  add(eo, -1, phi_mod({2, -1, -1}));
  add(eo, 2, [](int) { return Rational(2); });
  add(eo, -2, [](int r) { return Rational(sign_pow(r) * 2); });
  add(eo, 3, [](int r) { return Rational(F(2 * r + 2) - F(2 * r - 2)); });
  add(eo, -3, [](int r) { return Rational(sign_pow(r) * (F(2 * r + 2) - F(2 * r - 2))); });
  return t;
}

PaperTable spn_psi_a01() {
  PaperTable t{"spn-psi-A01", "Sp(2n) psi_{2k,r}(a0,0,1)", {}};
  const Family f = Family::Sp;
  const Mode m = Mode::AC;
  t.rows.push_back(periodic_k_row(f, m, {0, 1},
                                  {{1, -1, 0, 0}, {0, 1, -1, 0}, {-1, 1, 0, 0}, {0, -1, 1, 0}}, 1, 1));
  t.rows.push_back(periodic_k_row(f, m, {1, 1}, {{1, 0, 0}, {-1, 1, 0}, {0, -1, 0}}, 1, -1));
  t.rows.push_back(periodic_k_row(
      f, m, {-1, 1}, {{1, -2, 2, -1, 0, 0}, {1, -1, 0, 1, -1, 0}, {0, 1, -2, 2, -1, 0}}, -1, 1));
  t.rows.push_back(row(f, m, {2, 1}, kClosedMax, kClosedMax, by_k([](int k, int r) -> std::optional<Rational> {
                         if (r % 2 == 0) return ratio(sign_pow(k) * Integer(2 * k + r + 2), 2);
                         return ratio(sign_pow(k) * Integer(r + 1), 2);
                       })));
  t.rows.push_back(row(f, m, {-2, 1}, kClosedMax, kClosedMax, by_k([](int k, int r) -> std::optional<Rational> {
                         return ratio(sign_pow(r) * Integer(r + 1) * (2 * k + r + 2), 2);
                       })));
  t.rows.push_back(row(f, m, {3, 1}, kClosedMax, kClosedMax, by_k([](int k, int r) -> std::optional<Rational> {
                         return Rational(sign_pow(k) * F(r + 1) * F(2 * k + r + 2));
                       })));
  t.rows.push_back(row(f, m, {-3, 1}, kClosedMax, kClosedMax, by_k([](int k, int r) -> std::optional<Rational> {
                         return Rational(sign_pow(r) * (F(2 * k + 2 * r + 3) - F(2 * k + 1)));
                       })));
  return t;
}

PaperTable spn_psi_a11() {
  PaperTable t{"spn-psi-A11", "Sp(2n) psi_{q,r}(a0,1,1)", {}};
  const Family f = Family::Sp;
  const Mode m = Mode::Full;
  t.rows.push_back(row(f, m, {0, 1, 1}, kClosedMax, kClosedMax, [](int q, int r) -> std::optional<Rational> {
    switch (3 * mod(q, 3) + mod(r, 3)) {
      case 0: return ratio(Integer(q + 2 * r + 3), 3);
      case 1: return ratio(Integer(-(q + r + 2)), 3);
      case 2: return ratio(Integer(-(r + 1)), 3);
      case 3: return ratio(Integer(-(q + r + 2)), 3);
      case 4: return ratio(Integer(-(q + 2 * r + 3)), 3);
      case 5: return ratio(Integer(r + 1), 3);
      case 6: return ratio(Integer(q + 1), 3);
      case 7: return ratio(Integer(-(q + 1)), 3);
      default: return Rational(0);
    }
  }));
  {
    PaperRow& r0 = t.rows.back();
    r0.corrected = [printed = r0.expected](int q, int r) -> std::optional<Rational> {
      if (mod(q, 3) == 1 && mod(r, 3) == 0) return ratio(Integer(q + r + 2), 3);
      return printed(q, r);
    };
    r0.erratum = "entry q = 1, r = 0 mod 3 has the wrong sign; it is (q+r+2)/3";
  }
  t.rows.push_back(periodic_row(f, m, {1, 1, 1},
                                {{1, 0, -1, 0, 0},
                                 {1, -1, 0, 0, 0},
                                 {0, 0, 1, -1, 0},
                                 {0, 1, 0, -1, 0},
                                 {0, 0, 0, 0, 0}},
                                -1, 1));
  t.rows.push_back(periodic_row(f, m, {2, 1, 1},
                                {{1, 1, 1, 1, 0, 0},
                                 {1, 0, 1, 0, 0, 0},
                                 {-1, -1, 0, -1, 1, 0},
                                 {-2, 0, -1, 0, 1, 0},
                                 {0, 1, -1, 1, -1, 0},
                                 {2, 0, 0, 0, -2, 0},
                                 {1, -1, 1, -1, 0, 0},
                                 {-1, 0, 1, 0, 2, 0},
                                 {-1, 1, 0, 1, 1, 0},
                                 {0, 0, -1, 0, -1, 0},
                                 {0, -1, -1, -1, -1, 0},
                                 {0, 0, 0, 0, 0, 0}},
                                1, -1));
  return t;
}

PaperTable oon_psi_a01() {
  PaperTable t{"oon-psi-A01", "SO(2n+1) psi_{q,r}(a0,0,1)", {}};
  const Family f = Family::SOodd;
  const Mode m = Mode::AC;
  t.rows.push_back(periodic_row(f, m, {0, 1},
                                {{1, 0, -1, 0}, {-1, 1, -1, 1}, {0, 1, 0, -1}, {0, 0, 0, 0}}, -1, 1));
  t.rows.push_back(periodic_row(f, m, {1, 1},
                                {{1, 1, 0}, {-1, 1, -1}, {-1, 0, 1}, {1, -1, 1}, {0, -1, -1}, {0, 0, 0}},
                                1, -1));
  t.rows.push_back(periodic_row(f, m, {-1, 1},
                                {{1, -1, 0, 1, -1, 0},
                                 {-1, 1, -1, 1, -1, 1},
                                 {1, 0, -1, 1, 0, -1},
                                 {-1, 1, -1, 1, -1, 1},
                                 {0, 1, -1, 0, 1, -1},
                                 {0, 0, 0, 0, 0, 0}},
                                -1, 1));
  t.rows.push_back(row(f, m, {2, 1}, kClosedMax, kClosedMax, [](int q, int r) -> std::optional<Rational> {
    if (q % 2 == 0) return ratio(sign_pow(q / 2) * Integer(q + 2 * r + 2), 2);
    return ratio(sign_pow((q + 2 * r + 1) / 2) * Integer(q + 1), 2);
  }));
  t.rows.push_back(row(f, m, {-2, 1}, kClosedMax, kClosedMax, [](int q, int r) -> std::optional<Rational> {
    if (q % 2 == 0) return ratio(sign_pow(r) * Integer(q + 2 * r + 2), 2);
    return ratio(sign_pow(r + 1) * Integer(q + 1), 2);
  }));
  t.rows.push_back(row(f, m, {3, 1}, kClosedMax, kClosedMax, [](int q, int r) -> std::optional<Rational> {
    if (q % 2 == 0) return Rational(sign_pow(q / 2) * F(q + 2 * r + 2));
    return Rational(sign_pow((q + 2 * r + 1) / 2) * F(q + 1));
  }));
  t.rows.push_back(row(f, m, {-3, 1}, kClosedMax, kClosedMax, [](int q, int r) -> std::optional<Rational> {
    if (q % 2 == 0) return Rational(sign_pow(r) * F(q + 2 * r + 2));
    return Rational(sign_pow(r + 1) * F(q + 1));
  }));
  return t;
}

PaperTable oon_psi_a11() {
  PaperTable t{"oon-psi-A11", "SO(2n+1) psi_{q,r}(a0,1,1)", {}};
  const Family f = Family::SOodd;
  const Mode m = Mode::Full;
  t.rows.push_back(periodic_row(f, m, {0, 1, 1}, {{1, -1, 0}, {0, -1, 1}, {0, 0, 0}}, 1, 1));
  t.rows.push_back(periodic_row(f, m, {1, 1, 1},
                                {{1, 0, 0, -1, 0},
                                 {0, 0, 0, -1, 1},
                                 {-1, 1, 0, 0, 0},
                                 {0, 1, 0, 0, -1},
                                 {0, 0, 0, 0, 0}},
                                -1, 1));
  t.rows.push_back(periodic_row(f, m, {2, 1, 1},
                                {{1, 1, 2, 1, 1, 0},
                                 {0, 1, 1, 0, 1, -1},
                                 {-2, 0, -2, 0, 0, 0},
                                 {-1, -1, -2, 1, -1, 2},
                                 {2, -1, 1, 0, -1, 1},
                                 {2, 0, 2, -2, 0, -2},
                                 {-1, 1, 0, -1, 1, -2},
                                 {-2, 1, -1, 2, 1, 1},
                                 {0, 0, 0, 2, 0, 2},
                                 {1, -1, 0, -1, -1, 0},
                                 {0, -1, -1, -2, -1, -1},
                                 {0, 0, 0, 0, 0, 0}},
                                1, -1));
  return t;
}

PaperTable oon_psi_a_11() {
  PaperTable t{"oon-psi-A-11", "SO(2n+1) psi_{q,r}(a0,-1,1)", {}};
  const Family f = Family::SOodd;
  const Mode m = Mode::Full;
  t.rows.push_back(row(f, m, {0, -1, 1}, kClosedMax, kClosedMax, [](int q, int r) -> std::optional<Rational> {
    switch (3 * mod(q, 3) + mod(r, 3)) {
      case 0: return ratio(Integer(2 * q + 2 * r + 3), 3);
      case 1: return ratio(Integer(2 * r + 1), 3);
      case 2: return ratio(Integer(2 * q + 4 * r + 4), 3);
      case 3: return ratio(Integer(-(2 * q + 4 * r + 3)), 3);
      case 4: return ratio(Integer(-(2 * r + 1)), 3);
      case 5: return ratio(Integer(-(2 * q + 2 * r + 3)), 3);
      case 6: return ratio(Integer(2 * q + 2), 3);
      case 7: return Rational(0);
      default: return ratio(Integer(2 * q + 2), 3);
    }
  }));
  t.rows.back().corrected = [](int q, int r) -> std::optional<Rational> {
    Integer v;
    switch (3 * mod(q, 3) + mod(r, 3)) {
      case 0: v = 2 * q + 2 * r + 3; break;
      case 1: v = 2 * r + 1; break;
      case 2: v = -(2 * q + 4 * r + 4); break;
      case 3: v = 2 * q + 4 * r + 4; break;
      case 4: v = -(2 * r + 1); break;
      case 5: v = -(2 * q + 2 * r + 3); break;
      case 6: v = 2 * q + 2; break;
      case 7: v = 0; break;
      default: v = -(2 * q + 2); break;
    }
    return ratio(sign_pow(q) * v, 3);
  };
  t.rows.back().erratum =
      "printed closed form fails (q = 1, r = 0 mod 3 is not even integral); the values are (-1)^q times "
      "[(2q+2r+3), (2r+1), -(2q+4r+4); (2q+4r+4), -(2r+1), -(2q+2r+3); (2q+2), 0, -(2q+2)]/3";
  t.rows.push_back(periodic_row(f, m, {1, -1, 1},
                                {{1, 2, -2, -1, 0},
                                 {-2, 0, 2, -1, 1},
                                 {1, -1, 2, 0, -2},
                                 {0, -1, -2, 2, 1},
                                 {0, 0, 0, 0, 0}},
                                1, 1));
  t.rows.push_back(periodic_row(f, m, {2, -1, 1},
                                {{1, 3, 2, 3, 1, 0},
                                 {-2, -1, -1, -2, 1, -1},
                                 {0, -4, 0, -2, 0, 2},
                                 {3, 3, 0, 3, -3, 0},
                                 {-2, 3, -1, 0, 1, -3},
                                 {-2, -4, 2, -2, 4, 2},
                                 {3, -1, 0, 1, -3, 2},
                                 {0, 3, -3, 0, -3, -3},
                                 {-2, 0, 2, 0, 4, 0},
                                 {1, -1, 2, 1, 1, 2},
                                 {0, -3, -2, -2, -3, -1},
                                 {0, 0, 0, 0, 0, 0}},
                                1, -1));
  {
    PaperRow& r2 = t.rows.back();
    r2.corrected = [printed = r2.expected](int q, int r) -> std::optional<Rational> {
      int j = r % 6;
      if (q % 12 == 10 && (j == 1 || j == 2)) return Rational(sign_pow(r / 6) * (j == 1 ? -1 : -3));
      return printed(q, r);
    };
    r2.erratum = "row q = 10 prints -3,-2 at r = 1,2; the values are -1,-3";
  }
  return t;
}

// Row with a separate r = 0 column (period pc, sign sc) and an r >= 1 block.
PaperRow split_row(Family f, Mode m, std::vector<long> a, std::vector<long> col0, int sc, Grid block,
                   int sq, int sr, bool k_indexed) {
  int pc = static_cast<int>(col0.size());
  int pq = static_cast<int>(block.size()), pr = static_cast<int>(block[0].size());
  int imax = 2 * std::max(pc, pq) - 1;
  Fn fn = split(column(std::move(col0), sc), periodic(std::move(block), sq, sr, 1));
  if (k_indexed) return row(f, m, std::move(a), 2 * imax + 1, 2 * pr, by_k(std::move(fn)));
  return row(f, m, std::move(a), imax, 2 * pr, std::move(fn));
}

PaperTable eon_psi_a01() {
  PaperTable t{"eon-psi-A01", "O(2n) psi_{2k,r}(a0,0,1)", {}};
  const Family f = Family::Oeven;
  const Mode m = Mode::AC;
  t.rows.push_back(split_row(f, m, {0, 1}, {1, -1, -1, 1}, 1, {{0, 0, -2, 2}, {2, 0, 0, -2}}, -1, 1, true));
  t.rows.push_back(split_row(f, m, {1, 1}, {1, -2, 1}, 1, {{1, 2, -2}, {1, -1, 4}, {-2, -1, -2}}, 1, -1, true));
  t.rows.push_back(split_row(f, m, {-1, 1}, {1, 0, -1}, -1,
                             {{-1, 0, 0, 1, -2, 2}, {1, -1, 0, 1, -1, 0}, {2, -1, 0, 0, 1, -2}}, -1, 1,
                             true));
  t.rows.push_back(row(f, m, {2, 1}, kClosedMax, kClosedMax, by_k([](int k, int r) -> std::optional<Rational> {
                         if (r == 0) return Rational(sign_pow(k) * (2 * k + 1));
                         if (r % 2 == 0) return Rational(sign_pow(k) * (4 * k + 2 * r + 2));
                         return Rational(sign_pow(k) * 2 * r);
                       })));
  t.rows.push_back(row(f, m, {-2, 1}, kClosedMax, kClosedMax, by_k([](int, int r) -> std::optional<Rational> {
                         return Rational(r == 0 ? 1 : sign_pow(r) * 2);
                       })));
  t.rows.push_back(row(f, m, {3, 1}, kClosedMax, kClosedMax, by_k([](int k, int r) -> std::optional<Rational> {
                         Integer col = F(2 * k + 2) + F(2 * k);
                         if (r == 0) return Rational(sign_pow(k) * col);
                         return Rational(sign_pow(k) * (F(2 * k + 2 * r + 2) + F(2 * k + 2 * r)) +
                                         sign_pow(k + r) * col);
                       })));
  t.rows.push_back(row(f, m, {-3, 1}, kClosedMax, kClosedMax, by_k([](int k, int r) -> std::optional<Rational> {
                         if (r == 0) return Rational(F(2 * k + 1));
                         return Rational(sign_pow(r) * (F(2 * k + 2 * r + 1) + F(2 * k + 1)));
                       })));
  return t;
}

PaperTable eon_psi_a11() {
  PaperTable t{"eon-psi-A11", "O(2n) psi_{q,r}(a0,1,1)", {}};
  const Family f = Family::Oeven;
  const Mode m = Mode::Full;
  t.rows.push_back(split_row(f, m, {0, 1, 1}, {1, 1, 0}, 1, {{0, -2, 2}, {-2, 0, 2}, {0, 0, 0}}, 1, 1, false));
  t.rows.push_back(split_row(f, m, {1, 1, 1}, {1, 1, -1, -1, 0}, 1,
                             {{1, 0, -1, -2, 2},
                              {-1, 1, -2, 0, 2},
                              {0, 2, -1, 1, -2},
                              {2, 1, 0, -1, -2},
                              {0, 0, 0, 0, 0}},
                             -1, 1, false));
  {
    PaperRow& r1 = t.rows.back();
    Fn col = column({1, 1, -1, -1, 0}, -1);
    r1.corrected = [col, printed = r1.expected](int q, int r) { return r == 0 ? col(q, 0) : printed(q, r); };
    r1.erratum = "the r = 0 column satisfies psi_{q+5,0} = -psi_{q,0}, not psi_{q+5,0} = psi_{q,0}";
  }
  t.rows.push_back(split_row(f, m, {2, 1, 1}, {1, 1, -2, -3, 1, 4, 1, -3, -2, 1, 1, 0}, 1,
                             {{2, 4, 4, 2, 2, -2},
                              {0, 4, 0, 2, 0, -2},
                              {-2, -2, -4, 2, -2, 4},
                              {0, -6, 0, 0, 0, 6},
                              {2, -2, 4, -4, 2, -2},
                              {0, 4, 0, -4, 0, -8},
                              {-2, 4, -4, 2, -2, -2},
                              {0, 0, 0, 6, 0, 6},
                              {2, -2, 4, 2, 2, 4},
                              {0, -2, 0, -4, 0, -2},
                              {-2, -2, -4, -4, -2, -2},
                              {0, 0, 0, 0, 0, 0}},
                             1, -1, false));
  return t;
}

PaperTable gln_tau() {
  PaperTable t{"gln-tau", "GL(n) tau_{q,r} for a = (1,1,1,1)", {}};
  PaperRow r = row(Family::GL, Mode::Full, {1, 1, 1, 1}, 15, 15,
                   periodic({{1, 1, 0, 0}, {1, 0, -1, 0}, {0, -1, -1, 0}, {0, 0, 0, 0}}, 1, 1));
  t.rows.push_back(std::move(r));
  return t;
}

PaperTable spn_psi3() {
  PaperTable t{"spn-psi3", "Sp(2n) psi_{k,r} for a = (1,0,1)", {}};
  t.rows.push_back(row(Family::Sp, Mode::Full, {1, 0, 1}, 19, 17,
                       by_k(periodic({{1, 0, 0, -1, 0, 0}, {-1, 1, 0, 1, -1, 0}, {0, -1, 0, 0, 1, 0}}, 1, 1))));
  return t;
}

const std::map<std::string, PaperTable, std::less<>>& registry() {
  static const std::map<std::string, PaperTable, std::less<>> tables = [] {
    std::map<std::string, PaperTable, std::less<>> m;
    for (PaperTable t : {gln_tau(), spn_psi3(), phi_values(), spn_psi_a01(), spn_psi_a11(), oon_psi_a01(),
                         oon_psi_a11(), oon_psi_a_11(), eon_psi_a01(), eon_psi_a11()})
      m.emplace(t.name, std::move(t));
    return m;
  }();
  return tables;
}

}  // namespace

std::string PaperRow::a_label() const {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out + ")";
}

std::vector<std::string> paper_table_names() {
  return {"gln-tau",     "spn-psi3",    "phi-values",   "spn-psi-A01", "spn-psi-A11",
          "oon-psi-A01", "oon-psi-A11", "oon-psi-A-11", "eon-psi-A01", "eon-psi-A11"};
}

const PaperTable& paper_table(std::string_view name) {
  const auto& tables = registry();
  auto it = tables.find(name);
  if (it == tables.end()) throw Error(ErrorCode::ParseError, "unknown paper table '" + std::string(name) + "'");
  return it->second;
}

RowCheck check_row(const std::string& table, const PaperRow& row) {
  RowCheck out;
  out.table = table;
  out.row = row;
  std::vector<ParamPoly> a;
  for (long v : row.a) a.emplace_back(v);
  PolyGrid grid = coeff_grid(row.family, row.mode, a, row.qmax, row.rmax);
  for (int q = 0; q <= row.qmax; ++q) {
    for (int r = row.rmin; r <= row.rmax; ++r) {
      std::optional<Rational> want = row.value(q, r);
      if (!want) continue;
      ++out.cells;
      const ParamPoly& got = grid(q, r);
      auto matches = [&](const Rational& v) { return got.is_constant() && Rational(got.constant_term()) == v; };
      if (!matches(*want) && !out.witness)
        out.witness = CellMismatch{q, r, format_rational(*want), got.to_string()};
      std::optional<Rational> printed = row.expected(q, r);
      if (printed && !matches(*printed)) {
        ++out.printed_mismatches;
        if (!out.printed_witness)
          out.printed_witness = CellMismatch{q, r, format_rational(*printed), got.to_string()};
      }
    }
  }
  return out;
}

std::vector<RowCheck> check_table(const PaperTable& table) {
  std::vector<RowCheck> out;
  for (const PaperRow& row : table.rows) out.push_back(check_row(table.name, row));
  return out;
}

}  // namespace weylgf
