#include "weylgf/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <thread>

#include "weylgf/charformula.hpp"
#include "weylgf/straighten.hpp"

namespace weylgf {

ASpec ASpec::symbolic(AKind kind, int m) {
  ASpec spec;
  spec.kind = kind;
  for (int k = 0; k <= m; ++k) {
    int h = kind == AKind::SpinSymmetrized ? 2 * k + 1 : 2 * k;
    spec.entries.emplace(h, ParamPoly::param(ParamId{h}));
  }
  return spec;
}

ASpec ASpec::from_values(AKind kind, const std::vector<ParamPoly>& coeffs) {
  ASpec spec;
  spec.kind = kind;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    int h = kind == AKind::SpinSymmetrized ? 2 * static_cast<int>(k) + 1 : 2 * static_cast<int>(k);
    spec.entries.emplace(h, coeffs[k]);
  }
  return spec;
}

std::vector<std::pair<int, ParamPoly>> ASpec::choices() const {
  std::vector<std::pair<int, ParamPoly>> out;
  for (const auto& [h, c] : entries) {
    if (c.is_zero()) continue;
    bool odd = h % 2 != 0;
    if (h < 0 || odd != (kind == AKind::SpinSymmetrized))
      throw Error(ErrorCode::UnsupportedMode, "power " + format_half(h) + " not allowed in this spec");
    out.emplace_back(h, c);
    if (kind != AKind::GLPowers && h != 0) out.emplace_back(-h, c);
  }
  return out;
}

LaurentPoly ASpec::factor(int rank, int i) const {
  LaurentPoly f(rank);
  for (const auto& [h, c] : choices()) f += LaurentPoly::variable(rank, i, h) * c;
  return f;
}

LaurentPoly ASpec::product(int n) const {
  LaurentPoly out = LaurentPoly::constant(n, ParamPoly(1));
  for (int i = 0; i < n; ++i) out *= factor(n, i);
  return out;
}

namespace {

void check_kind(const GroupId& group, AKind kind) {
  Family f = group.family;
  bool ok = false;
  switch (kind) {
    case AKind::GLPowers: ok = f == Family::GL; break;
    case AKind::Symmetrized: ok = f != Family::GL; break;
    case AKind::SpinSymmetrized: ok = f == Family::SOodd || f == Family::SOeven || f == Family::Oeven; break;
  }
  if (!ok) throw Error(ErrorCode::UnsupportedMode, "spec kind does not match " + group.label());
}

GroupId straighten_group(const GroupId& g) {
  return GroupId{g.weyl_family(), g.rank};
}

// Merges SO(2n) entries for lambda_+ and lambda_- into one O(2n) entry.
template <class V>
std::map<Weight, V> fold_o_even(const std::map<Weight, V>& raw) {
  std::map<Weight, V> out;
  for (const auto& [lambda, value] : raw) {
    if (lambda.comps.empty() || lambda.comps.back() == 0) {
      out.emplace(lambda, value);
      continue;
    }
    Weight partner = lambda;
    partner.comps.back() = -partner.comps.back();
    auto it = raw.find(partner);
    if (it == raw.end() || !(it->second == value))
      throw Error(ErrorCode::FoldingMismatch, "entries for " + lambda.to_string() + " and " +
                                                  partner.to_string() + " differ");
    if (lambda.comps.back() > 0) out.emplace(lambda, value);
  }
  return out;
}

// Signed counts keyed by (lambda, multiplicity of each choice).
using Counts = std::map<Weight, std::map<std::vector<unsigned char>, long>>;

void enumerate_range(const GroupId& sg, const std::vector<int>& exps, int n, long begin, long end,
                     Counts& counts) {
  const long c = static_cast<long>(exps.size());
  std::vector<long> digits(n);
  long idx = begin;
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = idx % c;
    idx /= c;
  }
  Weight kappa{std::vector<int>(n)};
  std::vector<unsigned char> mult(c);
  for (long t = begin; t < end; ++t) {
    std::fill(mult.begin(), mult.end(), 0);
    for (int i = 0; i < n; ++i) {
      kappa.comps[i] = exps[digits[i]];
      ++mult[digits[i]];
    }
    StraightenResult s = straighten(sg, kappa);
    if (!s.zero) counts[s.lambda][mult] += s.sign;
    for (int i = n - 1; i >= 0; --i) {
      if (++digits[i] < c) break;
      digits[i] = 0;
    }
  }
}

}  // namespace

ExpansionTable expand(const GroupId& group, const ASpec& aspec, int jobs) {
  check_kind(group, aspec.kind);
  int n = group.rank;
  auto choices = aspec.choices();
  ExpansionTable table{group, n, {}};
  if (choices.empty()) return table;
  double total = std::pow(static_cast<double>(choices.size()), n);
  if (total > kMaxMonomials)
    throw Error(ErrorCode::TooManyMonomials, std::to_string(static_cast<long long>(total)) + " monomials");

  std::vector<int> exps;
  for (const auto& ch : choices) exps.push_back(ch.first);
  GroupId sg = straighten_group(group);
  long count = static_cast<long>(total);
  jobs = std::max(1, std::min<int>(jobs, 64));
  std::vector<Counts> partial(jobs);
  if (jobs == 1) {
    enumerate_range(sg, exps, n, 0, count, partial[0]);
  } else {
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      long b = count * j / jobs, e = count * (j + 1) / jobs;
      workers.emplace_back([&, j, b, e] { enumerate_range(sg, exps, n, b, e, partial[j]); });
    }
    for (auto& w : workers) w.join();
  }
  for (int j = 1; j < jobs; ++j)
    for (auto& [lambda, byMult] : partial[j])
      for (auto& [mult, s] : byMult) partial[0][lambda][mult] += s;

  // powers[c][k] = coeff_c^k
  std::vector<std::vector<ParamPoly>> powers(choices.size());
  for (std::size_t c = 0; c < choices.size(); ++c) {
    powers[c].push_back(ParamPoly(1));
    for (int k = 1; k <= n; ++k) powers[c].push_back(powers[c].back() * choices[c].second);
  }
  std::map<Weight, ParamPoly> raw;
  for (const auto& [lambda, byMult] : partial[0]) {
    ParamPoly value;
    for (const auto& [mult, s] : byMult) {
      if (s == 0) continue;
      ParamPoly term(s);
      for (std::size_t c = 0; c < mult.size(); ++c)
        if (mult[c]) term *= powers[c][mult[c]];
      value += term;
    }
    if (!value.is_zero()) raw.emplace(lambda, std::move(value));
  }
  table.entries = group.family == Family::Oeven ? fold_o_even(raw) : std::move(raw);
  return table;
}

ExpansionTable substitute(const ExpansionTable& table, const std::map<ParamId, ParamPoly>& values) {
  ExpansionTable out{table.group, table.n, {}};
  for (const auto& [lambda, c] : table.entries) {
    ParamPoly v = c.substitute(values);
    if (!v.is_zero()) out.entries.emplace(lambda, std::move(v));
  }
  return out;
}

LaurentPoly expansion_rhs(const ExpansionTable& table) {
  LaurentPoly rhs(table.n);
  for (const auto& [lambda, c] : table.entries) rhs += character(table.group, lambda) * c;
  return rhs;
}

bool verify_identity(const GroupId& group, const ASpec& aspec,
                     const std::map<ParamId, ParamPoly>& param_vals) {
  ExpansionTable table = substitute(expand(group, aspec), param_vals);
  LaurentPoly lhs = aspec.product(group.rank).substitute(param_vals);
  return lhs == expansion_rhs(table);
}

namespace {

// Sum over permutations of sgn * prod m[i][pi(i)], by dynamic programming over used columns.
ParamPoly sparse_det(const std::vector<std::vector<ParamPoly>>& m) {
  int n = static_cast<int>(m.size());
  std::map<std::uint64_t, ParamPoly> states{{0, ParamPoly(1)}};
  for (int i = 0; i < n; ++i) {
    std::map<std::uint64_t, ParamPoly> next;
    for (const auto& [used, value] : states) {
      for (int j = 0; j < n; ++j) {
        if ((used >> j) & 1 || m[i][j].is_zero()) continue;
        int above = std::popcount(used >> (j + 1));
        ParamPoly term = value * m[i][j];
        auto& slot = next[used | (std::uint64_t{1} << j)];
        if (above % 2) slot -= term;
        else slot += term;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    states = std::move(next);
  }
  auto it = states.find(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  return it == states.end() ? ParamPoly() : it->second;
}

}  // namespace

ParamPoly coefficient(const GroupId& group, const ASpec& aspec, const Weight& lambda) {
  check_kind(group, aspec.kind);
  int n = group.rank;
  if (lambda.rank() != n) throw Error(ErrorCode::RankMismatch, "coefficient");
  if (n > 63) throw Error(ErrorCode::RankTooLarge, "coefficient limited to rank 63");
  Family f = group.weyl_family();
  auto at = [&](int h) -> ParamPoly {
    if (aspec.kind != AKind::GLPowers) h = std::abs(h);
    auto it = aspec.entries.find(h);
    return it == aspec.entries.end() ? ParamPoly() : it->second;
  };
  Weight r = rho(GroupId{f, n});
  Weight mu = lambda + r;
  using Matrix = std::vector<std::vector<ParamPoly>>;
  Matrix minus(n, std::vector<ParamPoly>(n)), plus(n, std::vector<ParamPoly>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ParamPoly lo = at(mu.comps[i] - r.comps[j]);
      if (f == Family::GL) {
        minus[i][j] = lo;
        continue;
      }
      ParamPoly hi = at(mu.comps[i] + r.comps[j]);
      minus[i][j] = lo - hi;
      plus[i][j] = lo + hi;
    }
  }
  if (f != Family::SOeven) return sparse_det(minus);
  return (sparse_det(plus) + sparse_det(minus)).exact_div(ParamPoly(2));
}

std::map<Weight, LaurentPoly> decompose(const GroupId& group, const LaurentPoly& f) {
  int n = group.rank;
  int rest = f.rank() - n;
  if (rest < 0) throw Error(ErrorCode::RankMismatch, "decompose");
  GroupId sg = straighten_group(group);
  std::map<Weight, LaurentPoly> raw;
  for (const auto& [e, c] : f.terms()) {
    Weight kappa(std::vector<int>(e.begin(), e.begin() + n));
    StraightenResult s = straighten(sg, kappa);
    if (s.zero) continue;
    Exponent tail(e.begin() + n, e.end());
    auto [it, inserted] = raw.try_emplace(s.lambda, LaurentPoly(rest));
    it->second.add_term(tail, s.sign > 0 ? c : -c);
  }
  for (auto it = raw.begin(); it != raw.end();)
    it = it->second.is_zero() ? raw.erase(it) : std::next(it);
  return group.family == Family::Oeven ? fold_o_even(raw) : raw;
}

}  // namespace weylgf
