#include "weylgf/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "weylgf/polyring.hpp"

namespace weylgf {

std::string family_name(Family f) {
  switch (f) {
    case Family::GL: return "gl";
    case Family::Sp: return "sp";
    case Family::SOodd: return "so-odd";
    case Family::SOeven: return "so-even";
    case Family::Oeven: return "o-even";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::GL, Family::Sp, Family::SOodd, Family::SOeven, Family::Oeven})
    if (family_name(f) == s) return f;
  throw Error(ErrorCode::ParseError, "unknown group family '" + std::string(s) + "'");
}

std::string GroupId::label() const {
  int n = rank;
  switch (family) {
    case Family::GL: return "GL(" + std::to_string(n) + ")";
    case Family::Sp: return "Sp(" + std::to_string(2 * n) + ")";
    case Family::SOodd: return "SO(" + std::to_string(2 * n + 1) + ")";
    case Family::SOeven: return "SO(" + std::to_string(2 * n) + ")";
    case Family::Oeven: return "O(" + std::to_string(2 * n) + ")";
  }
  return "?";
}

Weight Weight::from_ints(std::initializer_list<int> values) {
  return from_ints(std::vector<int>(values));
}

Weight Weight::from_ints(const std::vector<int>& values) {
  Weight w;
  for (int v : values) w.comps.push_back(2 * v);
  return w;
}

Weight Weight::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](char c) { return c == '(' || c == ')' || c == ' '; }),
          s.end());
  Weight w;
  if (s.empty()) return w;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    w.comps.push_back(parse_half(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return w;
}

bool Weight::is_integral() const {
  return std::all_of(comps.begin(), comps.end(), [](int c) { return c % 2 == 0; });
}

bool Weight::is_half_odd() const {
  return std::all_of(comps.begin(), comps.end(), [](int c) { return c % 2 != 0; });
}

int Weight::size_half() const { return std::accumulate(comps.begin(), comps.end(), 0); }

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ',';
    out += format_half(comps[i]);
  }
  return out + ")";
}

Weight Weight::operator+(const Weight& other) const {
  if (rank() != other.rank()) throw Error(ErrorCode::RankMismatch, "weight sum");
  Weight out = *this;
  for (int i = 0; i < rank(); ++i) out.comps[i] += other.comps[i];
  return out;
}

Weight Weight::operator-(const Weight& other) const {
  if (rank() != other.rank()) throw Error(ErrorCode::RankMismatch, "weight difference");
  Weight out = *this;
  for (int i = 0; i < rank(); ++i) out.comps[i] -= other.comps[i];
  return out;
}

Weight SignedWeylElement::apply(const Weight& mu) const {
  Weight out = mu;
  for (std::size_t i = 0; i < perm.size(); ++i) out.comps[i] = flips[i] * mu.comps[perm[i]];
  return out;
}

Weight rho(const GroupId& g) {
  int n = g.rank;
  Weight w;
  for (int i = 1; i <= n; ++i) {
    switch (g.weyl_family()) {
      case Family::GL:
      case Family::SOeven: w.comps.push_back(2 * (n - i)); break;
      case Family::Sp: w.comps.push_back(2 * (n + 1 - i)); break;
      case Family::SOodd: w.comps.push_back(2 * n + 1 - 2 * i); break;
      case Family::Oeven: break;
    }
  }
  return w;
}

Weight delta(int n) { return Weight(std::vector<int>(n, 1)); }

int num_generators(const GroupId& g) {
  if (g.family == Family::GL) return g.rank - 1;
  if (g.weyl_family() == Family::SOeven && g.rank == 1) return 0;
  return g.rank;
}

Weight dot_reflect(const GroupId& g, int i, const Weight& kappa) {
  int n = g.rank;
  if (kappa.rank() != n) throw Error(ErrorCode::RankMismatch, "dot_reflect");
  if (i < 1 || i > num_generators(g))
    throw Error(ErrorCode::InvalidGenerator, "generator " + std::to_string(i) + " for " + g.label());
  Weight out = kappa;
  auto& c = out.comps;
  if (i < n) {
    c[i - 1] = kappa.comps[i] - 2;
    c[i] = kappa.comps[i - 1] + 2;
    return out;
  }
  switch (g.weyl_family()) {
    case Family::SOodd: c[n - 1] = -kappa.comps[n - 1] - 2; break;
    case Family::Sp: c[n - 1] = -kappa.comps[n - 1] - 4; break;
    case Family::SOeven:
      c[n - 2] = -kappa.comps[n - 1] - 2;
      c[n - 1] = -kappa.comps[n - 2] - 2;
      break;
    default: break;
  }
  return out;
}

std::size_t weyl_order(const GroupId& g) {
  std::size_t fact = 1;
  for (int i = 2; i <= g.rank; ++i) fact *= static_cast<std::size_t>(i);
  switch (g.weyl_family()) {
    case Family::GL: return fact;
    case Family::Sp:
    case Family::SOodd: return fact << g.rank;
    default: return fact << (g.rank - 1);
  }
}

namespace {

int perm_parity(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<SignedWeylElement> weyl_elements(const GroupId& g) {
  int n = g.rank;
  if (n > kMaxWeylRank)
    throw Error(ErrorCode::RankTooLarge, "Weyl group enumeration limited to rank 8");
  Family f = g.weyl_family();
  std::vector<SignedWeylElement> out;
  out.reserve(weyl_order(g));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int psign = perm_parity(perm);
    unsigned flip_masks = f == Family::GL ? 1u : (1u << n);
    for (unsigned mask = 0; mask < flip_masks; ++mask) {
      int nflips = __builtin_popcount(mask);
      if (f == Family::SOeven && nflips % 2 != 0) continue;
      SignedWeylElement w;
      w.perm = perm;
      w.flips.assign(n, 1);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) w.flips[i] = -1;
      w.sign = psign;
      if ((f == Family::Sp || f == Family::SOodd) && nflips % 2 != 0) w.sign = -psign;
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool is_dominant(const GroupId& g, const Weight& lambda) {
  const auto& c = lambda.comps;
  int n = lambda.rank();
  if (n != g.rank || !lambda.parity_consistent()) return false;
  for (int i = 0; i + 1 < n; ++i) {
    if (g.weyl_family() == Family::SOeven && i == n - 2) {
      if (c[i] < std::abs(c[i + 1])) return false;
    } else if (c[i] < c[i + 1]) {
      return false;
    }
  }
  switch (g.weyl_family()) {
    case Family::GL: return lambda.is_integral();
    case Family::Sp: return lambda.is_integral() && (n == 0 || c[n - 1] >= 0);
    case Family::SOodd: return n == 0 || c[n - 1] >= 0;
    default: return true;
  }
}

}  // namespace weylgf
