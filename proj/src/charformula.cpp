#include "weylgf/charformula.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace weylgf {

namespace {

using CacheKey = std::tuple<Family, int, bool, std::vector<int>>;

struct CharacterCache {
  std::mutex mutex;
  std::map<CacheKey, std::shared_ptr<const LaurentPoly>> entries;
};

CharacterCache& cache() {
  static CharacterCache instance;
  return instance;
}

std::shared_ptr<const LaurentPoly> lookup(const CacheKey& key) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  auto it = c.entries.find(key);
  return it == c.entries.end() ? nullptr : it->second;
}

std::shared_ptr<const LaurentPoly> insert(const CacheKey& key, LaurentPoly value) {
  auto& c = cache();
  auto ptr = std::make_shared<const LaurentPoly>(std::move(value));
  std::lock_guard<std::mutex> lock(c.mutex);
  return c.entries.try_emplace(key, ptr).first->second;
}

const LaurentPoly& weyl_denominator(const GroupId& g) {
  CacheKey key{g.weyl_family(), g.rank, true, {}};
  if (auto hit = lookup(key)) return *hit;
  return *insert(key, alternant(g, rho(g)));
}

void validate(const CharLabel& label) {
  const GroupId& g = label.group;
  const Weight& lambda = label.highest_weight;
  if (lambda.rank() != g.rank)
    throw Error(ErrorCode::RankMismatch, lambda.to_string() + " for " + g.label());
  bool half = lambda.rank() > 0 && lambda.is_half_odd();
  if (half != label.spin)
    throw Error(ErrorCode::ParityMismatch, "spin flag disagrees with " + lambda.to_string());
  if (half && (g.family == Family::GL || g.family == Family::Sp))
    throw Error(ErrorCode::ParityMismatch, g.label() + " has no spin characters");
  GroupId check = g;
  if (g.family == Family::Oeven) check.family = Family::Sp;  // lambda_n >= 0 required
  if (g.family == Family::Oeven && half) check.family = Family::SOodd;
  if (!is_dominant(check, lambda))
    throw Error(ErrorCode::ParityMismatch, lambda.to_string() + " is not dominant for " + g.label());
}

}  // namespace

LaurentPoly alternant(const GroupId& g, const Weight& mu) {
  if (mu.rank() != g.rank) throw Error(ErrorCode::RankMismatch, "alternant");
  LaurentPoly out(g.rank);
  for (const auto& w : weyl_elements(g)) out.add_term(w.apply(mu).comps, ParamPoly(w.sign));
  return out;
}

LaurentPoly weyl_quotient(const GroupId& g, const Weight& kappa) {
  return alternant(g, kappa + rho(g)).exact_div(weyl_denominator(g));
}

LaurentPoly character(const GroupId& g, const Weight& lambda) {
  return character(CharLabel{g, lambda, lambda.rank() > 0 && lambda.is_half_odd()});
}

LaurentPoly character(const CharLabel& label) {
  validate(label);
  const GroupId& g = label.group;
  if (g.family == Family::Oeven) return character_O_even(g.rank, label.highest_weight);
  CacheKey key{g.weyl_family(), g.rank, false, label.highest_weight.comps};
  if (auto hit = lookup(key)) return *hit;
  return *insert(key, weyl_quotient(g, label.highest_weight));
}

LaurentPoly character_O_even(int n, const Weight& lambda) {
  GroupId so{Family::SOeven, n};
  if (lambda.rank() != n || lambda.comps.back() < 0 || !is_dominant(so, lambda))
    throw Error(ErrorCode::ParityMismatch, lambda.to_string() + " is not an O(2n) label");
  LaurentPoly out = character(so, lambda);
  if (lambda.comps.back() != 0) {
    Weight minus = lambda;
    minus.comps.back() = -minus.comps.back();
    out += character(so, minus);
  }
  return out;
}

LaurentPoly basic_spin_product(int n) {
  LaurentPoly out = LaurentPoly::constant(n, ParamPoly(1));
  for (int i = 0; i < n; ++i)
    out *= LaurentPoly::variable(n, i, 1) + LaurentPoly::variable(n, i, -1);
  return out;
}

bool check_ratio_identities(int m, const Weight& lambda_tilde) {
  if (lambda_tilde.rank() != m || !lambda_tilde.is_integral()) return false;
  Weight shifted = delta(m) + lambda_tilde;
  LaurentPoly spin_o = character_O_even(m, shifted);
  LaurentPoly delta_o = character_O_even(m, delta(m));
  LaurentPoly so_twisted = character(GroupId{Family::SOodd, m}, lambda_tilde).negate_variables();
  if ((lambda_tilde.size_half() / 2) % 2 != 0) so_twisted = -so_twisted;
  bool first = spin_o == delta_o * so_twisted;

  LaurentPoly spin_so = character(GroupId{Family::SOodd, m}, shifted);
  LaurentPoly delta_so = character(GroupId{Family::SOodd, m}, delta(m));
  bool second = spin_so == delta_so * character(GroupId{Family::Sp, m}, lambda_tilde);
  return first && second;
}

std::size_t character_cache_size() {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  return c.entries.size();
}

void clear_character_cache() {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  c.entries.clear();
}

}  // namespace weylgf
