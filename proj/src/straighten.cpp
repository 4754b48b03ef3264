#include "weylgf/straighten.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

namespace weylgf {

std::string StraightenResult::to_string() const {
  if (zero) return "0";
  return (sign > 0 ? "+" : "-") + lambda.to_string();
}

namespace {

void check_input(const GroupId& g, const Weight& kappa) {
  if (kappa.rank() != g.rank)
    throw Error(ErrorCode::RankMismatch, "weight " + kappa.to_string() + " for " + g.label());
  bool ok = kappa.is_integral();
  Family f = g.weyl_family();
  if (!ok && (f == Family::SOodd || f == Family::SOeven)) ok = kappa.is_half_odd();
  if (!ok) throw Error(ErrorCode::ParityMismatch, kappa.to_string() + " for " + g.label());
}

// Parity of the permutation sorting keys into descending order; keys distinct.
int descending_sort_parity(const std::vector<int>& keys) {
  int inversions = 0;
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i + 1; j < keys.size(); ++j)
      if (keys[i] < keys[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool has_repeats(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

}  // namespace

StraightenResult straighten(const GroupId& g, const Weight& kappa) {
  check_input(g, kappa);
  Weight r = rho(g);
  Weight mu = kappa + r;
  std::vector<int>& m = mu.comps;
  int n = g.rank;
  Family f = g.weyl_family();

  if (f == Family::GL) {
    if (has_repeats(m)) return StraightenResult::vanishing();
    int sign = descending_sort_parity(m);
    std::sort(m.begin(), m.end(), std::greater<>());
    return StraightenResult::of(sign, mu - r);
  }

  std::vector<int> absval(n);
  int negatives = 0;
  for (int i = 0; i < n; ++i) {
    absval[i] = std::abs(m[i]);
    if (m[i] < 0) ++negatives;
  }
  if (has_repeats(absval)) return StraightenResult::vanishing();
  int sign = descending_sort_parity(absval);
  std::vector<int> sorted = absval;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  if (f == Family::Sp || f == Family::SOodd) {
    if (std::find(absval.begin(), absval.end(), 0) != absval.end())
      return StraightenResult::vanishing();
    if (negatives % 2 != 0) sign = -sign;
  } else if (negatives % 2 != 0 && sorted.back() > 0) {
    sorted.back() = -sorted.back();
  }
  return StraightenResult::of(sign, Weight(sorted) - r);
}

StraightenResult straighten_slow(const GroupId& g, const Weight& kappa) {
  check_input(g, kappa);
  if (g.rank > 5) throw Error(ErrorCode::RankTooLarge, "straighten_slow is limited to rank 5");
  int gens = num_generators(g);
  std::map<Weight, int> seen{{kappa, 1}};
  std::deque<Weight> queue{kappa};
  std::optional<StraightenResult> found;
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    int s = seen.at(w);
    if (is_dominant(g, w)) found = StraightenResult::of(s, w);
    for (int i = 1; i <= gens; ++i) {
      Weight next = dot_reflect(g, i, w);
      if (next == w) return StraightenResult::vanishing();
      auto [it, inserted] = seen.emplace(next, -s);
      if (inserted)
        queue.push_back(next);
      else if (it->second != -s)
        return StraightenResult::vanishing();
    }
  }
  if (!found) throw Error(ErrorCode::NotDivisible, "orbit of " + kappa.to_string() + " has no dominant weight");
  return *found;
}

}  // namespace weylgf
