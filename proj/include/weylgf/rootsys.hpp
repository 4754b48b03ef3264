#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "weylgf/error.hpp"

namespace weylgf {

enum class Family { GL, Sp, SOodd, SOeven, Oeven };

std::string family_name(Family f);       // "gl", "sp", "so-odd", "so-even", "o-even"
Family parse_family(std::string_view s);  // inverse of family_name

struct GroupId {
  Family family = Family::GL;
  int rank = 1;

  // Oeven shares every piece of Weyl data with SOeven.
  Family weyl_family() const { return family == Family::Oeven ? Family::SOeven : family; }
  std::string label() const;

  auto operator<=>(const GroupId&) const = default;
};

// Components in half-units.
struct Weight {
  std::vector<int> comps;

  Weight() = default;
  explicit Weight(std::vector<int> half_units) : comps(std::move(half_units)) {}

  static Weight from_ints(std::initializer_list<int> values);
  static Weight from_ints(const std::vector<int>& values);
  static Weight from_half_units(std::vector<int> half_units) { return Weight(std::move(half_units)); }
  // "1,0", "3/2,1/2" or "(1,0)".
  static Weight parse(std::string_view text);

  int rank() const { return static_cast<int>(comps.size()); }
  bool is_integral() const;  // all components integers
  bool is_half_odd() const;  // all components half-odd integers
  bool parity_consistent() const { return comps.empty() || is_integral() || is_half_odd(); }
  // Sum of components in half-units.
  int size_half() const;
  std::string to_string() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;

  auto operator<=>(const Weight&) const = default;
};

struct SignedWeylElement {
  std::vector<int> perm;   // (w mu)_i = flips[i] * mu[perm[i]], 0-based
  std::vector<int> flips;  // entries +1 / -1
  int sign = 1;

  Weight apply(const Weight& mu) const;
};

constexpr int kMaxWeylRank = 8;

Weight rho(const GroupId& g);
// Spin weight (1/2,...,1/2).
Weight delta(int n);
// i is 1-based; GL admits 1 <= i < n, the other families 1 <= i <= n.
Weight dot_reflect(const GroupId& g, int i, const Weight& kappa);
int num_generators(const GroupId& g);
std::vector<SignedWeylElement> weyl_elements(const GroupId& g);
bool is_dominant(const GroupId& g, const Weight& lambda);
std::size_t weyl_order(const GroupId& g);

}  // namespace weylgf
