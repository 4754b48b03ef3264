#pragma once

#include "weylgf/rootsys.hpp"

namespace weylgf {

struct StraightenResult {
  bool zero = true;
  int sign = 0;
  Weight lambda;

  static StraightenResult vanishing() { return {}; }
  static StraightenResult of(int sign, Weight lambda) { return {false, sign, std::move(lambda)}; }

  bool operator==(const StraightenResult&) const = default;
  std::string to_string() const;
};

// Closed form on mu = kappa + rho.
StraightenResult straighten(const GroupId& g, const Weight& kappa);
// Orbit search under dot_reflect; rank <= 5.
StraightenResult straighten_slow(const GroupId& g, const Weight& kappa);

}  // namespace weylgf
