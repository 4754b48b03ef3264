#pragma once

#include <cstddef>

#include "weylgf/polyring.hpp"
#include "weylgf/rootsys.hpp"

namespace weylgf {

struct CharLabel {
  GroupId group;
  Weight highest_weight;
  bool spin = false;
};

// Sum over the Weyl group of sgn(w) x^{w(mu)}.
LaurentPoly alternant(const GroupId& g, const Weight& mu);
// Weyl's formula; Oeven labels are forwarded to character_O_even.
LaurentPoly character(const CharLabel& label);
LaurentPoly character(const GroupId& g, const Weight& lambda);
// O(2n) character: SO(2n) character, plus its lambda_n -> -lambda_n partner when lambda_n != 0.
LaurentPoly character_O_even(int n, const Weight& lambda);
// alternant(kappa + rho) / alternant(rho) for an arbitrary, possibly non-dominant kappa.
LaurentPoly weyl_quotient(const GroupId& g, const Weight& kappa);
// prod_i (x_i^{1/2} + x_i^{-1/2})
LaurentPoly basic_spin_product(int n);
// Both identities relating spin characters of rank m to non-spin ones.
bool check_ratio_identities(int m, const Weight& lambda_tilde);

std::size_t character_cache_size();
void clear_character_cache();

}  // namespace weylgf
