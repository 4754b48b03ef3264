#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylgf/error.hpp"

namespace weylgf {

using Integer = mpz_class;
using Rational = mpq_class;

// Formats a half-unit quantity in true units: 4 -> "2", -3 -> "-3/2".
std::string format_half(int half_units);
// Inverse of format_half; accepts "2", "-3/2", "1/2".
int parse_half(std::string_view text);

// a_k is stored as half_units = 2k, a_{k+1/2} as 2k+1.
struct ParamId {
  int half_units = 0;

  static ParamId a(int k) { return ParamId{2 * k}; }
  static ParamId from_half_units(int h) { return ParamId{h}; }

  std::string name() const { return "a" + format_half(half_units); }

  auto operator<=>(const ParamId&) const = default;
};

// Sorted by ParamId, exponents strictly positive.
using ParamMonomial = std::vector<std::pair<int, int>>;

// Lexicographic order with a_0 > a_1 > ... ; the empty monomial is smallest.
struct MonomialLess {
  bool operator()(const ParamMonomial& lhs, const ParamMonomial& rhs) const;
};

class ParamPoly {
public:
  using Terms = std::map<ParamMonomial, Integer, MonomialLess>;

  ParamPoly() = default;
  ParamPoly(long c);
  ParamPoly(const Integer& c);

  static ParamPoly param(ParamId id, unsigned exp = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Integer constant_term() const;
  std::vector<ParamId> params() const;

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
  friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
  friend ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs);
  ParamPoly operator-() const;
  bool operator==(const ParamPoly& other) const { return terms_ == other.terms_; }

  ParamPoly pow(unsigned exp) const;
  // Parameters absent from the mapping stay symbolic.
  ParamPoly substitute(const std::map<ParamId, ParamPoly>& values) const;
  Rational eval(const std::map<ParamId, Rational>& values) const;
  ParamPoly exact_div(const ParamPoly& den) const;

  std::string to_string() const;
  static ParamPoly parse(std::string_view text);

  void add_term(const ParamMonomial& mono, const Integer& coeff);

private:
  Terms terms_;
};

ParamPoly pp_add(const ParamPoly& p, const ParamPoly& q);
ParamPoly pp_mul(const ParamPoly& p, const ParamPoly& q);
ParamPoly pp_neg(const ParamPoly& p);

// Exponent vectors are in half-units.
using Exponent = std::vector<int>;

// Value of a variable; a square root is needed only when some exponent is half-odd.
struct VarValue {
  Rational value;
  std::optional<Rational> sqrt;

  VarValue() = default;
  VarValue(Rational v) : value(std::move(v)) {}
  VarValue(long v) : value(v) {}
  static VarValue from_sqrt(const Rational& s) {
    VarValue v(Rational(s * s));
    v.sqrt = s;
    return v;
  }
};

class LaurentPoly {
public:
  using Terms = std::map<Exponent, ParamPoly>;

  explicit LaurentPoly(int rank = 0) : rank_(rank) {}

  static LaurentPoly constant(int rank, const ParamPoly& c);
  static LaurentPoly monomial(int rank, const Exponent& exps, const ParamPoly& c = ParamPoly(1));
  // x_{i+1}^{half_units/2}
  static LaurentPoly variable(int rank, int i, int half_units = 2);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const ParamPoly& scalar);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const ParamPoly& rhs) { return lhs *= rhs; }
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& other) const {
    return rank_ == other.rank_ && terms_ == other.terms_;
  }

  LaurentPoly exact_div(const LaurentPoly& den) const;
  Rational eval(const std::map<ParamId, Rational>& params, const std::vector<VarValue>& vars) const;
  LaurentPoly substitute(const std::map<ParamId, ParamPoly>& values) const;
  // Places the variables at positions offset..offset+rank-1 of a rank new_rank polynomial.
  LaurentPoly embed(int new_rank, int offset) const;
  // x^e -> (-1)^{|e|} x^e, i.e. every variable negated; requires integer exponent sums.
  LaurentPoly negate_variables() const;

  std::string to_string() const;
  static LaurentPoly parse(std::string_view text, int rank);

  void add_term(const Exponent& exps, const ParamPoly& coeff);

private:
  int rank_;
  Terms terms_;
};

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_exact_div(const LaurentPoly& num, const LaurentPoly& den);
Rational lp_eval(const LaurentPoly& p, const std::map<ParamId, Rational>& params,
                 const std::vector<VarValue>& vars);

// Rational power with a possibly negative exponent; base must be nonzero when exp < 0.
Rational rational_pow(const Rational& base, long exp);
std::string format_rational(const Rational& q);

}  // namespace weylgf
