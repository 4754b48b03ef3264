#include "weylgf/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace weylgf {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::ZeroVariable: return "ZeroVariable";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::TooManyMonomials: return "TooManyMonomials";
    case ErrorCode::FoldingMismatch: return "FoldingMismatch";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::UnsupportedMode: return "UnsupportedMode";
    case ErrorCode::OutOfBox: return "OutOfBox";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string format_half(int half_units) {
  if (half_units % 2 == 0) return std::to_string(half_units / 2);
  return std::to_string(half_units) + "/2";
}

int parse_half(std::string_view text) {
  std::string s(text);
  std::size_t slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      int v = std::stoi(s, &used);
      if (used != s.size()) throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
      return 2 * v;
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (den != "2") throw Error(ErrorCode::ParseError, "only halves are allowed: '" + s + "'");
    int v = std::stoi(num, &used);
    if (used != num.size()) throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
  }
}

bool MonomialLess::operator()(const ParamMonomial& lhs, const ParamMonomial& rhs) const {
  std::size_t i = 0;
  for (; i < lhs.size() && i < rhs.size(); ++i) {
    if (lhs[i].first != rhs[i].first) return lhs[i].first > rhs[i].first;
    if (lhs[i].second != rhs[i].second) return lhs[i].second < rhs[i].second;
  }
  return lhs.size() < rhs.size();
}

namespace {

ParamMonomial mono_mul(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

// Returns a/b when b divides a.
std::optional<ParamMonomial> mono_div(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  std::size_t i = 0;
  for (const auto& [id, e] : b) {
    while (i < a.size() && a[i].first < id) out.push_back(a[i++]);
    if (i == a.size() || a[i].first != id || a[i].second < e) return std::nullopt;
    if (a[i].second > e) out.emplace_back(id, a[i].second - e);
    ++i;
  }
  while (i < a.size()) out.push_back(a[i++]);
  return out;
}

std::string mono_to_string(const ParamMonomial& m) {
  std::string out;
  for (const auto& [id, e] : m) {
    if (!out.empty()) out += '*';
    out += ParamId{id}.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i][0] == '-')
      out += " - " + parts[i].substr(1);
    else
      out += " + " + parts[i];
  }
  return out;
}

}  // namespace

ParamPoly::ParamPoly(long c) {
  if (c != 0) terms_.emplace(ParamMonomial{}, Integer(c));
}

ParamPoly::ParamPoly(const Integer& c) {
  if (c != 0) terms_.emplace(ParamMonomial{}, c);
}

ParamPoly ParamPoly::param(ParamId id, unsigned exp) {
  if (id.half_units < 0) throw Error(ErrorCode::ParseError, "negative parameter index");
  ParamPoly p;
  if (exp == 0)
    p.terms_.emplace(ParamMonomial{}, Integer(1));
  else
    p.terms_.emplace(ParamMonomial{{id.half_units, static_cast<int>(exp)}}, Integer(1));
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Integer ParamPoly::constant_term() const {
  auto it = terms_.find(ParamMonomial{});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<ParamId> ParamPoly::params() const {
  std::vector<ParamId> ids;
  for (const auto& [m, c] : terms_)
    for (const auto& [id, e] : m) ids.push_back(ParamId{id});
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

void ParamPoly::add_term(const ParamMonomial& mono, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, Integer(-c));
  return *this;
}

ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs) {
  ParamPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  if (rhs.is_constant()) {
    const Integer& c = rhs.terms_.begin()->second;
    out = lhs;
    for (auto& [m, v] : out.terms_) v *= c;
    return out;
  }
  if (lhs.is_constant()) return rhs * lhs;
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(mono_mul(ma, mb), Integer(ca * cb));
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
  *this = *this * other;
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ParamPoly ParamPoly::pow(unsigned exp) const {
  ParamPoly result(1), base = *this;
  while (exp > 0) {
    if (exp & 1u) result *= base;
    exp >>= 1u;
    if (exp > 0) base *= base;
  }
  return result;
}

ParamPoly ParamPoly::substitute(const std::map<ParamId, ParamPoly>& values) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    ParamPoly term(c);
    ParamMonomial kept;
    for (const auto& [id, e] : m) {
      auto it = values.find(ParamId{id});
      if (it == values.end())
        kept.emplace_back(id, e);
      else
        term *= it->second.pow(static_cast<unsigned>(e));
    }
    ParamPoly rest;
    rest.terms_.emplace(kept, Integer(1));
    out += term * rest;
  }
  return out;
}

Rational ParamPoly::eval(const std::map<ParamId, Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [id, e] : m) {
      auto it = values.find(ParamId{id});
      if (it == values.end())
        throw Error(ErrorCode::MissingAssignment, "no value for " + ParamId{id}.name());
      term *= rational_pow(it->second, e);
    }
    total += term;
  }
  return total;
}

ParamPoly ParamPoly::exact_div(const ParamPoly& den) const {
  if (den.is_zero()) throw Error(ErrorCode::NotDivisible, "division by zero polynomial");
  const auto& [dm, dc] = *den.terms_.rbegin();
  ParamPoly quotient, rem = *this;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.rbegin();
    auto qm = mono_div(rm, dm);
    if (!qm || !mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()))
      throw Error(ErrorCode::NotDivisible, to_string() + " by " + den.to_string());
    ParamPoly t;
    t.terms_.emplace(*qm, Integer(rc / dc));
    quotient += t;
    rem -= t * den;
  }
  return quotient;
}

std::string ParamPoly::to_string() const {
  std::vector<std::string> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (m.empty())
      parts.push_back(c.get_str());
    else if (c == 1)
      parts.push_back(mono_to_string(m));
    else if (c == -1)
      parts.push_back("-" + mono_to_string(m));
    else
      parts.push_back(c.get_str() + "*" + mono_to_string(m));
  }
  return join_terms(parts);
}

ParamPoly pp_add(const ParamPoly& p, const ParamPoly& q) { return p + q; }
ParamPoly pp_mul(const ParamPoly& p, const ParamPoly& q) { return p * q; }
ParamPoly pp_neg(const ParamPoly& p) { return -p; }

LaurentPoly LaurentPoly::constant(int rank, const ParamPoly& c) {
  return monomial(rank, Exponent(rank, 0), c);
}

LaurentPoly LaurentPoly::monomial(int rank, const Exponent& exps, const ParamPoly& c) {
  if (static_cast<int>(exps.size()) != rank)
    throw Error(ErrorCode::RankMismatch, "exponent length differs from rank");
  LaurentPoly p(rank);
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int rank, int i, int half_units) {
  Exponent e(rank, 0);
  e.at(i) = half_units;
  return monomial(rank, e);
}

void LaurentPoly::add_term(const Exponent& exps, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (rank_ != other.rank_) throw Error(ErrorCode::RankMismatch, "lp_add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (rank_ != other.rank_) throw Error(ErrorCode::RankMismatch, "lp_sub");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.rank_ != rhs.rank_) throw Error(ErrorCode::RankMismatch, "lp_mul");
  LaurentPoly out(lhs.rank_);
  Exponent sum(lhs.rank_);
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int i = 0; i < lhs.rank_; ++i) sum[i] = ea[i] + eb[i];
      out.add_term(sum, ca * cb);
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const ParamPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& den) const {
  if (rank_ != den.rank_) throw Error(ErrorCode::RankMismatch, "lp_exact_div");
  if (den.is_zero()) throw Error(ErrorCode::NotDivisible, "division by zero polynomial");
  LaurentPoly quotient(rank_);
  if (is_zero()) return quotient;

  // Per-coordinate exponent box that any quotient term must lie in.
  Exponent lo(rank_), hi(rank_);
  for (int i = 0; i < rank_; ++i) {
    int nmin = terms_.begin()->first[i], nmax = nmin;
    for (const auto& [e, c] : terms_) nmin = std::min(nmin, e[i]), nmax = std::max(nmax, e[i]);
    int dmin = den.terms_.begin()->first[i], dmax = dmin;
    for (const auto& [e, c] : den.terms_) dmin = std::min(dmin, e[i]), dmax = std::max(dmax, e[i]);
    lo[i] = nmin - dmin;
    hi[i] = nmax - dmax;
  }

  const auto& [dlead, dcoeff] = *den.terms_.rbegin();
  LaurentPoly rem = *this;
  Exponent qe(rank_);
  while (!rem.is_zero()) {
    const auto& [rlead, rcoeff] = *rem.terms_.rbegin();
    for (int i = 0; i < rank_; ++i) {
      qe[i] = rlead[i] - dlead[i];
      if (qe[i] < lo[i] || qe[i] > hi[i])
        throw Error(ErrorCode::NotDivisible, "quotient leaves the exponent box");
    }
    ParamPoly qc = rcoeff.exact_div(dcoeff);
    LaurentPoly t = monomial(rank_, qe, qc);
    quotient += t;
    rem -= t * den;
  }
  return quotient;
}

Rational LaurentPoly::eval(const std::map<ParamId, Rational>& params,
                           const std::vector<VarValue>& vars) const {
  if (static_cast<int>(vars.size()) < rank_)
    throw Error(ErrorCode::MissingAssignment, "fewer variable values than rank");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c.eval(params);
    for (int i = 0; i < rank_; ++i) {
      if (e[i] == 0) continue;
      const VarValue& v = vars[i];
      if (v.value == 0) throw Error(ErrorCode::ZeroVariable, "x" + std::to_string(i + 1));
      if (e[i] % 2 == 0) {
        term *= rational_pow(v.value, e[i] / 2);
      } else {
        if (!v.sqrt)
          throw Error(ErrorCode::MissingAssignment,
                      "square root witness for x" + std::to_string(i + 1));
        term *= rational_pow(*v.sqrt, e[i]);
      }
    }
    total += term;
  }
  return total;
}

LaurentPoly LaurentPoly::substitute(const std::map<ParamId, ParamPoly>& values) const {
  LaurentPoly out(rank_);
  for (const auto& [e, c] : terms_) out.add_term(e, c.substitute(values));
  return out;
}

LaurentPoly LaurentPoly::embed(int new_rank, int offset) const {
  if (offset < 0 || offset + rank_ > new_rank) throw Error(ErrorCode::RankMismatch, "embed");
  LaurentPoly out(new_rank);
  Exponent big(new_rank, 0);
  for (const auto& [e, c] : terms_) {
    std::copy(e.begin(), e.end(), big.begin() + offset);
    out.terms_.emplace(big, c);
  }
  return out;
}

LaurentPoly LaurentPoly::negate_variables() const {
  LaurentPoly out(rank_);
  for (const auto& [e, c] : terms_) {
    int sum = 0;
    for (int v : e) sum += v;
    if (sum % 2 != 0) throw Error(ErrorCode::ParityMismatch, "half-odd exponent sum");
    out.terms_.emplace(e, (sum / 2) % 2 == 0 ? c : -c);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  std::vector<std::string> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string xm;
    for (int i = 0; i < rank_; ++i) {
      if (e[i] == 0) continue;
      if (!xm.empty()) xm += '*';
      xm += "x" + std::to_string(i + 1);
      if (e[i] != 2) xm += "^" + format_half(e[i]);
    }
    std::string cs = c.to_string();
    if (xm.empty())
      parts.push_back(cs);
    else if (c.terms().size() > 1)
      parts.push_back("(" + cs + ")*" + xm);
    else if (cs == "1")
      parts.push_back(xm);
    else if (cs == "-1")
      parts.push_back("-" + xm);
    else
      parts.push_back(cs + "*" + xm);
  }
  return join_terms(parts);
}

namespace {

class Parser {
public:
  Parser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  LaurentPoly parse_all() {
    LaurentPoly p = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int(const std::string& s) {
    if (s.size() > 6) fail("number too large");
    return std::stoi(s);
  }

  // Unsigned half quantity: "3" or "3/2".
  int half_value() {
    int v = small_int(digits());
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' && text_[pos_ + 1] == '2') {
      pos_ += 2;
      return v;
    }
    return 2 * v;
  }

  LaurentPoly parse_sum() {
    LaurentPoly acc = parse_term();
    for (;;) {
      if (accept('+'))
        acc += parse_term();
      else if (accept('-'))
        acc -= parse_term();
      else
        return acc;
    }
  }

  LaurentPoly parse_term() {
    bool negate = accept('-');
    LaurentPoly acc = parse_factor();
    while (accept('*')) acc *= parse_factor();
    return negate ? -acc : acc;
  }

  LaurentPoly parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      LaurentPoly inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)))
      return LaurentPoly::constant(rank_, ParamPoly(Integer(digits())));
    if (ch == 'a') {
      ++pos_;
      int id = half_value();
      unsigned exp = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        exp = static_cast<unsigned>(small_int(digits()));
      }
      return LaurentPoly::constant(rank_, ParamPoly::param(ParamId{id}, exp));
    }
    if (ch == 'x') {
      ++pos_;
      int idx = small_int(digits());
      if (idx < 1 || idx > rank_) fail("variable index out of range");
      int e = 2;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        bool neg = pos_ < text_.size() && text_[pos_] == '-';
        if (neg) ++pos_;
        e = half_value();
        if (neg) e = -e;
      }
      return LaurentPoly::variable(rank_, idx - 1, e);
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, int rank) {
  return Parser(text, rank).parse_all();
}

ParamPoly ParamPoly::parse(std::string_view text) {
  LaurentPoly p = Parser(text, 0).parse_all();
  if (p.is_zero()) return ParamPoly();
  return p.terms().begin()->second;
}

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly lp_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  return num.exact_div(den);
}
Rational lp_eval(const LaurentPoly& p, const std::map<ParamId, Rational>& params,
                 const std::vector<VarValue>& vars) {
  return p.eval(params, vars);
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw Error(ErrorCode::ZeroVariable, "negative power of zero");
    Rational inv = 1 / base;
    return rational_pow(inv, -exp);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
  out.canonicalize();
  return out;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

}  // namespace weylgf
