#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace braidrep {

/// A formal invertible parameter: alpha, beta, or the leveled family T(level, index).
/// Level-1 renders as `t<i>`, level-2 as `s<i>`, higher levels as `t[<r>]<i>`.
struct Param {
  enum class Kind : std::uint8_t { Alpha, Beta, T };
  Kind kind = Kind::Alpha;
  int level = 0;
  int index = 0;

  static Param alpha() { return {Kind::Alpha, 0, 0}; }
  static Param beta() { return {Kind::Beta, 0, 0}; }
  static Param t(int level, int index);

  std::string name() const;
  static Param parse(std::string_view name);

  friend bool operator==(const Param&, const Param&) = default;
  friend auto operator<=>(const Param&, const Param&) = default;
};

/// Sparse exponent vector, sorted by Param, no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(const Param& p, int exponent = 1);

  const std::vector<std::pair<Param, int>>& exponents() const { return exps_; }
  bool is_one() const { return exps_.empty(); }
  int degree_of(const Param& p) const;

  Monomial inverse() const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<Param, int>> exps_;
};

/// Integer-coefficient multivariate Laurent polynomial.  Coefficients are
/// 64-bit with overflow checked; zero terms are never stored.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coeff c);  // NOLINT(google-explicit-constructor): integers embed
  static LaurentPoly monomial(const Monomial& m, Coeff c = 1);
  static LaurentPoly param(const Param& p, int exponent = 1);

  const std::map<Monomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// A single monomial with coefficient +-1.
  bool is_unit() const;
  LaurentPoly unit_inverse() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  LaurentPoly pow(int e) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, Coeff c);
  std::map<Monomial, Coeff> terms_;
};

using Bindings = std::map<Param, LaurentPoly>;

/// Ring homomorphism fixing unbound parameters.  A bound parameter occurring
/// with a negative exponent must be bound to a unit.
LaurentPoly substitute(const LaurentPoly& p, const Bindings& bindings);

/// Accepts sums/differences of products of integers, parameter names, `^k`
/// powers and parentheses; juxtaposition multiplies, so `s2(1-t1)` parses.
LaurentPoly parse_poly(std::string_view text);

/// Parses `name=expr`, e.g. `b=1` or `b=a`.
std::pair<Param, LaurentPoly> parse_binding(std::string_view text);

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

}  // namespace braidrep
