#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weilform/exactnum.hpp"

namespace weilform {

inline constexpr std::int64_t kDefaultTruncation = 200;

/// Truncated Fourier expansion sum_n c(n) q^{n / den} with exact rational
/// coefficients. Coefficients are known for every numerator n < trunc and
/// unknown from trunc on; numerators without a stored coefficient are zero.
///
/// Some operations can only certify part of their output (see
/// project_coprime); the affected numerators are listed in uncertified() and
/// the flags follow the value through arithmetic.
class QExpansion {
 public:
  QExpansion(std::int64_t den, std::int64_t trunc);
  QExpansion(std::int64_t den, std::int64_t trunc, std::map<std::int64_t, Rational> coeffs);

  /// Polynomial in q (den 1) from (exponent, coefficient) pairs.
  static QExpansion from_terms(std::int64_t trunc, std::initializer_list<std::pair<std::int64_t, Rational>> terms);

  std::int64_t den() const noexcept { return den_; }
  std::int64_t trunc() const noexcept { return trunc_; }
  const std::map<std::int64_t, Rational>& coeffs() const noexcept { return coeffs_; }
  const std::set<std::int64_t>& uncertified() const noexcept { return uncertified_; }

  /// Coefficient at numerator n; throws InsufficientPrecision when n >= trunc.
  Rational coeff(std::int64_t n) const;
  /// Coefficient of q^e for a rational exponent e.
  Rational coeff_at(const Rational& exponent) const;

  void set(std::int64_t n, const Rational& c);
  void mark_uncertified(std::int64_t n);
  bool is_certified(std::int64_t n) const { return !uncertified_.contains(n); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest numerator with a nonzero coefficient.
  std::optional<std::int64_t> valuation() const;
  bool has_integer_coefficients() const;

  /// Same series over a multiple of den.
  QExpansion with_den(std::int64_t new_den) const;
  /// Drops everything from numerator t on (t <= trunc).
  QExpansion truncated(std::int64_t t) const;
  /// Multiply by q^{k / den}.
  QExpansion shifted(std::int64_t k) const;

  QExpansion& operator+=(const QExpansion& rhs);
  QExpansion& operator-=(const QExpansion& rhs);
  QExpansion& operator*=(const Rational& scalar);
  friend QExpansion operator+(QExpansion lhs, const QExpansion& rhs) { return lhs += rhs; }
  friend QExpansion operator-(QExpansion lhs, const QExpansion& rhs) { return lhs -= rhs; }
  friend QExpansion operator*(QExpansion lhs, const Rational& s) { return lhs *= s; }
  friend QExpansion operator*(const Rational& s, QExpansion rhs) { return rhs *= s; }
  friend QExpansion operator*(const QExpansion& lhs, const QExpansion& rhs);
  /// Throws DivisionByNonUnit when the divisor has no nonzero coefficient.
  friend QExpansion operator/(const QExpansion& lhs, const QExpansion& rhs);
  QExpansion operator-() const;

  /// Structural equality (same den, trunc, coefficients and flags).
  friend bool operator==(const QExpansion&, const QExpansion&) = default;

  /// True when both agree on every exponent below the smaller truncation.
  bool agrees_with(const QExpansion& other) const;

 private:
  std::int64_t den_;
  std::int64_t trunc_;
  std::map<std::int64_t, Rational> coeffs_;
  std::set<std::int64_t> uncertified_;
};

enum class SeriesOp { Add, Sub, Mul, Div };

QExpansion series_arith(const QExpansion& x, const QExpansion& y, SeriesOp op);

/// f(tau) -> f(m tau).
QExpansion scale_exponents(const QExpansion& f, std::int64_t m);

/// a(n) -> a(mn). Throws FractionalExponents unless den == 1.
QExpansion u_operator(const QExpansion& f, std::int64_t m);

/// Rescaled eta factor eta(d tau)^{r}.
struct EtaFactor {
  std::int64_t d;
  std::int64_t r;
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};
using EtaSpec = std::vector<EtaFactor>;

/// Parses "1:2,3:-2,4:1" into an EtaSpec. Throws ParseError.
EtaSpec parse_eta_spec(const std::string& text);

/// prod_n (1 - q^n)^r to `terms` coefficients (den 1), exact integers.
QExpansion euler_product_power(std::int64_t r, std::int64_t terms);

/// prod eta(d tau)^{r_d}. The product part is known through `terms` integer
/// powers; the result carries the leading q^{(sum d r_d)/24} with den
/// 24 / gcd(sum d r_d, 24).
QExpansion eta_quotient(const EtaSpec& spec, std::int64_t terms);

/// E2 = 1 - 24 sum sigma_1(n) q^n, n < trunc.
QExpansion e2_series(std::int64_t trunc);

/// (E2(t) - 9 E2(3t) - 4 E2(4t) + 36 E2(12t)) / 24, the level-12 weight-2
/// combination, exponents < trunc.
QExpansion frak_e2(std::int64_t trunc);

/// A cusp num/den of Gamma_0(N) in lowest terms; infinity is 1/0.
struct Cusp {
  std::int64_t num;
  std::int64_t den;

  bool is_infinity() const { return den == 0; }
  std::string to_string() const;
  friend bool operator==(const Cusp&, const Cusp&) = default;
};

/// One representative per Gamma_0(N)-class, denominators dividing N in
/// increasing order with infinity in place of denominator N.
std::vector<Cusp> cusps_gamma0(std::int64_t N);

/// Gamma_0(N)-equivalence of two cusps (orbit test on P^1(Z/N)).
bool cusps_equivalent(const Cusp& x, const Cusp& y, std::int64_t N);

struct CuspOrder {
  Cusp cusp;
  Rational order;  // first exponent in the local uniformizer
};

/// Orders of an eta quotient at every cusp of Gamma_0(N). Throws
/// InvalidDivisor when some d does not divide N.
std::vector<CuspOrder> eta_cusp_orders(const EtaSpec& spec, std::int64_t N);

}  // namespace weilform
