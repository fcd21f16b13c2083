#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace weilform {

using Integer = mpz_class;
using Rational = mpq_class;

/// num / den in lowest terms (the two-argument mpq_class constructor does
/// not canonicalize).
Rational frac(std::int64_t num, std::int64_t den);

/// High-accuracy conversion of an exact rational to long double.
long double to_long_double(const Rational& q);

class CyclotomicField;
using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// The cyclotomic field Q(zeta_N), zeta_N = e(1/N), presented as
/// Q[x] / Phi_N(x). Holds the reduction data shared by all its elements:
/// Phi_N itself and the reduced image of every power zeta^e, 0 <= e < N.
class CyclotomicField {
 public:
  static FieldPtr make(std::int64_t order);

  std::int64_t order() const noexcept { return order_; }
  int degree() const noexcept { return degree_; }

  /// Coefficients of Phi_N, lowest degree first; monic of length degree()+1.
  const std::vector<Integer>& cyclotomic_polynomial() const noexcept { return phi_; }

  /// Reduced coefficient vector of zeta^e (e taken mod N).
  const std::vector<Integer>& power(std::int64_t e) const;

  /// Reduces sum_e buffer[e] zeta^e, e in [0, N), to the power basis.
  std::vector<Rational> reduce_exponents(const std::vector<Rational>& buffer) const;

  /// Coefficients of sqrt(N) in this field when it lies there, built from the
  /// quadratic Gauss sum of the field's real quadratic subfield.
  const std::optional<std::vector<Rational>>& sqrt_of_order() const noexcept { return sqrt_order_; }

  explicit CyclotomicField(std::int64_t order);

 private:
  std::int64_t order_;
  int degree_;
  std::vector<Integer> phi_;
  std::vector<std::vector<Integer>> powers_;
  std::optional<std::vector<Rational>> sqrt_order_;
};

/// Element of Q(zeta_N) in canonical power-basis form (always reduced mod
/// Phi_N, so equality is coefficient equality).
class Cyclotomic {
 public:
  explicit Cyclotomic(FieldPtr field);
  Cyclotomic(FieldPtr field, const Rational& value);
  Cyclotomic(FieldPtr field, std::vector<Rational> coeffs);

  /// zeta_N^k in the given field.
  static Cyclotomic root_of_unity(const FieldPtr& field, std::int64_t k);

  const FieldPtr& field() const noexcept { return field_; }
  std::int64_t order() const noexcept { return field_->order(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, const Rational& rhs) { return lhs *= rhs; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend bool operator!=(const Cyclotomic& lhs, const Cyclotomic& rhs) { return !(lhs == rhs); }

  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const;

  /// Multiplicative inverse by solving the multiplication-by-x system over Q.
  /// Throws Errc::DivisionByZero on zero.
  Cyclotomic inverse() const;

  std::complex<long double> to_complex() const;

 private:
  void check_same_field(const Cyclotomic& other) const;

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

/// Free-function form: zeta_N^k with k taken mod N.
Cyclotomic root_of_unity(std::int64_t k, std::int64_t N);

/// The value a + b / sqrt(R) with a, b in Q(zeta_N) and radicand R = N.
///
/// When sqrt(N) itself lies in Q(zeta_N) (every positive fundamental
/// discriminant, for instance) the pair (a, b) is not unique; equality and
/// inversion go through the folded value a + b sqrt(N) / N.
class CycExt {
 public:
  explicit CycExt(FieldPtr field);
  explicit CycExt(Cyclotomic a);
  CycExt(Cyclotomic a, Cyclotomic b);

  /// The element 1 / sqrt(N).
  static CycExt inv_sqrt(const FieldPtr& field);

  const Cyclotomic& a() const noexcept { return a_; }
  const Cyclotomic& b() const noexcept { return b_; }
  std::int64_t radicand() const noexcept { return a_.order(); }
  const FieldPtr& field() const noexcept { return a_.field(); }

  bool is_zero() const;

  CycExt& operator+=(const CycExt& rhs);
  CycExt& operator-=(const CycExt& rhs);
  CycExt& operator*=(const CycExt& rhs);

  friend CycExt operator+(CycExt lhs, const CycExt& rhs) { return lhs += rhs; }
  friend CycExt operator-(CycExt lhs, const CycExt& rhs) { return lhs -= rhs; }
  friend CycExt operator*(const CycExt& lhs, const CycExt& rhs);
  CycExt operator-() const;

  friend bool operator==(const CycExt& lhs, const CycExt& rhs);
  friend bool operator!=(const CycExt& lhs, const CycExt& rhs) { return !(lhs == rhs); }

  /// zeta -> zeta^{-1}; 1/sqrt(N) is fixed.
  CycExt conj() const;

  /// Throws Errc::DivisionByZero on zero.
  CycExt inverse() const;

  /// a + b sqrt(N) / N as an element of Q(zeta_N), when sqrt(N) lies there.
  std::optional<Cyclotomic> folded() const;

  /// Complex value, accurate to 10^(1 - digits). Supports 15 <= digits <= 18.
  std::complex<long double> to_complex(int digits = 15) const;

 private:
  Cyclotomic a_;
  Cyclotomic b_;
};

}  // namespace weilform
