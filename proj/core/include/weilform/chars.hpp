#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "weilform/exactnum.hpp"

namespace weilform {

/// Which local character chi_p is: the Legendre symbol at an odd prime, or
/// one of the three nontrivial 2-adic characters of conductor 4 or 8.
enum class LocalTag { OddLegendre, Minus4, Plus8, Minus8 };

struct LocalCharacter {
  std::int64_t prime;
  std::int64_t modulus;  // N_p
  std::int64_t disc;     // p-part discriminant: +-p, -4, 8 or -8
  LocalTag tag;
  bool gauss_unit_is_i;  // W(chi_p) = i sqrt(N_p) rather than sqrt(N_p)
};

/// The Kronecker character chi_D = (N / .) of the real quadratic field
/// Q(sqrt(N1)), with its decomposition into prime-power components.
struct CharData {
  std::int64_t n1 = 0;
  std::int64_t N = 0;
  std::vector<LocalCharacter> components;  // ordered by prime

  static CharData from_n1(std::int64_t n1);

  std::vector<std::int64_t> primes() const;
  const LocalCharacter& component(std::int64_t p) const;
};

/// N1 squarefree > 1 -> fundamental discriminant N. Throws OutOfRange or
/// NotSquarefree.
std::int64_t fundamental_discriminant(std::int64_t n1);

/// Kronecker symbol (D / n); see nt::kronecker for the conventions at
/// n = 0, n < 0 and even n.
int kronecker(std::int64_t D, std::int64_t n);

/// chi_D(n).
int chi(const CharData& c, std::int64_t n);

/// chi_p(n) for a prime p | N.
int chi_p(const CharData& c, std::int64_t p, std::int64_t n);

/// chi_m(n) = prod_{p | m} chi_p(n). Throws InvalidDivisor unless m | N.
int chi_component(const CharData& c, std::int64_t m, std::int64_t n);

/// chi'_m(n) = prod_{p | N, p not dividing m} chi_p(n).
int chi_complement(const CharData& c, std::int64_t m, std::int64_t n);

struct SignVector {
  std::map<std::int64_t, int> signs;

  int operator[](std::int64_t p) const { return signs.at(p); }
  SignVector negated() const;
  friend bool operator==(const SignVector&, const SignVector&) = default;
};

struct SignVectors {
  SignVector epsilon;
  SignVector epsilon_star;
};

SignVectors sign_vectors(const CharData& c);

/// Gauss sum W(chi_p) = sum_{a mod N_p} chi_p(a) e(a / N_p) in Q(zeta_{N_p}).
Cyclotomic gauss_sum(const CharData& c, std::int64_t p);

struct GaussSumCheck {
  Cyclotomic value;
  Rational square;               // W^2, exact (must be rational)
  bool square_ok = false;        // W^2 == chi_p(-1) N_p
  std::complex<long double> embedding;
  bool embedding_ok = false;     // numeric value matches eps_p sqrt(N_p)
  bool ok() const { return square_ok && embedding_ok; }
};

GaussSumCheck gauss_sum_check(const CharData& c, std::int64_t p);

}  // namespace weilform
