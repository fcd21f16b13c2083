#include "weilform/chars.hpp"

#include <cmath>
#include <string>

#include "weilform/errors.hpp"
#include "weilform/ntheory.hpp"

namespace weilform {

std::int64_t fundamental_discriminant(std::int64_t n1) {
  if (n1 <= 1) throw Error(Errc::OutOfRange, "N1 must be > 1, got " + std::to_string(n1));
  if (!nt::is_squarefree(n1)) throw Error(Errc::NotSquarefree, "N1 = " + std::to_string(n1));
  return (n1 % 4 == 1) ? n1 : 4 * n1;
}

CharData CharData::from_n1(std::int64_t n1) {
  CharData c;
  c.n1 = n1;
  c.N = fundamental_discriminant(n1);
  for (const auto& pp : nt::factor(c.N)) {
    LocalCharacter lc{};
    lc.prime = pp.prime;
    lc.modulus = 1;
    for (int i = 0; i < pp.exponent; ++i) lc.modulus *= pp.prime;
    if (pp.prime != 2) {
      lc.tag = LocalTag::OddLegendre;
      lc.disc = (pp.prime % 4 == 1) ? pp.prime : -pp.prime;
    } else if (n1 % 4 == 3) {
      lc.tag = LocalTag::Minus4;
      lc.disc = -4;
    } else if (n1 % 8 == 2) {
      lc.tag = LocalTag::Plus8;
      lc.disc = 8;
    } else {
      lc.tag = LocalTag::Minus8;
      lc.disc = -8;
    }
    lc.gauss_unit_is_i = lc.disc < 0;
    c.components.push_back(lc);
  }
  return c;
}

std::vector<std::int64_t> CharData::primes() const {
  std::vector<std::int64_t> out;
  for (const auto& lc : components) out.push_back(lc.prime);
  return out;
}

const LocalCharacter& CharData::component(std::int64_t p) const {
  for (const auto& lc : components)
    if (lc.prime == p) return lc;
  throw Error(Errc::InvalidDivisor, std::to_string(p) + " is not a prime divisor of " + std::to_string(N));
}

int kronecker(std::int64_t D, std::int64_t n) { return nt::kronecker(D, n); }

int chi(const CharData& c, std::int64_t n) { return nt::kronecker(c.N, n); }

// chi_p is the Kronecker character of the p-part discriminant; at n = -1
// this gives sign(disc) = chi_p(-1).
int chi_p(const CharData& c, std::int64_t p, std::int64_t n) {
  return nt::kronecker(c.component(p).disc, n);
}

int chi_component(const CharData& c, std::int64_t m, std::int64_t n) {
  if (m <= 0 || c.N % m != 0)
    throw Error(Errc::InvalidDivisor, std::to_string(m) + " does not divide " + std::to_string(c.N));
  int value = 1;
  for (const auto& lc : c.components)
    if (m % lc.prime == 0) value *= nt::kronecker(lc.disc, n);
  return value;
}

int chi_complement(const CharData& c, std::int64_t m, std::int64_t n) {
  if (m <= 0 || c.N % m != 0)
    throw Error(Errc::InvalidDivisor, std::to_string(m) + " does not divide " + std::to_string(c.N));
  int value = 1;
  for (const auto& lc : c.components)
    if (m % lc.prime != 0) value *= nt::kronecker(lc.disc, n);
  return value;
}

SignVector SignVector::negated() const {
  SignVector out = *this;
  for (auto& [p, s] : out.signs) s = -s;
  return out;
}

SignVectors sign_vectors(const CharData& c) {
  SignVectors out;
  for (const auto& lc : c.components) {
    out.epsilon_star.signs[lc.prime] = 1;
    int e = 0;
    if (lc.prime != 2) {
      e = nt::kronecker(lc.disc, -1);
    } else if (c.n1 % 4 == 3) {
      e = -1;
    } else {
      // N1 = 2 mod 4: chi_{N1/2}(-1), the product over the odd primes.
      e = 1;
      for (const auto& other : c.components)
        if (other.prime != 2) e *= nt::kronecker(other.disc, -1);
    }
    out.epsilon.signs[lc.prime] = e;
  }
  return out;
}

Cyclotomic gauss_sum(const CharData& c, std::int64_t p) {
  const auto& lc = c.component(p);
  auto field = CyclotomicField::make(lc.modulus);
  std::vector<Rational> buffer(static_cast<std::size_t>(lc.modulus), 0);
  for (std::int64_t a = 0; a < lc.modulus; ++a) buffer[static_cast<std::size_t>(a)] = nt::kronecker(lc.disc, a);
  return Cyclotomic(field, field->reduce_exponents(buffer));
}

GaussSumCheck gauss_sum_check(const CharData& c, std::int64_t p) {
  const auto& lc = c.component(p);
  GaussSumCheck out{gauss_sum(c, p), 0, false, {}, false};
  Cyclotomic sq = out.value * out.value;
  if (sq.is_rational()) {
    out.square = sq.coeffs()[0];
    out.square_ok = out.square == Rational(nt::kronecker(lc.disc, -1) * lc.modulus);
  }
  out.embedding = out.value.to_complex();
  const long double root = std::sqrt(static_cast<long double>(lc.modulus));
  const std::complex<long double> expected = lc.gauss_unit_is_i ? std::complex<long double>(0, root)
                                                                 : std::complex<long double>(root, 0);
  out.embedding_ok = std::abs(out.embedding - expected) < 1e-12L;
  return out;
}

}  // namespace weilform
