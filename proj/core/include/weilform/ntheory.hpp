#pragma once

#include <cstdint>
#include <vector>

// Small-integer number theory used throughout: factorization, divisor
// enumeration, the Kronecker symbol and friends. Arguments are expected to
// stay well inside 64-bit range.

namespace weilform::nt {

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

/// Trial-division factorization of |n|; empty for |n| <= 1.
std::vector<PrimePower> factor(std::int64_t n);

std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// Positive divisors of n > 0 in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Number of distinct prime divisors; omega(1) = 0.
int omega(std::int64_t n);

int moebius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
bool is_squarefree(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Mathematical modulus, result in [0, m).
std::int64_t mod(std::int64_t a, std::int64_t m);

/// floor(a / b) and ceil(a / b) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// Extended Euclid: returns g = gcd(a, b) and sets x, y with a x + b y = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

/// sum of d^k over positive divisors d of n > 0, exact for small inputs.
std::int64_t sigma(std::int64_t n, int k);

/// The m-part N_m of N: the largest divisor of N built only from primes
/// dividing m. By convention N_0 = N.
std::int64_t m_part(std::int64_t N, std::int64_t m);

/// Kronecker symbol (a / n), fully extended to n <= 0 and even n:
/// (a / 0) = [|a| == 1], (a / -1) = sign(a) (with (0 / -1) = 1),
/// (a / 2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
int kronecker(std::int64_t a, std::int64_t n);

}  // namespace weilform::nt
