#include "weilform/ntheory.hpp"

#include <cstdlib>
#include <stdexcept>

namespace weilform::nt {

std::vector<PrimePower> factor(std::int64_t n) {
  std::vector<PrimePower> out;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& pp : factor(n)) out.push_back(pp.prime);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int omega(std::int64_t n) { return static_cast<int>(factor(n).size()); }

int moebius(std::int64_t n) {
  int sign = 1;
  for (const auto& pp : factor(n)) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (const auto& pp : factor(n)) result = result / pp.prime * (pp.prime - 1);
  return result;
}

bool is_squarefree(std::int64_t n) {
  for (const auto& pp : factor(n))
    if (pp.exponent > 1) return false;
  return n != 0;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::llabs(a / gcd(a, b) * b);
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t x = 0, y = 0;
  if (ext_gcd(mod(a, m), m, x, y) != 1) throw std::invalid_argument("inverse_mod: not a unit");
  return mod(x, m);
}

std::int64_t sigma(std::int64_t n, int k) {
  std::int64_t total = 0;
  for (std::int64_t d : divisors(n)) {
    std::int64_t term = 1;
    for (int i = 0; i < k; ++i) term *= d;
    total += term;
  }
  return total;
}

std::int64_t m_part(std::int64_t N, std::int64_t m) {
  if (m == 0) return N;
  std::int64_t part = 1;
  for (const auto& pp : factor(N)) {
    if (m % pp.prime != 0) continue;
    for (int i = 0; i < pp.exponent; ++i) part *= pp.prime;
  }
  return part;
}

namespace {

// Jacobi symbol (a / n) for n odd positive, 0 <= a < n.
int jacobi(std::int64_t a, std::int64_t n) {
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return std::llabs(a) == 1 ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    std::int64_t r = mod(a, 8);
    if ((twos % 2 == 1) && (r == 3 || r == 5)) result = -result;
  }
  return result * jacobi(mod(a, n), n);
}

}  // namespace weilform::nt
