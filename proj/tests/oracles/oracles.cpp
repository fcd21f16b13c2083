#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

std::int64_t pmod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Q c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("division was not exact");
  return q;
}

}  // namespace

Poly cyclotomic_by_division(std::int64_t N) {
  Poly p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = -1;
  p[N] = 1;
  for (std::int64_t d = 1; d < N; ++d)
    if (N % d == 0) p = poly_div_exact(p, cyclotomic_by_division(d));
  return p;
}

Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Q c = a.back() / b.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  return a;
}

Poly power_mod_cyclotomic(std::int64_t k, std::int64_t N) {
  const Poly phi = cyclotomic_by_division(N);
  Poly x(static_cast<std::size_t>(pmod(k, N)) + 1, 0);
  x.back() = 1;
  Poly r = poly_rem(x, phi);
  r.resize(phi.size() - 1, 0);
  return r;
}

int legendre_by_squares(std::int64_t a, std::int64_t p) {
  a = pmod(a, p);
  if (a == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -1;
  }
  for (std::int64_t p = 2; n > 1; ++p) {
    while (n % p == 0) {
      n /= p;
      if (p == 2) {
        if (a % 2 == 0) return 0;
        const std::int64_t r = pmod(a, 8);
        result *= (r == 1 || r == 7) ? 1 : -1;
      } else {
        result *= legendre_by_squares(a, p);
      }
    }
  }
  return result;
}

std::int64_t sigma_naive(std::int64_t n, int k) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    std::int64_t t = 1;
    for (int i = 0; i < k; ++i) t *= d;
    s += t;
  }
  return s;
}

std::vector<Z> euler_power_direct(std::int64_t d, std::int64_t r, std::int64_t terms) {
  std::vector<Z> out(static_cast<std::size_t>(terms), 0);
  out[0] = 1;
  auto mul_factor = [&](std::int64_t step) {  // times (1 - q^step)
    for (std::int64_t i = terms - 1; i >= step; --i) out[i] -= out[i - step];
  };
  auto div_factor = [&](std::int64_t step) {  // times 1/(1 - q^step)
    for (std::int64_t i = step; i < terms; ++i) out[i] += out[i - step];
  };
  for (std::int64_t n = 1; n * d < terms; ++n)
    for (std::int64_t k = 0; k < std::llabs(r); ++k) r > 0 ? mul_factor(n * d) : div_factor(n * d);
  return out;
}

std::map<std::int64_t, std::int64_t> norm_multiset(std::int64_t n1) {
  // Gram matrix of the trace form Tr(x conj(y)) on an integral basis
  Q g00, g01, g11;
  std::int64_t N = 0;
  if (pmod(n1, 4) == 1) {
    g00 = 2, g01 = 1, g11 = Q(1 - n1, 2);
    N = n1;
  } else {
    g00 = 2, g01 = 0, g11 = -2 * n1;
    N = 4 * n1;
  }
  g11.canonicalize();
  const Q det = g00 * g11 - g01 * g01;
  // G^{-1} = adj / det
  const Q i00 = g11 / det, i01 = -g01 / det, i11 = g00 / det;
  std::set<std::pair<Q, Q>> seen;
  std::map<std::int64_t, std::int64_t> counts;
  auto frac_part = [](Q x) {
    Z fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Q out = x - fl;
    out.canonicalize();
    return out;
  };
  for (std::int64_t y0 = 0; y0 < N; ++y0) {
    for (std::int64_t y1 = 0; y1 < N; ++y1) {
      const Q x0 = frac_part(i00 * y0 + i01 * y1), x1 = frac_part(i01 * y0 + i11 * y1);
      if (!seen.insert({x0, x1}).second) continue;
      const Q q = (g00 * x0 * x0 + 2 * g01 * x0 * x1 + g11 * x1 * x1) / 2;
      const Q nq = frac_part(q) * N;
      if (nq.get_den() != 1) throw std::logic_error("N q not integral");
      counts[nq.get_num().get_si()]++;
    }
  }
  return counts;
}

Q bernoulli2_sum(std::int64_t f, const std::vector<int>& chi) {
  Q s = 0;
  for (std::int64_t a = 1; a <= f; ++a) {
    Q x(a, f);
    x.canonicalize();
    s += chi[static_cast<std::size_t>(a % f)] * (x * x - x + Q(1, 6));
  }
  return s * f;
}

std::size_t rank_bareiss(const std::vector<std::vector<Q>>& rows) {
  std::vector<std::vector<Z>> m;
  for (const auto& row : rows) {
    Z l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Z> r;
    for (const auto& q : row) r.push_back(Z(q * l));
    m.push_back(r);
  }
  const std::size_t R = m.size(), C = R ? m[0].size() : 0;
  std::size_t rank = 0;
  Z prev = 1;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && m[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j) m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

ComplexWeil complex_weil(const std::vector<std::int64_t>& norm_num, const std::vector<std::vector<std::int64_t>>& bilinear_num,
                         std::int64_t N) {
  const std::size_t n = norm_num.size();
  const long double tau = 2 * std::numbers::pi_v<long double>;
  auto e = [&](std::int64_t k) {
    const long double t = tau * static_cast<long double>(k) / static_cast<long double>(N);
    return std::complex<long double>(std::cos(t), std::sin(t));
  };
  ComplexWeil w;
  w.S.assign(n, std::vector<std::complex<long double>>(n));
  w.T.assign(n, std::vector<std::complex<long double>>(n));
  const long double inv = 1 / std::sqrt(static_cast<long double>(N));
  for (std::size_t d = 0; d < n; ++d) {
    w.T[d][d] = e(norm_num[d]);
    for (std::size_t g = 0; g < n; ++g) w.S[d][g] = inv * e(-bilinear_num[g][d]);
  }
  return w;
}

std::array<std::int64_t, 4> mat_mul(const std::array<std::int64_t, 4>& x, const std::array<std::int64_t, 4>& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

}  // namespace oracle
