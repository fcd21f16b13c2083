#include "weilform/eisenstein.hpp"

#include "weilform/errors.hpp"
#include "weilform/ntheory.hpp"

namespace weilform {

std::vector<Rational> bernoulli_numbers(int n) {
  std::vector<Rational> B(static_cast<std::size_t>(n) + 1);
  B[0] = 1;
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    Integer binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += binom * B[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    B[m] = -s / (m + 1);
  }
  return B;
}

Rational bernoulli_polynomial(int n, const Rational& x) {
  const auto B = bernoulli_numbers(n);
  Rational out = 0;
  Integer binom = 1;
  std::vector<Rational> pw(static_cast<std::size_t>(n) + 1);
  pw[0] = 1;
  for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * x;
  for (int k = 0; k <= n; ++k) {
    out += binom * B[k] * pw[n - k];
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

Rational gen_bernoulli(int n, std::int64_t modulus, const std::function<int(std::int64_t)>& chi) {
  if (n < 1) throw Error(Errc::OutOfRange, "generalized Bernoulli numbers need n >= 1");
  if (modulus < 1) throw Error(Errc::OutOfRange, "modulus must be positive");
  Rational s = 0;
  for (std::int64_t a = 1; a <= modulus; ++a) {
    const int c = chi(a);
    if (c != 0) s += c * bernoulli_polynomial(n, frac(a, modulus));
  }
  Integer f_pow;
  mpz_pow_ui(f_pow.get_mpz_t(), Integer(static_cast<long>(modulus)).get_mpz_t(), static_cast<unsigned long>(n - 1));
  return s * f_pow;
}

Rational gen_bernoulli(int n, const CharData& c) {
  return gen_bernoulli(n, c.N, [&c](std::int64_t a) { return chi(c, a); });
}

LValue l_value(std::int64_t s, const CharData& c) {
  if (s > 0) throw Error(Errc::PositiveArgument, "L-values are only computed at s <= 0");
  const int n = static_cast<int>(1 - s);
  return {-gen_bernoulli(n, c) / n, c.N, s};
}

std::vector<std::int64_t> eisenstein_indices(const CharData& c) {
  std::vector<std::int64_t> out;
  for (std::int64_t m : nt::divisors(c.N))
    if (nt::m_part(c.N, m) == m) out.push_back(m);
  return out;
}

QExpansion eisenstein_m(const CharData& c, std::int64_t w, std::int64_t m, std::int64_t trunc) {
  if (w < 2 || w % 2 != 0) throw Error(Errc::OutOfRange, "weight must be even and >= 2");
  if (m < 1 || c.N % m != 0 || nt::m_part(c.N, m) != m)
    throw Error(Errc::InvalidDivisor, "m = " + std::to_string(m) + " is not an exact divisor N_m of " + std::to_string(c.N));
  QExpansion out(1, trunc);
  if (trunc <= 0) return out;
  if (m == 1) out.set(0, l_value(1 - w, c).value);
  for (std::int64_t n = 1; n < trunc; ++n) {
    Integer s = 0;
    for (std::int64_t d : nt::divisors(n)) {
      const int sign = chi_component(c, m, n / d) * chi_complement(c, m, d);
      if (sign == 0) continue;
      Integer dp;
      mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(w - 1));
      s += sign * dp;
    }
    if (s != 0) out.set(n, Rational(2 * s));
  }
  return out;
}

QExpansion e_epsilon_star(const CharData& c, std::int64_t w, std::int64_t trunc) {
  const LValue L = l_value(1 - w, c);
  if (L.value == 0) throw Error(Errc::ZeroLValue, "L(" + std::to_string(1 - w) + ", chi) vanishes");
  QExpansion sum(1, trunc);
  for (std::int64_t m : eisenstein_indices(c)) sum += eisenstein_m(c, w, m, trunc);
  return Rational(1 / L.value) * sum;
}

std::size_t exact_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool basis_independence_check(const CharData& c, std::int64_t w, std::int64_t trunc) {
  std::vector<std::vector<Rational>> rows;
  for (std::int64_t m : eisenstein_indices(c)) {
    const QExpansion e = eisenstein_m(c, w, m, trunc);
    std::vector<Rational> row;
    for (std::int64_t n = 0; n < trunc; ++n) row.push_back(e.coeff(n));
    rows.push_back(std::move(row));
  }
  return exact_rank(std::move(rows)) == (std::size_t{1} << nt::omega(c.N));
}

}  // namespace weilform
