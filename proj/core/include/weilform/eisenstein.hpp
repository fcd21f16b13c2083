#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "weilform/chars.hpp"
#include "weilform/exactnum.hpp"
#include "weilform/qseries.hpp"

namespace weilform {

/// Bernoulli numbers B_0..B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int n);

/// B_n(x).
Rational bernoulli_polynomial(int n, const Rational& x);

/// B_{n,chi} = f^{n-1} sum_{a=1}^{f} chi(a) B_n(a/f) for a character of
/// modulus f.
Rational gen_bernoulli(int n, std::int64_t modulus, const std::function<int(std::int64_t)>& chi);

/// Same for chi_D.
Rational gen_bernoulli(int n, const CharData& c);

struct LValue {
  Rational value;
  std::int64_t N;         // character (N / .)
  std::int64_t argument;  // s <= 0
};

/// L(s, chi_D) = -B_{1-s,chi}/(1-s) for s <= 0. Throws PositiveArgument.
LValue l_value(std::int64_t s, const CharData& c);

/// E_m of weight w for chi_D:
///   delta_{1,m} L(1-w, chi_D) + 2 sum_{n>=1} sum_{d|n} chi_m(n/d) chi'_m(d) d^{w-1} q^n.
/// Throws InvalidDivisor unless m | N and m = N_m, OutOfRange for odd or
/// nonpositive w.
QExpansion eisenstein_m(const CharData& c, std::int64_t w, std::int64_t m, std::int64_t trunc);

/// Divisors m of N with m = N_m, increasing.
std::vector<std::int64_t> eisenstein_indices(const CharData& c);

/// L(1-w, chi_D)^{-1} sum_m E_m. Throws ZeroLValue.
QExpansion e_epsilon_star(const CharData& c, std::int64_t w, std::int64_t trunc);

/// Exact rank of a list of coefficient vectors.
std::size_t exact_rank(std::vector<std::vector<Rational>> rows);

/// Rank of the E_m on q^0 .. q^{trunc-1} equals 2^{omega(N)}.
bool basis_independence_check(const CharData& c, std::int64_t w, std::int64_t trunc);

}  // namespace weilform
