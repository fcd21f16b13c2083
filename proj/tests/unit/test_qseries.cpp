#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "weilform/qseries.hpp"

using namespace weilform;

namespace {

QExpansion random_series(std::mt19937& rng, std::int64_t den, std::int64_t lo, std::int64_t trunc) {
  std::uniform_int_distribution<int> c(-6, 6);
  QExpansion f(den, trunc);
  for (std::int64_t n = lo; n < trunc; ++n) f.set(n, frac(c(rng), 1 + std::abs(c(rng))));
  if (f.coeff(lo) == 0) f.set(lo, 1);
  return f;
}

}  // namespace

TEST_SUITE("qseries") {
  TEST_CASE("arithmetic") {
    const QExpansion a = QExpansion::from_terms(10, {{-1, 1}, {0, 1}});
    const QExpansion b = QExpansion::from_terms(10, {{0, -1}});
    CHECK((a + b) == QExpansion::from_terms(10, {{-1, 1}}));
    CHECK(series_arith(a, b, SeriesOp::Add) == a + b);

    QExpansion geo(1, 30);
    for (int n = 0; n < 30; ++n) geo.set(n, 1);
    const QExpansion one_minus_q = QExpansion::from_terms(1000, {{0, 1}, {1, -1}});
    const QExpansion prod = one_minus_q * geo;
    CHECK(prod.trunc() == 30);
    CHECK(prod.coeffs() == QExpansion::from_terms(30, {{0, 1}}).coeffs());
    CHECK((QExpansion::from_terms(1000, {{0, 1}}) / one_minus_q).truncated(30) == geo);
  }

  TEST_CASE("truncation bookkeeping") {
    const QExpansion x = QExpansion::from_terms(10, {{-2, 1}});
    const QExpansion y = QExpansion::from_terms(8, {{3, 2}});
    CHECK((x * y).trunc() == std::min<std::int64_t>(10 + 3, 8 - 2));
    CHECK((x / y).trunc() == std::min<std::int64_t>(10 - 3, 8 - 6 - 2));
    const QExpansion fine(24, 48, {{1, 1}});
    const QExpansion sum = fine + x;
    CHECK(sum.den() == 24);
    CHECK(sum.trunc() == 48);
    CHECK(sum.coeff_at(-2) == 1);
    CHECK(sum.coeff_at(frac(1, 24)) == 1);
    CHECK(errc_of([&] { sum.coeff(48); }) == Errc::InsufficientPrecision);
    CHECK(errc_of([] { (void)(QExpansion::from_terms(5, {{0, 1}}) / QExpansion(1, 5)); }) == Errc::DivisionByNonUnit);
  }

  TEST_CASE("ring properties on random series") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const QExpansion x = random_series(rng, 1, -2, 15), y = random_series(rng, 2, 0, 30), z = random_series(rng, 3, 1, 40);
      CHECK((x * y).agrees_with(y * x));
      CHECK(((x * y) * z).agrees_with(x * (y * z)));
      CHECK((x * (y + z)).agrees_with(x * y + x * z));
      const QExpansion back = y * (x / y);
      CHECK(back.agrees_with(x));
      CHECK(frac(back.trunc(), back.den()) <= frac(x.trunc(), x.den()));
    }
    const QExpansion unit = eta_quotient({{1, 24}}, 40);
    CHECK((unit / unit).agrees_with(QExpansion::from_terms(40, {{0, 1}})));
  }

  TEST_CASE("U(m) and scaling") {
    QExpansion ones(1, 40);
    for (int n = 0; n < 40; ++n) ones.set(n, 1);
    CHECK(u_operator(ones, 1) == ones);
    CHECK(u_operator(ones, 2).coeffs() == ones.truncated(20).coeffs());
    CHECK(u_operator(ones, 2).trunc() == 20);
    const QExpansion E2 = e2_series(60);
    CHECK(u_operator(E2, 3).coeff(1) == -24 * oracle::sigma_naive(3, 1));
    CHECK(u_operator(E2, 3).coeff(1) == -96);
    CHECK(scale_exponents(QExpansion::from_terms(5, {{1, 1}}), 3) == QExpansion::from_terms(15, {{3, 1}}));
    CHECK(scale_exponents(E2, 1) == E2);
    CHECK(u_operator(scale_exponents(E2, 5), 5) == E2);
    CHECK(errc_of([] { u_operator(QExpansion(2, 10), 2); }) == Errc::FractionalExponents);
  }

  TEST_CASE("E2 and frak E2") {
    const QExpansion E2 = e2_series(100);
    CHECK(E2.coeff(0) == 1);
    CHECK(E2.coeff(1) == -24);
    CHECK(E2.coeff(6) == -24 * 12);
    for (int n = 1; n < 100; ++n) CHECK(E2.coeff(n) == -24 * oracle::sigma_naive(n, 1));
    const QExpansion e = frak_e2(100);
    CHECK(e.trunc() == 100);
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == -1);
    CHECK(e.coeff(3) == 5);
    for (int n = 1; n < 100; ++n) {
      auto s = [](int m) { return m > 0 ? oracle::sigma_naive(m, 1) : 0; };
      const std::int64_t direct =
          -24 * (s(n) - 9 * (n % 3 ? 0 : s(n / 3)) - 4 * (n % 4 ? 0 : s(n / 4)) + 36 * (n % 12 ? 0 : s(n / 12)));
      CHECK(e.coeff(n) * 24 == direct);
    }
  }

  TEST_CASE("eta quotients") {
    CHECK(eta_quotient({}, 10) == QExpansion::from_terms(10, {{0, 1}}));
    const QExpansion delta = eta_quotient({{1, 24}}, 50);
    CHECK(delta.den() == 1);
    CHECK(delta.coeff(1) == 1);
    CHECK(delta.coeff(2) == -24);
    CHECK(delta.coeff(3) == 252);
    CHECK(delta.coeff(11) == 534612);  // tau(11)
    const auto direct = oracle::euler_power_direct(1, 24, 50);
    for (int n = 1; n < 50; ++n) CHECK(delta.coeff(n) == Rational(direct[n - 1]));

    const EtaSpec h2 = {{1, 2}, {3, -2}, {4, 1}, {6, 2}, {12, 1}};
    const QExpansion H2 = eta_quotient(h2, 60);
    CHECK(H2.den() == 1);
    CHECK(H2.valuation() == 1);
    CHECK(H2.has_integer_coefficients());

    // multiplicativity in the spec and agreement with the direct product
    const EtaSpec a = {{1, 2}, {3, -2}}, b = {{4, 1}, {6, 2}, {12, 1}};
    CHECK(eta_quotient(a, 60).agrees_with(eta_quotient(a, 60)));
    CHECK((eta_quotient(a, 60) * eta_quotient(b, 60)).agrees_with(H2));
    std::vector<oracle::Z> prod(60, 0);
    prod[0] = 1;
    for (const auto& [d, r] : h2) {
      const auto f = oracle::euler_power_direct(d, r, 60);
      std::vector<oracle::Z> next(60, 0);
      for (int i = 0; i < 60; ++i)
        for (int j = 0; i + j < 60; ++j) next[i + j] += prod[i] * f[j];
      prod = next;
    }
    for (int n = 0; n < 60; ++n) CHECK(H2.coeff(n + 1) == Rational(prod[n]));

    const QExpansion eta = eta_quotient({{1, 1}}, 30);
    CHECK(eta.den() == 24);
    CHECK(eta.valuation() == 1);
    CHECK(eta.coeff_at(frac(1, 24)) == 1);
    CHECK(eta.coeff_at(frac(25, 24)) == -1);
    CHECK(parse_eta_spec("1:2,3:-2,4:1,6:2,12:1") == h2);
    CHECK(errc_of([] { parse_eta_spec("1:2,x"); }) == Errc::ParseError);
    CHECK(errc_of([] { parse_eta_spec("0:1"); }) == Errc::ParseError);
  }

  TEST_CASE("cusps of Gamma_0(N)") {
    CHECK(cusps_gamma0(12).size() == 6);
    CHECK(cusps_gamma0(1).size() == 1);
    for (std::int64_t N : {4, 8, 9, 12, 16, 18, 25, 36}) {
      std::int64_t expected = 0;
      for (std::int64_t d = 1; d <= N; ++d) {
        if (N % d) continue;
        const std::int64_t g = std::gcd(d, N / d);
        std::int64_t phi = 0;
        for (std::int64_t k = 1; k <= g; ++k) phi += std::gcd(k, g) == 1;
        expected += phi;
      }
      const auto cusps = cusps_gamma0(N);
      CHECK(static_cast<std::int64_t>(cusps.size()) == expected);
      for (std::size_t i = 0; i < cusps.size(); ++i)
        for (std::size_t j = 0; j < cusps.size(); ++j) CHECK(cusps_equivalent(cusps[i], cusps[j], N) == (i == j));
    }
    CHECK(cusps_equivalent({1, 5}, {1, 1}, 4));
    CHECK(cusps_equivalent({1, 0}, {1, 12}, 12));
  }

  TEST_CASE("eta cusp orders") {
    const auto orders = eta_cusp_orders({{1, 2}, {3, -2}, {4, 1}, {6, 2}, {12, 1}}, 12);
    std::map<std::string, Rational> got;
    for (const auto& o : orders) got[o.cusp.to_string()] = o.order;
    CHECK(got.at("infinity") == 1);
    CHECK(got.at("0") == 1);
    CHECK(got.at("1/3") == 0);
    CHECK(got.at("1/4") == 1);
    CHECK(got.at("1/2") == frac(1, 2));
    CHECK(got.at("1/6") == frac(1, 2));
    // Delta has a simple zero everywhere on SL2(Z)
    CHECK(eta_cusp_orders({{1, 24}}, 1).front().order == 1);
    CHECK(errc_of([] { eta_cusp_orders({{5, 1}}, 12); }) == Errc::InvalidDivisor);
  }
}
