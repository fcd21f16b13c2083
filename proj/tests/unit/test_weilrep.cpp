#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "weilform/ntheory.hpp"
#include "weilform/weilrep.hpp"

using namespace weilform;

namespace {

std::array<std::int64_t, 4> as_array(const SL2Matrix& m) { return {m.a, m.b, m.c, m.d}; }

// Random element of SL2(Z) from a random bottom row.
SL2Matrix random_sl2(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  for (;;) {
    const std::int64_t c = dist(rng), d = dist(rng);
    std::int64_t x = 0, y = 0;
    if (nt::ext_gcd(c, d, x, y) != 1) continue;  // c x + d y = 1
    // [[y, -x], [c, d]] has det y d + x c = 1
    SL2Matrix m{y, -x, c, d};
    const std::int64_t k = dist(rng) % 50;
    return SL2Matrix::T(k) * m;
  }
}

}  // namespace

TEST_SUITE("weilrep") {
  TEST_CASE("word decomposition") {
    CHECK(decompose_word(SL2Matrix::identity()).empty());
    CHECK(decompose_word(SL2Matrix::T(3)) == SL2Word{{WordToken::Kind::T, 3}});
    CHECK(decompose_word(SL2Matrix::S()) == SL2Word{{WordToken::Kind::S, 1}});
    CHECK(errc_of([] { decompose_word({2, 0, 0, 1}); }) == Errc::NotUnimodular);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      const SL2Matrix m = random_sl2(rng, 1000000);
      for (Rounding r : {Rounding::Nearest, Rounding::Floor}) {
        const SL2Word w = decompose_word(m, r);
        std::array<std::int64_t, 4> acc{1, 0, 0, 1};
        for (const auto& t : w)
          acc = oracle::mat_mul(acc, t.kind == WordToken::Kind::S ? std::array<std::int64_t, 4>{0, -1, 1, 0}
                                                                   : std::array<std::int64_t, 4>{1, t.power, 0, 1});
        CHECK(acc == as_array(m));
        if (r == Rounding::Nearest) CHECK(w.size() <= 100);
      }
    }
  }

  TEST_CASE("generators match a floating-point construction") {
    for (std::int64_t n1 : {2, 3, 5}) {
      const auto D = DiscriminantForm::build(n1);
      const WeilRepresentation rep(D);
      std::vector<std::int64_t> norms;
      std::vector<std::vector<std::int64_t>> bil(D.size(), std::vector<std::int64_t>(D.size()));
      for (std::size_t i = 0; i < D.size(); ++i) {
        norms.push_back(D.norm_num(i));
        for (std::size_t j = 0; j < D.size(); ++j) bil[i][j] = D.bilinear_num(i, j);
      }
      const auto w = oracle::complex_weil(norms, bil, D.level());
      const WeilMatrix S = rep.rho_S(), T = rep.rho_T();
      for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t j = 0; j < D.size(); ++j) {
          CHECK(std::abs(S(i, j).to_complex() - w.S[i][j]) < 1e-14L);
          CHECK(std::abs(T(i, j).to_complex() - w.T[i][j]) < 1e-14L);
        }
    }
  }

  TEST_CASE("specific entries") {
    const auto D = DiscriminantForm::build(3);
    const WeilRepresentation rep(D);
    const WeilMatrix T = rep.rho_T();
    CHECK(T(0, 0) == CycExt(Cyclotomic(rep.field(), Rational(1))));
    const std::size_t g2 = D.index_of(D.make({1, 0, 0}));
    CHECK(T(g2, g2) == CycExt(Cyclotomic::root_of_unity(rep.field(), 3)));
    const WeilMatrix S = rep.rho_S();
    for (std::size_t d = 0; d < D.size(); ++d) CHECK(S(d, 0) == CycExt::inv_sqrt(rep.field()));
    const WeilMatrix S2 = S * S;
    const WeilMatrix minus_i = rep.rho(SL2Matrix{-1, 0, 0, -1});
    CHECK(S2 == minus_i);
    for (std::size_t g = 0; g < D.size(); ++g) {
      const std::size_t neg = D.index_of(D.negate(D.element(g)));
      for (std::size_t d = 0; d < D.size(); ++d) CHECK(S2(d, g).is_zero() == (d != neg));
      CHECK(S2(neg, g) == CycExt(Cyclotomic(rep.field(), Rational(1))));
    }
    CHECK(rep.rho(SL2Matrix::identity()) == WeilMatrix::identity(rep.field(), D.size()));
  }

  TEST_CASE("relations and unitarity") {
    for (std::int64_t n1 : {2, 3, 5}) {
      const auto D = DiscriminantForm::build(n1);
      const WeilRepresentation rep(D);
      const WeilMatrix I = WeilMatrix::identity(rep.field(), D.size());
      const WeilMatrix S = rep.rho_S(), T = rep.rho_T();
      CHECK(S.power(4) == I);
      const WeilMatrix ST = S * T;
      CHECK(ST * ST * ST == S * S);
      CHECK(T.power(D.level()) == I);
      CHECK(T.is_diagonal());
      CHECK(S.is_unitary());
      CHECK(T.is_unitary());
      CHECK(rep.rho(SL2Matrix::S() * SL2Matrix::T()) == ST);
      CHECK(rep.rho(SL2Matrix::S() * SL2Matrix::T()).power(3) == rep.rho(SL2Matrix::S()).power(2));
    }
  }

  TEST_CASE("word independence and homomorphism") {
    const auto D = DiscriminantForm::build(3);
    const WeilRepresentation rep(D);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
      const SL2Matrix m = random_sl2(rng, 40);
      const WeilMatrix a = rep.rho(decompose_word(m, Rounding::Nearest));
      CHECK(a == rep.rho(decompose_word(m, Rounding::Floor)));
      // the same matrix as M S^4
      SL2Word longer = decompose_word(m);
      longer.insert(longer.end(), 4, WordToken{WordToken::Kind::S, 1});
      CHECK(evaluate_word(longer) == m);
      CHECK(rep.rho(longer) == a);
      const SL2Matrix n = random_sl2(rng, 40);
      CHECK(rep.rho(m * n) == a * rep.rho(n));
      CHECK(a.is_unitary());
    }
  }

  TEST_CASE("dual representation is the representation of D[-1]") {
    const auto D = DiscriminantForm::build(3);
    const WeilRepresentation rep(D), neg(D.negated());
    for (const SL2Matrix& m : {SL2Matrix::S(), SL2Matrix::T(), SL2Matrix::S() * SL2Matrix::T(5)}) {
      const WeilMatrix dual = rep.dual_rho(m);
      CHECK(dual == neg.rho(m));
      CHECK(dual.is_unitary());
    }
    const WeilMatrix dT = rep.dual_rho(SL2Matrix::T());
    for (std::size_t i = 0; i < D.size(); ++i)
      CHECK(dT(i, i) == CycExt(Cyclotomic::root_of_unity(rep.field(), -D.norm_num(i))));
  }
}
