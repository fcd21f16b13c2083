#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "weilform/correspond.hpp"
#include "weilform/obstruct.hpp"

using namespace weilform;

namespace {

const QExpansion& f1() {
  static const QExpansion f = build_f1_level12(200);
  return f;
}

bool epsilon_allowed(const CharData& c, const SignVector& eps, std::int64_t r) {
  for (std::int64_t p : c.primes())
    if (chi_p(c, p, r) == -eps[p]) return false;
  return true;
}

}  // namespace

TEST_SUITE("correspond") {
  TEST_CASE("s weights") {
    CHECK(s_weight(0, 12) == 4);
    CHECK(s_weight(-1, 12) == 1);
    CHECK(s_weight(6, 12) == 4);
    CHECK(s_weight(3, 12) == 2);
    CHECK(s_weight(8, 12) == 2);
    CHECK(s_weight(5, 5) == 2);
  }

  TEST_CASE("epsilon condition") {
    const CharData c = CharData::from_n1(3);
    const SignVector eps = sign_vectors(c).epsilon;
    const QExpansion bad = QExpansion::from_terms(10, {{5, 1}});
    const DeltaCheck chk = delta_condition_check(bad, eps, c);
    CHECK_FALSE(chk.ok);
    CHECK(chk.first_violation == 5);
    CHECK(delta_condition_check(f1(), eps, c).ok);
    CHECK(errc_of([&] { lift_psi(bad, DiscriminantForm::build(3), 0); }) == Errc::DeltaConditionViolated);
    CHECK(errc_of([&] { delta_condition_check(QExpansion(2, 10), eps, c); }) == Errc::FractionalExponents);
  }

  TEST_CASE("realized classes are the epsilon-allowed residues") {
    for (std::int64_t n1 : {2, 3, 5, 7}) {
      const DiscriminantForm D = DiscriminantForm::build(n1);
      const CharData c = CharData::from_n1(n1);
      const SignVector eps = sign_vectors(c).epsilon;
      const auto realized = D.realized_classes();
      for (std::int64_t r = 0; r < D.level(); ++r) {
        const bool is_realized = std::find(realized.begin(), realized.end(), r) != realized.end();
        CHECK_MESSAGE(is_realized == epsilon_allowed(c, eps, r), n1 << " " << r);
      }
    }
  }

  TEST_CASE("lift of f1") {
    const DiscriminantForm D = DiscriminantForm::build(3);
    const VectorForm F = lift_psi(f1(), D, 0);
    CHECK(F.classes.size() == D.realized_classes().size());
    const QExpansion& r11 = F.classes.at(11);
    CHECK(r11.den() == 12);
    CHECK(r11.coeff_at(frac(-1, 12)) == 1);
    const QExpansion& r0 = F.classes.at(0);
    CHECK(r0.coeff_at(0) == 4);
    CHECK(r0.coeff_at(1) == 16);
    CHECK(F.classes.at(2).coeff_at(frac(2, 12)) == 2 * 2);
    for (const auto& [r, comp] : F.classes)
      for (const auto& [n, coeff] : comp.coeffs()) CHECK(((n % 12) + 12) % 12 == r);
    // components through the element index
    for (std::size_t i = 0; i < D.size(); ++i) {
      const std::int64_t r = D.norm_num(i);
      CHECK(F.component(i) == F.classes.at(r));
    }
  }

  TEST_CASE("descend") {
    const DiscriminantForm D = DiscriminantForm::build(3);
    CHECK(descend_phi(lift_psi(f1(), D, 0)) == f1().truncated(descend_phi(lift_psi(f1(), D, 0)).trunc()));
    CHECK(descend_phi(lift_psi(f1(), D, 0)).agrees_with(f1()));

    VectorForm hand{D, 0, {}};
    hand.classes.emplace(11, QExpansion(12, 120, {{-1, 1}}));
    const QExpansion back = descend_phi(hand);
    CHECK(back.coeff(-1) == 1);
    CHECK(back.coeff_at(0) == 0);

    VectorForm unrealized{D, 0, {}};
    unrealized.classes.emplace(1, QExpansion(12, 120, {{1, 1}}));
    CHECK(errc_of([&] { descend_phi(unrealized); }) == Errc::InconsistentComponents);
    VectorForm wrong_residue{D, 0, {}};
    wrong_residue.classes.emplace(11, QExpansion(12, 120, {{1, 1}}));
    CHECK(errc_of([&] { descend_phi(wrong_residue); }) == Errc::InconsistentComponents);
  }

  TEST_CASE("round trip for other fields") {
    for (std::int64_t n1 : {2, 5, 7, 13}) {
      const DiscriminantForm D = DiscriminantForm::build(n1);
      const CharData c = CharData::from_n1(n1);
      const SignVector eps = sign_vectors(c).epsilon;
      // a series built from epsilon-allowed exponents only
      QExpansion f(1, 80);
      for (std::int64_t n = -3; n < 80; ++n)
        if (epsilon_allowed(c, eps, n)) f.set(n, frac(n * n + 1, 3));
      const VectorForm F = lift_psi(f, D, 0);
      CHECK(descend_phi(F).agrees_with(f));
    }
  }

  TEST_CASE("project onto the coprime part") {
    const CharData c = CharData::from_n1(3);
    const SignVector eps = sign_vectors(c).epsilon;
    const QExpansion p = project_coprime(f1(), eps, c);
    for (std::int64_t n = -1; n < 100; ++n) {
      if (std::gcd(n, std::int64_t{12}) == 1) {
        CHECK(p.coeff(n) == f1().coeff(n));
        CHECK(p.is_certified(n));
      }
    }
    CHECK_FALSE(p.is_certified(2));
    const QExpansion killed = project_coprime(QExpansion::from_terms(10, {{5, 1}}), eps, c);
    CHECK(killed.coeff(5) == 0);
    const QExpansion kept = project_coprime(QExpansion::from_terms(10, {{-1, 3}, {1, 3}}), eps, c);
    CHECK(kept.coeff(-1) == 3);
    CHECK(kept.coeff(1) == 0);
  }

  TEST_CASE("numeric transformation law") {
    const VectorForm F = lift_psi(f1(), DiscriminantForm::build(3), 0);
    for (const SL2Matrix& M : {SL2Matrix::S(), SL2Matrix::T(), SL2Matrix::S() * SL2Matrix::T(), SL2Matrix{1, 0, 1, 1}}) {
      const auto rep = numeric_transform_check(F, M, {0.0L, 1.0L}, 1e-6L);
      CHECK(rep.ok);
      CHECK(rep.max_deviation < 1e-9L);
    }
    const auto other = numeric_transform_check(F, SL2Matrix::S(), {0.3L, 1.1L}, 1e-6L);
    CHECK(other.ok);
    VectorForm wrong = F;
    wrong.weight = 2;
    CHECK_FALSE(numeric_transform_check(wrong, SL2Matrix::S(), {0.1L, 1.2L}, 1e-6L).ok);
    CHECK(errc_of([&] { numeric_transform_check(F, SL2Matrix::S(), {0.0L, 0.5L}, 1e-6L); }) == Errc::OutOfRange);
    CHECK(errc_of([&] { numeric_transform_check(F, SL2Matrix{1, 1, 1, 1}, {0.0L, 1.0L}, 1e-6L); }) ==
          Errc::NotUnimodular);
    const VectorForm short_form = lift_psi(build_f1_level12(20), DiscriminantForm::build(3), 0);
    CHECK(errc_of([&] { numeric_transform_check(short_form, SL2Matrix::S(), {0.0L, 1.0L}, 1e-6L); }) ==
          Errc::ConvergenceTooSlow);
  }

  TEST_CASE("evaluate series") {
    const QExpansion f = QExpansion::from_terms(50, {{0, 2}});
    long double tail = 1;
    CHECK(std::abs(evaluate_series(f, {0.0L, 1.0L}, &tail) - std::complex<long double>(2)) < 1e-15L);
    CHECK(tail < 1e-100L);
    const QExpansion q = QExpansion::from_terms(50, {{1, 1}});
    const auto v = evaluate_series(q, {0.0L, 1.0L});
    CHECK(std::abs(v - std::complex<long double>(std::exp(-2 * 3.14159265358979323846264L))) < 1e-15L);
  }
}
