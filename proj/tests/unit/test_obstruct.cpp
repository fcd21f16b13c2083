#include <doctest.h>

#include "support.hpp"
#include "weilform/eisenstein.hpp"
#include "weilform/obstruct.hpp"

using namespace weilform;

namespace {

// admissible exponent m > 0 for q^{-m} at level 12: m != -1 mod 4 and m != -1 mod 3
bool admissible_level12(std::int64_t m) { return m % 4 != 3 && m % 3 != 2; }

}  // namespace

TEST_SUITE("obstruct") {
  TEST_CASE("parse principal parts") {
    const PrincipalPart P = PrincipalPart::parse("-1:1,-3:1/2", 3, 0);
    CHECK(P.terms.size() == 2);
    CHECK(P.terms.at(-1) == 1);
    CHECK(P.terms.at(-3) == frac(1, 2));
    CHECK(PrincipalPart::parse("", 3, 0).terms.empty());
    CHECK(errc_of([] { PrincipalPart::parse("-1:x", 3, 0); }) == Errc::ParseError);
    CHECK(errc_of([] { PrincipalPart::parse("2:1", 3, 0); }) == Errc::OutOfRange);
  }

  TEST_CASE("epsilon condition on principal parts") {
    const CharData c = CharData::from_n1(3);
    CHECK(validate_principal_part(PrincipalPart::parse("-1:1", 3, 0), c).ok);
    const PrincipalCheck bad = validate_principal_part(PrincipalPart::parse("-2:1", 3, 0), c);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violations == std::vector<std::int64_t>{-2});
    for (std::int64_t m = 1; m <= 30; ++m) {
      PrincipalPart P{{{-m, 1}}, 0, 3};
      CHECK_MESSAGE(validate_principal_part(P, c).ok == admissible_level12(m), m);
    }
  }

  TEST_CASE("pairing and existence") {
    const CharData c = CharData::from_n1(3);
    const PrincipalPart P = PrincipalPart::parse("-1:1", 3, 0);
    const QExpansion E = e_epsilon_star(c, 2, 30);
    CHECK(obstruction_pairing(P, E, 12) == -4);
    CHECK(obstruction_pairing(PrincipalPart::parse("-1:1,-4:2", 3, 0), E, 12) == -4 + 2 * 2 * -10);
    CHECK(errc_of([&] { existence_check(P, {E}, 12); }) == Errc::NonCuspidalBasis);
    CHECK(errc_of([&] { obstruction_pairing(P, QExpansion::from_terms(10, {{-1, 1}}), 12); }) ==
          Errc::NotHolomorphic);
    CHECK(errc_of([&] { obstruction_pairing(PrincipalPart::parse("-12:1", 3, 0), E.truncated(10), 12); }) ==
          Errc::InsufficientPrecision);

    CHECK(existence_check(P, {}, 12));
    const QExpansion g = QExpansion::from_terms(20, {{1, 1}, {4, 1}});
    CHECK_FALSE(existence_check(P, {g}, 12));
    // 4 * 1 - s(4) * 2 = 0
    CHECK(existence_check(PrincipalPart::parse("-1:4,-4:-1", 3, 0), {QExpansion::from_terms(20, {{1, 1}, {4, 2}})}, 12));
  }

  TEST_CASE("constant terms") {
    const CharData c = CharData::from_n1(3);
    CHECK(constant_term(PrincipalPart::parse("-1:1", 3, 0), c) == 1);
    CHECK(constant_term(PrincipalPart{{}, 0, 3}, c) == 0);
    CHECK(constant_term(PrincipalPart::parse("-3:1/2", 3, 0), c) == 0);
    CHECK(errc_of([] { constant_term(PrincipalPart::parse("-1:1", 2, 0), CharData::from_n1(2)); }) ==
          Errc::UnsupportedCase);
    // N1 = 5, weight 0: E^{eps*} has constant 1 and the pairing picks up b(1)
    const CharData c5 = CharData::from_n1(5);
    const QExpansion E5 = e_epsilon_star(c5, 2, 10);
    CHECK(constant_term(PrincipalPart::parse("-1:1", 5, 0), c5) == -E5.coeff(1) / 2);
  }

  TEST_CASE("f1 at level 12") {
    const QExpansion f = build_f1_level12(200);
    CHECK(f.trunc() == 200);
    CHECK(f.den() == 1);
    CHECK(f.has_integer_coefficients());
    const std::vector<int> expected = {1, 1, 0, 2, 1, 0, 0, -2, 0, -2, 0, 0, 0, 4, 0, 4, -1, 0, 0, -6};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(f.coeff(static_cast<std::int64_t>(i) - 1) == expected[i]);
    const QExpansion H2 = eta_quotient(h2_spec(), 220);
    CHECK((f * H2).agrees_with(frak_e2(200)));
    CHECK(errc_of([] { build_f1_level12(19); }) == Errc::OutOfRange);
    CHECK(constant_term(PrincipalPart{{{-1, f.coeff(-1)}}, 0, 3}, CharData::from_n1(3)) == f.coeff(0));
  }
}
