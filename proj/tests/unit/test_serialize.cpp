#include <doctest.h>

#include "support.hpp"
#include "weilform/obstruct.hpp"
#include "weilform/serialize.hpp"

using namespace weilform;

TEST_SUITE("serialize") {
  TEST_CASE("rationals") {
    CHECK(rational_to_string(3) == "3/1");
    CHECK(rational_to_string(frac(-2, 4)) == "-1/2");
    CHECK(rational_from_string("6/4") == frac(3, 2));
    CHECK(rational_from_string("-7") == -7);
    for (const char* bad : {"", "x", "1/0", "1//2", "1.5"})
      CHECK_MESSAGE(errc_of([&] { rational_from_string(bad); }) == Errc::ParseError, bad);
  }

  TEST_CASE("series round trip") {
    QExpansion f = build_f1_level12(60);
    CHECK(series_from_json(to_json(f)) == f);
    QExpansion g(24, 48, {{1, frac(1, 3)}, {25, -1}});
    g.mark_uncertified(25);
    const Json j = to_json(g);
    CHECK(j.at("den") == 24);
    CHECK(series_from_json(j) == g);
    CHECK(series_from_json(Json::parse(j.dump())) == g);
  }

  TEST_CASE("vector form round trip") {
    const VectorForm F = lift_psi(build_f1_level12(40), DiscriminantForm::build(3), 0);
    const VectorForm back = vector_form_from_json(to_json(F));
    CHECK(back.weight == F.weight);
    CHECK(back.form.level() == 12);
    CHECK(back.classes == F.classes);
  }

  TEST_CASE("matrices and field elements") {
    const WeilRepresentation W(DiscriminantForm::build(5));
    const WeilMatrix S = W.rho_S();
    CHECK(weil_matrix_from_json(to_json(S)) == S);
    const CycExt x = S(0, 1) * CycExt::inv_sqrt(W.field());
    CHECK(cycext_from_json(to_json(x), W.field()) == x);
    CHECK(cycext_from_json(Json::parse(to_json(x).dump())) == x);
  }

  TEST_CASE("malformed input") {
    CHECK(errc_of([] { series_from_json(Json::parse(R"({"den": 1})")); }) == Errc::ParseError);
    CHECK(errc_of([] { series_from_json(Json::parse(R"({"den": 1, "trunc": 3, "coeffs": [[5, "1"]]})")); }) ==
          Errc::ParseError);
    CHECK(errc_of([] { series_from_json(Json::parse(R"({"den": 1, "trunc": 3, "coeffs": [[0]]})")); }) ==
          Errc::ParseError);
    CHECK(errc_of([] { series_from_json(Json::parse(R"({"den": 1, "trunc": 3, "coeffs": [[0, 7]]})")); }) ==
          Errc::ParseError);
    CHECK(errc_of([] { vector_form_from_json(Json::parse(R"({"n1": 3, "weight": 0, "classes": {"a": {}}})")); }) ==
          Errc::ParseError);
    CHECK(errc_of([] { weil_matrix_from_json(Json::parse(R"({"order": 5, "dim": 2, "entries": []})")); }) ==
          Errc::ParseError);
    CHECK(errc_of([] { cycext_from_json(Json::parse(R"({"order": 0, "a": [], "b": []})")); }) == Errc::ParseError);
  }
}
