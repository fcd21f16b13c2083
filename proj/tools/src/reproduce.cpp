#include <sstream>

#include "weilform/chars.hpp"
#include "weilform/cli.hpp"
#include "weilform/correspond.hpp"
#include "weilform/discform.hpp"
#include "weilform/eisenstein.hpp"
#include "weilform/errors.hpp"
#include "weilform/ntheory.hpp"
#include "weilform/obstruct.hpp"

namespace weilform::cli {

namespace {

struct Expected {
  std::int64_t n;
  std::int64_t a;
};

// 1/q + 1 + 2q^2 + q^3 - 2q^6 - 2q^8 + 4q^12 + 4q^14 - q^15 - 6q^18 + O(q^19)
constexpr Expected kF1[] = {{-1, 1}, {0, 1}, {2, 2}, {3, 1}, {6, -2}, {8, -2}, {12, 4}, {14, 4}, {15, -1}, {18, -6}};

struct CuspRow {
  Cusp cusp;
  Rational order;
};

std::string str(const Rational& q) { return q.get_str(); }

}  // namespace

std::vector<StepResult> run_reproduce(std::int64_t n1, std::int64_t prec) {
  if (!nt::is_squarefree(n1) || n1 <= 1) fundamental_discriminant(n1);  // throws the precise error
  if (n1 != 3) throw Error(Errc::UnsupportedCase, "the worked example is the field Q(sqrt(3))");
  std::vector<StepResult> steps;
  auto step = [&steps](std::string name, bool pass, std::string detail) {
    steps.push_back({std::move(name), pass, std::move(detail)});
  };

  const DiscriminantForm D = DiscriminantForm::build(n1);
  const CharData C = CharData::from_n1(n1);
  step("discriminant-form", D.size() == 12 && D.level() == 12 && D.cross_check(),
       "|D| = " + std::to_string(D.size()) + ", N = " + std::to_string(D.level()));

  {
    const std::vector<JordanSymbol> want = {{2, 1, 2, +1, 2}, {3, 1, 1, +1, std::nullopt}};
    const auto got = D.jordan();
    step("jordan", got == want, got == want ? "2_2^{+2} + 3^{+1}" : "unexpected Jordan symbols");
  }

  {
    const auto autos = D.automorphisms();
    bool preserves = true;
    for (const auto& s : autos)
      for (std::size_t i = 0; i < D.size(); ++i) preserves = preserves && D.norm_num(s(i)) == D.norm_num(i);
    step("automorphisms", autos.size() == 4 && preserves, "|Aut(D)| = " + std::to_string(autos.size()));
  }

  {
    const auto sv = sign_vectors(C);
    const bool ok = sv.epsilon[2] == -1 && sv.epsilon[3] == -1 && sv.epsilon_star[2] == 1 && sv.epsilon_star[3] == 1;
    step("sign-vectors", ok,
         "eps = (" + std::to_string(sv.epsilon[2]) + ", " + std::to_string(sv.epsilon[3]) + "), eps* = (" +
             std::to_string(sv.epsilon_star[2]) + ", " + std::to_string(sv.epsilon_star[3]) + ")");
  }

  {
    const QExpansion E = e_epsilon_star(C, 2, std::min<std::int64_t>(prec, 200));
    const bool rank = basis_independence_check(C, 2, 12);
    const bool ok = E.coeff(0) == 1 && E.coeff(1) == -4 && rank;
    step("eisenstein", ok, "B(0) = " + str(E.coeff(0)) + ", B(1) = " + str(E.coeff(1)) + ", rank 4: " + (rank ? "yes" : "no"));
  }

  {
    const std::vector<CuspRow> want = {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 3}, 0}, {{1, 4}, 1}, {{1, 2}, Rational(1, 2)}, {{1, 6}, Rational(1, 2)}};
    const auto got = eta_cusp_orders(h2_spec(), 12);
    bool ok = got.size() == want.size();
    std::string detail;
    for (const auto& row : want) {
      bool found = false;
      for (const auto& g : got) {
        if (!cusps_equivalent(g.cusp, row.cusp, 12)) continue;
        found = true;
        if (g.order != row.order) {
          ok = false;
          detail += row.cusp.to_string() + ": got " + str(g.order) + " ";
        }
      }
      ok = ok && found;
    }
    step("cusp-table", ok, ok ? "orders 1, 1, 0, 1, 1/2, 1/2 at infinity, 0, 1/3, 1/4, 1/2, 1/6" : detail);
  }

  const QExpansion f1 = build_f1_level12(prec);
  {
    std::string detail = "all listed coefficients match";
    bool ok = true;
    for (std::int64_t n = -1; n <= 18 && ok; ++n) {
      std::int64_t want = 0;
      for (const auto& e : kF1)
        if (e.n == n) want = e.a;
      if (f1.coeff(n) != want) {
        ok = false;
        detail = "first difference at q^" + std::to_string(n) + ": got " + str(f1.coeff(n)) + ", expected " +
                 std::to_string(want);
      }
    }
    step("f1-expansion", ok, detail);
  }

  {
    const auto dc = delta_condition_check(f1, sign_vectors(C).epsilon, C);
    const bool ints = f1.has_integer_coefficients();
    step("f1-epsilon-condition", dc.ok && ints,
         dc.ok ? (ints ? "holds for n < " + std::to_string(f1.trunc()) + ", integer coefficients" : "non-integer coefficient")
               : "violated at q^" + std::to_string(*dc.first_violation));
  }

  {
    const Rational a0 = constant_term(PrincipalPart::parse("-1:1", n1, 0), C);
    step("constant-term", a0 == 1 && a0 == f1.coeff(0),
         "Eisenstein path " + str(a0) + ", eta-quotient path " + str(f1.coeff(0)));
  }

  const VectorForm F = lift_psi(f1, D, 0);
  {
    const QExpansion back = descend_phi(F);
    const VectorForm again = lift_psi(back, D, 0);
    bool ok = back == f1 && again.classes == F.classes;
    step("round-trip", ok, ok ? "descend(lift(f1)) = f1" : "round trip changed the series");
  }

  try {
    const auto rep = numeric_transform_check(F, SL2Matrix::S(), {0.0L, 1.0L}, 1e-6L);
    std::ostringstream detail;
    detail << "max deviation " << static_cast<double>(rep.max_deviation) << " at tau = i";
    step("s-transformation", rep.ok, detail.str());
  } catch (const Error& e) {
    step("s-transformation", false, e.what());
  }
  return steps;
}

}  // namespace weilform::cli
