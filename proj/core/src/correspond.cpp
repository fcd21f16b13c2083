#include "weilform/correspond.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "weilform/errors.hpp"
#include "weilform/ntheory.hpp"

namespace weilform {

std::int64_t s_weight(std::int64_t m, std::int64_t N) {
  return std::int64_t{1} << nt::omega(nt::gcd(m, N));
}

QExpansion VectorForm::component(std::size_t element_index) const {
  const std::int64_t r = form.norm_num(element_index);
  auto it = classes.find(r);
  if (it != classes.end()) return it->second;
  return QExpansion(form.level(), trunc());
}

std::int64_t VectorForm::trunc() const {
  std::int64_t t = std::numeric_limits<std::int64_t>::max();
  for (const auto& kv : classes) t = std::min(t, kv.second.trunc());
  return classes.empty() ? 0 : t;
}

DeltaCheck delta_condition_check(const QExpansion& f, const SignVector& delta, const CharData& c) {
  if (f.den() != 1) throw Error(Errc::FractionalExponents, "the delta-condition needs integer exponents");
  for (const auto& [n, a] : f.coeffs()) {
    if (!f.is_certified(n)) continue;
    for (std::int64_t p : c.primes())
      if (chi_p(c, p, n) == -delta[p]) return {false, n};
  }
  return {};
}

VectorForm lift_psi(const QExpansion& f, const DiscriminantForm& form, std::int64_t weight) {
  const CharData c = CharData::from_n1(form.field().n1);
  const std::int64_t N = form.level();
  const DeltaCheck dc = delta_condition_check(f, sign_vectors(c).epsilon, c);
  if (!dc.ok)
    throw Error(Errc::DeltaConditionViolated,
                "coefficient of q^" + std::to_string(*dc.first_violation) + " breaks the epsilon-condition");
  VectorForm F{form, weight, {}};
  for (std::int64_t r : form.realized_classes()) F.classes.emplace(r, QExpansion(N, f.trunc()));
  for (const auto& [n, a] : f.coeffs()) {
    const std::int64_t r = nt::mod(n, N);
    auto it = F.classes.find(r);
    if (it == F.classes.end())
      throw Error(Errc::UnrealizedClass, "q^" + std::to_string(n) + " lies in class " + std::to_string(r) +
                                             ", which no element of D realizes");
    it->second.set(n, Rational(s_weight(n, N)) * a);
  }
  for (std::int64_t n : f.uncertified()) {
    auto it = F.classes.find(nt::mod(n, N));
    if (it != F.classes.end()) it->second.mark_uncertified(n);
  }
  return F;
}

QExpansion descend_phi(const VectorForm& F) {
  const std::int64_t N = F.form.level();
  const std::int64_t full = std::int64_t{1} << nt::omega(N);
  QExpansion out(1, F.trunc());
  for (const auto& [r, comp] : F.classes) {
    const std::int64_t count = F.form.count_norm_class(r);
    if (count == 0) throw Error(Errc::InconsistentComponents, "class " + std::to_string(r) + " is not realized");
    if (comp.den() != N)
      throw Error(Errc::InconsistentComponents, "component " + std::to_string(r) + " has den " + std::to_string(comp.den()));
    for (const auto& [n, c] : comp.coeffs()) {
      if (n >= out.trunc()) break;
      if (nt::mod(n, N) != r)
        throw Error(Errc::InconsistentComponents,
                    "exponent " + std::to_string(n) + "/" + std::to_string(N) + " outside class " + std::to_string(r));
      const Rational by_sum = frac(count, full) * c;
      const Rational by_rep = c / s_weight(n, N);
      if (by_sum != by_rep)
        throw Error(Errc::InconsistentComponents, "class sum and representative disagree at n = " + std::to_string(n));
      out.set(n, by_rep);
    }
    for (std::int64_t n : comp.uncertified()) out.mark_uncertified(n);
  }
  return out;
}

QExpansion project_coprime(const QExpansion& f, const SignVector& delta, const CharData& c) {
  if (f.den() != 1) throw Error(Errc::FractionalExponents, "projection needs integer exponents");
  const Rational scale(1, std::int64_t{1} << nt::omega(c.N));
  QExpansion out(1, f.trunc());
  for (const auto& [n, a] : f.coeffs()) {
    if (nt::gcd(n, c.N) != 1) {
      out.set(n, a);
      out.mark_uncertified(n);
      continue;
    }
    std::int64_t prod = 1;
    for (std::int64_t p : c.primes()) prod *= 1 + delta[p] * chi_p(c, p, n);
    out.set(n, scale * prod * a);
    if (!f.is_certified(n)) out.mark_uncertified(n);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::complex<long double> evaluate_series(const QExpansion& f, std::complex<long double> tau, long double* tail) {
  using cld = std::complex<long double>;
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  const cld step = two_pi * cld(0, 1) * tau / static_cast<long double>(f.den());
  cld sum = 0;
  long double biggest = 0;
  for (const auto& [n, c] : f.coeffs()) {
    const long double v = to_long_double(c);
    sum += v * std::exp(step * static_cast<long double>(n));
    if (n >= 0) biggest = std::max(biggest, std::fabs(v));
  }
  if (tail) {
    // geometric tail past trunc, padded for coefficient growth
    const long double r = std::exp(-two_pi * tau.imag() / static_cast<long double>(f.den()));
    *tail = r >= 1 ? INFINITY : 10 * biggest * std::pow(r, static_cast<long double>(f.trunc())) / (1 - r);
  }
  return sum;
}

TransformReport numeric_transform_check(const VectorForm& F, const SL2Matrix& M, std::complex<long double> tau,
                                        long double tol) {
  using cld = std::complex<long double>;
  if (tau.imag() < 0.8L) throw Error(Errc::OutOfRange, "need Im(tau) >= 0.8");
  if (M.det() != 1) throw Error(Errc::NotUnimodular, "det != 1");
  const cld j = static_cast<long double>(M.c) * tau + static_cast<long double>(M.d);
  const cld mtau = (static_cast<long double>(M.a) * tau + static_cast<long double>(M.b)) / j;

  const std::size_t n = F.form.size();
  std::vector<cld> at_tau(n), at_mtau(n);
  TransformReport report;
  std::map<std::int64_t, std::pair<cld, cld>> cache;
  for (std::size_t g = 0; g < n; ++g) {
    const std::int64_t r = F.form.norm_num(g);
    auto it = cache.find(r);
    if (it == cache.end()) {
      const QExpansion comp = F.component(g);
      long double t1 = 0, t2 = 0;
      const cld v1 = evaluate_series(comp, tau, &t1);
      const cld v2 = evaluate_series(comp, mtau, &t2);
      report.tail_estimate = std::max({report.tail_estimate, t1, t2});
      it = cache.emplace(r, std::make_pair(v1, v2)).first;
    }
    at_tau[g] = it->second.first;
    at_mtau[g] = it->second.second;
  }
  if (report.tail_estimate > tol / 10)
    throw Error(Errc::ConvergenceTooSlow, "truncation tail estimate exceeds tol/10");

  const WeilRepresentation rep(F.form);
  const WeilMatrix rho = rep.rho(M);
  const cld factor = std::pow(j, static_cast<long double>(F.weight));
  for (std::size_t d = 0; d < n; ++d) {
    cld rhs = 0;
    for (std::size_t g = 0; g < n; ++g)
      if (!rho(d, g).is_zero()) rhs += rho(d, g).to_complex(18) * at_tau[g];
    report.max_deviation = std::max(report.max_deviation, std::abs(at_mtau[d] - factor * rhs));
  }
  report.ok = report.max_deviation < tol;
  return report;
}

}  // namespace weilform
