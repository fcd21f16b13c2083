#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>

#include "weilform/chars.hpp"
#include "weilform/discform.hpp"
#include "weilform/qseries.hpp"
#include "weilform/weilrep.hpp"

namespace weilform {

/// s(m) = 2^{omega(gcd(m, N))}, with s(0) = 2^{omega(N)}.
std::int64_t s_weight(std::int64_t m, std::int64_t N);

/// An Aut(D)-invariant vector-valued form, stored once per norm class
/// r = N q(gamma) mod N. Each component has den N and only carries
/// exponents n/N with n = r mod N.
struct VectorForm {
  DiscriminantForm form;
  std::int64_t weight = 0;
  std::map<std::int64_t, QExpansion> classes;

  /// F_gamma for the element with the given index (zero series at the
  /// common truncation when the class is absent).
  QExpansion component(std::size_t element_index) const;
  /// Smallest truncation numerator among the stored classes.
  std::int64_t trunc() const;
};

struct DeltaCheck {
  bool ok = true;
  std::optional<std::int64_t> first_violation;
};

/// a(n) = 0 whenever chi_p(n) = -delta_p for some p | N, checked on every
/// stored certified coefficient. Throws FractionalExponents for den != 1.
DeltaCheck delta_condition_check(const QExpansion& f, const SignVector& delta, const CharData& c);

/// F_gamma = s(N q(gamma)) sum_{n = N q(gamma) mod N} a(n) q^{n/N}.
/// Throws DeltaConditionViolated when f fails the epsilon-condition and
/// UnrealizedClass when a nonzero a(n) sits in a class D does not realize.
VectorForm lift_psi(const QExpansion& f, const DiscriminantForm& form, std::int64_t weight);

/// a(n) = 2^{-omega(N)} sum_{gamma: N q(gamma) = n} c_gamma(n/N), checked
/// against c_r(n/N) / s(n). Throws InconsistentComponents.
QExpansion descend_phi(const VectorForm& F);

/// b(n) = 2^{-omega(N)} a(n) prod_p (1 + delta_p chi_p(n)) for gcd(n, N) = 1.
/// Other coefficients pass through and are flagged uncertified.
QExpansion project_coprime(const QExpansion& f, const SignVector& delta, const CharData& c);

struct TransformReport {
  bool ok = false;
  long double max_deviation = 0;
  long double tail_estimate = 0;
};

/// Evaluates F(M tau) against (c tau + d)^k rho_D(M) F(tau) numerically.
/// Throws ConvergenceTooSlow when the estimated truncation tail at either
/// point exceeds tol / 10, OutOfRange when Im tau < 0.8.
TransformReport numeric_transform_check(const VectorForm& F, const SL2Matrix& M, std::complex<long double> tau,
                                        long double tol);

/// Value of a series at tau, q^{n/den} = e(n tau / den). `tail` receives a
/// heuristic bound for the omitted terms.
std::complex<long double> evaluate_series(const QExpansion& f, std::complex<long double> tau, long double* tail = nullptr);

}  // namespace weilform
