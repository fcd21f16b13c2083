#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weilform/chars.hpp"
#include "weilform/qseries.hpp"

namespace weilform {

/// P = sum_{n<0} a(n) q^n for a weakly holomorphic form of weight k <= 0.
struct PrincipalPart {
  std::map<std::int64_t, Rational> terms;  // keys negative
  std::int64_t weight = 0;
  std::int64_t n1 = 0;

  /// "-1:1,-3:1/2". Throws ParseError, OutOfRange for non-negative keys.
  static PrincipalPart parse(const std::string& text, std::int64_t n1, std::int64_t weight);
};

struct PrincipalCheck {
  bool ok = true;
  std::vector<std::int64_t> violations;  // exponents breaking the epsilon-condition
};

PrincipalCheck validate_principal_part(const PrincipalPart& P, const CharData& c);

/// sum_{n<0} s(n) a(n) b(-n). Throws NotHolomorphic when g has negative
/// exponents and InsufficientPrecision when g is not known far enough.
Rational obstruction_pairing(const PrincipalPart& P, const QExpansion& g, std::int64_t N);

/// True iff every pairing vanishes. The basis is trusted to span the cusp
/// forms with the epsilon*-condition; each element must have b(0) = 0
/// (NonCuspidalBasis otherwise).
bool existence_check(const PrincipalPart& P, const std::vector<QExpansion>& cusp_basis, std::int64_t N);

/// a(0) = -(1/s(0)) sum_{n<0} s(n) a(n) B(-n), B the coefficients of
/// E^{eps*} in weight 2 - k. Throws UnsupportedCase for N1 = 2 mod 4.
Rational constant_term(const PrincipalPart& P, const CharData& c);

/// The H_2 eta quotient eta(t)^2 eta(3t)^-2 eta(4t) eta(6t)^2 eta(12t).
EtaSpec h2_spec();

/// frak_e2 / H_2, exponents < trunc (trunc >= 20; OutOfRange otherwise).
QExpansion build_f1_level12(std::int64_t trunc);

}  // namespace weilform
