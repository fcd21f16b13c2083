#include "weilform/obstruct.hpp"

#include "weilform/correspond.hpp"
#include "weilform/eisenstein.hpp"
#include "weilform/errors.hpp"
#include "weilform/ntheory.hpp"

namespace weilform {

namespace {

Rational parse_rational(const std::string& s) {
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(Errc::ParseError, "bad rational '" + s + "'");
  }
}

}  // namespace

PrincipalPart PrincipalPart::parse(const std::string& text, std::int64_t n1, std::int64_t weight) {
  PrincipalPart P{{}, weight, n1};
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw Error(Errc::ParseError, "expected n:coeff, got '" + item + "'");
    std::int64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoll(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad exponent in '" + item + "'");
    }
    if (n >= 0) throw Error(Errc::OutOfRange, "principal part exponents must be negative");
    const Rational a = parse_rational(item.substr(colon + 1));
    P.terms[n] += a;
    if (P.terms[n] == 0) P.terms.erase(n);
    pos = comma + 1;
  }
  return P;
}

PrincipalCheck validate_principal_part(const PrincipalPart& P, const CharData& c) {
  const SignVector eps = sign_vectors(c).epsilon;
  PrincipalCheck out;
  for (const auto& [n, a] : P.terms) {
    if (a == 0) continue;
    for (std::int64_t p : c.primes()) {
      if (chi_p(c, p, n) == -eps[p]) {
        out.ok = false;
        out.violations.push_back(n);
        break;
      }
    }
  }
  return out;
}

Rational obstruction_pairing(const PrincipalPart& P, const QExpansion& g, std::int64_t N) {
  if (g.den() != 1) throw Error(Errc::FractionalExponents, "pairing needs integer exponents");
  if (auto v = g.valuation(); v && *v < 0) throw Error(Errc::NotHolomorphic, "g has negative exponents");
  Rational s = 0;
  for (const auto& [n, a] : P.terms) s += Rational(s_weight(n, N)) * a * g.coeff(-n);
  return s;
}

bool existence_check(const PrincipalPart& P, const std::vector<QExpansion>& cusp_basis, std::int64_t N) {
  for (const auto& g : cusp_basis)
    if (g.den() != 1 || g.coeff(0) != 0) throw Error(Errc::NonCuspidalBasis, "basis element has b(0) != 0");
  for (const auto& g : cusp_basis)
    if (obstruction_pairing(P, g, N) != 0) return false;
  return true;
}

Rational constant_term(const PrincipalPart& P, const CharData& c) {
  if (nt::mod(c.n1, 4) == 2) throw Error(Errc::UnsupportedCase, "constant term formula needs N1 = 1 or 3 mod 4");
  if (P.terms.empty()) return 0;
  const std::int64_t deepest = -P.terms.begin()->first;
  const QExpansion B = e_epsilon_star(c, 2 - P.weight, deepest + 1);
  return -obstruction_pairing(P, B, c.N) / s_weight(0, c.N);
}

EtaSpec h2_spec() { return {{1, 2}, {3, -2}, {4, 1}, {6, 2}, {12, 1}}; }

QExpansion build_f1_level12(std::int64_t trunc) {
  if (trunc < 20) throw Error(Errc::OutOfRange, "f1 needs trunc >= 20");
  // dividing by H_2 = q + ... costs two places of truncation
  const QExpansion num = frak_e2(trunc + 2);
  const QExpansion den = eta_quotient(h2_spec(), trunc + 1);
  return (num / den).truncated(trunc);
}

}  // namespace weilform
