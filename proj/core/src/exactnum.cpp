#include "weilform/exactnum.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "weilform/errors.hpp"
#include "weilform/ntheory.hpp"

namespace weilform {

Rational frac(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

long double to_long_double(const Rational& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    return static_cast<long double>(q.get_num().get_si()) /
           static_cast<long double>(q.get_den().get_si());
  }
  mpf_class f(q, 256);
  double hi = f.get_d();
  mpf_class rest = f - hi;
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

namespace {

using Poly = std::vector<Integer>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division by a monic polynomial; the remainder must vanish.
Poly poly_div_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    Integer c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

// x^d - 1
Poly binomial(std::int64_t d) {
  Poly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  return p;
}

// Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)}
Poly cyclotomic_poly(std::int64_t N) {
  Poly num{1};
  std::vector<Poly> dens;
  for (std::int64_t d : nt::divisors(N)) {
    int mu = nt::moebius(N / d);
    if (mu == 1) num = poly_mul(num, binomial(d));
    if (mu == -1) dens.push_back(binomial(d));
  }
  for (const auto& den : dens) num = poly_div_exact(std::move(num), den);
  return num;
}

}  // namespace

FieldPtr CyclotomicField::make(std::int64_t order) {
  return std::make_shared<const CyclotomicField>(order);
}

CyclotomicField::CyclotomicField(std::int64_t order) : order_(order) {
  if (order < 1) throw Error(Errc::OutOfRange, "cyclotomic order must be positive");
  phi_ = cyclotomic_poly(order);
  degree_ = static_cast<int>(phi_.size()) - 1;

  // Reduced images of x^e for e in [0, N).
  powers_.reserve(static_cast<std::size_t>(order));
  std::vector<Integer> cur(static_cast<std::size_t>(degree_), 0);
  cur[0] = 1;
  if (degree_ == 0) cur.clear();
  for (std::int64_t e = 0; e < order; ++e) {
    powers_.push_back(cur);
    // multiply by x and reduce by the monic Phi_N
    std::vector<Integer> next(static_cast<std::size_t>(degree_), 0);
    Integer top = degree_ > 0 ? cur[static_cast<std::size_t>(degree_ - 1)] : Integer(0);
    for (int i = degree_ - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    for (int i = 0; i < degree_; ++i) next[static_cast<std::size_t>(i)] -= top * phi_[static_cast<std::size_t>(i)];
    cur = std::move(next);
  }

  // sqrt(N) = s sqrt(N0) with N0 squarefree; sqrt(d) for the discriminant d
  // of Q(sqrt(N0)) is the Gauss sum of (d / .), which lives in Q(zeta_|d|).
  std::int64_t s = 1, n0 = 1;
  for (const auto& pp : nt::factor(order)) {
    for (int i = 0; i < pp.exponent / 2; ++i) s *= pp.prime;
    if (pp.exponent % 2 == 1) n0 *= pp.prime;
  }
  if (n0 == 1) {
    std::vector<Rational> v(static_cast<std::size_t>(degree_), 0);
    v[0] = s;
    sqrt_order_ = std::move(v);
    return;
  }
  const std::int64_t d = (n0 % 4 == 1) ? n0 : 4 * n0;
  if (order % d != 0) return;
  std::vector<Rational> buffer(static_cast<std::size_t>(order), 0);
  for (std::int64_t a = 1; a <= d; ++a) {
    int chi = nt::kronecker(d, a);
    if (chi != 0) buffer[static_cast<std::size_t>(nt::mod(a * (order / d), order))] += chi;
  }
  std::vector<Rational> g = reduce_exponents(buffer);
  Rational scale = (d == n0) ? Rational(s) : frac(s, 2);
  for (auto& c : g) c *= scale;
  sqrt_order_ = std::move(g);
}

const std::vector<Integer>& CyclotomicField::power(std::int64_t e) const {
  return powers_[static_cast<std::size_t>(nt::mod(e, order_))];
}

std::vector<Rational> CyclotomicField::reduce_exponents(const std::vector<Rational>& buffer) const {
  std::vector<Rational> out(static_cast<std::size_t>(degree_), 0);
  for (std::size_t e = 0; e < buffer.size(); ++e) {
    if (sgn(buffer[e]) == 0) continue;
    if (static_cast<int>(e) < degree_) {
      out[e] += buffer[e];
      continue;
    }
    const auto& p = powers_[e];
    for (int t = 0; t < degree_; ++t) {
      if (p[static_cast<std::size_t>(t)] != 0) out[static_cast<std::size_t>(t)] += buffer[e] * p[static_cast<std::size_t>(t)];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic(FieldPtr field)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_->degree()), 0) {}

Cyclotomic::Cyclotomic(FieldPtr field, const Rational& value) : Cyclotomic(std::move(field)) {
  coeffs_[0] = value;
}

Cyclotomic::Cyclotomic(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  if (static_cast<int>(coeffs.size()) == field_->degree()) {
    coeffs_ = std::move(coeffs);
    return;
  }
  // Arbitrary-length polynomial in zeta: fold exponents mod N, then reduce.
  std::vector<Rational> buffer(static_cast<std::size_t>(field_->order()), 0);
  for (std::size_t e = 0; e < coeffs.size(); ++e)
    buffer[e % buffer.size()] += coeffs[e];
  coeffs_ = field_->reduce_exponents(buffer);
}

Cyclotomic Cyclotomic::root_of_unity(const FieldPtr& field, std::int64_t k) {
  Cyclotomic out(field);
  const auto& p = field->power(k);
  for (std::size_t i = 0; i < p.size(); ++i) out.coeffs_[i] = p[i];
  return out;
}

Cyclotomic root_of_unity(std::int64_t k, std::int64_t N) {
  return Cyclotomic::root_of_unity(CyclotomicField::make(N), k);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

void Cyclotomic::check_same_field(const Cyclotomic& other) const {
  if (field_->order() != other.field_->order())
    throw Error(Errc::OrderMismatch, "cyclotomic orders " + std::to_string(field_->order()) + " and " +
                                         std::to_string(other.field_->order()));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  const auto n = static_cast<std::size_t>(field_->order());
  std::vector<Rational> buffer(n, 0);
  bool any = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      buffer[(i + j) % n] += coeffs_[i] * rhs.coeffs_[j];
      any = true;
    }
  }
  if (!any) {
    for (auto& c : coeffs_) c = 0;
    return *this;
  }
  coeffs_ = field_->reduce_exponents(buffer);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  lhs.check_same_field(rhs);
  return lhs.coeffs_ == rhs.coeffs_;
}

Cyclotomic Cyclotomic::conj() const {
  const auto n = static_cast<std::size_t>(field_->order());
  std::vector<Rational> buffer(n, 0);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) buffer[(n - e) % n] += coeffs_[e];
  return Cyclotomic(field_, field_->reduce_exponents(buffer));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero cyclotomic");
  const auto deg = static_cast<std::size_t>(field_->degree());
  // Column j of the system is x * zeta^j; solve A y = e_0.
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1, 0));
  for (std::size_t j = 0; j < deg; ++j) {
    Cyclotomic col = *this * root_of_unity(field_, static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < deg; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][deg] = 1;
  for (std::size_t c = 0; c < deg; ++c) {
    std::size_t pivot = c;
    while (pivot < deg && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == deg) throw Error(Errc::DivisionByZero, "singular multiplication map");
    std::swap(m[c], m[pivot]);
    Rational inv = 1 / m[c][c];
    for (std::size_t k = c; k <= deg; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < deg; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k <= deg; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> y(deg);
  for (std::size_t i = 0; i < deg; ++i) y[i] = m[i][deg];
  return Cyclotomic(field_, std::move(y));
}

std::complex<long double> Cyclotomic::to_complex() const {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const auto n = static_cast<long double>(field_->order());
  long double re = 0, im = 0;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (sgn(coeffs_[e]) == 0) continue;
    long double c = to_long_double(coeffs_[e]);
    long double angle = two_pi * static_cast<long double>(e) / n;
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {re, im};
}

// ---------------------------------------------------------------------------
// CycExt

CycExt::CycExt(FieldPtr field) : a_(field), b_(field) {}

CycExt::CycExt(Cyclotomic a) : a_(std::move(a)), b_(a_.field()) {}

CycExt::CycExt(Cyclotomic a, Cyclotomic b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.order() != b_.order()) throw Error(Errc::OrderMismatch, "CycExt parts from different fields");
}

CycExt CycExt::inv_sqrt(const FieldPtr& field) { return CycExt(Cyclotomic(field), Cyclotomic(field, Rational(1))); }

bool CycExt::is_zero() const {
  if (auto f = folded()) return f->is_zero();
  return a_.is_zero() && b_.is_zero();
}

CycExt& CycExt::operator+=(const CycExt& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

CycExt& CycExt::operator-=(const CycExt& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

CycExt operator*(const CycExt& lhs, const CycExt& rhs) {
  // (a + b/r)(c + d/r) = (ac + bd/N) + (ad + bc)/r
  if (lhs.radicand() != rhs.radicand()) throw Error(Errc::OrderMismatch, "CycExt radicands differ");
  const bool lb = !lhs.b_.is_zero(), rb = !rhs.b_.is_zero();
  const bool la = !lhs.a_.is_zero(), ra = !rhs.a_.is_zero();
  CycExt out(lhs.field());
  if (la && ra) out.a_ = lhs.a_ * rhs.a_;
  if (lb && rb) out.a_ += lhs.b_ * rhs.b_ * Rational(1, static_cast<unsigned long>(lhs.radicand()));
  if (la && rb) out.b_ = lhs.a_ * rhs.b_;
  if (lb && ra) out.b_ += lhs.b_ * rhs.a_;
  return out;
}

CycExt& CycExt::operator*=(const CycExt& rhs) { return *this = *this * rhs; }

CycExt CycExt::operator-() const { return CycExt(-a_, -b_); }

std::optional<Cyclotomic> CycExt::folded() const {
  const auto& root = field()->sqrt_of_order();
  if (!root) return std::nullopt;
  Cyclotomic s(field(), *root);
  return a_ + b_ * s * Rational(1, static_cast<unsigned long>(radicand()));
}

bool operator==(const CycExt& lhs, const CycExt& rhs) {
  if (lhs.radicand() != rhs.radicand()) throw Error(Errc::OrderMismatch, "CycExt radicands differ");
  if (auto l = lhs.folded()) return *l == *rhs.folded();
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

CycExt CycExt::conj() const { return CycExt(a_.conj(), b_.conj()); }

CycExt CycExt::inverse() const {
  if (auto f = folded()) {
    if (f->is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    return CycExt(f->inverse());
  }
  if (a_.is_zero() && b_.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  // sqrt(N) is outside the field: (a + b/r)^{-1} = (a - b/r) / (a^2 - b^2/N).
  Cyclotomic norm = a_ * a_ - b_ * b_ * Rational(1, static_cast<unsigned long>(radicand()));
  Cyclotomic inv = norm.inverse();
  return CycExt(a_ * inv, -(b_ * inv));
}

std::complex<long double> CycExt::to_complex(int digits) const {
  if (digits < 15 || digits > 18)
    throw Error(Errc::OutOfRange, "to_complex supports 15 to 18 decimal digits");
  const long double inv_root = 1.0L / std::sqrt(static_cast<long double>(radicand()));
  return a_.to_complex() + b_.to_complex() * inv_root;
}

}  // namespace weilform
