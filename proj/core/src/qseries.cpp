#include "weilform/qseries.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "weilform/errors.hpp"
#include "weilform/ntheory.hpp"

namespace weilform {

QExpansion::QExpansion(std::int64_t den, std::int64_t trunc) : den_(den), trunc_(trunc) {
  if (den <= 0) throw Error(Errc::OutOfRange, "series denominator must be positive");
}

QExpansion::QExpansion(std::int64_t den, std::int64_t trunc, std::map<std::int64_t, Rational> coeffs)
    : QExpansion(den, trunc) {
  for (auto& [n, c] : coeffs) set(n, c);
}

QExpansion QExpansion::from_terms(std::int64_t trunc,
                                  std::initializer_list<std::pair<std::int64_t, Rational>> terms) {
  QExpansion out(1, trunc);
  for (const auto& [n, c] : terms) out.set(n, out.coeffs_.contains(n) ? out.coeffs_.at(n) + c : c);
  return out;
}

Rational QExpansion::coeff(std::int64_t n) const {
  if (n >= trunc_)
    throw Error(Errc::InsufficientPrecision,
                "coefficient " + std::to_string(n) + "/" + std::to_string(den_) + " beyond truncation " +
                    std::to_string(trunc_) + "/" + std::to_string(den_));
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational QExpansion::coeff_at(const Rational& exponent) const {
  Rational scaled = exponent * den_;
  scaled.canonicalize();
  if (scaled.get_den() != 1) {
    if (exponent * den_ >= Rational(trunc_)) coeff(trunc_);  // throws
    return 0;
  }
  return coeff(scaled.get_num().get_si());
}

void QExpansion::set(std::int64_t n, const Rational& c) {
  if (n >= trunc_) throw Error(Errc::InsufficientPrecision, "cannot store a coefficient at or beyond trunc");
  if (c == 0)
    coeffs_.erase(n);
  else
    coeffs_[n] = c;
}

void QExpansion::mark_uncertified(std::int64_t n) {
  if (n < trunc_) uncertified_.insert(n);
}

std::optional<std::int64_t> QExpansion::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

bool QExpansion::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

QExpansion QExpansion::with_den(std::int64_t new_den) const {
  if (new_den % den_ != 0) throw Error(Errc::OutOfRange, "new denominator must be a multiple of the old one");
  const std::int64_t f = new_den / den_;
  QExpansion out(new_den, trunc_ * f);
  for (const auto& [n, c] : coeffs_) out.coeffs_.emplace(n * f, c);
  for (std::int64_t n : uncertified_) out.uncertified_.insert(n * f);
  return out;
}

QExpansion QExpansion::truncated(std::int64_t t) const {
  if (t > trunc_) throw Error(Errc::InsufficientPrecision, "cannot extend a truncation");
  QExpansion out(den_, t);
  for (auto it = coeffs_.begin(); it != coeffs_.end() && it->first < t; ++it) out.coeffs_.insert(*it);
  for (auto it = uncertified_.begin(); it != uncertified_.end() && *it < t; ++it) out.uncertified_.insert(*it);
  return out;
}

QExpansion QExpansion::shifted(std::int64_t k) const {
  QExpansion out(den_, trunc_ + k);
  for (const auto& [n, c] : coeffs_) out.coeffs_.emplace(n + k, c);
  for (std::int64_t n : uncertified_) out.uncertified_.insert(n + k);
  return out;
}

namespace {

std::pair<QExpansion, QExpansion> common_den(const QExpansion& x, const QExpansion& y) {
  const std::int64_t L = nt::lcm(x.den(), y.den());
  return {x.with_den(L), y.with_den(L)};
}

}  // namespace

QExpansion& QExpansion::operator+=(const QExpansion& rhs) {
  auto [a, b] = common_den(*this, rhs);
  const std::int64_t t = std::min(a.trunc_, b.trunc_);
  QExpansion out = a.truncated(t);
  for (auto it = b.coeffs_.begin(); it != b.coeffs_.end() && it->first < t; ++it) {
    Rational s = out.coeff(it->first) + it->second;
    out.set(it->first, s);
  }
  for (auto it = b.uncertified_.begin(); it != b.uncertified_.end() && *it < t; ++it) out.uncertified_.insert(*it);
  return *this = std::move(out);
}

QExpansion& QExpansion::operator-=(const QExpansion& rhs) { return *this += -rhs; }

QExpansion& QExpansion::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& kv : coeffs_) kv.second *= scalar;
  return *this;
}

QExpansion QExpansion::operator-() const {
  QExpansion out = *this;
  for (auto& kv : out.coeffs_) kv.second = -kv.second;
  return out;
}

QExpansion operator*(const QExpansion& lhs, const QExpansion& rhs) {
  auto [x, y] = common_den(lhs, rhs);
  const std::int64_t vx = x.valuation().value_or(x.trunc());
  const std::int64_t vy = y.valuation().value_or(y.trunc());
  const std::int64_t t = std::min(x.trunc() + vy, y.trunc() + vx);
  QExpansion out(x.den(), t);
  std::map<std::int64_t, Rational> acc;
  for (const auto& [i, a] : x.coeffs()) {
    if (i + vy >= t) break;
    for (const auto& [j, b] : y.coeffs()) {
      if (i + j >= t) break;
      acc[i + j] += a * b;
    }
  }
  for (auto& [n, c] : acc) out.set(n, c);

  auto spread = [&out, t](const QExpansion& flagged, const QExpansion& other) {
    for (std::int64_t i : flagged.uncertified()) {
      for (const auto& kv : other.coeffs()) {
        if (i + kv.first >= t) break;
        out.mark_uncertified(i + kv.first);
      }
      for (std::int64_t j : other.uncertified()) out.mark_uncertified(i + j);
    }
  };
  spread(x, y);
  spread(y, x);
  return out;
}

QExpansion operator/(const QExpansion& lhs, const QExpansion& rhs) {
  auto [x, y] = common_den(lhs, rhs);
  const auto vy_opt = y.valuation();
  if (!vy_opt) throw Error(Errc::DivisionByNonUnit, "divisor vanishes through its truncation");
  const std::int64_t vy = *vy_opt;
  const std::int64_t vx = x.valuation().value_or(x.trunc());
  const std::int64_t t = std::min(x.trunc() - vy, y.trunc() - 2 * vy + vx);
  QExpansion out(x.den(), t);
  const std::int64_t start = vx - vy;
  if (t <= start) return out;

  // q_m = (x_{m+vy} - sum_{j>=1} y_{vy+j} q_{m-j}) / y_vy
  const std::size_t len = static_cast<std::size_t>(t - start);
  std::vector<Rational> q(len);
  std::vector<char> unc(len, 0);
  std::vector<std::pair<std::int64_t, const Rational*>> tail;
  std::vector<std::int64_t> tail_unc;
  for (const auto& [j, c] : y.coeffs())
    if (j > vy) tail.emplace_back(j - vy, &c);
  for (std::int64_t j : y.uncertified()) tail_unc.push_back(j - vy);
  const bool lead_unc = !y.is_certified(vy);
  const Rational inv_lead = 1 / y.coeffs().begin()->second;

  for (std::size_t m = 0; m < len; ++m) {
    const std::int64_t idx = static_cast<std::int64_t>(m) + start;
    Rational s = x.coeff(idx + vy);
    bool u = lead_unc || !x.is_certified(idx + vy);
    for (const auto& [j, c] : tail) {
      if (static_cast<std::size_t>(j) > m) break;
      const std::size_t k = m - static_cast<std::size_t>(j);
      if (q[k] != 0) s -= *c * q[k];
      u = u || unc[k];
    }
    for (std::int64_t j : tail_unc)
      if (j >= 1 && static_cast<std::size_t>(j) <= m && (q[m - j] != 0 || unc[m - j])) u = true;
    q[m] = s * inv_lead;
    unc[m] = u;
  }
  for (std::size_t m = 0; m < len; ++m) {
    const std::int64_t idx = static_cast<std::int64_t>(m) + start;
    out.set(idx, q[m]);
    if (unc[m]) out.mark_uncertified(idx);
  }
  return out;
}

bool QExpansion::agrees_with(const QExpansion& other) const {
  auto [a, b] = common_den(*this, other);
  const std::int64_t t = std::min(a.trunc(), b.trunc());
  return a.truncated(t).coeffs() == b.truncated(t).coeffs();
}

QExpansion series_arith(const QExpansion& x, const QExpansion& y, SeriesOp op) {
  switch (op) {
    case SeriesOp::Add: return x + y;
    case SeriesOp::Sub: return x - y;
    case SeriesOp::Mul: return x * y;
    case SeriesOp::Div: return x / y;
  }
  throw Error(Errc::OutOfRange, "unknown series operation");
}

QExpansion scale_exponents(const QExpansion& f, std::int64_t m) {
  if (m < 1) throw Error(Errc::OutOfRange, "scale factor must be positive");
  QExpansion out(f.den(), f.trunc() * m);
  for (const auto& [n, c] : f.coeffs()) out.set(n * m, c);
  for (std::int64_t n : f.uncertified()) out.mark_uncertified(n * m);
  return out;
}

QExpansion u_operator(const QExpansion& f, std::int64_t m) {
  if (m < 1) throw Error(Errc::OutOfRange, "U(m) needs m >= 1");
  if (f.den() != 1) throw Error(Errc::FractionalExponents, "U(m) needs integer exponents");
  QExpansion out(1, nt::ceil_div(f.trunc(), m));
  for (const auto& [n, c] : f.coeffs())
    if (n % m == 0) out.set(n / m, c);
  for (std::int64_t n : f.uncertified())
    if (n % m == 0) out.mark_uncertified(n / m);
  return out;
}

// ---------------------------------------------------------------------------

EtaSpec parse_eta_spec(const std::string& text) {
  EtaSpec spec;
  std::size_t pos = 0;
  auto parse_int = [&text](std::size_t b, std::size_t e) {
    std::int64_t v = 0;
    const char* first = text.data() + b;
    if (b < e && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + e, v);
    if (ec != std::errc() || ptr != text.data() + e || b == e)
      throw Error(Errc::ParseError, "bad integer in eta spec '" + text.substr(b, e - b) + "'");
    return v;
  };
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::size_t colon = text.find(':', pos);
    if (colon == std::string::npos || colon > comma) throw Error(Errc::ParseError, "expected d:r in eta spec");
    const std::int64_t d = parse_int(pos, colon);
    const std::int64_t r = parse_int(colon + 1, comma);
    if (d < 1) throw Error(Errc::ParseError, "eta spec needs d >= 1");
    spec.push_back({d, r});
    pos = comma + 1;
  }
  return spec;
}

QExpansion euler_product_power(std::int64_t r, std::int64_t terms) {
  const std::size_t n_terms = static_cast<std::size_t>(std::max<std::int64_t>(terms, 0));
  // prod (1 - q^n) by the pentagonal number theorem
  std::vector<Integer> a(n_terms, 0);
  if (n_terms > 0) a[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t p1 = k * (3 * k - 1) / 2, p2 = k * (3 * k + 1) / 2;
    if (p1 >= terms) break;
    const int sign = k % 2 ? -1 : 1;
    a[p1] += sign;
    if (p2 < terms) a[p2] += sign;
  }
  // b = a^r: n b_n = sum_{k=1}^n ((r+1)k - n) a_k b_{n-k}
  std::vector<Integer> b(n_terms, 0);
  if (n_terms > 0) b[0] = 1;
  for (std::size_t n = 1; n < n_terms; ++n) {
    Integer s = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] == 0) continue;
      s += ((r + 1) * static_cast<std::int64_t>(k) - static_cast<std::int64_t>(n)) * a[k] * b[n - k];
    }
    b[n] = s / static_cast<long>(n);
  }
  QExpansion out(1, terms);
  for (std::size_t n = 0; n < n_terms; ++n)
    if (b[n] != 0) out.set(static_cast<std::int64_t>(n), Rational(b[n]));
  return out;
}

QExpansion eta_quotient(const EtaSpec& spec, std::int64_t terms) {
  QExpansion prod = QExpansion::from_terms(terms, {{0, Rational(1)}});
  std::int64_t weight_sum = 0;
  for (const auto& [d, r] : spec) {
    if (d < 1) throw Error(Errc::OutOfRange, "eta factor needs d >= 1");
    weight_sum += d * r;
    if (r == 0) continue;
    prod = prod * scale_exponents(euler_product_power(r, nt::ceil_div(terms, d)), d).truncated(terms);
  }
  const std::int64_t g = nt::gcd(std::abs(weight_sum), 24);
  const std::int64_t den = 24 / g;
  return prod.with_den(den).shifted(weight_sum / g);
}

QExpansion e2_series(std::int64_t trunc) {
  QExpansion out(1, trunc);
  if (trunc > 0) out.set(0, 1);
  for (std::int64_t n = 1; n < trunc; ++n) out.set(n, Rational(-24 * nt::sigma(n, 1)));
  return out;
}

QExpansion frak_e2(std::int64_t trunc) {
  auto scaled = [trunc](std::int64_t m) { return scale_exponents(e2_series(nt::ceil_div(trunc, m)), m); };
  QExpansion out = e2_series(trunc) - Rational(9) * scaled(3) - Rational(4) * scaled(4) + Rational(36) * scaled(12);
  return Rational(1, 24) * out.truncated(trunc);
}

// ---------------------------------------------------------------------------

std::string Cusp::to_string() const {
  if (den == 0) return "infinity";
  if (num == 0) return "0";
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// bottom row (c, d) of some matrix in SL2(Z) sending infinity to the cusp
std::pair<std::int64_t, std::int64_t> bottom_row(const Cusp& x) {
  if (x.den == 0) return {0, 1};
  std::int64_t u = 0, v = 0;
  nt::ext_gcd(x.num, x.den, u, v);  // num u + den v = 1
  // [[num, -v], [den, u]]
  return {x.den, u};
}

}  // namespace

bool cusps_equivalent(const Cusp& x, const Cusp& y, std::int64_t N) {
  if (N == 1) return true;
  const auto [c1, d1] = bottom_row(x);
  const auto [c2, d2] = bottom_row(y);
  const std::int64_t tc = nt::mod(c2, N), td = nt::mod(d2, N);
  for (std::int64_t lam = 1; lam < N; ++lam) {
    if (nt::gcd(lam, N) != 1) continue;
    if (nt::mod(lam * c1, N) != tc) continue;
    for (std::int64_t j = 0; j < N; ++j)
      if (nt::mod(lam * nt::mod(d1 + j * c1, N), N) == td) return true;
  }
  return false;
}

std::vector<Cusp> cusps_gamma0(std::int64_t N) {
  if (N < 1) throw Error(Errc::OutOfRange, "level must be positive");
  std::vector<Cusp> out;
  for (std::int64_t d : nt::divisors(N)) {
    if (d == N) {
      out.push_back({1, 0});
      continue;
    }
    if (d == 1) {
      out.push_back({0, 1});
      continue;
    }
    std::vector<Cusp> here;
    for (std::int64_t a = 1; a < d * N; ++a) {
      if (nt::gcd(a, d) != 1) continue;
      Cusp c{a, d};
      bool seen = false;
      for (const auto& h : here) seen = seen || cusps_equivalent(h, c, N);
      if (!seen) here.push_back(c);
      if (static_cast<std::int64_t>(here.size()) == nt::euler_phi(nt::gcd(d, N / d))) break;
    }
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

std::vector<CuspOrder> eta_cusp_orders(const EtaSpec& spec, std::int64_t N) {
  for (const auto& f : spec)
    if (f.d < 1 || N % f.d != 0)
      throw Error(Errc::InvalidDivisor, std::to_string(f.d) + " does not divide " + std::to_string(N));
  std::vector<CuspOrder> out;
  for (const Cusp& c : cusps_gamma0(N)) {
    const std::int64_t d = c.is_infinity() ? N : nt::gcd(c.den, N);
    Rational s = 0;
    for (const auto& [delta, r] : spec) {
      const std::int64_t g = nt::gcd(d, delta);
      s += frac(g * g * r, delta);
    }
    Rational order = s * N / (24 * nt::gcd(d, N / d) * d);
    order.canonicalize();
    out.push_back({c, order});
  }
  return out;
}

}  // namespace weilform
