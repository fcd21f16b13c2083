#include "weilform/discform.hpp"

#include <algorithm>
#include <string>

#include "weilform/chars.hpp"
#include "weilform/errors.hpp"
#include "weilform/ntheory.hpp"

namespace weilform {

QuadField QuadField::make(std::int64_t n1) { return QuadField{n1, fundamental_discriminant(n1)}; }

bool in_ring_of_integers(const QuadField& f, const FieldElement& x) {
  if (f.n1 % 4 == 1) {
    // O_F = Z[(1 + sqrt(N1)) / 2]: (a + b sqrt(N1)) / 2 with a = b mod 2.
    Rational a2 = 2 * x.u, b2 = 2 * x.v;
    if (a2.get_den() != 1 || b2.get_den() != 1) return false;
    Integer diff = a2.get_num() - b2.get_num();
    return mpz_even_p(diff.get_mpz_t()) != 0;
  }
  return x.u.get_den() == 1 && x.v.get_den() == 1;
}

namespace {

std::int64_t reduce_num(const Rational& value, std::int64_t N) {
  if (value.get_den() != 1) throw Error(Errc::OutOfRange, "norm not in (1/N)Z");
  Integer r = value.get_num() % N;
  if (r < 0) r += N;
  return r.get_si();
}

std::int64_t p_idempotent(std::int64_t order, std::int64_t p) {
  std::int64_t pp = 1;
  while (order % (pp * p) == 0) pp *= p;
  if (pp == 1) return 0;
  const std::int64_t other = order / pp;
  if (other == 1) return 1;
  return nt::mod(other * nt::inverse_mod(other % pp, pp), order);
}

}  // namespace

DiscriminantForm DiscriminantForm::build(std::int64_t n1) {
  DiscriminantForm d;
  d.field_ = QuadField::make(n1);
  const std::int64_t r = n1 % 4;
  if (r == 1) {
    d.generators_.push_back({n1, 0, {0, frac(1, n1)}, GeneratorRole::Odd});
  } else if (r == 3) {
    d.generators_.push_back({2, 0, {Rational(1, 2), 0}, GeneratorRole::Two});
    d.generators_.push_back({2, 0, {0, Rational(1, 2)}, GeneratorRole::TwoPrime});
    d.generators_.push_back({n1, 0, {0, frac(1, n1)}, GeneratorRole::Odd});
  } else {
    d.generators_.push_back({2, 0, {Rational(1, 2), 0}, GeneratorRole::Two});
    d.generators_.push_back({4, 0, {0, Rational(1, 4)}, GeneratorRole::TwoPrime});
    if (n1 / 2 > 1) d.generators_.push_back({n1 / 2, 0, {0, frac(2, n1)}, GeneratorRole::Odd});
  }
  d.finalize();
  return d;
}

DiscriminantForm DiscriminantForm::negated() const {
  DiscriminantForm d = *this;
  d.negated_ = !negated_;
  d.finalize();
  return d;
}

void DiscriminantForm::finalize() {
  const std::int64_t N = field_.N;
  const Rational n1(field_.n1);
  const int sign = negated_ ? -1 : 1;
  const std::size_t k = generators_.size();
  gram_.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& x = generators_[i].value;
    generators_[i].norm_num = reduce_num(sign * N * (x.u * x.u - n1 * x.v * x.v), N);
    for (std::size_t j = 0; j < k; ++j) {
      const auto& y = generators_[j].value;
      gram_[i][j] = reduce_num(sign * N * 2 * (x.u * y.u - n1 * x.v * y.v), N);
    }
  }

  std::size_t total = 1;
  for (const auto& g : generators_) total *= static_cast<std::size_t>(g.order);
  elements_.clear();
  elements_.reserve(total);
  std::vector<std::int64_t> coords(k, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    elements_.push_back(DElement{coords});
    for (std::size_t i = k; i-- > 0;) {
      if (++coords[i] < generators_[i].order) break;
      coords[i] = 0;
    }
  }
  norms_.clear();
  norms_.reserve(total);
  for (const auto& e : elements_) norms_.push_back(norm_num(e));
}

std::size_t DiscriminantForm::index_of(const DElement& g) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i)
    idx = idx * static_cast<std::size_t>(generators_[i].order) + static_cast<std::size_t>(g.coords[i]);
  return idx;
}

DElement DiscriminantForm::make(std::vector<std::int64_t> coords) const {
  if (coords.size() != generators_.size()) throw Error(Errc::OutOfRange, "wrong number of coordinates");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = nt::mod(coords[i], generators_[i].order);
  return DElement{std::move(coords)};
}

DElement DiscriminantForm::zero() const { return DElement{std::vector<std::int64_t>(generators_.size(), 0)}; }

DElement DiscriminantForm::add(const DElement& a, const DElement& b) const {
  DElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    out.coords[i] = nt::mod(a.coords[i] + b.coords[i], generators_[i].order);
  return out;
}

DElement DiscriminantForm::negate(const DElement& a) const { return scale(a, -1); }

DElement DiscriminantForm::scale(const DElement& a, std::int64_t k) const {
  DElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    out.coords[i] = nt::mod(a.coords[i] * k, generators_[i].order);
  return out;
}

std::int64_t DiscriminantForm::norm_num(const DElement& g) const {
  const std::int64_t N = field_.N;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const std::int64_t x = g.coords[i];
    if (x == 0) continue;
    total = nt::mod(total + nt::mod(x * x, N) * generators_[i].norm_num, N);
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      total = nt::mod(total + nt::mod(x * g.coords[j], N) * gram_[i][j], N);
  }
  return total;
}

Rational DiscriminantForm::norm(const DElement& g) const {
  Rational q(norm_num(g), field_.N);
  q.canonicalize();
  return q;
}

std::int64_t DiscriminantForm::bilinear_num(const DElement& a, const DElement& b) const {
  const std::int64_t N = field_.N;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < generators_.size(); ++j)
      total = nt::mod(total + nt::mod(a.coords[i] * b.coords[j], N) * gram_[i][j], N);
  }
  return total;
}

std::int64_t DiscriminantForm::bilinear_num(std::size_t a, std::size_t b) const {
  return bilinear_num(elements_[a], elements_[b]);
}

DElement DiscriminantForm::p_part(const DElement& g, std::int64_t p) const {
  DElement out = g;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const std::int64_t o = generators_[i].order;
    out.coords[i] = nt::mod(g.coords[i] * p_idempotent(o, p), o);
  }
  return out;
}

std::vector<JordanSymbol> DiscriminantForm::jordan() const {
  const std::int64_t n1 = field_.n1;
  const int flip = negated_ ? -1 : 1;
  std::vector<JordanSymbol> out;
  for (std::int64_t p : nt::prime_divisors(field_.N)) {
    if (p != 2) {
      // q_p = p^{+-1} with +-1 = ((-2 N1/p) / p); negating q multiplies by (-1/p).
      int sign = nt::kronecker(-2 * (n1 / p), p);
      if (negated_) sign *= nt::kronecker(-1, p);
      out.push_back({p, 1, 1, sign, std::nullopt});
    } else if (n1 % 4 == 3) {
      out.push_back({2, 1, 2, 1, nt::mod(2 * flip, 8)});
    } else {
      const std::int64_t t = -n1 / 2;
      out.push_back({2, 1, 1, 1, static_cast<int>(nt::mod(flip, 8))});
      int sign = nt::kronecker(2, t);
      out.push_back({2, 2, 1, sign, static_cast<int>(nt::mod(flip * t, 8))});
    }
  }
  return out;
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != i) return false;
  return true;
}

std::vector<Automorphism> DiscriminantForm::automorphisms() const {
  const auto primes = nt::prime_divisors(field_.N);
  std::vector<std::vector<std::size_t>> sigma;
  for (std::int64_t p : primes) {
    std::vector<std::size_t> img(size());
    for (std::size_t i = 0; i < size(); ++i) {
      const DElement& g = elements_[i];
      DElement h = g;
      if (p == 2 && field_.n1 % 4 == 3) {
        // swap the coordinates of 1/2 and sqrt(N1)/2
        std::swap(h.coords[0], h.coords[1]);
      } else {
        h = add(g, scale(p_part(g, p), -2));
      }
      img[i] = index_of(h);
    }
    sigma.push_back(std::move(img));
  }

  std::vector<Automorphism> out;
  const std::size_t count = std::size_t{1} << primes.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    Automorphism a;
    a.image.resize(size());
    for (std::size_t i = 0; i < size(); ++i) a.image[i] = i;
    for (std::size_t b = 0; b < primes.size(); ++b) {
      if (!(mask & (std::size_t{1} << b))) continue;
      a.primes.push_back(primes[b]);
      for (auto& v : a.image) v = sigma[b][v];
    }
    out.push_back(std::move(a));
  }
  return out;
}

Automorphism DiscriminantForm::find_norm_transporter(const DElement& beta, const DElement& gamma) const {
  if (norm_num(beta) != norm_num(gamma)) throw Error(Errc::NormMismatch, "q(beta) != q(gamma)");
  const std::size_t b = index_of(beta), g = index_of(gamma);
  for (auto& a : automorphisms())
    if (a(b) == g) return a;
  throw Error(Errc::NotFound, "no automorphism maps beta to gamma");
}

std::int64_t DiscriminantForm::count_norm_class(std::int64_t n) const {
  const std::int64_t r = nt::mod(n, field_.N);
  return std::count(norms_.begin(), norms_.end(), r);
}

std::vector<std::int64_t> DiscriminantForm::realized_classes() const {
  std::set<std::int64_t> seen(norms_.begin(), norms_.end());
  return {seen.begin(), seen.end()};
}

std::set<Rational> DiscriminantForm::local_norms(std::int64_t p) const {
  std::set<Rational> out;
  for (const auto& g : elements_)
    if (p_part(g, p) == g) out.insert(norm(g));
  return out;
}

FieldElement DiscriminantForm::combine(const DElement& g) const {
  FieldElement x{0, 0};
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    x.u += g.coords[i] * generators_[i].value.u;
    x.v += g.coords[i] * generators_[i].value.v;
  }
  return x;
}

bool DiscriminantForm::cross_check() const {
  const std::int64_t N = field_.N;
  const Rational n1(field_.n1);
  const int sign = negated_ ? -1 : 1;
  if (static_cast<std::int64_t>(size()) != N) return false;

  for (const auto& g : generators_) {
    auto multiple = [&](std::int64_t k) { return FieldElement{k * g.value.u, k * g.value.v}; };
    if (!in_ring_of_integers(field_, multiple(g.order))) return false;
    for (std::int64_t k = 1; k < g.order; ++k)
      if (in_ring_of_integers(field_, multiple(k))) return false;
  }

  std::vector<FieldElement> values;
  values.reserve(size());
  for (const auto& e : elements_) values.push_back(combine(e));
  for (std::size_t i = 0; i < size(); ++i) {
    const auto& x = values[i];
    Rational nq = sign * N * (x.u * x.u - n1 * x.v * x.v);
    if (nq.get_den() != 1 || reduce_num(nq, N) != norms_[i]) return false;
    for (std::size_t j = 0; j < size(); ++j) {
      const auto& y = values[j];
      Rational nb = sign * N * 2 * (x.u * y.u - n1 * x.v * y.v);
      if (nb.get_den() != 1 || reduce_num(nb, N) != bilinear_num(i, j)) return false;
    }
  }
  return true;
}

}  // namespace weilform
