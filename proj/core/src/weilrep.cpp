#include "weilform/weilrep.hpp"

#include "weilform/errors.hpp"
#include "weilform/ntheory.hpp"

namespace weilform {

SL2Word decompose_word(const SL2Matrix& m, Rounding rounding) {
  if (m.det() != 1) throw Error(Errc::NotUnimodular, "det = " + std::to_string(m.det()));
  SL2Word word;
  auto push_t = [&word](std::int64_t k) {
    if (k != 0) word.push_back({WordToken::Kind::T, k});
  };
  SL2Matrix cur = m;
  while (cur.c != 0) {
    const std::int64_t k = rounding == Rounding::Floor ? nt::floor_div(cur.a, cur.c)
                                                      : nt::floor_div(2 * cur.a + cur.c, 2 * cur.c);
    push_t(k);
    word.push_back({WordToken::Kind::S, 1});
    // cur <- S^{-1} T^{-k} cur
    const std::int64_t a = cur.a - k * cur.c, b = cur.b - k * cur.d;
    cur = SL2Matrix{cur.c, cur.d, -a, -b};
  }
  if (cur.a == 1) {
    push_t(cur.b);
  } else {
    // -[[1, -b], [0, 1]] = S^2 T^{-b}
    word.push_back({WordToken::Kind::S, 1});
    word.push_back({WordToken::Kind::S, 1});
    push_t(-cur.b);
  }
  return word;
}

SL2Matrix evaluate_word(const SL2Word& word) {
  SL2Matrix out = SL2Matrix::identity();
  for (const auto& t : word) out = out * (t.kind == WordToken::Kind::S ? SL2Matrix::S() : SL2Matrix::T(t.power));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool structurally_zero(const CycExt& x) { return x.a().is_zero() && x.b().is_zero(); }

}  // namespace

WeilMatrix::WeilMatrix(FieldPtr field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), entries_(dim * dim, CycExt(field_)) {}

WeilMatrix WeilMatrix::identity(FieldPtr field, std::size_t dim) {
  WeilMatrix out(field, dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = CycExt(Cyclotomic(field, Rational(1)));
  return out;
}

WeilMatrix operator*(const WeilMatrix& x, const WeilMatrix& y) {
  if (x.dim_ != y.dim_) throw Error(Errc::OutOfRange, "matrix dimension mismatch");
  const std::size_t n = x.dim_;
  WeilMatrix out(x.field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const CycExt& xik = x(i, k);
      if (structurally_zero(xik)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const CycExt& ykj = y(k, j);
        if (structurally_zero(ykj)) continue;
        out(i, j) += xik * ykj;
      }
    }
  }
  return out;
}

bool operator==(const WeilMatrix& x, const WeilMatrix& y) {
  if (x.dim_ != y.dim_) return false;
  for (std::size_t i = 0; i < x.entries_.size(); ++i)
    if (x.entries_[i] != y.entries_[i]) return false;
  return true;
}

WeilMatrix WeilMatrix::conj() const {
  WeilMatrix out(field_, dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].conj();
  return out;
}

WeilMatrix WeilMatrix::conj_transpose() const {
  WeilMatrix out(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

WeilMatrix WeilMatrix::power(std::int64_t e) const {
  WeilMatrix base = e < 0 ? conj_transpose() : *this;
  if (e < 0) e = -e;
  WeilMatrix out = identity(field_, dim_);
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

bool WeilMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool WeilMatrix::is_unitary() const { return *this * conj_transpose() == identity(field_, dim_); }

// ---------------------------------------------------------------------------

WeilRepresentation::WeilRepresentation(const DiscriminantForm& form)
    : form_(form), field_(CyclotomicField::make(form.level())), s_(field_, form.size()) {
  const std::size_t n = form_.size();
  for (std::size_t gamma = 0; gamma < n; ++gamma)
    for (std::size_t delta = 0; delta < n; ++delta)
      s_(delta, gamma) = CycExt(Cyclotomic(field_), Cyclotomic::root_of_unity(field_, -form_.bilinear_num(gamma, delta)));
}

WeilMatrix WeilRepresentation::rho_T(std::int64_t k) const {
  WeilMatrix out(field_, form_.size());
  for (std::size_t i = 0; i < form_.size(); ++i)
    out(i, i) = CycExt(Cyclotomic::root_of_unity(field_, k * form_.norm_num(i)));
  return out;
}

WeilMatrix WeilRepresentation::rho_S() const { return s_; }

WeilMatrix WeilRepresentation::rho(const SL2Word& word) const {
  const std::size_t n = form_.size();
  WeilMatrix out = WeilMatrix::identity(field_, n);
  for (const auto& t : word) {
    if (t.kind == WordToken::Kind::S) {
      out = out * s_;
      continue;
    }
    // right multiplication by a diagonal matrix scales columns
    for (std::size_t j = 0; j < n; ++j) {
      CycExt phase(Cyclotomic::root_of_unity(field_, t.power * form_.norm_num(j)));
      for (std::size_t i = 0; i < n; ++i)
        if (!structurally_zero(out(i, j))) out(i, j) = out(i, j) * phase;
    }
  }
  return out;
}

WeilMatrix WeilRepresentation::rho(const SL2Matrix& m) const { return rho(decompose_word(m)); }

WeilMatrix WeilRepresentation::dual_rho(const SL2Matrix& m) const { return rho(m).conj(); }

}  // namespace weilform
