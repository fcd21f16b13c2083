#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "weilform/discform.hpp"
#include "weilform/exactnum.hpp"

namespace weilform {

/// Integer 2x2 matrix [[a, b], [c, d]].
struct SL2Matrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static SL2Matrix identity() { return {1, 0, 0, 1}; }
  static SL2Matrix S() { return {0, -1, 1, 0}; }
  static SL2Matrix T(std::int64_t k = 1) { return {1, k, 0, 1}; }

  std::int64_t det() const { return a * d - b * c; }
  friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
};

struct WordToken {
  enum class Kind { S, T } kind;
  std::int64_t power = 1;  // exponent for T tokens

  friend bool operator==(const WordToken&, const WordToken&) = default;
};

/// A product of generators S and T^k, read left to right.
using SL2Word = std::vector<WordToken>;

enum class Rounding { Nearest, Floor };

/// Continued-fraction reduction M = T^{k1} S T^{k2} S ... with |c| shrinking
/// each step. Throws NotUnimodular when det(M) != 1.
SL2Word decompose_word(const SL2Matrix& m, Rounding rounding = Rounding::Nearest);

SL2Matrix evaluate_word(const SL2Word& word);

/// Square matrix over Q(zeta_N)[1/sqrt(N)] indexed by the fixed element
/// enumeration of a discriminant form. Entry (row, col) = (delta, gamma) is
/// the e_delta-coefficient of the image of e_gamma.
class WeilMatrix {
 public:
  WeilMatrix(FieldPtr field, std::size_t dim);

  static WeilMatrix identity(FieldPtr field, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const FieldPtr& field() const noexcept { return field_; }

  const CycExt& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  CycExt& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  friend WeilMatrix operator*(const WeilMatrix& x, const WeilMatrix& y);
  friend bool operator==(const WeilMatrix& x, const WeilMatrix& y);
  friend bool operator!=(const WeilMatrix& x, const WeilMatrix& y) { return !(x == y); }

  /// Entrywise complex conjugate.
  WeilMatrix conj() const;
  WeilMatrix conj_transpose() const;
  WeilMatrix power(std::int64_t e) const;

  bool is_diagonal() const;
  bool is_unitary() const;

 private:
  FieldPtr field_;
  std::size_t dim_;
  std::vector<CycExt> entries_;
};

/// The Weil representation rho_D of SL2(Z) on C[D]. The cyclotomic field
/// Q(zeta_N) is shared by all matrices it produces.
class WeilRepresentation {
 public:
  explicit WeilRepresentation(const DiscriminantForm& form);

  const DiscriminantForm& form() const noexcept { return form_; }
  const FieldPtr& field() const noexcept { return field_; }

  /// rho(T^k): diagonal with entries e(k q(gamma)).
  WeilMatrix rho_T(std::int64_t k = 1) const;
  /// rho(S) e_gamma = N^{-1/2} sum_delta e(-(gamma, delta)) e_delta.
  WeilMatrix rho_S() const;

  WeilMatrix rho(const SL2Word& word) const;
  /// Throws NotUnimodular.
  WeilMatrix rho(const SL2Matrix& m) const;

  /// Entrywise conjugate of rho(M).
  WeilMatrix dual_rho(const SL2Matrix& m) const;

 private:
  DiscriminantForm form_;
  FieldPtr field_;
  WeilMatrix s_;
};

}  // namespace weilform
