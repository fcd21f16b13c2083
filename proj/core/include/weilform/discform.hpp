#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "weilform/exactnum.hpp"

namespace weilform {

/// Q(sqrt(N1)) for squarefree N1 > 1 together with its discriminant N.
struct QuadField {
  std::int64_t n1 = 0;
  std::int64_t N = 0;

  static QuadField make(std::int64_t n1);
};

/// u + v sqrt(N1) with rational coordinates.
struct FieldElement {
  Rational u;
  Rational v;
};

/// Which cyclic factor of the discriminant form a generator spans.
enum class GeneratorRole {
  Two,       // 1/2
  TwoPrime,  // sqrt(N1)/2 (N1 = 3 mod 4) or sqrt(N1)/4 (N1 = 2 mod 4)
  Odd,       // sqrt(N1)/N1 resp. 2 sqrt(N1)/N1, spanning the odd part
};

struct Generator {
  std::int64_t order;
  std::int64_t norm_num;  // N q(g) mod N
  FieldElement value;     // representative in the inverse different
  GeneratorRole role;
};

/// Coordinates against the generator list, each reduced mod its order.
struct DElement {
  std::vector<std::int64_t> coords;

  friend bool operator==(const DElement&, const DElement&) = default;
  friend auto operator<=>(const DElement&, const DElement&) = default;
};

struct JordanSymbol {
  std::int64_t prime;
  int exponent;                 // component is q_p on (Z/p^exponent)^rank
  int rank;
  int sign;                     // +1 or -1
  std::optional<int> oddity;    // 2-adic odd components only, reduced mod 8

  friend bool operator==(const JordanSymbol&, const JordanSymbol&) = default;
};

/// An automorphism of D stored as a permutation of element indices.
struct Automorphism {
  std::vector<std::int64_t> primes;  // which sigma_p it is composed of
  std::vector<std::size_t> image;    // image[i] = index of sigma(element i)

  std::size_t operator()(std::size_t index) const { return image[index]; }
  bool is_identity() const;
};

/// The discriminant form D = d^{-1} / O_F of Q(sqrt(N1)) (equivalently
/// L'/L for L = Z^2 + O_F with q(a, b, x) = N(x) - ab), realized on the
/// explicit cyclic generators of the Jordan splitting. Norms are handled as
/// integers N q(.) mod N. Immutable after build.
class DiscriminantForm {
 public:
  /// Throws NotSquarefree or OutOfRange for bad N1.
  static DiscriminantForm build(std::int64_t n1);

  /// D[-1]: the same group with the negated quadratic form.
  DiscriminantForm negated() const;

  const QuadField& field() const noexcept { return field_; }
  std::int64_t level() const noexcept { return field_.N; }
  bool is_negated() const noexcept { return negated_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Fixed enumeration of D; index 0 is the zero element.
  const std::vector<DElement>& elements() const noexcept { return elements_; }
  const DElement& element(std::size_t index) const { return elements_[index]; }
  std::size_t index_of(const DElement& g) const;

  DElement make(std::vector<std::int64_t> coords) const;
  DElement zero() const;
  DElement add(const DElement& a, const DElement& b) const;
  DElement negate(const DElement& a) const;
  DElement scale(const DElement& a, std::int64_t k) const;

  std::int64_t norm_num(const DElement& g) const;
  std::int64_t norm_num(std::size_t index) const { return norms_[index]; }
  /// q(g) in [0, 1).
  Rational norm(const DElement& g) const;

  std::int64_t bilinear_num(const DElement& a, const DElement& b) const;
  std::int64_t bilinear_num(std::size_t a, std::size_t b) const;

  /// Projection onto the p-primary component D_p.
  DElement p_part(const DElement& g, std::int64_t p) const;

  /// Jordan symbols from the closed formulas for these forms.
  std::vector<JordanSymbol> jordan() const;

  /// All 2^omega(N) automorphisms, identity first; products of the sigma_p.
  std::vector<Automorphism> automorphisms() const;

  /// Some sigma with sigma(beta) = gamma. Throws NormMismatch when the norms
  /// differ and NotFound when no automorphism works.
  Automorphism find_norm_transporter(const DElement& beta, const DElement& gamma) const;

  /// #{g : N q(g) = n mod N}.
  std::int64_t count_norm_class(std::int64_t n) const;

  /// Residues n mod N with count_norm_class(n) > 0, increasing.
  std::vector<std::int64_t> realized_classes() const;

  /// Norms q(g) mod 1 over the p-primary component.
  std::set<Rational> local_norms(std::int64_t p) const;

  /// Recomputes every norm and pairing from the field representatives
  /// (norm and trace in Q(sqrt(N1))), checks each generator's order against
  /// O_F-membership, and checks |D| = N. True when everything agrees.
  bool cross_check() const;

 private:
  DiscriminantForm() = default;
  void finalize();
  FieldElement combine(const DElement& g) const;

  QuadField field_;
  bool negated_ = false;
  std::vector<Generator> generators_;
  std::vector<std::vector<std::int64_t>> gram_;  // N (g_i, g_j) mod N
  std::vector<DElement> elements_;
  std::vector<std::int64_t> norms_;
};

/// Membership in O_F for u + v sqrt(N1).
bool in_ring_of_integers(const QuadField& f, const FieldElement& x);

}  // namespace weilform
