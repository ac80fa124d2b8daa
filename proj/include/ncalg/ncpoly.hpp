#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ncalg/linalg.hpp"
#include "ncalg/scalar.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

struct Term {
  Word word;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of the free algebra K<x_0..x_{n-1}>. Terms are kept strictly
/// descending in the monomial order with no zero coefficients, so the
/// leading term is terms().front().
class NcPoly {
 public:
  NcPoly() = default;
  NcPoly(FieldSpec field, MonomialOrder order) : field_(field), order_(order) {}

  static NcPoly constant(FieldSpec field, MonomialOrder order, const Scalar& c);
  static NcPoly monomial(FieldSpec field, MonomialOrder order, Word word);
  static NcPoly monomial(FieldSpec field, MonomialOrder order, Word word,
                         const Scalar& c);
  /// Sorts and merges arbitrary terms.
  static NcPoly from_terms(FieldSpec field, MonomialOrder order,
                           std::vector<Term> terms);

  const FieldSpec& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t ngens() const noexcept { return order_.ngens(); }

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& leading() const;
  const Word& leading_word() const { return leading().word; }
  Scalar coefficient(const Word& w) const;

  /// Highest term degree; 0 for the zero polynomial.
  std::size_t degree() const;
  bool is_homogeneous() const;
  NcPoly homogeneous_part(std::size_t d) const;

  NcPoly monic() const;
  NcPoly scaled(const Scalar& c) const;
  /// left * this * right; term order is preserved by multiplicativity.
  NcPoly sandwich(const Word& left, const Word& right) const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& rhs);
  NcPoly& operator-=(const NcPoly& rhs);
  /// this += c * left * g * right
  NcPoly& add_multiple(const Scalar& c, const Word& left, const NcPoly& g,
                       const Word& right);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const NcPoly& a, const Scalar& c) { return a.scaled(c); }
  friend NcPoly operator*(const Scalar& c, const NcPoly& a) { return a.scaled(c); }

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.field_ == b.field_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const NcPoly& rhs) const;

  FieldSpec field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Linear change of variables: column j holds the image of generator j.
class LinearSub {
 public:
  LinearSub() = default;
  explicit LinearSub(Matrix matrix);
  static LinearSub identity(FieldSpec field, std::size_t n);
  /// Builds the matrix from the images of each generator (degree-1 polys).
  static LinearSub from_images(std::span<const NcPoly> images);

  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t ngens() const noexcept { return matrix_.rows(); }
  const FieldSpec& field() const noexcept { return matrix_.field(); }

  bool is_invertible() const;
  LinearSub inverse() const;
  /// The substitution equal to applying `first`, then `*this`.
  LinearSub after(const LinearSub& first) const;

  friend bool operator==(const LinearSub&, const LinearSub&) = default;

 private:
  Matrix matrix_;
};

NcPoly apply_sub(const NcPoly& f, const LinearSub& s);

/// C(x_j u) = u x_j, C(1) = 1, extended linearly.
NcPoly cyclic_shift(const NcPoly& f);
/// u -> C(u) + ... + C^d(u) on each degree-d monomial.
NcPoly cyclize(const NcPoly& f);
/// Drops a leading x_j; monomials not starting with x_j map to 0.
NcPoly cyclic_derivative(const NcPoly& f, Letter j);
bool is_cyclically_invariant(const NcPoly& f);

/// Reduced row echelon basis of span(polys): monic, pivots descending.
std::vector<NcPoly> span_basis(std::span<const NcPoly> polys);
bool same_span(std::span<const NcPoly> a, std::span<const NcPoly> b);
std::size_t span_dim(std::span<const NcPoly> polys);

}  // namespace ncalg
