#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "ncalg/error.hpp"

namespace ncalg {

enum class FieldKind { Rationals, RationalsWithTheta, PrimeField };

class Scalar;

/// One of the three coefficient fields: Q, Q(w) = Q[w]/(w^2+w+1), GF(p).
/// w always denotes a primitive cube root of unity.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  static FieldSpec rationals_with_theta() {
    return FieldSpec(FieldKind::RationalsWithTheta, 0);
  }
  /// Throws CharThree for p = 3 and InvalidArgument when p is not prime.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool has_theta() const noexcept;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_mpz(const mpz_class& value) const;
  Scalar from_rational(const mpq_class& value) const;
  /// Throws NoCubeRoot when the field has none.
  Scalar theta() const;

  /// "Q", "Q(w)" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_ = FieldKind::Rationals;
  std::uint32_t p_ = 0;
};

/// An element a + b*w of Q(w).
struct ThetaPair {
  mpq_class a;
  mpq_class b;
};

/// An exact field element in canonical form. Equality is structural.
class Scalar {
 public:
  /// Zero of Q.
  Scalar() : Scalar(FieldSpec::rationals(), mpq_class(0)) {}

  const FieldSpec& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  /// Throws DivisionByZero on zero.
  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Canonical text: integer, num/den, a+b*w, residue.
  std::string to_string() const;

  /// Residue in [0, p) for prime fields.
  std::uint32_t residue() const;
  /// Rational value, for Q (and Q(w) elements with no w part).
  mpq_class rational() const;
  /// (a, b) for a + b*w in Q(w).
  ThetaPair theta_pair() const;

 private:
  friend class FieldSpec;
  Scalar(FieldSpec field, mpq_class value);
  Scalar(FieldSpec field, ThetaPair value);
  Scalar(FieldSpec field, std::uint32_t residue);

  void check_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class, ThetaPair> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Smallest qualifying residue in GF(p), the adjoined w in Q(w).
Scalar primitive_cube_root(const FieldSpec& field);

}  // namespace ncalg
