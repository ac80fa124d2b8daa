#include "ncalg/scalar.hpp"

#include <ostream>

namespace ncalg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::NoCubeRoot: return "NoCubeRoot";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IncompleteBasis: return "IncompleteBasis";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::HomogeneityError: return "HomogeneityError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::CharThree: return "CharThree";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::ProbeCollision: return "ProbeCollision";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_inverse(std::uint32_t value, std::uint32_t p) {
  // Fermat: value^(p-2).
  std::uint64_t result = 1, base = value, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 3) throw Error(ErrorKind::CharThree, "characteristic 3 is not supported");
  if (!is_prime(p) || p > 0xFFFFFFFFull)
    throw Error(ErrorKind::InvalidArgument,
                "GF(" + std::to_string(p) + "): modulus must be a 32-bit prime");
  return FieldSpec(FieldKind::PrimeField, static_cast<std::uint32_t>(p));
}

bool FieldSpec::has_theta() const noexcept {
  switch (kind_) {
    case FieldKind::Rationals: return false;
    case FieldKind::RationalsWithTheta: return true;
    case FieldKind::PrimeField: return p_ % 3 == 1;
  }
  return false;
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long value) const { return from_mpz(mpz_class(value)); }

Scalar FieldSpec::from_mpz(const mpz_class& value) const {
  return from_rational(mpq_class(value));
}

Scalar FieldSpec::from_rational(const mpq_class& value) const {
  switch (kind_) {
    case FieldKind::Rationals: return Scalar(*this, value);
    case FieldKind::RationalsWithTheta: return Scalar(*this, ThetaPair{value, 0});
    case FieldKind::PrimeField: {
      mpz_class num = value.get_num() % p_;
      if (num < 0) num += p_;
      mpz_class den = value.get_den() % p_;
      if (den == 0)
        throw Error(ErrorKind::DivisionByZero,
                    value.get_str() + " has a denominator divisible by " +
                        std::to_string(p_));
      auto n = static_cast<std::uint32_t>(num.get_ui());
      auto d = static_cast<std::uint32_t>(den.get_ui());
      return Scalar(*this, static_cast<std::uint32_t>(
                               std::uint64_t(n) * mod_inverse(d, p_) % p_));
    }
  }
  return Scalar();
}


std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::RationalsWithTheta: return "Q(w)";
    case FieldKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
  }
  return "?";
}

Scalar FieldSpec::theta() const {
  const FieldSpec& field = *this;
  switch (field.kind()) {
    case FieldKind::Rationals:
      throw Error(ErrorKind::NoCubeRoot, "Q has no primitive cube root of unity");
    case FieldKind::RationalsWithTheta:
      return Scalar(field, ThetaPair{0, 1});
    case FieldKind::PrimeField: {
      const std::uint64_t p = field.characteristic();
      for (std::uint64_t r = 2; r < p; ++r)
        if (r * r % p * r % p == 1) return Scalar(field, static_cast<std::uint32_t>(r));
      throw Error(ErrorKind::NoCubeRoot,
                  field.name() + " has no primitive cube root of unity");
    }
  }
  throw Error(ErrorKind::NoCubeRoot, "unknown field");
}

Scalar primitive_cube_root(const FieldSpec& field) { return field.theta(); }

Scalar::Scalar(FieldSpec field, mpq_class value)
    : field_(field), value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar::Scalar(FieldSpec field, ThetaPair value)
    : field_(field), value_(std::move(value)) {
  auto& t = std::get<ThetaPair>(value_);
  t.a.canonicalize();
  t.b.canonicalize();
}

Scalar::Scalar(FieldSpec field, std::uint32_t residue)
    : field_(field), value_(residue) {}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_))
    throw Error(ErrorKind::MixedFields,
                "cannot combine " + field_.name() + " and " + rhs.field_.name());
}

bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return sgn(std::get<mpq_class>(value_)) == 0;
    case FieldKind::RationalsWithTheta: {
      const auto& t = std::get<ThetaPair>(value_);
      return sgn(t.a) == 0 && sgn(t.b) == 0;
    }
    case FieldKind::PrimeField: return std::get<std::uint32_t>(value_) == 0;
  }
  return false;
}

bool Scalar::is_one() const { return *this == field_.one(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  switch (field_.kind()) {
    case FieldKind::Rationals: {
      auto& q = std::get<mpq_class>(r.value_);
      q = -q;
      break;
    }
    case FieldKind::RationalsWithTheta: {
      auto& t = std::get<ThetaPair>(r.value_);
      t.a = -t.a;
      t.b = -t.b;
      break;
    }
    case FieldKind::PrimeField: {
      auto& v = std::get<std::uint32_t>(r.value_);
      if (v) v = field_.characteristic() - v;
      break;
    }
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  switch (field_.kind()) {
    case FieldKind::Rationals:
      std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
      break;
    case FieldKind::RationalsWithTheta: {
      auto& t = std::get<ThetaPair>(value_);
      const auto& u = std::get<ThetaPair>(rhs.value_);
      t.a += u.a;
      t.b += u.b;
      break;
    }
    case FieldKind::PrimeField: {
      auto& v = std::get<std::uint32_t>(value_);
      v = static_cast<std::uint32_t>(
          (std::uint64_t(v) + std::get<std::uint32_t>(rhs.value_)) %
          field_.characteristic());
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  switch (field_.kind()) {
    case FieldKind::Rationals:
      std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
      break;
    case FieldKind::RationalsWithTheta: {
      // w^2 = -1 - w
      auto& t = std::get<ThetaPair>(value_);
      const auto& u = std::get<ThetaPair>(rhs.value_);
      mpq_class bd = t.b * u.b;
      mpq_class a = t.a * u.a - bd;
      mpq_class b = t.a * u.b + t.b * u.a - bd;
      t.a = std::move(a);
      t.b = std::move(b);
      break;
    }
    case FieldKind::PrimeField: {
      auto& v = std::get<std::uint32_t>(value_);
      v = static_cast<std::uint32_t>(std::uint64_t(v) *
                                     std::get<std::uint32_t>(rhs.value_) %
                                     field_.characteristic());
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  switch (field_.kind()) {
    case FieldKind::Rationals:
      return Scalar(field_, mpq_class(1) / std::get<mpq_class>(value_));
    case FieldKind::RationalsWithTheta: {
      // (a+bw)^-1 = (a-b-bw) / (a^2-ab+b^2)
      const auto& t = std::get<ThetaPair>(value_);
      mpq_class norm = t.a * t.a - t.a * t.b + t.b * t.b;
      return Scalar(field_, ThetaPair{(t.a - t.b) / norm, -t.b / norm});
    }
    case FieldKind::PrimeField:
      return Scalar(field_, mod_inverse(std::get<std::uint32_t>(value_),
                                        field_.characteristic()));
  }
  return *this;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = field_.one();
  Scalar base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (!(lhs.field_ == rhs.field_)) return false;
  switch (lhs.field_.kind()) {
    case FieldKind::Rationals:
      return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
    case FieldKind::RationalsWithTheta: {
      const auto& t = std::get<ThetaPair>(lhs.value_);
      const auto& u = std::get<ThetaPair>(rhs.value_);
      return t.a == u.a && t.b == u.b;
    }
    case FieldKind::PrimeField:
      return std::get<std::uint32_t>(lhs.value_) ==
             std::get<std::uint32_t>(rhs.value_);
  }
  return false;
}

std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return rational_text(std::get<mpq_class>(value_));
    case FieldKind::RationalsWithTheta: {
      const auto& t = std::get<ThetaPair>(value_);
      if (sgn(t.b) == 0) return rational_text(t.a);
      std::string wpart;
      mpq_class mag = abs(t.b);
      wpart = (mag == 1) ? "w" : rational_text(mag) + "*w";
      if (sgn(t.a) == 0) return (sgn(t.b) < 0 ? "-" : "") + wpart;
      return rational_text(t.a) + (sgn(t.b) < 0 ? "-" : "+") + wpart;
    }
    case FieldKind::PrimeField:
      return std::to_string(std::get<std::uint32_t>(value_));
  }
  return "?";
}

std::uint32_t Scalar::residue() const {
  if (field_.kind() != FieldKind::PrimeField)
    throw Error(ErrorKind::MixedFields, "residue() on " + field_.name());
  return std::get<std::uint32_t>(value_);
}

mpq_class Scalar::rational() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return std::get<mpq_class>(value_);
    case FieldKind::RationalsWithTheta: {
      const auto& t = std::get<ThetaPair>(value_);
      if (sgn(t.b) == 0) return t.a;
      break;
    }
    case FieldKind::PrimeField: return std::get<std::uint32_t>(value_);
  }
  throw Error(ErrorKind::InvalidArgument, to_string() + " is not rational");
}

ThetaPair Scalar::theta_pair() const {
  if (field_.kind() != FieldKind::RationalsWithTheta)
    throw Error(ErrorKind::MixedFields, "theta_pair() on " + field_.name());
  return std::get<ThetaPair>(value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace ncalg
