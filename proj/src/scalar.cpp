#include "incmon/scalar.hpp"

namespace incmon {

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field())
    fail("FieldMismatch", a.field().str() + " vs " + b.field().str());
}

}  // namespace

Scalar Scalar::of_int(const Field& f, long value) {
  if (f.kind == FieldKind::rationals) return Scalar(Rational(value));
  return Scalar(gf_of(f.q, value));
}

Field Scalar::field() const {
  if (is_rational()) return rationals_field();
  return Field{FieldKind::gf, std::get<Gf>(v_).q};
}

const Rational& Scalar::rational() const {
  if (!is_rational()) fail("FieldMismatch", "scalar is not rational");
  return std::get<Rational>(v_);
}

Gf Scalar::gf() const {
  if (is_rational()) fail("FieldMismatch", "scalar is not a GF element");
  return std::get<Gf>(v_);
}

bool Scalar::is_zero() const {
  if (is_rational()) return std::get<Rational>(v_) == 0;
  return std::get<Gf>(v_).value == 0;
}

bool Scalar::is_one() const {
  if (is_rational()) return std::get<Rational>(v_) == 1;
  return std::get<Gf>(v_).value == 1;
}

std::string Scalar::str() const {
  if (is_rational()) return rational_str(std::get<Rational>(v_));
  return std::to_string(std::get<Gf>(v_).value);
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-std::get<Rational>(v_)));
  return Scalar(gf_neg(std::get<Gf>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_rational()) {
    const Rational& r = std::get<Rational>(v_);
    if (r == 0) fail("DivisionByZero", "inverse of rational 0");
    return Scalar(Rational(1 / r));
  }
  return Scalar(gf_inverse(std::get<Gf>(v_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.is_rational()) return Scalar(Rational(a.rational() + b.rational()));
  return Scalar(gf_add(a.gf(), b.gf()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.is_rational()) return Scalar(Rational(a.rational() - b.rational()));
  return Scalar(gf_sub(a.gf(), b.gf()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.is_rational()) return Scalar(Rational(a.rational() * b.rational()));
  return Scalar(gf_mul(a.gf(), b.gf()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& other) const {
  if (field() != other.field()) return false;
  if (is_rational()) return std::get<Rational>(v_) == other.rational();
  return std::get<Gf>(v_) == other.gf();
}

}  // namespace incmon
