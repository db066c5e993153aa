#pragma once

#include <string>
#include <variant>

#include "incmon/gf.hpp"
#include "incmon/rational.hpp"

namespace incmon {

enum class FieldKind { rationals, gf };

// Tag describing which field a matrix or scalar lives over.
struct Field {
  FieldKind kind = FieldKind::rationals;
  unsigned q = 0;  // modulus, only meaningful in gf mode

  bool operator==(const Field&) const = default;
  std::string str() const {
    return kind == FieldKind::rationals ? "rationals" : "gf(" + std::to_string(q) + ")";
  }
};

inline Field rationals_field() { return Field{FieldKind::rationals, 0}; }

inline Field gf_field(unsigned q) {
  check_gf_modulus(q);
  return Field{FieldKind::gf, q};
}

// Exact field scalar: either an arbitrary-precision rational or a GF(q)
// residue. Mixed-field arithmetic throws FieldMismatch.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  explicit Scalar(Rational r) : v_(std::move(r)) {}
  explicit Scalar(Gf g) : v_(g) {}

  static Scalar zero(const Field& f) { return of_int(f, 0); }
  static Scalar one(const Field& f) { return of_int(f, 1); }
  static Scalar of_int(const Field& f, long value);

  Field field() const;
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const;
  Gf gf() const;

  bool is_zero() const;
  bool is_one() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar inverse() const;  // DivisionByZero on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  bool operator==(const Scalar& other) const;

 private:
  std::variant<Rational, Gf> v_;
};

}  // namespace incmon
