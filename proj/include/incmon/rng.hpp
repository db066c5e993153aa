#pragma once

#include <cstdint>
#include <random>

#include "incmon/scalar.hpp"

namespace incmon {

// Deterministic random source for tests and the sampling modes. mt19937_64
// has a standard-pinned sequence, so a fixed seed reproduces byte-identical
// runs everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

  std::uint64_t u64() { return gen_(); }

  // Uniform value in [0, n).
  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : gen_() % n; }

  bool coin() { return gen_() & 1; }

  // Small random rational with numerator in [-9, 9], denominator in [1, 9].
  Rational rational() {
    long num = static_cast<long>(below(19)) - 9;
    long den = static_cast<long>(below(9)) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (r != 0) return r;
    }
  }

  Scalar scalar(const Field& f) {
    if (f.kind == FieldKind::rationals) return Scalar(rational());
    return Scalar(gf_of(f.q, static_cast<long>(below(f.q))));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace incmon
