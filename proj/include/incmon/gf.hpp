#pragma once

#include <vector>

#include "incmon/errors.hpp"

namespace incmon {

// Largest prime modulus the finite-field mode accepts. Brute-force scans over
// GF(q) blow up quickly; everything in this project fits inside GF(7).
inline constexpr unsigned kMaxGfModulus = 7;

inline bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

inline void check_gf_modulus(unsigned q) {
  if (!is_prime(q)) fail("NotPrime", "GF modulus " + std::to_string(q) + " is not prime");
  if (q > kMaxGfModulus)
    fail("FieldTooLarge", "GF modulus " + std::to_string(q) + " exceeds the cap of " +
                              std::to_string(kMaxGfModulus));
}

// Residue in [0, q) of a prime field GF(q).
struct Gf {
  unsigned value = 0;
  unsigned q = 2;

  bool operator==(const Gf&) const = default;
};

inline Gf gf_of(unsigned q, long value) {
  check_gf_modulus(q);
  long v = value % static_cast<long>(q);
  if (v < 0) v += q;
  return Gf{static_cast<unsigned>(v), q};
}

inline void gf_require_same(const Gf& a, const Gf& b) {
  if (a.q != b.q)
    fail("FieldMismatch", "GF(" + std::to_string(a.q) + ") vs GF(" + std::to_string(b.q) + ")");
}

inline Gf gf_add(const Gf& a, const Gf& b) {
  gf_require_same(a, b);
  return Gf{(a.value + b.value) % a.q, a.q};
}

inline Gf gf_neg(const Gf& a) { return Gf{(a.q - a.value) % a.q, a.q}; }

inline Gf gf_sub(const Gf& a, const Gf& b) { return gf_add(a, gf_neg(b)); }

inline Gf gf_mul(const Gf& a, const Gf& b) {
  gf_require_same(a, b);
  return Gf{(a.value * b.value) % a.q, a.q};
}

inline Gf gf_inverse(const Gf& a) {
  if (a.value == 0) fail("DivisionByZero", "inverse of 0 in GF(" + std::to_string(a.q) + ")");
  for (unsigned x = 1; x < a.q; ++x)
    if ((a.value * x) % a.q == 1) return Gf{x, a.q};
  fail("DivisionByZero", "no inverse found");  // unreachable for prime q
}

// All residues of GF(q) in ascending order.
inline std::vector<Gf> gf_elements(unsigned q) {
  check_gf_modulus(q);
  std::vector<Gf> out;
  out.reserve(q);
  for (unsigned v = 0; v < q; ++v) out.push_back(Gf{v, q});
  return out;
}

}  // namespace incmon
