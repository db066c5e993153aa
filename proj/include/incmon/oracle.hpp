#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "incmon/context.hpp"
#include "incmon/green.hpp"

namespace incmon {

inline constexpr std::uint64_t kDefaultMaterializeCap = 1'000'000;
// Full multiplication tables are kept only up to this many elements.
inline constexpr std::size_t kMulTableCap = 10'000;

// Brute-force finite semigroup: every member of the monoid over GF(q),
// materialized explicitly in ascending flattened-entry order. All the
// relation and conjugacy answers below are literal definitional scans, used
// as an independent check against the closed-form routines.
class FiniteMonoid {
 public:
  static FiniteMonoid materialize(const MonoidContext& ctx, unsigned q,
                                  std::uint64_t cap = kDefaultMaterializeCap);

  const MonoidContext& context() const { return ctx_; }
  unsigned modulus() const { return q_; }
  std::size_t size() const { return elems_.size(); }
  const ExactMatrix& element(std::size_t i) const { return elems_[i]; }

  std::optional<std::size_t> find(const ExactMatrix& x) const;
  std::size_t index_of(const ExactMatrix& x) const;  // ElementNotInMonoid

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t identity() const { return identity_; }
  const std::vector<std::size_t>& units() const { return units_; }
  std::size_t unit_inverse(std::size_t u) const;

  // Ideals as membership flags over the element indices, memoized.
  const std::vector<bool>& right_ideal(std::size_t a) const;   // aS
  const std::vector<bool>& left_ideal(std::size_t a) const;    // Sa
  const std::vector<bool>& two_sided_ideal(std::size_t a) const;  // SaS

 private:
  MonoidContext ctx_;
  unsigned q_ = 2;
  std::vector<ExactMatrix> elems_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> units_;
  std::vector<std::vector<std::size_t>> table_;  // empty when size > kMulTableCap
  mutable std::unordered_map<std::size_t, std::size_t> unit_inv_;
  mutable std::vector<std::optional<std::vector<bool>>> right_, left_, two_sided_;

  explicit FiniteMonoid(MonoidContext ctx) : ctx_(std::move(ctx)) {}
  static std::string key_of(const ExactMatrix& x);
};

// Literal ideal-equality test: R compares aS^1, L compares S^1 a, J compares
// S^1 a S^1, H is R and L, and D asks for a middleman c with a R c and c L b.
bool green_oracle(const FiniteMonoid& s, std::size_t a, std::size_t b, GreenRel rel);

// First pair (z, w) in canonical order with z w = a and w z = b.
std::optional<std::pair<std::size_t, std::size_t>> p_conjugacy_oracle(const FiniteMonoid& s,
                                                                      std::size_t a,
                                                                      std::size_t b);

struct RegularityReport {
  std::uint64_t checked = 0;
  std::vector<std::size_t> failures;  // elements with no commuting inverse
  bool all_completely_regular() const { return failures.empty(); }
};

// Scans every element for an inverse that commutes with it (x y x = x,
// y x y = y, x y = y x).
RegularityReport completely_regular_check(const FiniteMonoid& s);

// First unit g in canonical order with g x g^{-1} = y.
std::optional<std::size_t> conjugator_search(const FiniteMonoid& s, std::size_t x,
                                             std::size_t y);

// Conjugation-orbit partition of the unit group: class_id[i] >= 0 for units
// (orbits numbered by first appearance in canonical order), -1 otherwise.
std::vector<int> unit_conjugacy_classes(const FiniteMonoid& s);

}  // namespace incmon
