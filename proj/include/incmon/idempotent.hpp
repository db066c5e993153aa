#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "incmon/context.hpp"
#include "incmon/rng.hpp"

namespace incmon {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Diagonal pattern of an idempotent: the set of indices carrying a 1. The
// idempotents with pattern J form one connected component of the idempotent
// variety, the fiber over 1_J of the diagonal projection.
IndexSet diag_projection(const ExactMatrix& x);

// Dimension of the idempotent component with pattern J inside the incidence
// monoid of the complete bipartite poset of type (k, m): with a = |J ∩ [k]|
// and b = |J \ [k]| this is k*b + a*m - 2*a*b.
long component_dimension(int k, int m, const IndexSet& J);

// Free/forced coordinates of a component for a complete bipartite poset:
// entry (i, j) of the upper-right block is free exactly when i and j lie on
// opposite sides of J, forced to zero otherwise.
struct ComponentDescriptor {
  MonoidContext ctx;
  IndexSet J;
  std::vector<std::pair<int, int>> free_positions;         // 0-based (row, col)
  std::vector<std::pair<int, int>> forced_zero_positions;  // rest of the block

  // Builds 1_J plus the given values at the free positions (row-major order).
  ExactMatrix instantiate(const Field& field, std::span<const Scalar> values) const;
};

ComponentDescriptor component_parametrization(const MonoidContext& ctx, const IndexSet& J);

// Product of two idempotents of a maximal-antichain monoid over a complete
// bipartite poset. Equal to the plain matrix product; additionally checks the
// column rule (columns come from the right factor where its diagonal is 0,
// from the left factor where it is 1) and that the product lands in the
// component of the intersected pattern.
ExactMatrix component_multiply(const MonoidContext& ctx, const ExactMatrix& y,
                               const ExactMatrix& z);

struct OrthodoxMode {
  enum class Kind { exhaustive_gf, random_rational } kind = Kind::exhaustive_gf;
  unsigned q = 2;               // exhaustive_gf
  std::uint64_t trials = 1000;  // random_rational: number of sampled pairs
  std::uint64_t seed = 0;
};

struct OrthodoxyReport {
  std::uint64_t idempotents_seen = 0;
  std::uint64_t pairs_checked = 0;
  bool passed = false;
  // First few violating products, stored as (left, right) pairs.
  std::vector<std::pair<ExactMatrix, ExactMatrix>> violations;
};

// Checks that products of idempotents stay idempotent. Requires an antichain
// monoid over a poset of height at most one (all intervals have <= 2
// elements); that is the regime where the answer is yes and where sampling
// idempotents is directly parametrizable.
OrthodoxyReport check_orthodox(const MonoidContext& ctx, const OrthodoxMode& mode);

// Uniform random idempotent of an antichain monoid over a height <= 1 poset:
// random admissible diagonal pattern, free strict entries filled at random.
ExactMatrix random_idempotent(const MonoidContext& ctx, Rng& rng,
                              const Field& field = rationals_field());

struct IdempotentComponentSlice {
  IndexSet J;
  std::vector<ExactMatrix> elements;  // ascending in the flattened-entry order
};

struct IdempotentEnumeration {
  unsigned q = 2;
  std::uint64_t candidates = 0;  // size of the scanned search space
  std::vector<IdempotentComponentSlice> components;  // ordered by J bitmask

  const IdempotentComponentSlice* find(const IndexSet& J) const;
  std::uint64_t total() const;
};

// All idempotents of the monoid over GF(q), grouped by diagonal pattern.
// Scans every member (diagonal coordinates only need {0,1}); throws
// SearchSpaceTooLarge when the scan would exceed the cap.
IdempotentEnumeration enumerate_idempotents_gf(const MonoidContext& ctx, unsigned q,
                                               std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace incmon
