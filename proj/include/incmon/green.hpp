#pragma once

#include <string>
#include <vector>

#include "incmon/matrix.hpp"

namespace incmon {

enum class GreenRel { R, L, J, H, D };

std::string green_rel_name(GreenRel rel);
GreenRel green_rel_from(const std::string& name);

// Element of the maximal-antichain monoid over the complete bipartite poset
// of type (k, m), stored in block form
//   [[1_k, B], [0, diag(D)]]
// with B a k x m matrix and D a vector of length m. These are exactly the
// members of that monoid, and the representation multiplies as
//   X * Y = (B_Y + B_X diag(D_Y), D_X D_Y).
class BlockElement {
 public:
  BlockElement(int k, int m, Field field);  // identity pattern: B = 0, D = 1
  static BlockElement identity(int k, int m, const Field& field);
  // Validates the block shape; throws NotInMonoid when the matrix is not of
  // the form above.
  static BlockElement from_matrix(const ExactMatrix& x, int k);
  ExactMatrix to_matrix() const;

  int k() const { return k_; }
  int m() const { return m_; }
  int n() const { return k_ + m_; }
  const Field& field() const { return field_; }

  const Scalar& b(int i, int j) const;  // 0-based within the k x m block
  void set_b(int i, int j, Scalar v);
  const Scalar& d(int j) const;  // 0-based within the diagonal vector
  void set_d(int j, Scalar v);

  bool is_unit() const;        // every d(j) nonzero
  bool is_idempotent() const;  // via block multiplication

  bool operator==(const BlockElement&) const = default;

 private:
  int k_ = 0, m_ = 0;
  Field field_;
  std::vector<Scalar> b_;  // k*m row-major
  std::vector<Scalar> d_;  // m
};

BlockElement block_mul(const BlockElement& x, const BlockElement& y);

// Indices whose diagonal entry is nonzero: [k] plus the nonzero positions of
// D, as a subset of [k+m]. Constant across the R-, L-, J- and D-class of x.
IndexSet support_set(const BlockElement& x);

// Semigroup inverses: x y x = x and y x y = y.
bool is_inverse(const BlockElement& x, const BlockElement& y);

// The commuting inverse of x inside its H-class: D inverted where nonzero,
// and B' = B(1 - 1~_L) - B D' columnwise. Satisfies x x' = x' x = the meet
// idempotent of x.
BlockElement canonical_inverse(const BlockElement& x);

// x x' for the canonical inverse x': the identity element of the group
// H-class of x, with diagonal pattern support_set(x).
BlockElement meet_idempotent(const BlockElement& x);

// Closed-form Green's relations on the maximal-antichain monoid:
// R = J = D hold exactly on equal support sets; L = H additionally needs the
// B-columns outside the support to agree.
bool green_related(const BlockElement& x, const BlockElement& y, GreenRel rel);

// The idempotents 1_J with [k] contained in J, one per J-class, ordered by
// the bitmask of J \ [k]. A Boolean lattice of rank m under intersection.
class CrossSectionLattice {
 public:
  CrossSectionLattice(int k, int m);

  int k() const { return k_; }
  int m() const { return m_; }
  const std::vector<IndexSet>& elements() const { return elements_; }

  static bool leq(const IndexSet& a, const IndexSet& b);  // inclusion
  IndexSet meet(const IndexSet& a, const IndexSet& b) const;
  IndexSet join(const IndexSet& a, const IndexSet& b) const;
  IndexSet bottom() const { return elements_.front(); }
  IndexSet top() const { return elements_.back(); }

  // Order isomorphism with the subsets of [m]: J corresponds to the shifted
  // set (J \ [k]) - k.
  IndexSet to_subset(const IndexSet& J) const;
  IndexSet lift(const IndexSet& subset) const;

 private:
  int k_ = 0, m_ = 0;
  std::vector<IndexSet> elements_;
};

// Group isomorphism from the H-class of 1_J onto the unit group of the
// monoid of type (k, |J| - k): deletes the zero columns (and the zero
// diagonal positions) outside J. Throws NotInHClass when x is not H-related
// to 1_J.
BlockElement h_class_iso(const IndexSet& J, const BlockElement& x);
// Inverse direction: re-inserts zero columns at the positions outside J.
BlockElement h_class_iso_inverse(const IndexSet& J, const BlockElement& y);

// Bijection from the H-class of x onto the group H-class of 1_L, L the
// support set of x: right multiplication by 1_L. Inverse: right
// multiplication by the meet idempotent of x.
BlockElement rho(const BlockElement& x);
BlockElement rho_inverse(const BlockElement& y, const BlockElement& x);

// Number of pairwise nonisomorphic maximal subgroups (group H-classes):
// one per support cardinality, m + 1 in total.
int count_h_class_types(int k, int m);

// Order of the group H-class of 1_J over GF(q): (q-1)^(|J|-k) * q^(k(|J|-k)).
std::uint64_t h_class_order_gf(int k, const IndexSet& J, unsigned q);

}  // namespace incmon
