#pragma once

#include <optional>
#include <vector>

#include "incmon/matrix.hpp"
#include "incmon/poset.hpp"

namespace incmon {

enum class ContextKind { full_incidence, antichain_monoid };

// A monoid of upper-triangular matrices attached to a poset P:
//   full_incidence   all matrices supported on the order relation of P,
//   antichain_monoid the submonoid whose diagonal is 1 outside a chosen
//                    antichain A (the closure of diagonal units times
//                    unipotents, described by exactly those affine equations).
class MonoidContext {
 public:
  static MonoidContext full_incidence(Poset p);
  static MonoidContext antichain_monoid(Poset p, IndexSet antichain);
  static MonoidContext antichain_monoid(Poset p, Antichain antichain);

  const Poset& poset() const { return poset_; }
  ContextKind kind() const { return kind_; }
  // Present exactly in antichain mode.
  const std::optional<IndexSet>& antichain() const { return antichain_; }
  int size() const { return poset_.size(); }

  bool supports(int i, int j) const { return poset_.leq(i, j); }
  // True when the diagonal entry at 0-based index i is pinned to 1.
  bool diagonal_fixed(int i) const;

  std::string describe() const;

 private:
  Poset poset_;
  ContextKind kind_ = ContextKind::full_incidence;
  std::optional<IndexSet> antichain_;

  MonoidContext(Poset p, ContextKind kind, std::optional<IndexSet> a);
};

// Membership of an n x n matrix over any supported field.
bool contains(const MonoidContext& ctx, const ExactMatrix& x);

// Invertibility inside the monoid: membership plus a fully nonzero diagonal.
bool is_unit(const MonoidContext& ctx, const ExactMatrix& x);

// Inverse of a unit; stays in the monoid because the support relation is
// transitively closed. Throws NotInMonoid / NotUnit.
ExactMatrix unit_inverse(const MonoidContext& ctx, const ExactMatrix& x);

// Affine chart of an antichain monoid: y = 1_{A^c} + diag_part + nil_part
// with diag_part diagonal and supported on A, nil_part strictly upper and
// supported on the strict order relations. The chart is a bijection.
struct JordanChart {
  ExactMatrix diag_part;
  ExactMatrix nil_part;
};

JordanChart jordan_chart(const MonoidContext& ctx, const ExactMatrix& y);
ExactMatrix jordan_unchart(const MonoidContext& ctx, const ExactMatrix& diag_part,
                           const ExactMatrix& nil_part);

// One-parameter curve through the idempotent 1_J + N: at parameter t the
// matrix 1_J + t(1_n - 1_J) + N. Lands in ctx for every t; a unit for t != 0;
// the seed idempotent at t = 0.
ExactMatrix lambda_curve(const MonoidContext& ctx, const IndexSet& J, const ExactMatrix& nil,
                         const Scalar& t);

// Splits an antichain context along the connected components of its poset.
std::vector<MonoidContext> decompose(const MonoidContext& ctx);

// Support-preserving re-embedding of a matrix over a (not necessarily
// complete) bipartite poset into the incidence monoid of the complete
// bipartite poset of the same type, minimal elements first.
ExactMatrix embed_bipartite(const MonoidContext& src, const ExactMatrix& x);

// Row-major list of the entry positions (0-based) a member of the monoid may
// fill freely: all supported positions except the pinned diagonal ones.
std::vector<std::pair<int, int>> free_coordinates(const MonoidContext& ctx);

// The member with zeros at every free coordinate (pinned diagonal entries set
// to 1). Every member is this matrix plus values at free coordinates.
ExactMatrix base_matrix(const MonoidContext& ctx, const Field& field);

}  // namespace incmon
