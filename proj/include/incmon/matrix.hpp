#pragma once

#include <vector>

#include "incmon/index_set.hpp"
#include "incmon/scalar.hpp"

namespace incmon {

// Guard rail on dense rational matrices; enumeration-heavy callers stay tiny,
// and anything larger than this is almost certainly a caller bug.
inline constexpr int kMaxRationalDim = 16;

// Dense matrix over an exact field (rationals or GF(q)), row-major, 0-based
// accessors. Dimensions are validated on every binary operation.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols, Field field);  // zero-filled
  static ExactMatrix identity(int n, const Field& field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(int i, int j) const;
  void set(int i, int j, Scalar v);

  bool operator==(const ExactMatrix& other) const;

 private:
  int rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> e_;

  std::size_t pos(int i, int j) const;
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_sub(const ExactMatrix& a, const ExactMatrix& b);
bool mat_eq(const ExactMatrix& a, const ExactMatrix& b);

bool is_upper_triangular(const ExactMatrix& a);
bool is_idempotent_matrix(const ExactMatrix& a);  // square check + a*a == a

// Diagonal 0/1 matrix 1_J with ones exactly at the members of J.
ExactMatrix diag_idempotent(const IndexSet& J, const Field& field = rationals_field());

// Exact inverse of an invertible upper-triangular matrix by back
// substitution. Throws NotUnit when the matrix is not upper triangular or
// has a zero diagonal entry.
ExactMatrix upper_triangular_inverse(const ExactMatrix& a);

}  // namespace incmon
