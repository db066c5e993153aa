#include "incmon/matrix.hpp"

#include "incmon/errors.hpp"

namespace incmon {

ExactMatrix::ExactMatrix(int rows, int cols, Field field)
    : rows_(rows), cols_(cols), field_(field) {
  if (rows < 0 || cols < 0) fail("DimensionMismatch", "negative matrix dimension");
  if (field.kind == FieldKind::rationals) {
    if (rows > kMaxRationalDim || cols > kMaxRationalDim)
      fail("SizeCapExceeded",
           "rational matrices are capped at " + std::to_string(kMaxRationalDim));
  } else {
    check_gf_modulus(field.q);
  }
  e_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(field_));
}

ExactMatrix ExactMatrix::identity(int n, const Field& field) {
  ExactMatrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
  return m;
}

std::size_t ExactMatrix::pos(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    fail("IndexOutOfRange",
         "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
             std::to_string(rows_) + "x" + std::to_string(cols_));
  return static_cast<std::size_t>(i) * cols_ + j;
}

const Scalar& ExactMatrix::at(int i, int j) const { return e_[pos(i, j)]; }

void ExactMatrix::set(int i, int j, Scalar v) {
  if (!(v.field() == field_))
    fail("FieldMismatch",
         "entry over " + v.field().str() + " in a matrix over " + field_.str());
  e_[pos(i, j)] = std::move(v);
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ &&
         e_ == other.e_;
}

namespace {

void require_same_field(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field() == b.field()))
    fail("FieldMismatch", a.field().str() + " vs " + b.field().str());
}

}  // namespace

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows())
    fail("DimensionMismatch",
         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  ExactMatrix out(a.rows(), b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::zero(a.field());
      for (int l = 0; l < a.cols(); ++l) {
        if (a.at(i, l).is_zero()) continue;
        acc = acc + a.at(i, l) * b.at(l, j);
      }
      out.set(i, j, std::move(acc));
    }
  return out;
}

ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b);
  require(a.rows() == b.rows() && a.cols() == b.cols(), "DimensionMismatch",
          "matrix addition shape mismatch");
  ExactMatrix out(a.rows(), a.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
  return out;
}

ExactMatrix mat_sub(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b);
  require(a.rows() == b.rows() && a.cols() == b.cols(), "DimensionMismatch",
          "matrix subtraction shape mismatch");
  ExactMatrix out(a.rows(), a.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j) - b.at(i, j));
  return out;
}

bool mat_eq(const ExactMatrix& a, const ExactMatrix& b) { return a == b; }

bool is_upper_triangular(const ExactMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (!a.at(i, j).is_zero()) return false;
  return true;
}

bool is_idempotent_matrix(const ExactMatrix& a) {
  if (a.rows() != a.cols()) return false;
  return mat_mul(a, a) == a;
}

ExactMatrix diag_idempotent(const IndexSet& J, const Field& field) {
  ExactMatrix m(J.ambient(), J.ambient(), field);
  for (int i : J.members()) m.set(i - 1, i - 1, Scalar::one(field));
  return m;
}

ExactMatrix upper_triangular_inverse(const ExactMatrix& a) {
  require(is_upper_triangular(a), "NotUnit", "matrix is not upper triangular");
  const int n = a.rows();
  for (int i = 0; i < n; ++i)
    require(!a.at(i, i).is_zero(), "NotUnit",
            "zero diagonal entry at position " + std::to_string(i + 1));
  ExactMatrix inv(n, n, a.field());
  for (int j = n - 1; j >= 0; --j) {
    inv.set(j, j, a.at(j, j).inverse());
    for (int i = j - 1; i >= 0; --i) {
      Scalar acc = Scalar::zero(a.field());
      for (int l = i + 1; l <= j; ++l) acc = acc + a.at(i, l) * inv.at(l, j);
      inv.set(i, j, (-acc) * a.at(i, i).inverse());
    }
  }
  return inv;
}

}  // namespace incmon
