#include "incmon/green.hpp"

#include "incmon/errors.hpp"

namespace incmon {

std::string green_rel_name(GreenRel rel) {
  switch (rel) {
    case GreenRel::R: return "R";
    case GreenRel::L: return "L";
    case GreenRel::J: return "J";
    case GreenRel::H: return "H";
    case GreenRel::D: return "D";
  }
  return "?";
}

GreenRel green_rel_from(const std::string& name) {
  if (name == "R") return GreenRel::R;
  if (name == "L") return GreenRel::L;
  if (name == "J") return GreenRel::J;
  if (name == "H") return GreenRel::H;
  if (name == "D") return GreenRel::D;
  fail("ParseError", "unknown Green relation '" + name + "'");
}

BlockElement::BlockElement(int k, int m, Field field) : k_(k), m_(m), field_(field) {
  require(k >= 0 && m >= 0, "DimensionMismatch", "negative block dimension");
  b_.assign(static_cast<std::size_t>(k) * m, Scalar::zero(field_));
  d_.assign(m, Scalar::one(field_));
}

BlockElement BlockElement::identity(int k, int m, const Field& field) {
  return BlockElement(k, m, field);
}

BlockElement BlockElement::from_matrix(const ExactMatrix& x, int k) {
  require(x.rows() == x.cols(), "DimensionMismatch", "matrix is not square");
  require(k >= 0 && k <= x.rows(), "DimensionMismatch", "k outside 0..n");
  const int n = x.rows(), m = n - k;
  BlockElement e(k, m, x.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& v = x.at(i, j);
      if (i < k && j < k) {
        bool ok = (i == j) ? v.is_one() : v.is_zero();
        require(ok, "NotInMonoid", "upper-left block is not the identity");
      } else if (i < k) {
        e.set_b(i, j - k, v);
      } else if (i == j) {
        e.set_d(j - k, v);
      } else {
        require(v.is_zero(), "NotInMonoid", "matrix is not in block form");
      }
    }
  return e;
}

ExactMatrix BlockElement::to_matrix() const {
  ExactMatrix x(n(), n(), field_);
  for (int i = 0; i < k_; ++i) x.set(i, i, Scalar::one(field_));
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < m_; ++j) x.set(i, k_ + j, b(i, j));
  for (int j = 0; j < m_; ++j) x.set(k_ + j, k_ + j, d(j));
  return x;
}

const Scalar& BlockElement::b(int i, int j) const {
  require(i >= 0 && i < k_ && j >= 0 && j < m_, "IndexOutOfRange", "B position out of range");
  return b_[static_cast<std::size_t>(i) * m_ + j];
}

void BlockElement::set_b(int i, int j, Scalar v) {
  require(i >= 0 && i < k_ && j >= 0 && j < m_, "IndexOutOfRange", "B position out of range");
  require(v.field() == field_, "FieldMismatch", "entry over the wrong field");
  b_[static_cast<std::size_t>(i) * m_ + j] = std::move(v);
}

const Scalar& BlockElement::d(int j) const {
  require(j >= 0 && j < m_, "IndexOutOfRange", "D position out of range");
  return d_[j];
}

void BlockElement::set_d(int j, Scalar v) {
  require(j >= 0 && j < m_, "IndexOutOfRange", "D position out of range");
  require(v.field() == field_, "FieldMismatch", "entry over the wrong field");
  d_[j] = std::move(v);
}

bool BlockElement::is_unit() const {
  for (int j = 0; j < m_; ++j)
    if (d(j).is_zero()) return false;
  return true;
}

bool BlockElement::is_idempotent() const { return block_mul(*this, *this) == *this; }

namespace {

void require_same_shape(const BlockElement& x, const BlockElement& y) {
  require(x.k() == y.k() && x.m() == y.m(), "DimensionMismatch",
          "block elements of different types");
  require(x.field() == y.field(), "FieldMismatch",
          x.field().str() + " vs " + y.field().str());
}

}  // namespace

BlockElement block_mul(const BlockElement& x, const BlockElement& y) {
  require_same_shape(x, y);
  BlockElement out(x.k(), x.m(), x.field());
  for (int j = 0; j < x.m(); ++j) {
    out.set_d(j, x.d(j) * y.d(j));
    for (int i = 0; i < x.k(); ++i) out.set_b(i, j, y.b(i, j) + x.b(i, j) * y.d(j));
  }
  return out;
}

IndexSet support_set(const BlockElement& x) {
  std::vector<int> members;
  for (int i = 1; i <= x.k(); ++i) members.push_back(i);
  for (int j = 0; j < x.m(); ++j)
    if (!x.d(j).is_zero()) members.push_back(x.k() + j + 1);
  return IndexSet(x.n(), std::move(members));
}

bool is_inverse(const BlockElement& x, const BlockElement& y) {
  require_same_shape(x, y);
  return block_mul(block_mul(x, y), x) == x && block_mul(block_mul(y, x), y) == y;
}

BlockElement canonical_inverse(const BlockElement& x) {
  BlockElement out(x.k(), x.m(), x.field());
  for (int j = 0; j < x.m(); ++j) {
    if (x.d(j).is_zero()) {
      out.set_d(j, Scalar::zero(x.field()));
      for (int i = 0; i < x.k(); ++i) out.set_b(i, j, x.b(i, j));
    } else {
      Scalar inv = x.d(j).inverse();
      out.set_d(j, inv);
      for (int i = 0; i < x.k(); ++i) out.set_b(i, j, -(x.b(i, j) * inv));
    }
  }
  return out;
}

BlockElement meet_idempotent(const BlockElement& x) {
  BlockElement out(x.k(), x.m(), x.field());
  for (int j = 0; j < x.m(); ++j) {
    if (x.d(j).is_zero()) {
      out.set_d(j, Scalar::zero(x.field()));
      for (int i = 0; i < x.k(); ++i) out.set_b(i, j, x.b(i, j));
    } else {
      out.set_d(j, Scalar::one(x.field()));
    }
  }
  return out;
}

bool green_related(const BlockElement& x, const BlockElement& y, GreenRel rel) {
  require_same_shape(x, y);
  if (support_set(x) != support_set(y)) return false;
  if (rel == GreenRel::R || rel == GreenRel::J || rel == GreenRel::D) return true;
  // L and H coincide: B-columns where D vanishes must agree.
  for (int j = 0; j < x.m(); ++j) {
    if (!x.d(j).is_zero()) continue;
    for (int i = 0; i < x.k(); ++i)
      if (!(x.b(i, j) == y.b(i, j))) return false;
  }
  return true;
}

CrossSectionLattice::CrossSectionLattice(int k, int m) : k_(k), m_(m) {
  require(k >= 0 && m >= 0, "DimensionMismatch", "negative block dimension");
  require(m <= 62, "SizeCapExceeded", "lattice enumeration needs m <= 62");
  const int n = k + m;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::vector<int> members;
    for (int i = 1; i <= k; ++i) members.push_back(i);
    for (int j = 0; j < m; ++j)
      if (s & (std::uint64_t{1} << j)) members.push_back(k + j + 1);
    elements_.emplace_back(n, std::move(members));
  }
}

bool CrossSectionLattice::leq(const IndexSet& a, const IndexSet& b) { return a.subset_of(b); }

IndexSet CrossSectionLattice::meet(const IndexSet& a, const IndexSet& b) const {
  return a.intersection(b);
}

IndexSet CrossSectionLattice::join(const IndexSet& a, const IndexSet& b) const {
  return a.set_union(b);
}

IndexSet CrossSectionLattice::to_subset(const IndexSet& J) const {
  require(J.ambient() == k_ + m_, "DimensionMismatch", "pattern over the wrong ambient set");
  for (int i = 1; i <= k_; ++i)
    require(J.contains(i), "IndexOutOfRange", "lattice element must contain [k]");
  std::vector<int> members;
  for (int i : J.members())
    if (i > k_) members.push_back(i - k_);
  return IndexSet(m_, std::move(members));
}

IndexSet CrossSectionLattice::lift(const IndexSet& subset) const {
  require(subset.ambient() == m_, "DimensionMismatch", "subset of the wrong ambient set");
  std::vector<int> members;
  for (int i = 1; i <= k_; ++i) members.push_back(i);
  for (int j : subset.members()) members.push_back(k_ + j);
  return IndexSet(k_ + m_, std::move(members));
}

BlockElement h_class_iso(const IndexSet& J, const BlockElement& x) {
  require(J.ambient() == x.n(), "DimensionMismatch", "pattern over the wrong ambient set");
  for (int i = 1; i <= x.k(); ++i)
    require(J.contains(i), "NotInHClass", "pattern must contain [k]");
  for (int j = 0; j < x.m(); ++j) {
    if (J.contains(x.k() + j + 1)) {
      require(!x.d(j).is_zero(), "NotInHClass",
              "zero diagonal inside the pattern at column " + std::to_string(j + 1));
    } else {
      require(x.d(j).is_zero(), "NotInHClass",
              "nonzero diagonal outside the pattern at column " + std::to_string(j + 1));
      for (int i = 0; i < x.k(); ++i)
        require(x.b(i, j).is_zero(), "NotInHClass",
                "nonzero B-column outside the pattern at column " + std::to_string(j + 1));
    }
  }
  const int a = J.size();
  BlockElement out(x.k(), a - x.k(), x.field());
  int col = 0;
  for (int j = 0; j < x.m(); ++j) {
    if (!J.contains(x.k() + j + 1)) continue;
    out.set_d(col, x.d(j));
    for (int i = 0; i < x.k(); ++i) out.set_b(i, col, x.b(i, j));
    ++col;
  }
  return out;
}

BlockElement h_class_iso_inverse(const IndexSet& J, const BlockElement& y) {
  const int k = y.k(), n = J.ambient(), m = n - k;
  require(J.size() - k == y.m(), "DimensionMismatch",
          "compressed element does not match the pattern size");
  for (int i = 1; i <= k; ++i)
    require(J.contains(i), "NotInHClass", "pattern must contain [k]");
  require(y.is_unit(), "NotInHClass", "compressed element must be a unit");
  BlockElement out(k, m, y.field());
  int col = 0;
  for (int j = 0; j < m; ++j) {
    if (J.contains(k + j + 1)) {
      out.set_d(j, y.d(col));
      for (int i = 0; i < k; ++i) out.set_b(i, j, y.b(i, col));
      ++col;
    } else {
      out.set_d(j, Scalar::zero(y.field()));
    }
  }
  return out;
}

BlockElement rho(const BlockElement& x) {
  // Right multiplication by 1_L, L = support_set(x): keeps D, zeroes the
  // B-columns outside L.
  BlockElement out = x;
  for (int j = 0; j < x.m(); ++j)
    if (x.d(j).is_zero())
      for (int i = 0; i < x.k(); ++i) out.set_b(i, j, Scalar::zero(x.field()));
  return out;
}

BlockElement rho_inverse(const BlockElement& y, const BlockElement& x) {
  require_same_shape(y, x);
  return block_mul(y, meet_idempotent(x));
}

int count_h_class_types(int k, int m) {
  require(k >= 1 && m >= 0, "DimensionMismatch", "type needs k >= 1");
  return m + 1;
}

std::uint64_t h_class_order_gf(int k, const IndexSet& J, unsigned q) {
  check_gf_modulus(q);
  const int extra = J.size() - k;
  require(extra >= 0, "DimensionMismatch", "pattern smaller than [k]");
  std::uint64_t order = 1;
  for (int t = 0; t < extra; ++t) order *= (q - 1);
  for (int t = 0; t < k * extra; ++t) order *= q;
  return order;
}

}  // namespace incmon
