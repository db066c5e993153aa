#include "incmon/oracle.hpp"

#include <algorithm>

#include "incmon/errors.hpp"

namespace incmon {

std::string FiniteMonoid::key_of(const ExactMatrix& x) {
  std::string key;
  key.reserve(static_cast<std::size_t>(x.rows()) * x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      key.push_back(static_cast<char>(x.at(i, j).gf().value));
  return key;
}

FiniteMonoid FiniteMonoid::materialize(const MonoidContext& ctx, unsigned q,
                                       std::uint64_t cap) {
  check_gf_modulus(q);
  const auto coords = free_coordinates(ctx);
  std::uint64_t space = 1;
  for (std::size_t t = 0; t < coords.size(); ++t) {
    require(space <= cap / q, "SearchSpaceTooLarge",
            "materialization exceeds the cap of " + std::to_string(cap));
    space *= q;
  }

  FiniteMonoid s(ctx);
  s.q_ = q;
  const Field f = gf_field(q);
  const ExactMatrix base = base_matrix(ctx, f);
  std::vector<unsigned> v(coords.size(), 0);
  for (;;) {
    ExactMatrix m = base;
    for (std::size_t t = 0; t < coords.size(); ++t)
      if (v[t]) m.set(coords[t].first, coords[t].second, Scalar(gf_of(q, v[t])));
    s.index_.emplace(key_of(m), s.elems_.size());
    s.elems_.push_back(std::move(m));
    bool done = coords.empty();
    std::size_t t = coords.size();
    while (t > 0) {
      --t;
      if (++v[t] < q) break;
      v[t] = 0;
      if (t == 0) done = true;
    }
    if (done) break;
  }

  s.identity_ = s.index_of(ExactMatrix::identity(ctx.size(), f));
  for (std::size_t i = 0; i < s.elems_.size(); ++i) {
    bool unit = true;
    for (int d = 0; d < ctx.size() && unit; ++d)
      if (s.elems_[i].at(d, d).is_zero()) unit = false;
    if (unit) s.units_.push_back(i);
  }
  if (s.elems_.size() <= kMulTableCap) {
    s.table_.assign(s.elems_.size(), std::vector<std::size_t>(s.elems_.size()));
    for (std::size_t a = 0; a < s.elems_.size(); ++a)
      for (std::size_t b = 0; b < s.elems_.size(); ++b)
        s.table_[a][b] = s.index_of(mat_mul(s.elems_[a], s.elems_[b]));
  }
  s.right_.resize(s.elems_.size());
  s.left_.resize(s.elems_.size());
  s.two_sided_.resize(s.elems_.size());
  return s;
}

std::optional<std::size_t> FiniteMonoid::find(const ExactMatrix& x) const {
  if (x.field().kind != FieldKind::gf || x.field().q != q_ || x.rows() != ctx_.size() ||
      x.cols() != ctx_.size())
    return std::nullopt;
  auto it = index_.find(key_of(x));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteMonoid::index_of(const ExactMatrix& x) const {
  auto i = find(x);
  require(i.has_value(), "ElementNotInMonoid", "matrix is not a materialized element");
  return *i;
}

std::size_t FiniteMonoid::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a][b];
  return index_of(mat_mul(elems_[a], elems_[b]));
}

std::size_t FiniteMonoid::unit_inverse(std::size_t u) const {
  auto it = unit_inv_.find(u);
  if (it == unit_inv_.end())
    it = unit_inv_.emplace(u, index_of(upper_triangular_inverse(elems_[u]))).first;
  return it->second;
}

const std::vector<bool>& FiniteMonoid::right_ideal(std::size_t a) const {
  if (!right_[a]) {
    std::vector<bool> ideal(size(), false);
    for (std::size_t x = 0; x < size(); ++x) ideal[mul(a, x)] = true;
    right_[a] = std::move(ideal);
  }
  return *right_[a];
}

const std::vector<bool>& FiniteMonoid::left_ideal(std::size_t a) const {
  if (!left_[a]) {
    std::vector<bool> ideal(size(), false);
    for (std::size_t x = 0; x < size(); ++x) ideal[mul(x, a)] = true;
    left_[a] = std::move(ideal);
  }
  return *left_[a];
}

const std::vector<bool>& FiniteMonoid::two_sided_ideal(std::size_t a) const {
  if (!two_sided_[a]) {
    // SaS is the union of uS over u in Sa, so the memoized right ideals can
    // be reused instead of recomputing every product row.
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> row;
    for (std::size_t x = 0; x < size(); ++x) {
      std::size_t xa = mul(x, a);
      if (!seen[xa]) {
        seen[xa] = true;
        row.push_back(xa);
      }
    }
    std::vector<bool> out(size(), false);
    for (std::size_t u : row) {
      const std::vector<bool>& ru = right_ideal(u);
      for (std::size_t y = 0; y < size(); ++y)
        if (ru[y]) out[y] = true;
    }
    two_sided_[a] = std::move(out);
  }
  return *two_sided_[a];
}

bool green_oracle(const FiniteMonoid& s, std::size_t a, std::size_t b, GreenRel rel) {
  switch (rel) {
    case GreenRel::R: return s.right_ideal(a) == s.right_ideal(b);
    case GreenRel::L: return s.left_ideal(a) == s.left_ideal(b);
    case GreenRel::J: return s.two_sided_ideal(a) == s.two_sided_ideal(b);
    case GreenRel::H:
      return s.right_ideal(a) == s.right_ideal(b) && s.left_ideal(a) == s.left_ideal(b);
    case GreenRel::D:
      for (std::size_t c = 0; c < s.size(); ++c)
        if (s.right_ideal(a) == s.right_ideal(c) && s.left_ideal(c) == s.left_ideal(b))
          return true;
      return false;
  }
  return false;
}

std::optional<std::pair<std::size_t, std::size_t>> p_conjugacy_oracle(const FiniteMonoid& s,
                                                                      std::size_t a,
                                                                      std::size_t b) {
  for (std::size_t z = 0; z < s.size(); ++z)
    for (std::size_t w = 0; w < s.size(); ++w)
      if (s.mul(z, w) == a && s.mul(w, z) == b) return std::make_pair(z, w);
  return std::nullopt;
}

RegularityReport completely_regular_check(const FiniteMonoid& s) {
  RegularityReport report;
  for (std::size_t x = 0; x < s.size(); ++x) {
    ++report.checked;
    bool found = false;
    for (std::size_t y = 0; y < s.size() && !found; ++y) {
      std::size_t xy = s.mul(x, y);
      if (xy != s.mul(y, x)) continue;
      if (s.mul(xy, x) == x && s.mul(s.mul(y, x), y) == y) found = true;
    }
    if (!found) report.failures.push_back(x);
  }
  return report;
}

std::optional<std::size_t> conjugator_search(const FiniteMonoid& s, std::size_t x,
                                             std::size_t y) {
  for (std::size_t g : s.units())
    if (s.mul(s.mul(g, x), s.unit_inverse(g)) == y) return g;
  return std::nullopt;
}

std::vector<int> unit_conjugacy_classes(const FiniteMonoid& s) {
  std::vector<int> cls(s.size(), -1);
  // Cache the unit inverses once; the orbit scans below reuse them heavily.
  std::vector<std::size_t> inv;
  inv.reserve(s.units().size());
  for (std::size_t g : s.units()) inv.push_back(s.unit_inverse(g));
  int next = 0;
  for (std::size_t u : s.units()) {
    if (cls[u] >= 0) continue;
    for (std::size_t t = 0; t < s.units().size(); ++t) {
      std::size_t g = s.units()[t];
      cls[s.mul(s.mul(g, u), inv[t])] = next;
    }
    ++next;
  }
  return cls;
}

}  // namespace incmon
