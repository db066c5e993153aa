#include "incmon/idempotent.hpp"

#include <algorithm>
#include <map>

#include "incmon/errors.hpp"

namespace incmon {

IndexSet diag_projection(const ExactMatrix& x) {
  require(x.rows() == x.cols() && is_idempotent_matrix(x), "NotIdempotent",
          "matrix is not idempotent");
  std::vector<int> members;
  for (int i = 0; i < x.rows(); ++i) {
    const Scalar& d = x.at(i, i);
    if (d.is_one())
      members.push_back(i + 1);
    else
      require(d.is_zero(), "BadDiagonal",
              "diagonal entry " + d.str() + " at position " + std::to_string(i + 1));
  }
  return IndexSet(x.rows(), std::move(members));
}

long component_dimension(int k, int m, const IndexSet& J) {
  require(J.ambient() == k + m, "DimensionMismatch",
          "pattern over [" + std::to_string(J.ambient()) + "] but k+m = " +
              std::to_string(k + m));
  long a = 0, b = 0;
  for (int i : J.members()) (i <= k ? a : b) += 1;
  return static_cast<long>(k) * b + a * static_cast<long>(m) - 2 * a * b;
}

namespace {

bool height_at_most_one(const Poset& p) {
  for (int i = 0; i < p.size(); ++i)
    for (int l = 0; l < p.size(); ++l)
      if (p.strictly_less(i, l))
        for (int j = 0; j < p.size(); ++j)
          if (p.strictly_less(l, j)) return false;
  return true;
}

// Context over the complete bipartite poset with the maximal antichain of
// maximal elements; this is the regime of the column rule.
int require_max_antichain_context(const MonoidContext& ctx) {
  PosetClass cls = classify(ctx.poset());
  require(cls.tag == PosetTag::complete_bipartite, "WrongContext",
          "poset is not complete bipartite");
  require(ctx.kind() == ContextKind::antichain_monoid, "WrongContext",
          "context is not an antichain monoid");
  require(*ctx.antichain() == IndexSet::range_set(ctx.size(), cls.k + 1, ctx.size()),
          "WrongContext", "antichain is not the set of maximal elements");
  return cls.k;
}

}  // namespace

ComponentDescriptor component_parametrization(const MonoidContext& ctx, const IndexSet& J) {
  PosetClass cls = classify(ctx.poset());
  require(cls.tag == PosetTag::complete_bipartite, "WrongPosetClass",
          "component parametrization needs a complete bipartite poset, got " +
              poset_tag_name(cls.tag));
  const int n = ctx.size();
  require(J.ambient() == n, "DimensionMismatch", "pattern over the wrong ambient set");
  if (ctx.kind() == ContextKind::antichain_monoid)
    for (int i = 1; i <= n; ++i)
      require(ctx.antichain()->contains(i) || J.contains(i), "ComponentAbsent",
              "1_" + J.str() + " lies outside " + ctx.describe());
  ComponentDescriptor d{ctx, J, {}, {}};
  for (int i = 0; i < cls.k; ++i)
    for (int j = cls.k; j < n; ++j) {
      if (J.contains(i + 1) != J.contains(j + 1))
        d.free_positions.emplace_back(i, j);
      else
        d.forced_zero_positions.emplace_back(i, j);
    }
  return d;
}

ExactMatrix ComponentDescriptor::instantiate(const Field& field,
                                             std::span<const Scalar> values) const {
  require(values.size() == free_positions.size(), "DimensionMismatch",
          std::to_string(values.size()) + " values for " +
              std::to_string(free_positions.size()) + " free positions");
  ExactMatrix m = diag_idempotent(J, field);
  for (std::size_t t = 0; t < values.size(); ++t)
    m.set(free_positions[t].first, free_positions[t].second, values[t]);
  return m;
}

ExactMatrix component_multiply(const MonoidContext& ctx, const ExactMatrix& y,
                               const ExactMatrix& z) {
  require_max_antichain_context(ctx);
  require(contains(ctx, y) && contains(ctx, z), "NotInMonoid",
          "factors must lie in " + ctx.describe());
  require(is_idempotent_matrix(y) && is_idempotent_matrix(z), "NotIdempotent",
          "factors must be idempotent");
  ExactMatrix p = mat_mul(y, z);
  const int n = ctx.size();
  for (int j = 0; j < n; ++j) {
    const ExactMatrix& donor = z.at(j, j).is_zero() ? z : y;
    for (int i = 0; i < n; ++i)
      require(p.at(i, j) == donor.at(i, j), "InternalCheckFailed",
              "column rule violated at column " + std::to_string(j + 1));
  }
  require(diag_projection(p) == diag_projection(y).intersection(diag_projection(z)),
          "InternalCheckFailed", "product left the intersected component");
  return p;
}

ExactMatrix random_idempotent(const MonoidContext& ctx, Rng& rng, const Field& field) {
  require(ctx.kind() == ContextKind::antichain_monoid, "WrongContext",
          "idempotent sampling needs an antichain monoid");
  require(height_at_most_one(ctx.poset()), "WrongPosetClass",
          "idempotent sampling needs a poset of height at most one");
  const int n = ctx.size();
  std::vector<int> members;
  for (int i = 1; i <= n; ++i) {
    if (!ctx.antichain()->contains(i))
      members.push_back(i);  // pinned diagonal 1
    else if (rng.coin())
      members.push_back(i);
  }
  IndexSet J(n, std::move(members));
  ExactMatrix m = diag_idempotent(J, field);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (ctx.supports(i, j) && J.contains(i + 1) != J.contains(j + 1))
        m.set(i, j, rng.scalar(field));
  require(is_idempotent_matrix(m) && contains(ctx, m), "InternalCheckFailed",
          "sampled matrix is not an idempotent of the context");
  return m;
}

OrthodoxyReport check_orthodox(const MonoidContext& ctx, const OrthodoxMode& mode) {
  require(ctx.kind() == ContextKind::antichain_monoid, "WrongContext",
          "orthodoxy check needs an antichain monoid");
  require(height_at_most_one(ctx.poset()), "WrongPosetClass",
          "orthodoxy holds for posets of height at most one; taller posets are rejected");
  constexpr std::size_t kMaxStoredViolations = 8;
  OrthodoxyReport report;
  if (mode.kind == OrthodoxMode::Kind::exhaustive_gf) {
    IdempotentEnumeration en = enumerate_idempotents_gf(ctx, mode.q);
    std::vector<const ExactMatrix*> all;
    for (const auto& slice : en.components)
      for (const auto& e : slice.elements) all.push_back(&e);
    report.idempotents_seen = all.size();
    for (const ExactMatrix* e : all)
      for (const ExactMatrix* f : all) {
        ++report.pairs_checked;
        if (!is_idempotent_matrix(mat_mul(*e, *f)) &&
            report.violations.size() < kMaxStoredViolations)
          report.violations.emplace_back(*e, *f);
      }
  } else {
    Rng rng(mode.seed);
    for (std::uint64_t t = 0; t < mode.trials; ++t) {
      ExactMatrix e = random_idempotent(ctx, rng);
      ExactMatrix f = random_idempotent(ctx, rng);
      report.idempotents_seen += 2;
      ++report.pairs_checked;
      if (!is_idempotent_matrix(mat_mul(e, f)) &&
          report.violations.size() < kMaxStoredViolations)
        report.violations.emplace_back(e, f);
    }
  }
  report.passed = report.violations.empty();
  return report;
}

const IdempotentComponentSlice* IdempotentEnumeration::find(const IndexSet& J) const {
  for (const auto& slice : components)
    if (slice.J == J) return &slice;
  return nullptr;
}

std::uint64_t IdempotentEnumeration::total() const {
  std::uint64_t t = 0;
  for (const auto& slice : components) t += slice.elements.size();
  return t;
}

IdempotentEnumeration enumerate_idempotents_gf(const MonoidContext& ctx, unsigned q,
                                               std::uint64_t cap) {
  check_gf_modulus(q);
  const auto coords = free_coordinates(ctx);
  // Diagonal entries of a triangular idempotent square to themselves, so only
  // 0 and 1 can occur there; strict entries range over the whole field.
  std::vector<unsigned> radix;
  std::uint64_t space = 1;
  for (const auto& [i, j] : coords) {
    unsigned r = (i == j) ? std::min(2u, q) : q;
    radix.push_back(r);
    require(space <= cap / r, "SearchSpaceTooLarge",
            "idempotent scan exceeds the cap of " + std::to_string(cap));
    space *= r;
  }

  IdempotentEnumeration out;
  out.q = q;
  out.candidates = space;
  std::map<std::uint64_t, std::size_t> slice_of;  // diag mask -> index; keeps key order
  std::vector<IdempotentComponentSlice> slices;
  const Field f = gf_field(q);
  const ExactMatrix base = base_matrix(ctx, f);
  std::vector<unsigned> v(coords.size(), 0);
  for (;;) {
    ExactMatrix m = base;
    for (std::size_t t = 0; t < coords.size(); ++t)
      if (v[t]) m.set(coords[t].first, coords[t].second, Scalar(gf_of(q, v[t])));
    if (is_idempotent_matrix(m)) {
      IndexSet J = diag_projection(m);
      auto [it, fresh] = slice_of.try_emplace(J.mask(), slices.size());
      if (fresh) slices.push_back(IdempotentComponentSlice{J, {}});
      slices[it->second].elements.push_back(std::move(m));
    }
    // Odometer step, last coordinate fastest: candidates appear in ascending
    // flattened-entry order.
    bool done = coords.empty();
    std::size_t t = coords.size();
    while (t > 0) {
      --t;
      if (++v[t] < radix[t]) break;
      v[t] = 0;
      if (t == 0) done = true;
    }
    if (done) break;
  }
  out.components.reserve(slices.size());
  for (const auto& [mask, idx] : slice_of) out.components.push_back(std::move(slices[idx]));
  return out;
}

}  // namespace incmon
