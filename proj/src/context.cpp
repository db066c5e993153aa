#include "incmon/context.hpp"

#include <algorithm>

#include "incmon/errors.hpp"

namespace incmon {

MonoidContext::MonoidContext(Poset p, ContextKind kind, std::optional<IndexSet> a)
    : poset_(std::move(p)), kind_(kind), antichain_(std::move(a)) {}

MonoidContext MonoidContext::full_incidence(Poset p) {
  return MonoidContext(std::move(p), ContextKind::full_incidence, std::nullopt);
}

MonoidContext MonoidContext::antichain_monoid(Poset p, IndexSet antichain) {
  require(is_antichain(p, antichain), "NotAntichain",
          "members " + antichain.str() + " are not pairwise incomparable");
  return MonoidContext(std::move(p), ContextKind::antichain_monoid, std::move(antichain));
}

MonoidContext MonoidContext::antichain_monoid(Poset p, Antichain antichain) {
  return MonoidContext(std::move(p), ContextKind::antichain_monoid, antichain.members());
}

bool MonoidContext::diagonal_fixed(int i) const {
  return kind_ == ContextKind::antichain_monoid && !antichain_->contains(i + 1);
}

std::string MonoidContext::describe() const {
  if (kind_ == ContextKind::full_incidence)
    return "full incidence monoid on " + std::to_string(size()) + " elements";
  return "antichain monoid on " + std::to_string(size()) + " elements, antichain " +
         antichain_->str();
}

bool contains(const MonoidContext& ctx, const ExactMatrix& x) {
  const int n = ctx.size();
  require(x.rows() == n && x.cols() == n, "DimensionMismatch",
          "matrix is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
              " but the poset has " + std::to_string(n) + " elements");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!ctx.supports(i, j) && !x.at(i, j).is_zero()) return false;
  for (int i = 0; i < n; ++i)
    if (ctx.diagonal_fixed(i) && !x.at(i, i).is_one()) return false;
  return true;
}

bool is_unit(const MonoidContext& ctx, const ExactMatrix& x) {
  require(contains(ctx, x), "NotInMonoid", "matrix lies outside " + ctx.describe());
  for (int i = 0; i < ctx.size(); ++i)
    if (x.at(i, i).is_zero()) return false;
  return true;
}

ExactMatrix unit_inverse(const MonoidContext& ctx, const ExactMatrix& x) {
  require(is_unit(ctx, x), "NotUnit", "matrix has a zero diagonal entry");
  ExactMatrix inv = upper_triangular_inverse(x);
  require(contains(ctx, inv), "NotInMonoid", "inverse escaped the monoid");  // cannot happen
  return inv;
}

JordanChart jordan_chart(const MonoidContext& ctx, const ExactMatrix& y) {
  require(ctx.kind() == ContextKind::antichain_monoid, "WrongContext",
          "chart is defined for antichain monoids");
  require(contains(ctx, y), "NotInMonoid", "matrix lies outside " + ctx.describe());
  const int n = ctx.size();
  ExactMatrix d(n, n, y.field()), nil(n, n, y.field());
  const Scalar one = Scalar::one(y.field());
  for (int i = 0; i < n; ++i) {
    if (ctx.antichain()->contains(i + 1))
      d.set(i, i, y.at(i, i));
    else
      d.set(i, i, y.at(i, i) - one);  // always 0 for members
    for (int j = i + 1; j < n; ++j) nil.set(i, j, y.at(i, j));
  }
  return JordanChart{std::move(d), std::move(nil)};
}

ExactMatrix jordan_unchart(const MonoidContext& ctx, const ExactMatrix& diag_part,
                           const ExactMatrix& nil_part) {
  require(ctx.kind() == ContextKind::antichain_monoid, "WrongContext",
          "chart is defined for antichain monoids");
  const int n = ctx.size();
  require(diag_part.rows() == n && diag_part.cols() == n && nil_part.rows() == n &&
              nil_part.cols() == n,
          "DimensionMismatch", "chart parts must be n x n");
  require(diag_part.field() == nil_part.field(), "FieldMismatch",
          "chart parts over different fields");
  const Field f = diag_part.field();
  ExactMatrix y(n, n, f);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      require(diag_part.at(i, j).is_zero(), "NotInMonoid", "diag part is not diagonal");
    }
    require(ctx.antichain()->contains(i + 1) || diag_part.at(i, i).is_zero(), "NotInMonoid",
            "diag part has support outside the antichain");
    Scalar base = ctx.antichain()->contains(i + 1) ? Scalar::zero(f) : Scalar::one(f);
    y.set(i, i, base + diag_part.at(i, i));
    for (int j = 0; j < n; ++j) {
      if (j > i && ctx.supports(i, j)) {
        y.set(i, j, nil_part.at(i, j));
      } else if (i != j) {
        require(nil_part.at(i, j).is_zero(), "NotInMonoid",
                "nil part has support outside the strict order relations");
      }
    }
    require(nil_part.at(i, i).is_zero(), "NotInMonoid", "nil part touches the diagonal");
  }
  return y;
}

ExactMatrix lambda_curve(const MonoidContext& ctx, const IndexSet& J, const ExactMatrix& nil,
                         const Scalar& t) {
  const int n = ctx.size();
  require(J.ambient() == n, "DimensionMismatch", "diagonal pattern over the wrong ambient set");
  require(nil.rows() == n && nil.cols() == n, "DimensionMismatch", "nil part must be n x n");
  require(nil.field() == t.field(), "FieldMismatch", "nil part and parameter fields differ");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      require(nil.at(i, j).is_zero(), "NotIdempotentSeed", "nil part is not strictly upper");
  ExactMatrix seed = mat_add(diag_idempotent(J, t.field()), nil);
  require(is_idempotent_matrix(seed) && contains(ctx, seed), "NotIdempotentSeed",
          "1_J + N is not an idempotent of the context");
  ExactMatrix out = seed;
  for (int i = 0; i < n; ++i)
    if (!J.contains(i + 1)) out.set(i, i, t);
  return out;
}

std::vector<MonoidContext> decompose(const MonoidContext& ctx) {
  require(ctx.kind() == ContextKind::antichain_monoid, "WrongContext",
          "decomposition acts on antichain monoids");
  std::vector<MonoidContext> out;
  for (const auto& part : component_index_sets(ctx.poset())) {
    Poset sub = ctx.poset().induced(part);
    std::vector<int> local;
    for (std::size_t t = 0; t < part.size(); ++t)
      if (ctx.antichain()->contains(part[t] + 1)) local.push_back(static_cast<int>(t) + 1);
    out.push_back(MonoidContext::antichain_monoid(
        std::move(sub), IndexSet(static_cast<int>(part.size()), std::move(local))));
  }
  return out;
}

std::vector<std::pair<int, int>> free_coordinates(const MonoidContext& ctx) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < ctx.size(); ++i)
    for (int j = i; j < ctx.size(); ++j)
      if (ctx.supports(i, j) && !(i == j && ctx.diagonal_fixed(i))) out.emplace_back(i, j);
  return out;
}

ExactMatrix base_matrix(const MonoidContext& ctx, const Field& field) {
  ExactMatrix m(ctx.size(), ctx.size(), field);
  for (int i = 0; i < ctx.size(); ++i)
    if (ctx.diagonal_fixed(i)) m.set(i, i, Scalar::one(field));
  return m;
}

ExactMatrix embed_bipartite(const MonoidContext& src, const ExactMatrix& x) {
  PosetClass cls = classify(src.poset());
  require(cls.tag == PosetTag::bipartite || cls.tag == PosetTag::complete_bipartite,
          "NotBipartite", "source poset is not bipartite");
  require(contains(src, x), "NotInMonoid", "matrix lies outside " + src.describe());
  const int n = src.size();
  std::vector<int> phi(n, -1);
  int next_min = 0, next_max = cls.k;
  for (int i = 0; i < n; ++i)
    phi[i] = src.poset().is_minimal(i) ? next_min++ : next_max++;
  ExactMatrix out(n, n, x.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!x.at(i, j).is_zero()) out.set(phi[i], phi[j], x.at(i, j));
  return out;
}

}  // namespace incmon
