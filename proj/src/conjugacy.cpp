#include "incmon/conjugacy.hpp"

#include "incmon/errors.hpp"

namespace incmon {

BlockElement SemidirectFactorization::torus() const {
  BlockElement t(k, m, field);
  for (int j = 0; j < m; ++j) t.set_d(j, torus_diag[j]);
  return t;
}

BlockElement SemidirectFactorization::unipotent() const {
  BlockElement u(k, m, field);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) u.set_b(i, j, unipotent_b[static_cast<std::size_t>(i) * m + j]);
  return u;
}

BlockElement SemidirectFactorization::reassemble() const { return block_mul(torus(), unipotent()); }

SemidirectFactorization semidirect_factor(const BlockElement& g) {
  require(g.is_unit(), "NotUnit", "factorization is defined on units");
  SemidirectFactorization f;
  f.k = g.k();
  f.m = g.m();
  f.field = g.field();
  for (int j = 0; j < g.m(); ++j) f.torus_diag.push_back(g.d(j));
  for (int i = 0; i < g.k(); ++i)
    for (int j = 0; j < g.m(); ++j) f.unipotent_b.push_back(g.b(i, j));
  return f;
}

std::string conjugacy_case_name(ConjugacyCase c) {
  switch (c) {
    case ConjugacyCase::semisimple: return "semisimple";
    case ConjugacyCase::unipotent: return "unipotent";
    case ConjugacyCase::mixed: return "mixed";
    case ConjugacyCase::not_applicable: return "not_applicable";
  }
  return "not_applicable";
}

ConjugacyCase classify_unit(const BlockElement& g) {
  require(g.is_unit(), "NotUnit", "case tags are defined on units");
  bool b_zero = true, d_one = true;
  for (int j = 0; j < g.m(); ++j) {
    if (!g.d(j).is_one()) d_one = false;
    for (int i = 0; i < g.k(); ++i)
      if (!g.b(i, j).is_zero()) b_zero = false;
  }
  if (b_zero) return ConjugacyCase::semisimple;
  if (d_one) return ConjugacyCase::unipotent;
  return ConjugacyCase::mixed;
}

namespace {

void require_same_group(const BlockElement& a, const BlockElement& b) {
  require(a.k() == b.k() && a.m() == b.m() && a.field() == b.field(), "DifferentGroups",
          "elements live in different unit groups");
}

bool is_torus(const BlockElement& t) {
  for (int i = 0; i < t.k(); ++i)
    for (int j = 0; j < t.m(); ++j)
      if (!t.b(i, j).is_zero()) return false;
  return true;
}

bool is_unipotent_block(const BlockElement& u) {
  for (int j = 0; j < u.m(); ++j)
    if (!u.d(j).is_one()) return false;
  return true;
}

// Columns of u and u2 at position j both vanish or differ by a nonzero
// scalar; writes that scalar to alpha when the columns are nonzero.
bool columns_proportional(const BlockElement& u, const BlockElement& u2, int j, Scalar* alpha) {
  int pivot = -1;
  for (int i = 0; i < u.k(); ++i)
    if (!u.b(i, j).is_zero()) {
      pivot = i;
      break;
    }
  if (pivot < 0) {
    for (int i = 0; i < u.k(); ++i)
      if (!u2.b(i, j).is_zero()) return false;
    *alpha = Scalar::one(u.field());
    return true;
  }
  if (u2.b(pivot, j).is_zero()) return false;
  Scalar a = u2.b(pivot, j) / u.b(pivot, j);
  for (int i = 0; i < u.k(); ++i)
    if (!(u2.b(i, j) == u.b(i, j) * a)) return false;
  *alpha = a;
  return true;
}

// Builds the conjugator x = s v solving (B_u + C (D_t - 1)) E^{-1} = B_u2
// columnwise; assumes the criterion already holds.
BlockElement build_conjugator(const BlockElement& t, const BlockElement& u,
                              const BlockElement& u2) {
  const Field f = t.field();
  const Scalar one = Scalar::one(f);
  BlockElement x(t.k(), t.m(), f);  // x = (C, E) stands for s v
  for (int j = 0; j < t.m(); ++j) {
    if (t.d(j) == one) {
      Scalar alpha = one;
      bool ok = columns_proportional(u, u2, j, &alpha);
      require(ok, "InternalCheckFailed", "witness requested for unrelated columns");
      x.set_d(j, alpha.inverse());
    } else {
      Scalar denom = (t.d(j) - one).inverse();
      x.set_d(j, one);
      for (int i = 0; i < t.k(); ++i) x.set_b(i, j, (u2.b(i, j) - u.b(i, j)) * denom);
    }
  }
  return x;
}

}  // namespace

ConjugacyVerdict twisted_class_member(const BlockElement& t, const BlockElement& u,
                                      const BlockElement& u2) {
  require_same_group(t, u);
  require_same_group(t, u2);
  require(t.is_unit() && is_torus(t), "NotUnit", "twist must be a torus unit");
  require(is_unipotent_block(u) && is_unipotent_block(u2), "NotUnit",
          "twisted classes live in the unipotent part");
  ConjugacyVerdict v;
  v.case_tag = is_unipotent_block(t) ? ConjugacyCase::unipotent : ConjugacyCase::mixed;
  const Scalar one = Scalar::one(t.field());
  for (int j = 0; j < t.m(); ++j) {
    if (!(t.d(j) == one)) continue;  // column reachable for any target value
    Scalar alpha = one;
    if (!columns_proportional(u, u2, j, &alpha)) return v;
  }
  v.related = true;
  BlockElement x = build_conjugator(t, u, u2);
  SemidirectFactorization fx = semidirect_factor(x);
  BlockElement s = fx.torus(), w = fx.unipotent();
  // Exact recheck of s ((t^{-1} w t) u w^{-1}) s^{-1} = u2.
  BlockElement tinv = canonical_inverse(t);
  BlockElement conj = block_mul(block_mul(tinv, w), t);
  conj = block_mul(conj, u);
  conj = block_mul(conj, canonical_inverse(w));
  conj = block_mul(block_mul(s, conj), canonical_inverse(s));
  require(conj == u2, "InternalCheckFailed", "twisted witness failed the exact recheck");
  v.witness_pair = std::make_pair(s, w);
  return v;
}

ConjugacyVerdict group_conjugate(const BlockElement& g, const BlockElement& h) {
  require_same_group(g, h);
  require(g.is_unit() && h.is_unit(), "NotUnit", "group conjugacy is defined on units");
  ConjugacyVerdict v;
  v.case_tag = classify_unit(g);
  const Scalar one = Scalar::one(g.field());
  for (int j = 0; j < g.m(); ++j)
    if (!(g.d(j) == h.d(j))) return v;  // torus parts must agree exactly
  for (int j = 0; j < g.m(); ++j) {
    if (!(g.d(j) == one)) continue;
    Scalar alpha = one;
    if (!columns_proportional(g, h, j, &alpha)) return v;
  }
  v.related = true;
  BlockElement x = build_conjugator(g, g, h);
  require(block_mul(block_mul(x, g), canonical_inverse(x)) == h, "InternalCheckFailed",
          "conjugator failed the exact recheck");
  v.conjugator = std::move(x);
  return v;
}

ConjugacyVerdict p_conjugate(const BlockElement& x, const BlockElement& y) {
  require_same_group(x, y);
  ConjugacyVerdict v;
  IndexSet l = support_set(x);
  if (support_set(y) != l) return v;
  // Both map into the group H-class of 1_L; decide conjugacy there.
  BlockElement gx = h_class_iso(l, rho(x));
  BlockElement gy = h_class_iso(l, rho(y));
  ConjugacyVerdict gc = group_conjugate(gx, gy);
  v.case_tag = gc.case_tag;
  if (!gc.related) return v;
  v.related = true;
  // Lift the conjugator back to H_{1_L} and build the two-sided witness:
  // z = (x 1_L) c^{-1} and w = c satisfy z w = x 1_L and w z = y 1_L; right
  // translation by the meet idempotents carries them to x and y themselves.
  BlockElement c = h_class_iso_inverse(l, *gc.conjugator);
  BlockElement z = block_mul(rho(x), canonical_inverse(c));
  BlockElement zp = block_mul(z, meet_idempotent(y));
  BlockElement wp = block_mul(c, meet_idempotent(x));
  require(block_mul(zp, wp) == x && block_mul(wp, zp) == y, "InternalCheckFailed",
          "two-sided witness failed the exact recheck");
  v.witness_pair = std::make_pair(std::move(zp), std::move(wp));
  return v;
}

std::pair<BlockElement, BlockElement> o_conjugacy_witness(const BlockElement& x,
                                                          const BlockElement& y) {
  require_same_group(x, y);
  require(x.is_idempotent() && y.is_idempotent(), "NotIdempotent",
          "intertwining witnesses are built for idempotent pairs");
  BlockElement z(x.k(), x.m(), x.field()), w(x.k(), x.m(), x.field());
  for (int j = 0; j < x.m(); ++j) {
    z.set_d(j, Scalar::zero(x.field()));
    w.set_d(j, Scalar::zero(x.field()));
    for (int i = 0; i < x.k(); ++i) {
      z.set_b(i, j, y.b(i, j));
      w.set_b(i, j, x.b(i, j));
    }
  }
  require(block_mul(x, z) == block_mul(z, y) && block_mul(y, w) == block_mul(w, x),
          "InternalCheckFailed", "intertwining witness failed the exact recheck");
  return {std::move(z), std::move(w)};
}

}  // namespace incmon
