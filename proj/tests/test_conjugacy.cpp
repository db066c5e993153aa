#include <doctest.h>

#include <functional>
#include <vector>

#include "incmon/conjugacy.hpp"

using namespace incmon;

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

Scalar q(const char* s) { return Scalar(parse_rational(s)); }

BlockElement elem11(const char* b, const char* d) {
  BlockElement x(1, 1, rationals_field());
  x.set_b(0, 0, q(b));
  x.set_d(0, q(d));
  return x;
}

BlockElement elem12(const char* b1, const char* b2, const char* d1, const char* d2) {
  BlockElement x(1, 2, rationals_field());
  x.set_b(0, 0, q(b1));
  x.set_b(0, 1, q(b2));
  x.set_d(0, q(d1));
  x.set_d(1, q(d2));
  return x;
}

std::vector<BlockElement> all_blocks_gf(int k, int m, unsigned qmod) {
  const Field f = gf_field(qmod);
  std::vector<BlockElement> out;
  const int coords = k * m + m;
  std::vector<unsigned> v(coords, 0);
  for (;;) {
    BlockElement e(k, m, f);
    int t = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < m; ++j) e.set_b(i, j, Scalar(Gf{v[t++], qmod}));
    for (int j = 0; j < m; ++j) e.set_d(j, Scalar(Gf{v[t++], qmod}));
    out.push_back(std::move(e));
    int c = coords;
    bool done = coords == 0;
    while (c > 0) {
      --c;
      if (++v[c] < qmod) break;
      v[c] = 0;
      if (c == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

}  // namespace

TEST_CASE("semidirect factorization") {
  BlockElement g = elem12("3", "-1", "2", "5");
  SemidirectFactorization f = semidirect_factor(g);
  BlockElement t = f.torus(), u = f.unipotent();
  CHECK(t.d(0).str() == "2");
  CHECK(t.b(0, 0).is_zero());
  CHECK(u.b(0, 0).str() == "3");
  CHECK(u.d(0).is_one());
  CHECK(f.reassemble() == g);
  CHECK(block_mul(t, u) == g);
  CHECK(code_of([] { semidirect_factor(elem11("1", "0")); }) == "NotUnit");

  // The factorization is exact for every unit over GF(5), type (2,2).
  for (const BlockElement& a : all_blocks_gf(2, 2, 5)) {
    if (!a.is_unit()) continue;
    CHECK(semidirect_factor(a).reassemble() == a);
  }
}

TEST_CASE("unit case tags") {
  CHECK(classify_unit(elem11("0", "2")) == ConjugacyCase::semisimple);
  CHECK(classify_unit(elem11("3", "1")) == ConjugacyCase::unipotent);
  CHECK(classify_unit(elem11("3", "2")) == ConjugacyCase::mixed);
  CHECK(classify_unit(BlockElement::identity(1, 1, rationals_field())) ==
        ConjugacyCase::semisimple);
  CHECK(code_of([] { classify_unit(elem11("3", "0")); }) == "NotUnit");
  CHECK(conjugacy_case_name(ConjugacyCase::mixed) == "mixed");
}

TEST_CASE("twisted class membership") {
  // Identity twist: the class of u is its set of nonzero column rescalings.
  BlockElement id_t = BlockElement::identity(1, 1, rationals_field());
  ConjugacyVerdict v = twisted_class_member(id_t, elem11("3", "1"), elem11("6", "1"));
  CHECK(v.related);
  CHECK(v.case_tag == ConjugacyCase::unipotent);
  REQUIRE(v.witness_pair.has_value());
  const auto& [s, w] = *v.witness_pair;
  // s ((t^{-1} w t) u w^{-1}) s^{-1} = u2, rechecked here by hand.
  BlockElement lhs = block_mul(block_mul(canonical_inverse(id_t), w), id_t);
  lhs = block_mul(lhs, elem11("3", "1"));
  lhs = block_mul(lhs, canonical_inverse(w));
  lhs = block_mul(block_mul(s, lhs), canonical_inverse(s));
  CHECK(lhs == elem11("6", "1"));

  CHECK(!twisted_class_member(id_t, elem11("3", "1"), elem11("0", "1")).related);
  CHECK(!twisted_class_member(id_t, elem11("0", "1"), elem11("5", "1")).related);

  // A twist with no eigenvalue 1 frees every column.
  BlockElement t2 = elem11("0", "2");
  CHECK(twisted_class_member(t2, elem11("0", "1"), elem11("17", "1")).related);
  CHECK(twisted_class_member(t2, elem11("0", "1"), elem11("17", "1")).case_tag ==
        ConjugacyCase::mixed);

  // Column proportionality needs every entry to scale at once.
  BlockElement tt = BlockElement::identity(2, 1, rationals_field());
  BlockElement u(2, 1, rationals_field()), u2(2, 1, rationals_field());
  u.set_b(0, 0, q("1"));
  u.set_b(1, 0, q("2"));
  u2.set_b(0, 0, q("3"));
  u2.set_b(1, 0, q("6"));
  CHECK(twisted_class_member(tt, u, u2).related);
  u2.set_b(1, 0, q("5"));
  CHECK(!twisted_class_member(tt, u, u2).related);

  CHECK(code_of([&] { twisted_class_member(elem11("1", "2"), elem11("0", "1"),
                                           elem11("0", "1")); }) == "NotUnit");
  CHECK(code_of([&] { twisted_class_member(id_t, elem11("0", "2"), elem11("0", "1")); }) ==
        "NotUnit");
  CHECK(code_of([&] {
          twisted_class_member(id_t, elem11("0", "1"),
                               BlockElement::identity(1, 2, rationals_field()));
        }) == "DifferentGroups");
}

TEST_CASE("group conjugacy of units") {
  // Mixed pair with d != 1: the B-part is always eliminable.
  ConjugacyVerdict v = group_conjugate(elem11("3", "2"), elem11("0", "2"));
  CHECK(v.related);
  CHECK(v.case_tag == ConjugacyCase::mixed);
  REQUIRE(v.conjugator.has_value());
  CHECK(block_mul(block_mul(*v.conjugator, elem11("3", "2")),
                  canonical_inverse(*v.conjugator)) == elem11("0", "2"));
  CHECK(v.conjugator->b(0, 0).str() == "-3");

  // Unipotent pair with one zero column: never conjugate.
  CHECK(!group_conjugate(elem11("3", "1"), elem11("0", "1")).related);
  // Unipotent pair with both columns nonzero: conjugate by a torus element.
  ConjugacyVerdict w = group_conjugate(elem11("3", "1"), elem11("5", "1"));
  CHECK(w.related);
  CHECK(block_mul(block_mul(*w.conjugator, elem11("3", "1")),
                  canonical_inverse(*w.conjugator)) == elem11("5", "1"));
  // Different torus parts: never conjugate (the torus is abelian here).
  CHECK(!group_conjugate(elem11("3", "2"), elem11("3", "5")).related);
  CHECK(!group_conjugate(elem12("1", "1", "2", "3"), elem12("1", "1", "3", "2")).related);

  CHECK(code_of([] { group_conjugate(elem11("1", "0"), elem11("1", "1")); }) == "NotUnit");
  CHECK(code_of([] {
          group_conjugate(elem11("1", "1"), BlockElement::identity(1, 1, gf_field(3)));
        }) == "DifferentGroups");

  // The criterion is an equivalence relation: exhaustive symmetry and
  // transitivity over GF(3), type (1,2).
  std::vector<BlockElement> units;
  for (const BlockElement& a : all_blocks_gf(1, 2, 3))
    if (a.is_unit()) units.push_back(a);
  CHECK(units.size() == 36);
  std::vector<std::vector<bool>> rel(units.size(), std::vector<bool>(units.size(), false));
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = 0; j < units.size(); ++j)
      rel[i][j] = group_conjugate(units[i], units[j]).related;
  for (std::size_t i = 0; i < units.size(); ++i) {
    CHECK(rel[i][i]);
    for (std::size_t j = 0; j < units.size(); ++j) {
      CHECK(rel[i][j] == rel[j][i]);
      if (!rel[i][j]) continue;
      for (std::size_t l = 0; l < units.size(); ++l)
        if (rel[j][l]) CHECK(rel[i][l]);
    }
  }
}

TEST_CASE("two-sided conjugacy") {
  // Units with matching torus parts: decided inside the unit group.
  ConjugacyVerdict v = p_conjugate(elem11("3", "2"), elem11("0", "2"));
  CHECK(v.related);
  REQUIRE(v.witness_pair.has_value());
  CHECK(block_mul(v.witness_pair->first, v.witness_pair->second) == elem11("3", "2"));
  CHECK(block_mul(v.witness_pair->second, v.witness_pair->first) == elem11("0", "2"));

  // The unipotent pair with a vanishing column is not two-sided conjugate.
  CHECK(!p_conjugate(elem11("3", "1"), elem11("0", "1")).related);
  // Different supports: unrelated.
  CHECK(!p_conjugate(elem11("3", "0"), elem11("3", "1")).related);

  // Idempotents of one component are mutually conjugate with exact witnesses.
  ConjugacyVerdict e = p_conjugate(elem11("4", "0"), elem11("0", "0"));
  CHECK(e.related);
  CHECK(block_mul(e.witness_pair->first, e.witness_pair->second) == elem11("4", "0"));
  CHECK(block_mul(e.witness_pair->second, e.witness_pair->first) == elem11("0", "0"));

  // Non-units with equal support but non-conjugate compressions.
  BlockElement a = elem12("0", "3", "0", "1");
  BlockElement b = elem12("0", "0", "0", "1");
  // Compressed to the (1,1) group these are [[1,3],[0,1]] and the identity.
  CHECK(!p_conjugate(a, b).related);
  BlockElement c = elem12("9", "3", "0", "1");
  // Dead columns are ignored: same compression as a up to scaling.
  CHECK(p_conjugate(a, c).related);
}

TEST_CASE("intertwining witnesses for idempotent pairs") {
  BlockElement x = elem12("4", "7", "0", "0");
  BlockElement y = elem12("-2", "5", "0", "0");
  REQUIRE(x.is_idempotent());
  REQUIRE(y.is_idempotent());
  auto [z, w] = o_conjugacy_witness(x, y);
  CHECK(block_mul(x, z) == block_mul(z, y));
  CHECK(block_mul(y, w) == block_mul(w, x));
  CHECK(z.b(0, 0).str() == "-2");
  CHECK(w.b(0, 0).str() == "4");

  // Works across components too.
  BlockElement f = elem12("8", "0", "0", "1");
  REQUIRE(f.is_idempotent());
  auto [z2, w2] = o_conjugacy_witness(x, f);
  CHECK(block_mul(x, z2) == block_mul(z2, f));
  CHECK(block_mul(f, w2) == block_mul(w2, x));

  CHECK(code_of([&] { o_conjugacy_witness(x, elem12("1", "1", "1", "2")); }) ==
        "NotIdempotent");

  // Exhaustive over GF(3), type (1,2): every idempotent pair is intertwined.
  std::vector<BlockElement> idems;
  for (const BlockElement& a : all_blocks_gf(1, 2, 3))
    if (a.is_idempotent()) idems.push_back(a);
  for (const BlockElement& a : idems)
    for (const BlockElement& b : idems) {
      auto [zz, ww] = o_conjugacy_witness(a, b);
      CHECK(block_mul(a, zz) == block_mul(zz, b));
      CHECK(block_mul(b, ww) == block_mul(ww, a));
    }
}
