#include <doctest.h>

#include <functional>

#include "incmon/context.hpp"
#include "incmon/errors.hpp"
#include "incmon/rng.hpp"

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

Poset poset_p() {
  return Poset::build({"x1", "x2", "x3", "x4", "x5"}, {{0, 3}, {1, 3}, {1, 4}, {2, 4}});
}

MonoidContext chain2_max() {
  return MonoidContext::antichain_monoid(chain_poset(2), IndexSet(2, {2}));
}

ExactMatrix two_by_two(const char* a, const char* b, const char* d) {
  ExactMatrix x(2, 2, rationals_field());
  x.set(0, 0, q(a));
  x.set(0, 1, q(b));
  x.set(1, 1, q(d));
  return x;
}

// Every GF(q) member of ctx, by filling the free coordinates in ascending
// flattened order.
std::vector<ExactMatrix> all_members_gf(const MonoidContext& ctx, unsigned qmod) {
  auto coords = free_coordinates(ctx);
  std::vector<ExactMatrix> out;
  std::vector<unsigned> v(coords.size(), 0);
  for (;;) {
    ExactMatrix m = base_matrix(ctx, gf_field(qmod));
    for (std::size_t t = 0; t < coords.size(); ++t)
      m.set(coords[t].first, coords[t].second, Scalar(Gf{v[t], qmod}));
    out.push_back(std::move(m));
    bool done = coords.empty();
    std::size_t t = coords.size();
    while (t > 0) {
      --t;
      if (++v[t] < qmod) break;
      v[t] = 0;
      if (t == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

}  // namespace

TEST_CASE("context construction and description") {
  MonoidContext full = MonoidContext::full_incidence(poset_p());
  CHECK(full.kind() == ContextKind::full_incidence);
  CHECK(!full.antichain().has_value());
  CHECK(full.size() == 5);
  CHECK(!full.diagonal_fixed(0));

  MonoidContext am = MonoidContext::antichain_monoid(poset_p(), IndexSet(5, {4, 5}));
  CHECK(am.kind() == ContextKind::antichain_monoid);
  CHECK(*am.antichain() == IndexSet(5, {4, 5}));
  CHECK(am.diagonal_fixed(0));
  CHECK(!am.diagonal_fixed(3));
  CHECK(am.describe() == "antichain monoid on 5 elements, antichain {4,5}");
  CHECK(code_of([] {
          MonoidContext::antichain_monoid(poset_p(), IndexSet(5, {1, 4}));
        }) == "NotAntichain");
  // The empty antichain pins every diagonal entry: the trivial monoid.
  MonoidContext trivial = MonoidContext::antichain_monoid(chain_poset(2), IndexSet(2, {}));
  CHECK(free_coordinates(trivial).size() == 1);  // only the strict entry
}

TEST_CASE("membership in the full incidence monoid") {
  MonoidContext full = MonoidContext::full_incidence(chain_poset(2));
  CHECK(contains(full, two_by_two("1", "5", "2")));
  CHECK(contains(full, two_by_two("0", "0", "0")));
  ExactMatrix low(2, 2, rationals_field());
  low.set(1, 0, q("1"));
  CHECK(!contains(full, low));
  CHECK(code_of([&] { contains(full, ExactMatrix(3, 3, rationals_field())); }) ==
        "DimensionMismatch");

  // Entries at incomparable positions are forbidden.
  MonoidContext fp = MonoidContext::full_incidence(poset_p());
  ExactMatrix bad(5, 5, rationals_field());
  bad.set(0, 4, q("1"));  // x1 is not below x5 in P
  CHECK(!contains(fp, bad));
  bad.set(0, 4, q("0"));
  bad.set(0, 3, q("7"));
  CHECK(contains(fp, bad));
}

TEST_CASE("membership in an antichain monoid") {
  MonoidContext am = chain2_max();
  CHECK(contains(am, two_by_two("1", "5", "2")));
  CHECK(contains(am, two_by_two("1", "0", "0")));
  CHECK(!contains(am, two_by_two("2", "0", "1")));  // pinned diagonal entry
  CHECK(!contains(am, two_by_two("0", "0", "1")));

  // Inc(Q, {x4,x5}): any block matrix [[1_3, B], [0, D]] belongs.
  MonoidContext amq =
      MonoidContext::antichain_monoid(complete_bipartite_poset(3, 2), IndexSet(5, {4, 5}));
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    ExactMatrix x = ExactMatrix::identity(5, rationals_field());
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 5; ++j) x.set(i, j, rng.scalar(rationals_field()));
    for (int j = 3; j < 5; ++j) x.set(j, j, rng.scalar(rationals_field()));
    CHECK(contains(amq, x));
  }
}

TEST_CASE("units and inverses") {
  MonoidContext am = chain2_max();
  CHECK(is_unit(am, two_by_two("1", "5", "2")));
  CHECK(!is_unit(am, two_by_two("1", "5", "0")));
  CHECK(code_of([&] { is_unit(am, two_by_two("3", "0", "1")); }) == "NotInMonoid");

  ExactMatrix x = two_by_two("1", "3", "2");
  ExactMatrix inv = unit_inverse(am, x);
  CHECK(inv.at(0, 1).str() == "-3/2");
  CHECK(inv.at(1, 1).str() == "1/2");
  CHECK(contains(am, inv));
  CHECK(mat_mul(x, inv) == ExactMatrix::identity(2, rationals_field()));
  CHECK(code_of([&] { unit_inverse(am, two_by_two("1", "5", "0")); }) == "NotUnit");

  // Unit group closure, exhaustive over GF(3).
  for (const ExactMatrix& a : all_members_gf(am, 3)) {
    if (!is_unit(am, a)) continue;
    ExactMatrix ai = unit_inverse(am, a);
    CHECK(is_unit(am, ai));
    for (const ExactMatrix& b : all_members_gf(am, 3))
      if (is_unit(am, b)) CHECK(is_unit(am, mat_mul(a, b)));
  }
}

TEST_CASE("affine chart splits diagonal and strict parts") {
  MonoidContext am = chain2_max();
  ExactMatrix y = two_by_two("1", "5", "7");
  JordanChart ch = jordan_chart(am, y);
  CHECK(ch.diag_part.at(0, 0).is_zero());  // pinned entry contributes nothing
  CHECK(ch.diag_part.at(1, 1).str() == "7");
  CHECK(ch.nil_part.at(0, 1).str() == "5");
  CHECK(jordan_unchart(am, ch.diag_part, ch.nil_part) == y);

  // Identity: the diagonal part carries 1 exactly at antichain positions.
  JordanChart idc = jordan_chart(am, ExactMatrix::identity(2, rationals_field()));
  CHECK(idc.diag_part.at(1, 1).is_one());
  CHECK(idc.nil_part == ExactMatrix(2, 2, rationals_field()));

  CHECK(code_of([&] {
          jordan_chart(MonoidContext::full_incidence(chain_poset(2)), y);
        }) == "WrongContext");
  ExactMatrix off(2, 2, rationals_field());
  off.set(0, 0, q("3"));  // support outside the antichain
  CHECK(code_of([&] {
          jordan_unchart(am, off, ExactMatrix(2, 2, rationals_field()));
        }) == "NotInMonoid");

  // Round trip in both directions over GF(3), exhaustively.
  for (const ExactMatrix& a : all_members_gf(am, 3)) {
    JordanChart c = jordan_chart(am, a);
    CHECK(jordan_unchart(am, c.diag_part, c.nil_part) == a);
  }
}

TEST_CASE("one-parameter curve through an idempotent") {
  MonoidContext am = chain2_max();
  ExactMatrix nil(2, 2, rationals_field());
  nil.set(0, 1, q("1"));
  IndexSet j(2, {1});

  ExactMatrix at0 = lambda_curve(am, j, nil, Scalar::zero(rationals_field()));
  CHECK(is_idempotent_matrix(at0));
  CHECK(at0.at(0, 1).is_one());
  ExactMatrix at2 = lambda_curve(am, j, nil, q("2"));
  CHECK(is_unit(am, at2));
  CHECK(at2.at(1, 1).str() == "2");
  CHECK(at2.at(0, 1).is_one());

  // The seed 1_{1,2} + N is not idempotent, and a non-strict nil part is
  // rejected outright.
  CHECK(code_of([&] { lambda_curve(am, IndexSet(2, {1, 2}), nil, q("2")); }) ==
        "NotIdempotentSeed");
  ExactMatrix notstrict(2, 2, rationals_field());
  notstrict.set(1, 1, q("1"));
  CHECK(code_of([&] { lambda_curve(am, j, notstrict, q("2")); }) == "NotIdempotentSeed");
}

TEST_CASE("decomposition along connected components") {
  Poset two = Poset::build({"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
  MonoidContext ctx = MonoidContext::antichain_monoid(two, IndexSet(4, {2, 4}));
  auto parts = decompose(ctx);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 2);
  CHECK(*parts[0].antichain() == IndexSet(2, {2}));
  CHECK(*parts[1].antichain() == IndexSet(2, {2}));
  CHECK(code_of([&] { decompose(MonoidContext::full_incidence(two)); }) == "WrongContext");

  // Membership of the block-diagonal assembly is equivalent to componentwise
  // membership, exhaustively over GF(2).
  auto whole = all_members_gf(ctx, 2);
  CHECK(whole.size() == 16);  // two free strict entries + two free diagonals
  for (const ExactMatrix& x : whole) {
    ExactMatrix top(2, 2, gf_field(2)), bottom(2, 2, gf_field(2));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        top.set(i, j, x.at(i, j));
        bottom.set(i, j, x.at(2 + i, 2 + j));
      }
    CHECK(contains(parts[0], top));
    CHECK(contains(parts[1], bottom));
  }
}

TEST_CASE("bipartite re-embedding") {
  // P is bipartite (3,2) but not complete; members embed into the monoid over
  // the complete shape with minimal elements first.
  MonoidContext src = MonoidContext::antichain_monoid(poset_p(), IndexSet(5, {4, 5}));
  MonoidContext dst =
      MonoidContext::antichain_monoid(complete_bipartite_poset(3, 2), IndexSet(5, {4, 5}));
  ExactMatrix x = ExactMatrix::identity(5, rationals_field());
  x.set(0, 3, q("2"));
  x.set(1, 3, q("3"));
  x.set(1, 4, q("5"));
  x.set(2, 4, q("7"));
  x.set(3, 3, q("0"));
  x.set(4, 4, q("9"));
  REQUIRE(contains(src, x));
  ExactMatrix y = embed_bipartite(src, x);
  CHECK(contains(dst, y));
  CHECK(y == x);  // P's extension already lists minimals first
  CHECK(y.at(0, 4).is_zero());  // the missing relation stays zero

  CHECK(code_of([&] { embed_bipartite(MonoidContext::full_incidence(chain_poset(3)),
                                      ExactMatrix::identity(3, rationals_field())); }) ==
        "NotBipartite");
  ExactMatrix bad = ExactMatrix::identity(5, rationals_field());
  bad.set(0, 4, q("1"));
  CHECK(code_of([&] { embed_bipartite(src, bad); }) == "NotInMonoid");
}

TEST_CASE("free coordinates and base matrix") {
  MonoidContext am = chain2_max();
  CHECK(free_coordinates(am) == std::vector<std::pair<int, int>>{{0, 1}, {1, 1}});
  ExactMatrix base = base_matrix(am, rationals_field());
  CHECK(base.at(0, 0).is_one());
  CHECK(base.at(1, 1).is_zero());
  CHECK(contains(am, base));

  MonoidContext full = MonoidContext::full_incidence(chain_poset(2));
  CHECK(free_coordinates(full).size() == 3);
  CHECK(base_matrix(full, gf_field(2)) == ExactMatrix(2, 2, gf_field(2)));
  CHECK(all_members_gf(full, 2).size() == 8);
}
