#include <doctest.h>

#include <functional>

#include "incmon/idempotent.hpp"

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

MonoidContext max_antichain(int k, int m) {
  return MonoidContext::antichain_monoid(complete_bipartite_poset(k, m),
                                         IndexSet::range_set(k + m, k + 1, k + m));
}

std::uint64_t ipow(std::uint64_t base, long exp) {
  std::uint64_t r = 1;
  for (long t = 0; t < exp; ++t) r *= base;
  return r;
}

}  // namespace

TEST_CASE("diagonal projection") {
  CHECK(diag_projection(diag_idempotent(IndexSet(5, {1, 2, 3, 4}))) ==
        IndexSet(5, {1, 2, 3, 4}));
  CHECK(diag_projection(ExactMatrix::identity(3, gf_field(2))) == IndexSet::full_set(3));
  ExactMatrix e(2, 2, rationals_field());
  e.set(0, 0, q("1"));
  e.set(0, 1, q("9"));
  CHECK(diag_projection(e) == IndexSet(2, {1}));
  ExactMatrix notid(2, 2, rationals_field());
  notid.set(0, 1, q("1"));
  CHECK(code_of([&] { diag_projection(notid); }) == "NotIdempotent");
  // 2e is idempotent over GF(2) only; over the rationals the projection must
  // refuse before reading the diagonal.
  ExactMatrix half(1, 1, rationals_field());
  half.set(0, 0, q("1/2"));
  CHECK(code_of([&] { diag_projection(half); }) == "NotIdempotent");
}

TEST_CASE("component dimension formula") {
  CHECK(component_dimension(3, 5, IndexSet(8, {2, 4, 6, 7})) == 8);
  CHECK(component_dimension(2, 2, IndexSet(4, {1, 2})) == 4);
  CHECK(component_dimension(2, 2, IndexSet(4, {1, 2, 3})) == 2);
  CHECK(component_dimension(2, 2, IndexSet::full_set(4)) == 0);
  CHECK(component_dimension(2, 2, IndexSet::empty_set(4)) == 0);
  CHECK(component_dimension(1, 1, IndexSet(2, {1})) == 1);
  CHECK(code_of([] { component_dimension(2, 2, IndexSet(3, {1})); }) == "DimensionMismatch");
}

TEST_CASE("component parametrization marks free block entries") {
  MonoidContext full = MonoidContext::full_incidence(complete_bipartite_poset(3, 5));
  IndexSet j(8, {2, 4, 6, 7});
  ComponentDescriptor d = component_parametrization(full, j);
  // Free positions: row in J with column outside, or vice versa.
  CHECK(d.free_positions ==
        std::vector<std::pair<int, int>>{{0, 3}, {0, 5}, {0, 6}, {1, 4}, {1, 7}, {2, 3},
                                         {2, 5}, {2, 6}});
  CHECK(d.free_positions.size() == 8);
  CHECK(d.free_positions.size() + d.forced_zero_positions.size() == 3 * 5);

  // Instantiations are idempotent, and distinct values give distinct matrices.
  std::vector<Scalar> vals;
  for (int t = 0; t < 8; ++t) vals.push_back(q(std::to_string(t + 2).c_str()));
  ExactMatrix m = d.instantiate(rationals_field(), vals);
  CHECK(is_idempotent_matrix(m));
  CHECK(diag_projection(m) == j);
  CHECK(m.at(0, 3).str() == "2");
  CHECK(code_of([&] { d.instantiate(rationals_field(), std::span<const Scalar>{}); }) ==
        "DimensionMismatch");

  // In the antichain monoid the pattern must contain every pinned index.
  MonoidContext am = max_antichain(3, 5);
  CHECK(code_of([&] { component_parametrization(am, j); }) == "ComponentAbsent");
  ComponentDescriptor ok = component_parametrization(am, IndexSet(8, {1, 2, 3, 6, 7}));
  CHECK(ok.free_positions.size() == component_dimension(3, 5, IndexSet(8, {1, 2, 3, 6, 7})));
  CHECK(code_of([] {
          component_parametrization(MonoidContext::full_incidence(chain_poset(3)),
                                    IndexSet(3, {1}));
        }) == "WrongPosetClass");
}

TEST_CASE("dimension formula counts GF(2) points") {
  // Component cardinality over GF(2) is 2^dim, exhaustively for small types.
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 3; ++m) {
      MonoidContext am = max_antichain(k, m);
      IdempotentEnumeration en = enumerate_idempotents_gf(am, 2);
      for (std::uint64_t bits = 0; bits < (1u << m); ++bits) {
        std::vector<int> members;
        for (int i = 1; i <= k; ++i) members.push_back(i);
        for (int j = 0; j < m; ++j)
          if (bits & (1u << j)) members.push_back(k + 1 + j);
        IndexSet j(k + m, std::move(members));
        const IdempotentComponentSlice* slice = en.find(j);
        REQUIRE(slice != nullptr);
        CHECK(slice->elements.size() == ipow(2, component_dimension(k, m, j)));
      }
    }
}

TEST_CASE("column rule for idempotent products") {
  MonoidContext am = max_antichain(2, 2);
  ExactMatrix y = diag_idempotent(IndexSet(4, {1, 2, 3}), rationals_field());
  y.set(1, 3, q("5"));  // row in J, column outside
  ExactMatrix z = diag_idempotent(IndexSet(4, {1, 2, 4}), rationals_field());
  z.set(0, 2, q("7"));
  REQUIRE(is_idempotent_matrix(y));
  REQUIRE(is_idempotent_matrix(z));
  ExactMatrix p = component_multiply(am, y, z);
  CHECK(p == mat_mul(y, z));
  CHECK(diag_projection(p) == IndexSet(4, {1, 2}));
  // Column 3: z has diagonal 0 there, so the column comes from z; column 4:
  // z has diagonal 1, so it comes from y.
  CHECK(p.at(0, 2).str() == "7");
  CHECK(p.at(1, 3).str() == "5");

  CHECK(code_of([&] { component_multiply(am, y, ExactMatrix::identity(4, gf_field(2))); }) ==
        "FieldMismatch");
  ExactMatrix notid = ExactMatrix::identity(4, rationals_field());
  notid.set(0, 2, q("1"));
  CHECK(code_of([&] { component_multiply(am, y, notid); }) == "NotIdempotent");
  CHECK(code_of([&] {
          component_multiply(MonoidContext::full_incidence(complete_bipartite_poset(2, 2)), y,
                             z);
        }) == "WrongContext");

  // Exhaustive over GF(2): every idempotent product obeys the column rule and
  // lands in the intersected component.
  IdempotentEnumeration en = enumerate_idempotents_gf(am, 2);
  for (const auto& sy : en.components)
    for (const auto& ey : sy.elements)
      for (const auto& sz : en.components)
        for (const auto& ez : sz.elements) {
          ExactMatrix prod = component_multiply(am, ey, ez);
          CHECK(diag_projection(prod) == sy.J.intersection(sz.J));
        }
}

TEST_CASE("orthodoxy of height-one antichain monoids") {
  MonoidContext am = max_antichain(2, 2);
  OrthodoxMode gf2;
  gf2.kind = OrthodoxMode::Kind::exhaustive_gf;
  gf2.q = 2;
  OrthodoxyReport r = check_orthodox(am, gf2);
  CHECK(r.passed);
  CHECK(r.idempotents_seen == 25);  // 16 + 4 + 4 + 1 over the four patterns
  CHECK(r.pairs_checked == 625);
  CHECK(r.violations.empty());

  OrthodoxMode rnd;
  rnd.kind = OrthodoxMode::Kind::random_rational;
  rnd.trials = 200;
  rnd.seed = 42;
  MonoidContext amp = MonoidContext::antichain_monoid(
      Poset::build({"x1", "x2", "x3", "x4", "x5"}, {{0, 3}, {1, 3}, {1, 4}, {2, 4}}),
      IndexSet(5, {4, 5}));
  OrthodoxyReport rr = check_orthodox(amp, rnd);
  CHECK(rr.passed);
  CHECK(rr.pairs_checked == 200);

  CHECK(code_of([&] {
          check_orthodox(MonoidContext::antichain_monoid(chain_poset(3), IndexSet(3, {3})),
                         gf2);
        }) == "WrongPosetClass");
  CHECK(code_of([&] {
          check_orthodox(MonoidContext::full_incidence(chain_poset(2)), gf2);
        }) == "WrongContext");
}

TEST_CASE("random idempotents are context idempotents") {
  MonoidContext am = max_antichain(2, 3);
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    ExactMatrix e = random_idempotent(am, rng);
    CHECK(is_idempotent_matrix(e));
    CHECK(contains(am, e));
  }
  // Same seed, same stream.
  Rng a(5), b(5);
  CHECK(random_idempotent(am, a) == random_idempotent(am, b));
}

TEST_CASE("idempotent enumeration over a chain") {
  // Full incidence monoid of the 2-chain over GF(3): idempotents split into
  // four diagonal families.
  MonoidContext full = MonoidContext::full_incidence(chain_poset(2));
  IdempotentEnumeration en = enumerate_idempotents_gf(full, 3);
  CHECK(en.total() == 8);
  REQUIRE(en.components.size() == 4);
  // Slices are ordered by the bitmask of J.
  CHECK(en.components[0].J == IndexSet::empty_set(2));
  CHECK(en.components[1].J == IndexSet(2, {1}));
  CHECK(en.components[2].J == IndexSet(2, {2}));
  CHECK(en.components[3].J == IndexSet::full_set(2));
  CHECK(en.components[0].elements.size() == 1);
  CHECK(en.components[1].elements.size() == 3);  // [[1,a],[0,0]]
  CHECK(en.components[2].elements.size() == 3);  // [[0,b],[0,1]]
  CHECK(en.components[3].elements.size() == 1);
  for (const auto& e : en.components[1].elements) {
    CHECK(e.at(0, 0).is_one());
    CHECK(e.at(1, 1).is_zero());
  }
  // Elements of a slice arrive in ascending flattened order.
  CHECK(en.components[1].elements[0].at(0, 1).is_zero());
  CHECK(en.components[1].elements[1].at(0, 1).is_one());

  // Diagonal pruning: only 0/1 diagonals are scanned (2*2*3 candidates).
  CHECK(en.candidates == 12);
  CHECK(code_of([&] { enumerate_idempotents_gf(full, 3, 4); }) == "SearchSpaceTooLarge");
  CHECK(code_of([&] { enumerate_idempotents_gf(full, 10); }) == "NotPrime");
}

TEST_CASE("enumeration respects pinned diagonals") {
  MonoidContext am = max_antichain(1, 2);
  IdempotentEnumeration en = enumerate_idempotents_gf(am, 3);
  // Patterns must contain index 1; sizes are 3^dim.
  CHECK(en.components.size() == 4);
  for (const auto& slice : en.components) {
    CHECK(slice.J.contains(1));
    CHECK(slice.elements.size() == ipow(3, component_dimension(1, 2, slice.J)));
  }
}
