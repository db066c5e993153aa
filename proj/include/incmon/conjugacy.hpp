#pragma once

#include <optional>
#include <utility>

#include "incmon/green.hpp"

namespace incmon {

// Factorization of a unit g = t * u with t the diagonal (torus) part and u
// the unipotent part; exact, with the same B and D entries as g.
struct SemidirectFactorization {
  int k = 0, m = 0;
  Field field;
  std::vector<Scalar> torus_diag;  // length m
  std::vector<Scalar> unipotent_b;  // k*m row-major

  BlockElement torus() const;
  BlockElement unipotent() const;
  BlockElement reassemble() const;  // torus * unipotent, equals g
};

SemidirectFactorization semidirect_factor(const BlockElement& g);

enum class ConjugacyCase { semisimple, unipotent, mixed, not_applicable };

std::string conjugacy_case_name(ConjugacyCase c);

struct ConjugacyVerdict {
  bool related = false;
  ConjugacyCase case_tag = ConjugacyCase::not_applicable;
  // Two-sided witness: (z, w) with z w = x and w z = y for the p-relation,
  // or the twisted-conjugation pair (s, v).
  std::optional<std::pair<BlockElement, BlockElement>> witness_pair;
  // Group conjugator x with x g x^{-1} = h.
  std::optional<BlockElement> conjugator;
};

// Case tag of a unit: semisimple when the unipotent part is trivial,
// unipotent when the torus part is trivial, mixed otherwise.
ConjugacyCase classify_unit(const BlockElement& g);

// Membership of u2 in the twisted conjugacy class of u under the torus t:
// the set { s ((t^{-1} v t) u v^{-1}) s^{-1} : s torus unit, v unipotent }.
// Columnwise criterion: where t has diagonal 1 the columns of u and u2 must
// both vanish or be nonzero scalar multiples; other columns are free. On
// success the witness pair (s, v) is returned and rechecked exactly.
ConjugacyVerdict twisted_class_member(const BlockElement& t, const BlockElement& u,
                                      const BlockElement& u2);

// Conjugacy of two units of the same monoid: equal torus parts, and the
// twisted criterion above on the unipotent parts. On success returns the
// conjugator x with x g x^{-1} = h, rechecked exactly.
ConjugacyVerdict group_conjugate(const BlockElement& g, const BlockElement& h);

// Two-sided (p-)conjugacy in the full monoid: x ~ y when x = z w and
// y = w z for some z, w. Decided through equal support sets plus group
// conjugacy inside the group H-class of 1_L; witnesses are built from the
// group conjugator and rechecked exactly (z w = x and w z = y).
ConjugacyVerdict p_conjugate(const BlockElement& x, const BlockElement& y);

// For idempotents x, y the pair z = (B_y, 0), w = (B_x, 0) intertwines them:
// x z = z y and y w = w x. Returns (z, w) after exact verification.
std::pair<BlockElement, BlockElement> o_conjugacy_witness(const BlockElement& x,
                                                          const BlockElement& y);

}  // namespace incmon
