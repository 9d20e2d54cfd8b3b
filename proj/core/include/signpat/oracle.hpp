#pragma once

#include <functional>
#include <vector>

#include "signpat/sign_matrix.hpp"

namespace signpat {

// Exhaustive enumeration backing the completeness claims of the two
// generators, plus equivalence utilities.
struct EnumSpec {
  int n = 1;
  enum class Shape { Full, UpperTriangular } shape = Shape::Full;
  std::vector<Sign> diag;  // fixed diagonal for UpperTriangular
  enum class Predicate { Idempotent, KPotent, PotentAny } predicate =
      Predicate::Idempotent;
  int k = 1;  // exact potence index for KPotent

  int cap_full = 4;
  int cap_upper = 6;
  // Abandon a potence candidate as soon as a computed power is ambiguous
  // at a position where the candidate is nonzero. Applied only to the
  // potence predicates; cross-validated against the exact search by the
  // test suite.
  bool prune_masked_amb = true;
};

// Emits, in lexicographic assignment order over (Zero, Plus, Minus) per
// free cell, every pattern of the given shape satisfying the predicate.
// Output order is independent of the job count.
void enumerate(const EnumSpec& spec,
               const std::function<void(const SignMatrix&)>& emit, int jobs = 1);

// Minimum of the orbit of a under permutation similarity, signature
// similarity, transposition and negation, in the fixed serialization
// order of SignMatrix::operator<. Two patterns are equivalent iff their
// canonical forms coincide. Capped at order 8.
SignMatrix canonical_form(const SignMatrix& a);

struct Census {
  long long total = 0;
  long long classes = 0;
};

// Matches and number of equivalence classes for an enumeration spec.
Census census(const EnumSpec& spec, int jobs = 1);

}  // namespace signpat
