#pragma once

#include <vector>

#include "signpat/sign_matrix.hpp"

namespace signpat {

enum class DiagBlockKind { Irreducible, ZeroOne };

// Permutation placing a pattern in block upper triangular form whose
// diagonal blocks are irreducible or 1x1 zero. Deterministic: among
// incomparable components of the condensation, the one holding the lowest
// original index comes first; original order is kept inside a component.
struct FrobeniusForm {
  std::vector<int> perm;  // old index -> new position
  std::vector<int> block_sizes;
  std::vector<DiagBlockKind> kinds;
};

// Strong connectivity of the digraph with an edge i->j whenever a_ij != 0.
// A 1x1 pattern is irreducible iff nonzero.
bool is_irreducible(const SignMatrix& a);

FrobeniusForm frobenius_normal_form(const SignMatrix& a);

// The permuted pattern P^T A P for the computed form.
SignMatrix apply_form(const SignMatrix& a, const FrobeniusForm& f);

struct StripResult {
  SignMatrix pattern;      // principal submatrix on the kept indices
  std::vector<int> kept;   // original indices, ascending
};

// Drops every index whose entire row and entire column are zero. One pass
// suffices and the operation is idempotent.
StripResult strip_extraneous(const SignMatrix& a);

}  // namespace signpat
