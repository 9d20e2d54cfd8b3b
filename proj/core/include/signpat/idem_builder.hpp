#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "signpat/gen_stats.hpp"
#include "signpat/sign_matrix.hpp"

namespace signpat {

// Diagonal of a reduced upper triangular pattern: every 1x1 diagonal block
// is zero or +.
struct DiagSpec {
  std::vector<Sign> diag;  // entries restricted to {Zero, Plus}
};

// "0+" etc. -> DiagSpec; throws ParseError on anything else.
DiagSpec parse_diag_spec(std::string_view s);

struct ChoiceSet {
  bool zero = false, plus = false, minus = false;

  bool contains(Sign s) const {
    return (s == Sign::Zero && zero) || (s == Sign::Plus && plus) ||
           (s == Sign::Minus && minus);
  }
  int count() const { return int(zero) + int(plus) + int(minus); }
  bool empty() const { return count() == 0; }
  // Enumeration order is Zero, Plus, Minus.
  template <typename F>
  void for_each(F&& f) const {
    if (zero) f(Sign::Zero);
    if (plus) f(Sign::Plus);
    if (minus) f(Sign::Minus);
  }
};

// Admissible entries for cell (i,j), 0-based, i < j, of a partially built
// upper triangular pattern: all columns before j and the entries of column
// j below row i must already be fixed, the diagonal per spec. The case
// split:
//   i = j-1:          both diagonals zero -> {Zero}, else all three signs;
//   X_ij nonzero:     {X_ij}, where X_ij = sum_{p in (i,j)} a_ip a_pj;
//   X_ij zero, both diagonals zero -> {Zero};
//   otherwise Zero is always admitted and a nonzero sign s is admitted iff
//   a_li * s = X^l_ij for every l < i with a_li * X^l_ij != 0.
ChoiceSet free_choices(const SignMatrix& partial, int i, int j,
                       const DiagSpec& spec);

using PatternSink = std::function<void(const SignMatrix&)>;

// Depth-first construction over columns j = 2..n, rows i = j-1..1,
// branching on free_choices. Every emitted pattern satisfies A^2 = A, and
// the emitted set is exactly the set of upper triangular idempotent
// patterns with the given diagonal. Each cell is decided exactly once per
// branch; free_choices is never empty on a reachable prefix (both facts
// are recorded in stats).
void generate_idempotent(const DiagSpec& spec, const PatternSink& emit,
                         GenStats* stats = nullptr, int jobs = 1);

// Reproducible sampling: one root-to-leaf walk per sample, drawing
// uniformly from each choice set with the 64-bit LCG
//   x <- 6364136223846793005*x + 1442695040888963407,  pick = (x >> 33) % size.
void sample_idempotent(const DiagSpec& spec, long long count,
                       std::uint64_t seed, const PatternSink& emit);

}  // namespace signpat
