#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "signpat/cyclic.hpp"
#include "signpat/gen_stats.hpp"
#include "signpat/sign_matrix.hpp"

namespace signpat {

// Diagonal block specification of a reduced pattern in cyclic normal form.
struct KDiagSpec {
  std::vector<BlockTag> blocks;

  int potence() const { return potence_index_cnf(blocks); }
  int order() const;
  // Number of maximal runs of consecutive zero blocks.
  int zero_runs() const;
};

// "P2,0,P2,Q1" -> spec. Tokens: Pm, Qm (m >= 1) or 0.
KDiagSpec parse_block_spec(std::string_view s);

// Admissible shapes of the block between two diagonal blocks:
//   P_m vs P_n    : circulants C = sum b_h P_g^h tiled plainly,
//   Q_m vs Q_n    : zero when (m+n)/g is odd, else anticirculants
//                   C = sum b_h Q_g^h tiled with (-1)^{i+j} alternation,
//   P vs Q mixed  : zero when (P order)/g is odd, else alternating
//                   anticirculants,
//   zero vs cycle : free row/column vector,
//   zero vs zero  : zero (consulted only for adjacent blocks),
// with g = gcd of the two cycle lengths.
enum class FamilyKind { Circulant, Anticirculant, ZeroForced, RowVector, ColVector };

struct BlockFamily {
  FamilyKind kind;
  int rows = 0, cols = 0;
  int coeffs = 0;  // length of the free coefficient vector b
};

BlockFamily block_family(const BlockTag& ti, const BlockTag& tj);

long long family_size(const BlockFamily& fam);  // 3^coeffs

// Member for a given coefficient vector (length fam.coeffs).
SignMatrix materialize(const BlockFamily& fam, std::span<const Sign> b);

// Enumerates members in lexicographic b order over (Zero, Plus, Minus)^g.
void for_each_member(const BlockFamily& fam,
                     const std::function<void(const SignMatrix&)>& f);

// True iff Aii * B = B * Ajj with both products proper.
bool commute_check(const SignMatrix& aii, const SignMatrix& b,
                   const SignMatrix& ajj);

enum class Strategy { SinglePass, Filtered };

using KPatternSink = std::function<void(const SignMatrix&)>;

// Column-wise construction of all sign k-potent patterns in reduced cyclic
// normal form with the given diagonal, k = lcm of the block indices.
// SinglePass follows the look-ahead side conditions and requires at most
// one run of zero diagonal blocks; every branch then completes without
// revisiting a cell. Filtered drops the look-ahead, prunes branches that
// reach an empty choice set or an ambiguous forced block, and post-checks
// A^{k+1} = A on every leaf.
void generate_kpotent(const KDiagSpec& spec, Strategy strategy,
                      const KPatternSink& emit, GenStats* stats = nullptr,
                      int jobs = 1);

// Reproducible sampling with the same LCG scheme as sample_idempotent:
// one uniform pick per cell; a dead branch (possible only under Filtered)
// is retried.
void sample_kpotent(const KDiagSpec& spec, Strategy strategy, long long count,
                    std::uint64_t seed, const KPatternSink& emit);

struct KPotenceCondition {
  bool all = true;
  // Blocks (i,j), 0-based, where the weakly increasing chain sum of length
  // k+1 differs from A_ij or is ambiguous.
  std::vector<std::pair<int, int>> failures;
};

// Evaluates sum over i <= i_1 <= ... <= i_k <= j of A_{i,i_1}...A_{i_k,j}
// for every block pair i <= j of the given contiguous block partition and
// compares with A_ij.
KPotenceCondition condition_of_kpotence(const SignMatrix& a,
                                        std::span<const int> block_sizes, int k);

}  // namespace signpat
