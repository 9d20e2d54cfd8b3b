#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signpat/sign_matrix.hpp"
#include "signpat/structure.hpp"

namespace signpat {

// m x m circulant permutation pattern: Plus on the first superdiagonal and
// at (m,1). p_cycle(1) = [+].
SignMatrix p_cycle(int m);
// As p_cycle with the closing (m,1) entry Minus. q_cycle(1) = [-].
SignMatrix q_cycle(int m);

struct BlockTag {
  enum class Kind { P, Q, Zero } kind = Kind::Zero;
  int m = 1;  // cycle length; 1 for Zero

  bool nonzero() const { return kind != Kind::Zero; }
  int size() const { return kind == Kind::Zero ? 1 : m; }
  friend bool operator==(const BlockTag&, const BlockTag&) = default;
};

std::string to_string(const BlockTag& t);

// Potence index contributed by one diagonal block: m for P(m), 2m for Q(m),
// 1 for a zero block.
int block_potence(const BlockTag& t);

// lcm of the per-block indices. Rejects an all-zero tag list.
int potence_index_cnf(std::span<const BlockTag> tags);

struct CyclicBlockInfo {
  BlockTag tag;
  std::vector<int> class_sizes;  // per cyclic class; {1} for a zero block
  Sign alpha = Sign::Zero;       // sign of the closing block

  int size() const {
    int n = 0;
    for (int s : class_sizes) n += s;
    return n;
  }
};

// Result of recognising one irreducible pattern: a permutation ordering the
// cyclic classes consecutively and a signature making every class-to-next
// block all Plus and the closing block constant alpha.
struct CyclicStructure {
  std::vector<int> perm;        // old index -> new position
  std::vector<Sign> signature;  // indexed by new position
  CyclicBlockInfo block;
};

// Recognition for an irreducible pattern. Cyclic classes come from BFS
// depths modulo the digraph period g (gcd of depth defects over all edges,
// root = index 0). The signature is propagated along the BFS tree with the
// closing-block sign carried symbolically: a tree edge that crosses from
// the last class back to class 0 is normalised to alpha, not to Plus, and
// the non-tree edges then determine alpha or expose an inconsistency.
// Failure (returned, not thrown) means the pattern is not sign k-potent
// for any k.
std::optional<CyclicStructure> cyclic_structure(const SignMatrix& a);

struct CyclicForm {
  std::vector<int> perm;         // old index -> new position, whole pattern
  std::vector<Sign> signature;   // indexed by new position
  std::vector<CyclicBlockInfo> blocks;

  std::vector<int> block_sizes() const;
  std::vector<int> block_offsets() const;  // start position of each block
};

struct CnfResult {
  CyclicForm form;
  SignMatrix pattern;  // signature_similar(permuted(a, perm), signature)
};

struct CnfOutcome {
  std::optional<CnfResult> cnf;
  int failed_block = -1;  // 0-based diagonal block index when recognition fails
};

// Frobenius normal form composed with per-block recognition.
CnfOutcome to_cyclic_normal_form(const SignMatrix& a);

}  // namespace signpat
