#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "signpat/cyclic.hpp"
#include "signpat/rational.hpp"
#include "signpat/sign_matrix.hpp"

namespace signpat {

struct PpoReport {
  bool is_ppo = true;
  // 0-based block pairs (i,j) with both diagonal blocks nonzero and a
  // nonzero block between them.
  std::vector<std::pair<int, int>> violations;
};

// Scan of a pattern in cyclic normal form.
PpoReport is_ppo(const SignMatrix& cnf_pattern, const CyclicForm& form);

struct NotKPotentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPpoError : std::runtime_error {
  explicit NotPpoError(std::vector<std::pair<int, int>> v)
      : std::runtime_error("pattern is not in PPO"), violations(std::move(v)) {}
  std::vector<std::pair<int, int>> violations;
};

struct AllowsDecision {
  bool allows = false;
  int k = 0;
  PpoReport ppo;
};

// A sign k-potent pattern allows k-potence exactly when its cyclic normal
// form is in PPO. Throws NotKPotentError when the input is not sign
// k-potent for any k within the default cap.
AllowsDecision allows_kpotence(const SignMatrix& a);

// Exact realization B in Q(A) with B^{k+1} = B, built blockwise on the
// cyclic normal form: nonzero diagonal blocks get 1/n_p averaging cycles
// with the closing sign matched, vector blocks against a zero partner get
// class-constant entries +-1/n_p, blocks between two zero diagonal blocks
// get the chain sum of already built blocks. The stored permutation and
// signature are then inverted so the result realizes the original pattern.
// Throws NotPpoError when the pattern does not allow k-potence. The result
// is verified internally (exactly) before being returned.
RationalMatrix build_realization(const SignMatrix& a, const CnfResult& cnf);

// Exact check B^{k+1} = B and sgn(B) = A.
bool verify_realization(const RationalMatrix& b, const SignMatrix& a, int k);

struct ForbiddenSumResult {
  int i, j;   // 0-based block pair, i+1 < j
  bool zero;  // the restricted chain sum vanished
};

// For every pair i+1 < j with at least one nonzero diagonal block,
// evaluates the chain sum over i <= i_1 <= ... <= i_k <= j restricted to
// chains leaving {i,j}, which must vanish on PPO patterns.
std::vector<ForbiddenSumResult> forbidden_sum_check(const SignMatrix& cnf_pattern,
                                                    const CyclicForm& form, int k);

// Closed-form allow-idempotence decision for 2x2 upper triangular proper
// patterns: with b11, b22 forced to 0/1 by the diagonal, b12 = b11 b12 +
// b12 b22 admits a sign-respecting solution iff a12 = 0 or exactly one
// diagonal entry is +. Returns nullopt for other shapes.
std::optional<bool> allows_idempotence_upper2x2(const SignMatrix& a);

}  // namespace signpat
