#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "signpat/sign.hpp"

namespace signpat {

// Dense sign pattern, two bits per entry. Most public contracts are about
// square patterns; rectangular shapes appear as the off-diagonal blocks of
// block-partitioned patterns. All values are immutable in practice: every
// operation below is a pure function returning a fresh matrix.
class SignMatrix {
 public:
  SignMatrix() = default;
  explicit SignMatrix(int n) : SignMatrix(n, n) {}
  SignMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_(word_count(rows, cols), 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  // Order of a square pattern.
  int order() const { return rows_; }

  Sign get(int i, int j) const {
    const std::size_t e = std::size_t(i) * cols_ + j;
    return Sign((words_[e >> 5] >> ((e & 31u) * 2)) & 3u);
  }

  void set(int i, int j, Sign s) {
    const std::size_t e = std::size_t(i) * cols_ + j;
    std::uint64_t& w = words_[e >> 5];
    const unsigned shift = (e & 31u) * 2;
    w = (w & ~(std::uint64_t(3) << shift)) | (std::uint64_t(s) << shift);
  }

  bool is_proper() const;
  bool is_zero() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;
  // Total order used for canonical forms: shape first, then the packed
  // entry words (a fixed serialization order).
  friend bool operator<(const SignMatrix& a, const SignMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.words_ < b.words_;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  static std::size_t word_count(int rows, int cols) {
    return (std::size_t(rows) * cols + 31) / 32;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SignMatrixHash {
  std::size_t operator()(const SignMatrix& m) const;
};

SignMatrix identity_pattern(int n);
SignMatrix all_plus(int rows, int cols);

SignMatrix mat_add(const SignMatrix& a, const SignMatrix& b);
SignMatrix mat_mul(const SignMatrix& a, const SignMatrix& b);

// Left-to-right repeated multiplication, A^e = A^{e-1} * A. Exponentiation
// by squaring is deliberately avoided: ambiguity propagation depends on the
// bracketing, and the entrywise theory is stated for this one.
SignMatrix mat_pow(const SignMatrix& a, int e);

// True iff every nonzero entry of a equals the matching entry of b, i.e.
// b completes some zeros of a. Requires equal shape and proper inputs.
bool subpattern(const SignMatrix& a, const SignMatrix& b);

SignMatrix transposed(const SignMatrix& a);
SignMatrix negated(const SignMatrix& a);
// perm maps old index -> new position; computes P^T A P.
SignMatrix permuted(const SignMatrix& a, std::span<const int> perm);
// d entries must be Plus or Minus; computes D A D.
SignMatrix signature_similar(const SignMatrix& a, std::span<const Sign> d);

SignMatrix submatrix(const SignMatrix& a, std::span<const int> rows,
                     std::span<const int> cols);

struct PotenceReport {
  std::optional<int> k;       // minimal k with A^{k+1} = A, if any
  bool period_entered = false;  // powers entered a cycle that misses A
  int powers_examined = 0;
};

// Cap used when the caller does not supply one: 2*lcm(1..n), at most 2520.
int default_potence_cap(int n);

// Minimal k <= k_max with A^{k+1} = A. Seen powers are memoised, so entry
// into a power cycle that does not contain A ends the search early.
// k_max <= 0 selects default_potence_cap(n). Requires a proper square A.
PotenceReport potence_index(const SignMatrix& a, int k_max = 0);

}  // namespace signpat
