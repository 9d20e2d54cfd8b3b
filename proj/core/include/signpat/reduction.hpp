#pragma once

#include <span>
#include <vector>

#include "signpat/sign_matrix.hpp"

namespace signpat {

// Contiguous symmetric block partition, given as run lengths covering the
// index range in order.
struct BlockPartition {
  std::vector<int> sizes;
};

struct ReducedMatrix {
  SignMatrix entries;            // m x m coefficient pattern
  std::vector<int> class_sizes;  // n_1..n_m
};

// Coarsest partition into contiguous runs whose every induced block is
// constant. Adjacent indices merge exactly when their full rows and full
// columns coincide, so maximal runs of that relation are the answer in one
// pass. Requires a proper pattern.
BlockPartition coarsest_partition(const SignMatrix& a);

// Coefficient matrix of the coarsest block partition.
ReducedMatrix reduce(const SignMatrix& a);

// Inverse of reduce given class sizes: block (s,t) = entries(s,t) * J.
SignMatrix expand(const SignMatrix& entries, std::span<const int> class_sizes);
inline SignMatrix expand(const ReducedMatrix& r) {
  return expand(r.entries, r.class_sizes);
}

}  // namespace signpat
