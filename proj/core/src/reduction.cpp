#include "signpat/reduction.hpp"

#include <stdexcept>

namespace signpat {

namespace {

void require_proper_square(const SignMatrix& a, const char* who) {
  if (!a.square()) throw std::invalid_argument(std::string(who) + " requires a square pattern");
  if (!a.is_proper())
    throw std::invalid_argument(std::string(who) + " rejects generalized patterns");
}

bool rows_equal(const SignMatrix& a, int p, int q) {
  for (int t = 0; t < a.order(); ++t)
    if (a.get(p, t) != a.get(q, t)) return false;
  return true;
}

bool cols_equal(const SignMatrix& a, int p, int q) {
  for (int t = 0; t < a.order(); ++t)
    if (a.get(t, p) != a.get(t, q)) return false;
  return true;
}

}  // namespace

BlockPartition coarsest_partition(const SignMatrix& a) {
  require_proper_square(a, "coarsest_partition");
  BlockPartition part;
  const int n = a.order();
  if (n == 0) return part;
  int run = 1;
  for (int p = 0; p + 1 < n; ++p) {
    if (rows_equal(a, p, p + 1) && cols_equal(a, p, p + 1)) {
      ++run;
    } else {
      part.sizes.push_back(run);
      run = 1;
    }
  }
  part.sizes.push_back(run);
  return part;
}

ReducedMatrix reduce(const SignMatrix& a) {
  const BlockPartition part = coarsest_partition(a);
  const int m = int(part.sizes.size());
  ReducedMatrix r;
  r.class_sizes = part.sizes;
  r.entries = SignMatrix(m);
  std::vector<int> start(m, 0);
  for (int s = 1; s < m; ++s) start[s] = start[s - 1] + part.sizes[s - 1];
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) r.entries.set(s, t, a.get(start[s], start[t]));
  return r;
}

SignMatrix expand(const SignMatrix& entries, std::span<const int> class_sizes) {
  if (!entries.square() || int(class_sizes.size()) != entries.order())
    throw std::invalid_argument("expand: class size list does not match entries");
  int n = 0;
  for (int s : class_sizes) {
    if (s <= 0) throw std::invalid_argument("expand: class sizes must be positive");
    n += s;
  }
  SignMatrix out(n);
  int row0 = 0;
  for (int s = 0; s < entries.order(); ++s) {
    int col0 = 0;
    for (int t = 0; t < entries.order(); ++t) {
      const Sign v = entries.get(s, t);
      for (int i = 0; i < class_sizes[s]; ++i)
        for (int j = 0; j < class_sizes[t]; ++j) out.set(row0 + i, col0 + j, v);
      col0 += class_sizes[t];
    }
    row0 += class_sizes[s];
  }
  return out;
}

}  // namespace signpat
