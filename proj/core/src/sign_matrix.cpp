#include "signpat/sign_matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace signpat {

namespace {

void require_same_shape(const SignMatrix& a, const SignMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("sign matrix shape mismatch");
}

}  // namespace

bool SignMatrix::is_proper() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (get(i, j) == Sign::Amb) return false;
  return true;
}

bool SignMatrix::is_zero() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t SignMatrixHash::operator()(const SignMatrix& m) const {
  // FNV-1a over the packed words.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(std::uint64_t(m.rows()) << 32 | std::uint64_t(m.cols()));
  for (std::uint64_t w : m.words()) mix(w);
  return std::size_t(h);
}

SignMatrix identity_pattern(int n) {
  SignMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, Sign::Plus);
  return m;
}

SignMatrix all_plus(int rows, int cols) {
  SignMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, Sign::Plus);
  return m;
}

SignMatrix mat_add(const SignMatrix& a, const SignMatrix& b) {
  require_same_shape(a, b);
  SignMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.set(i, j, sign_add(a.get(i, j), b.get(i, j)));
  return r;
}

SignMatrix mat_mul(const SignMatrix& a, const SignMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("sign matrix product shape mismatch");
  SignMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      Sign acc = Sign::Zero;
      for (int t = 0; t < a.cols(); ++t) {
        acc = sign_add(acc, sign_mul(a.get(i, t), b.get(t, j)));
        if (acc == Sign::Amb) break;  // absorbing
      }
      r.set(i, j, acc);
    }
  }
  return r;
}

SignMatrix mat_pow(const SignMatrix& a, int e) {
  if (!a.square()) throw std::invalid_argument("mat_pow requires a square pattern");
  if (e < 1) throw std::invalid_argument("mat_pow requires e >= 1");
  SignMatrix p = a;
  for (int t = 2; t <= e; ++t) p = mat_mul(p, a);
  return p;
}

bool subpattern(const SignMatrix& a, const SignMatrix& b) {
  require_same_shape(a, b);
  if (!a.is_proper() || !b.is_proper())
    throw std::invalid_argument("subpattern requires proper patterns");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Sign s = a.get(i, j);
      if (s != Sign::Zero && b.get(i, j) != s) return false;
    }
  return true;
}

SignMatrix transposed(const SignMatrix& a) {
  SignMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(j, i, a.get(i, j));
  return r;
}

SignMatrix negated(const SignMatrix& a) {
  SignMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, negated(a.get(i, j)));
  return r;
}

SignMatrix permuted(const SignMatrix& a, std::span<const int> perm) {
  if (!a.square() || int(perm.size()) != a.order())
    throw std::invalid_argument("permutation length mismatch");
  std::vector<char> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= int(perm.size()) || seen[p])
      throw std::invalid_argument("not a permutation");
    seen[p] = 1;
  }
  SignMatrix r(a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) r.set(perm[i], perm[j], a.get(i, j));
  return r;
}

SignMatrix signature_similar(const SignMatrix& a, std::span<const Sign> d) {
  if (!a.square() || int(d.size()) != a.order())
    throw std::invalid_argument("signature length mismatch");
  for (Sign s : d)
    if (s != Sign::Plus && s != Sign::Minus)
      throw std::invalid_argument("signature entries must be nonzero");
  SignMatrix r(a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j)
      r.set(i, j, sign_mul(d[i], sign_mul(a.get(i, j), d[j])));
  return r;
}

SignMatrix submatrix(const SignMatrix& a, std::span<const int> rows,
                     std::span<const int> cols) {
  SignMatrix r(int(rows.size()), int(cols.size()));
  for (int i = 0; i < int(rows.size()); ++i)
    for (int j = 0; j < int(cols.size()); ++j)
      r.set(i, j, a.get(rows[i], cols[j]));
  return r;
}

int default_potence_cap(int n) {
  long long l = 1;
  for (int t = 2; t <= n; ++t) {
    l = std::lcm(l, (long long)t);
    if (l >= 2520) return 2520;
  }
  return int(std::min(2 * l, 2520ll));
}

PotenceReport potence_index(const SignMatrix& a, int k_max) {
  if (!a.square()) throw std::invalid_argument("potence_index requires a square pattern");
  if (!a.is_proper())
    throw std::invalid_argument("potence_index requires a proper pattern");
  if (k_max <= 0) k_max = default_potence_cap(a.order());

  PotenceReport rep;
  std::unordered_map<SignMatrix, int, SignMatrixHash> seen;
  seen.emplace(a, 1);
  SignMatrix p = a;
  for (int e = 2; e <= k_max + 1; ++e) {
    p = mat_mul(p, a);
    ++rep.powers_examined;
    if (p == a) {
      rep.k = e - 1;
      return rep;
    }
    auto [it, inserted] = seen.emplace(p, e);
    (void)it;
    if (!inserted) {
      rep.period_entered = true;
      return rep;
    }
  }
  return rep;
}

}  // namespace signpat
