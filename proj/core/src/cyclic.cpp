#include "signpat/cyclic.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

namespace signpat {

SignMatrix p_cycle(int m) {
  if (m < 1) throw std::invalid_argument("p_cycle requires m >= 1");
  SignMatrix a(m);
  for (int i = 0; i + 1 < m; ++i) a.set(i, i + 1, Sign::Plus);
  a.set(m - 1, 0, Sign::Plus);
  return a;
}

SignMatrix q_cycle(int m) {
  SignMatrix a = p_cycle(m);
  a.set(m - 1, 0, Sign::Minus);
  return a;
}

std::string to_string(const BlockTag& t) {
  switch (t.kind) {
    case BlockTag::Kind::P: return "P" + std::to_string(t.m);
    case BlockTag::Kind::Q: return "Q" + std::to_string(t.m);
    default: return "0";
  }
}

int block_potence(const BlockTag& t) {
  switch (t.kind) {
    case BlockTag::Kind::P: return t.m;
    case BlockTag::Kind::Q: return 2 * t.m;
    default: return 1;
  }
}

int potence_index_cnf(std::span<const BlockTag> tags) {
  bool any_nonzero = false;
  long long k = 1;
  for (const BlockTag& t : tags) {
    if (t.nonzero()) any_nonzero = true;
    k = std::lcm(k, (long long)block_potence(t));
  }
  if (tags.empty() || !any_nonzero)
    throw std::invalid_argument("potence index needs at least one nonzero block");
  return int(k);
}

std::optional<CyclicStructure> cyclic_structure(const SignMatrix& a) {
  if (!is_irreducible(a))
    throw std::invalid_argument("cyclic_structure requires an irreducible pattern");
  if (!a.is_proper())
    throw std::invalid_argument("cyclic_structure requires a proper pattern");
  const int n = a.order();

  // BFS from index 0; record depths and the tree.
  std::vector<int> depth(n, -1), parent(n, -1);
  std::vector<int> bfs_order;
  std::queue<int> q;
  depth[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    bfs_order.push_back(u);
    for (int v = 0; v < n; ++v) {
      if (!is_nonzero(a.get(u, v)) || depth[v] != -1) continue;
      depth[v] = depth[u] + 1;
      parent[v] = u;
      q.push(v);
    }
  }

  // Period: gcd of the depth defects over all edges.
  int g = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (is_nonzero(a.get(u, v))) g = std::gcd(g, depth[u] + 1 - depth[v]);
  if (g <= 0) throw std::logic_error("strongly connected pattern without a period");

  std::vector<int> cls(n);
  for (int v = 0; v < n; ++v) cls[v] = depth[v] % g;

  // The target form has a full J between consecutive classes, a constant
  // closing block, and nothing anywhere else.
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const bool band = cls[v] == (cls[u] + 1) % g;
      if (band != is_nonzero(a.get(u, v))) return std::nullopt;
    }

  // Signature with the closing sign alpha carried symbolically:
  // d_v = eps_v * alpha^gamma_v.
  std::vector<Sign> eps(n, Sign::Plus);
  std::vector<int> gamma(n, 0);
  for (int v : bfs_order) {
    if (parent[v] < 0) continue;
    const int u = parent[v];
    eps[v] = sign_mul(eps[u], a.get(u, v));
    gamma[v] = gamma[u] ^ (cls[u] == g - 1 ? 1 : 0);
  }
  Sign alpha = Sign::Zero;  // unset
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!is_nonzero(a.get(u, v))) continue;
      const Sign e = sign_mul(eps[u], sign_mul(a.get(u, v), eps[v]));
      const int t = gamma[u] ^ gamma[v] ^ (cls[u] == g - 1 ? 1 : 0);
      if (t == 0) {
        if (e != Sign::Plus) return std::nullopt;
      } else if (alpha == Sign::Zero) {
        alpha = e;
      } else if (alpha != e) {
        return std::nullopt;
      }
    }
  if (alpha == Sign::Zero)
    throw std::logic_error("closing sign undetermined for a consistent pattern");

  CyclicStructure out;
  out.perm.assign(n, -1);
  out.signature.assign(n, Sign::Plus);
  out.block.class_sizes.assign(g, 0);
  int pos = 0;
  for (int c = 0; c < g; ++c)
    for (int v = 0; v < n; ++v)
      if (cls[v] == c) {
        out.perm[v] = pos;
        out.signature[pos] =
            gamma[v] ? sign_mul(eps[v], alpha) : eps[v];
        ++pos;
        ++out.block.class_sizes[c];
      }
  out.block.alpha = alpha;
  out.block.tag = {alpha == Sign::Plus ? BlockTag::Kind::P : BlockTag::Kind::Q, g};
  return out;
}

std::vector<int> CyclicForm::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(b.size());
  return sizes;
}

std::vector<int> CyclicForm::block_offsets() const {
  std::vector<int> off(blocks.size(), 0);
  for (std::size_t b = 1; b < blocks.size(); ++b)
    off[b] = off[b - 1] + blocks[b - 1].size();
  return off;
}

CnfOutcome to_cyclic_normal_form(const SignMatrix& a) {
  if (!a.is_proper())
    throw std::invalid_argument("cyclic normal form requires a proper pattern");
  const FrobeniusForm fnf = frobenius_normal_form(a);
  const SignMatrix m = apply_form(a, fnf);
  const int nblocks = int(fnf.block_sizes.size());

  CnfOutcome out;
  CyclicForm form;
  form.perm.assign(a.order(), -1);
  form.signature.assign(a.order(), Sign::Plus);

  std::vector<int> offsets(nblocks, 0);
  for (int b = 1; b < nblocks; ++b)
    offsets[b] = offsets[b - 1] + fnf.block_sizes[b - 1];

  std::vector<std::vector<int>> inner_perm(nblocks);
  for (int b = 0; b < nblocks; ++b) {
    const int off = offsets[b];
    const int sz = fnf.block_sizes[b];
    if (fnf.kinds[b] == DiagBlockKind::ZeroOne) {
      form.blocks.push_back({BlockTag{BlockTag::Kind::Zero, 1}, {1}, Sign::Zero});
      inner_perm[b] = {0};
      continue;
    }
    std::vector<int> idx(sz);
    for (int t = 0; t < sz; ++t) idx[t] = off + t;
    const SignMatrix diag = submatrix(m, idx, idx);
    auto rec = cyclic_structure(diag);
    if (!rec) {
      out.failed_block = b;
      return out;
    }
    form.blocks.push_back(rec->block);
    inner_perm[b] = rec->perm;
    for (int p = 0; p < sz; ++p) form.signature[off + p] = rec->signature[p];
  }

  for (int v = 0; v < a.order(); ++v) {
    const int p1 = fnf.perm[v];
    int b = 0;
    while (b + 1 < nblocks && offsets[b + 1] <= p1) ++b;
    form.perm[v] = offsets[b] + inner_perm[b][p1 - offsets[b]];
  }

  SignMatrix pattern = signature_similar(permuted(a, form.perm), form.signature);
  out.cnf = CnfResult{std::move(form), std::move(pattern)};
  return out;
}

}  // namespace signpat
