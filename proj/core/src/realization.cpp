#include "signpat/realization.hpp"

#include <functional>

namespace signpat {

namespace {

struct BlockLayout {
  std::vector<int> sizes;
  std::vector<int> offsets;
  // class offsets within each block
  std::vector<std::vector<int>> class_offsets;
};

BlockLayout layout_of(const CyclicForm& form) {
  BlockLayout l;
  l.sizes = form.block_sizes();
  l.offsets = form.block_offsets();
  for (const auto& b : form.blocks) {
    std::vector<int> coff(b.class_sizes.size(), 0);
    for (std::size_t c = 1; c < b.class_sizes.size(); ++c)
      coff[c] = coff[c - 1] + b.class_sizes[c - 1];
    l.class_offsets.push_back(std::move(coff));
  }
  return l;
}

bool block_nonzero(const SignMatrix& a, int r0, int rn, int c0, int cn) {
  for (int i = r0; i < r0 + rn; ++i)
    for (int j = c0; j < c0 + cn; ++j)
      if (is_nonzero(a.get(i, j))) return true;
  return false;
}

}  // namespace

PpoReport is_ppo(const SignMatrix& cnf_pattern, const CyclicForm& form) {
  const BlockLayout l = layout_of(form);
  PpoReport rep;
  const int nb = int(form.blocks.size());
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) {
      if (!form.blocks[i].tag.nonzero() || !form.blocks[j].tag.nonzero()) continue;
      if (block_nonzero(cnf_pattern, l.offsets[i], l.sizes[i], l.offsets[j],
                        l.sizes[j]))
        rep.violations.push_back({i, j});
    }
  rep.is_ppo = rep.violations.empty();
  return rep;
}

AllowsDecision allows_kpotence(const SignMatrix& a) {
  const PotenceReport rep = potence_index(a);
  if (!rep.k)
    throw NotKPotentError("pattern is not sign k-potent; the allow question is posed only for sign k-potent patterns");
  const CnfOutcome out = to_cyclic_normal_form(a);
  if (!out.cnf)
    throw std::logic_error("sign k-potent pattern failed cyclic recognition");
  AllowsDecision d;
  d.k = *rep.k;
  d.ppo = is_ppo(out.cnf->pattern, out.cnf->form);
  d.allows = d.ppo.is_ppo;
  return d;
}

RationalMatrix build_realization(const SignMatrix& a, const CnfResult& cnf) {
  const SignMatrix& t = cnf.pattern;
  const CyclicForm& form = cnf.form;
  const PpoReport ppo = is_ppo(t, form);
  if (!ppo.is_ppo) throw NotPpoError(ppo.violations);

  const BlockLayout l = layout_of(form);
  const int nb = int(form.blocks.size());
  const int n = t.order();

  bool any_nonzero = false;
  std::vector<BlockTag> tags;
  for (const auto& b : form.blocks) {
    any_nonzero |= b.tag.nonzero();
    tags.push_back(b.tag);
  }
  const int k = any_nonzero ? potence_index_cnf(tags) : 1;

  // Rational blocks of the realization over the cyclic normal form.
  std::vector<std::vector<RationalMatrix>> blk(nb, std::vector<RationalMatrix>(nb));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) blk[i][j] = RationalMatrix(l.sizes[i], l.sizes[j]);

  // Diagonal blocks: averaging cycle with the closing sign matched.
  for (int b = 0; b < nb; ++b) {
    const CyclicBlockInfo& info = form.blocks[b];
    if (!info.tag.nonzero()) continue;
    const int g = int(info.class_sizes.size());
    for (int c = 0; c < g; ++c) {
      const int nc = info.class_sizes[c];
      const int nxt = (c + 1) % g;
      Rational v(1, nc);
      if (c == g - 1 && info.alpha == Sign::Minus) v = -v;
      for (int r = 0; r < nc; ++r)
        for (int s = 0; s < info.class_sizes[nxt]; ++s)
          blk[b][b].at(l.class_offsets[b][c] + r, l.class_offsets[b][nxt] + s) = v;
    }
  }

  auto subblock_sign = [&](int bi, int bj, int ci, int cj) -> std::optional<Sign> {
    // Common sign of the (ci,cj) class subblock of pattern block (bi,bj),
    // or nullopt if not constant.
    const int r0 = l.offsets[bi] + l.class_offsets[bi][ci];
    const int c0 = l.offsets[bj] + l.class_offsets[bj][cj];
    const Sign s = t.get(r0, c0);
    for (int r = 0; r < form.blocks[bi].class_sizes[ci]; ++r)
      for (int c = 0; c < form.blocks[bj].class_sizes[cj]; ++c)
        if (t.get(r0 + r, c0 + c) != s) return std::nullopt;
    return s;
  };

  for (int j = 1; j < nb; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      if (!block_nonzero(t, l.offsets[i], l.sizes[i], l.offsets[j], l.sizes[j]))
        continue;
      const bool zi = !form.blocks[i].tag.nonzero();
      const bool zj = !form.blocks[j].tag.nonzero();
      if (!zi && !zj)
        throw std::logic_error("PPO scan admitted a forbidden nonzero block");
      if (!zi || !zj) {
        // Vector block against a zero partner: class-constant entries
        // beta_p / n_p with the sign read off the pattern.
        const int nz = zi ? j : i;
        const int g = int(form.blocks[nz].class_sizes.size());
        for (int c = 0; c < g; ++c) {
          const auto s = zi ? subblock_sign(i, j, 0, c) : subblock_sign(i, j, c, 0);
          if (!s)
            throw std::invalid_argument(
                "block not constant on cyclic classes; pattern is not sign k-potent");
          if (*s == Sign::Zero) continue;
          Rational v(1, form.blocks[nz].class_sizes[c]);
          if (*s == Sign::Minus) v = -v;
          const int cls_off = l.class_offsets[nz][c];
          const int cls_sz = form.blocks[nz].class_sizes[c];
          if (zi)
            for (int q = 0; q < cls_sz; ++q) blk[i][j].at(0, cls_off + q) = v;
          else
            for (int q = 0; q < cls_sz; ++q) blk[i][j].at(cls_off + q, 0) = v;
        }
      } else {
        // Zero against zero: chain sum over already built blocks with all
        // intermediates strictly between.
        RationalMatrix acc(l.sizes[i], l.sizes[j]);
        std::function<void(int, int, const RationalMatrix&)> rec =
            [&](int depth, int prev, const RationalMatrix& prod) {
              if (depth == k) {
                acc = rat_add(acc, rat_mul(prod, blk[prev][j]));
                return;
              }
              for (int u = prev; u < j; ++u)
                rec(depth + 1, u, rat_mul(prod, blk[prev][u]));
            };
        for (int t1 = i + 1; t1 < j; ++t1)
          rec(1, t1, blk[i][t1]);
        blk[i][j] = acc;
      }
    }
  }

  RationalMatrix bt(n);
  for (int bi = 0; bi < nb; ++bi)
    for (int bj = 0; bj < nb; ++bj)
      for (int r = 0; r < l.sizes[bi]; ++r)
        for (int c = 0; c < l.sizes[bj]; ++c)
          bt.at(l.offsets[bi] + r, l.offsets[bj] + c) = blk[bi][bj].at(r, c);

  if (!verify_realization(bt, t, k))
    throw std::logic_error("realization of the cyclic normal form failed verification");

  // Undo signature and permutation so the result realizes the input.
  RationalMatrix b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int pi = form.perm[i], pj = form.perm[j];
      Rational v = bt.at(pi, pj);
      if (form.signature[pi] == Sign::Minus) v = -v;
      if (form.signature[pj] == Sign::Minus) v = -v;
      b.at(i, j) = v;
    }
  if (!verify_realization(b, a, k))
    throw std::logic_error("realization failed verification on the original pattern");
  return b;
}

bool verify_realization(const RationalMatrix& b, const SignMatrix& a, int k) {
  if (b.rows() != a.rows() || b.cols() != a.cols() || !b.square()) return false;
  if (!qualitative_member(b, a)) return false;
  return rat_pow(b, k + 1) == b;
}

std::vector<ForbiddenSumResult> forbidden_sum_check(const SignMatrix& cnf_pattern,
                                                    const CyclicForm& form, int k) {
  const BlockLayout l = layout_of(form);
  const int nb = int(form.blocks.size());

  std::vector<std::vector<SignMatrix>> blk(nb, std::vector<SignMatrix>(nb));
  for (int bi = 0; bi < nb; ++bi)
    for (int bj = 0; bj < nb; ++bj) {
      std::vector<int> rows(l.sizes[bi]), cols(l.sizes[bj]);
      for (int r = 0; r < l.sizes[bi]; ++r) rows[r] = l.offsets[bi] + r;
      for (int c = 0; c < l.sizes[bj]; ++c) cols[c] = l.offsets[bj] + c;
      blk[bi][bj] = submatrix(cnf_pattern, rows, cols);
    }

  std::vector<ForbiddenSumResult> out;
  for (int i = 0; i < nb; ++i)
    for (int j = i + 2; j < nb; ++j) {
      if (!form.blocks[i].tag.nonzero() && !form.blocks[j].tag.nonzero()) continue;
      SignMatrix acc(l.sizes[i], l.sizes[j]);
      std::function<void(int, int, bool, const SignMatrix&)> rec =
          [&](int depth, int prev, bool left, const SignMatrix& prod) {
            if (prod.is_zero()) return;
            if (depth == k) {
              if (left) acc = mat_add(acc, mat_mul(prod, blk[prev][j]));
              return;
            }
            for (int u = prev; u <= j; ++u)
              rec(depth + 1, u, left || (u != i && u != j),
                  mat_mul(prod, blk[prev][u]));
          };
      rec(0, i, false, identity_pattern(l.sizes[i]));
      out.push_back({i, j, acc.is_zero()});
    }
  return out;
}

std::optional<bool> allows_idempotence_upper2x2(const SignMatrix& a) {
  if (!a.square() || a.order() != 2 || !a.is_proper()) return std::nullopt;
  if (a.get(1, 0) != Sign::Zero) return std::nullopt;
  const Sign d0 = a.get(0, 0), d1 = a.get(1, 1);
  if (d0 == Sign::Minus || d1 == Sign::Minus) return false;
  const int pluses = int(d0 == Sign::Plus) + int(d1 == Sign::Plus);
  if (a.get(0, 1) == Sign::Zero) return true;
  return pluses == 1;
}

}  // namespace signpat
