#include "signpat/kpotent_builder.hpp"

#include <numeric>
#include <stdexcept>
#include <thread>

#include "signpat/pattern_text.hpp"

namespace signpat {

namespace {

SignMatrix tag_matrix(const BlockTag& t) {
  switch (t.kind) {
    case BlockTag::Kind::P: return p_cycle(t.m);
    case BlockTag::Kind::Q: return q_cycle(t.m);
    default: return SignMatrix(1);
  }
}

int parity(int v) { return v & 1; }

}  // namespace

int KDiagSpec::order() const {
  int n = 0;
  for (const BlockTag& t : blocks) n += t.size();
  return n;
}

int KDiagSpec::zero_runs() const {
  int runs = 0;
  bool in_run = false;
  for (const BlockTag& t : blocks) {
    if (!t.nonzero() && !in_run) ++runs;
    in_run = !t.nonzero();
  }
  return runs;
}

KDiagSpec parse_block_spec(std::string_view s) {
  KDiagSpec spec;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - pos);
    if (tok.empty()) throw ParseError("empty block token");
    if (tok == "0") {
      spec.blocks.push_back({BlockTag::Kind::Zero, 1});
    } else if (tok[0] == 'P' || tok[0] == 'p' || tok[0] == 'Q' || tok[0] == 'q') {
      int m = 0;
      for (std::size_t c = 1; c < tok.size(); ++c) {
        if (tok[c] < '0' || tok[c] > '9')
          throw ParseError("bad block token '" + std::string(tok) + "'");
        m = m * 10 + (tok[c] - '0');
      }
      if (m < 1) throw ParseError("cycle length must be >= 1 in '" + std::string(tok) + "'");
      const bool p = tok[0] == 'P' || tok[0] == 'p';
      spec.blocks.push_back({p ? BlockTag::Kind::P : BlockTag::Kind::Q, m});
    } else {
      throw ParseError("bad block token '" + std::string(tok) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (spec.blocks.empty()) throw ParseError("empty block spec");
  return spec;
}

BlockFamily block_family(const BlockTag& ti, const BlockTag& tj) {
  if (!ti.nonzero() && !tj.nonzero()) return {FamilyKind::ZeroForced, 1, 1, 0};
  if (!ti.nonzero()) return {FamilyKind::RowVector, 1, tj.m, tj.m};
  if (!tj.nonzero()) return {FamilyKind::ColVector, ti.m, 1, ti.m};

  const int g = std::gcd(ti.m, tj.m);
  if (ti.kind == BlockTag::Kind::P && tj.kind == BlockTag::Kind::P)
    return {FamilyKind::Circulant, ti.m, tj.m, g};

  int decisive;  // quantity whose odd parity forces the zero block
  if (ti.kind == BlockTag::Kind::Q && tj.kind == BlockTag::Kind::Q)
    decisive = (ti.m + tj.m) / g;
  else
    decisive = (ti.kind == BlockTag::Kind::P ? ti.m : tj.m) / g;
  if (parity(decisive)) return {FamilyKind::ZeroForced, ti.m, tj.m, 0};
  return {FamilyKind::Anticirculant, ti.m, tj.m, g};
}

long long family_size(const BlockFamily& fam) {
  long long n = 1;
  for (int h = 0; h < fam.coeffs; ++h) n *= 3;
  return n;
}

SignMatrix materialize(const BlockFamily& fam, std::span<const Sign> b) {
  if (int(b.size()) != fam.coeffs)
    throw std::invalid_argument("coefficient vector length mismatch");
  SignMatrix out(fam.rows, fam.cols);
  switch (fam.kind) {
    case FamilyKind::ZeroForced:
      break;
    case FamilyKind::RowVector:
      for (int j = 0; j < fam.cols; ++j) out.set(0, j, b[j]);
      break;
    case FamilyKind::ColVector:
      for (int i = 0; i < fam.rows; ++i) out.set(i, 0, b[i]);
      break;
    case FamilyKind::Circulant: {
      const int g = fam.coeffs;
      for (int i = 0; i < fam.rows; ++i)
        for (int j = 0; j < fam.cols; ++j)
          out.set(i, j, b[((j % g) - (i % g) + g) % g]);
      break;
    }
    case FamilyKind::Anticirculant: {
      // C = sum_h b_h Q_g^h has entry (r,c) = b_h negated when the shift
      // r -> r+h wraps; tiled copies alternate in sign.
      const int g = fam.coeffs;
      for (int i = 0; i < fam.rows; ++i)
        for (int j = 0; j < fam.cols; ++j) {
          const int r = i % g, c = j % g;
          const int h = (c - r + g) % g;
          Sign s = b[h];
          if (r + h >= g) s = negated(s);
          if (parity(i / g + j / g)) s = negated(s);
          out.set(i, j, s);
        }
      break;
    }
  }
  return out;
}

void for_each_member(const BlockFamily& fam,
                     const std::function<void(const SignMatrix&)>& f) {
  std::vector<Sign> b(fam.coeffs, Sign::Zero);
  const Sign order[3] = {Sign::Zero, Sign::Plus, Sign::Minus};
  while (true) {
    f(materialize(fam, b));
    int h = fam.coeffs - 1;
    while (h >= 0 && b[h] == Sign::Minus) b[h--] = Sign::Zero;
    if (h < 0) break;
    b[h] = order[(b[h] == Sign::Zero ? 0 : b[h] == Sign::Plus ? 1 : 2) + 1];
  }
}

bool commute_check(const SignMatrix& aii, const SignMatrix& b,
                   const SignMatrix& ajj) {
  const SignMatrix left = mat_mul(aii, b);
  const SignMatrix right = mat_mul(b, ajj);
  return left.is_proper() && right.is_proper() && left == right;
}

namespace {

struct KGen {
  const KDiagSpec& spec;
  Strategy strategy;

  int nb = 0;
  int k = 0;
  int total_order = 0;
  std::vector<int> offsets;
  // pow[b][e] = e-th power of diagonal block b, pow[b][0] = I.
  std::vector<std::vector<SignMatrix>> pow;
  std::vector<std::vector<SignMatrix>> blk;
  std::vector<std::pair<int, int>> cells;

  KGen(const KDiagSpec& s, Strategy st) : spec(s), strategy(st) {
    nb = int(spec.blocks.size());
    k = spec.potence();
    offsets.assign(nb, 0);
    for (int b = 1; b < nb; ++b)
      offsets[b] = offsets[b - 1] + spec.blocks[b - 1].size();
    total_order = spec.order();
    pow.resize(nb);
    blk.assign(nb, std::vector<SignMatrix>(nb));
    for (int b = 0; b < nb; ++b) {
      const SignMatrix d = tag_matrix(spec.blocks[b]);
      blk[b][b] = d;
      pow[b].push_back(identity_pattern(d.order()));
      for (int e = 1; e <= k; ++e) pow[b].push_back(mat_mul(pow[b][e - 1], d));
    }
    for (int j = 1; j < nb; ++j)
      for (int i = j - 1; i >= 0; --i) {
        cells.push_back({i, j});
        blk[i][j] = SignMatrix(spec.blocks[i].size(), spec.blocks[j].size());
      }
  }

  SignMatrix chain_sum(int i, int j) const {
    // X_ij = sum_{r in (i,j)} A_ir A_rj
    SignMatrix acc(spec.blocks[i].size(), spec.blocks[j].size());
    for (int r = i + 1; r < j; ++r)
      acc = mat_add(acc, mat_mul(blk[i][r], blk[r][j]));
    return acc;
  }

  SignMatrix conjugated_sum(int i, const SignMatrix& x, int j) const {
    // sum_{p=1}^{k} A_ii^{k-p} X A_jj^{p-1}
    SignMatrix acc(x.rows(), x.cols());
    for (int p = 1; p <= k; ++p)
      acc = mat_add(acc, mat_mul(pow[i][k - p], mat_mul(x, pow[j][p - 1])));
    return acc;
  }

  SignMatrix through_diag_sum(int i, int j) const {
    // sum_{r in (i,j)} A_ir A_rr^{k-1} A_rj
    SignMatrix acc(spec.blocks[i].size(), spec.blocks[j].size());
    for (int r = i + 1; r < j; ++r)
      acc = mat_add(acc, mat_mul(blk[i][r], mat_mul(pow[r][k - 1], blk[r][j])));
    return acc;
  }

  bool first_cell_side_ok(int j, const SignMatrix& m) const {
    // Unambiguity of sum_p A_ll^{k-p} (A_{l,j-1} M) A_jj^{p-1}
    //             + A_{l,j-1} A_{j-1,j-1}^{k-1} M  for every l < j-1.
    for (int l = j - 2; l >= 0; --l) {
      const SignMatrix xl = mat_mul(blk[l][j - 1], m);
      SignMatrix expr = conjugated_sum(l, xl, j);
      expr = mat_add(expr, mat_mul(blk[l][j - 1], mat_mul(pow[j - 1][k - 1], m)));
      if (!expr.is_proper()) return false;
    }
    return true;
  }

  bool inner_cell_side_ok(int i, int j, const SignMatrix& m) const {
    // With X^l = sum_{r=i}^{j-1} A_lr A_rj (the r = i term uses the
    // candidate), unambiguity of
    //   sum_p A_ll^{k-p} X^l A_jj^{p-1} + sum_{r=i}^{j-1} A_lr A_rr^{k-1} A_rj.
    for (int l = i - 1; l >= 0; --l) {
      SignMatrix xl = mat_mul(blk[l][i], m);
      for (int r = i + 1; r < j; ++r)
        xl = mat_add(xl, mat_mul(blk[l][r], blk[r][j]));
      SignMatrix expr = conjugated_sum(l, xl, j);
      expr = mat_add(expr, mat_mul(blk[l][i], mat_mul(pow[i][k - 1], m)));
      for (int r = i + 1; r < j; ++r)
        expr = mat_add(expr, mat_mul(blk[l][r], mat_mul(pow[r][k - 1], blk[r][j])));
      if (!expr.is_proper()) return false;
    }
    return true;
  }

  // Admissible values for a cell given the current prefix. Forced steps
  // yield one candidate; look-ahead or subpattern conflicts may yield none.
  std::vector<SignMatrix> options(std::size_t at) const {
    const auto [i, j] = cells[at];
    const bool zi = !spec.blocks[i].nonzero();
    const bool zj = !spec.blocks[j].nonzero();
    std::vector<SignMatrix> out;

    if (i == j - 1) {
      const BlockFamily fam = block_family(spec.blocks[i], spec.blocks[j]);
      for_each_member(fam, [&](const SignMatrix& m) {
        if (first_cell_side_ok(j, m)) out.push_back(m);
      });
      return out;
    }

    if (zi && zj) {
      SignMatrix forced = through_diag_sum(i, j);
      if (forced.is_proper()) out.push_back(std::move(forced));
      return out;
    }

    const SignMatrix x = chain_sum(i, j);
    if (!x.is_proper()) return out;

    const SignMatrix required = conjugated_sum(i, x, j);
    if (!required.is_proper()) return out;

    bool entrywise_nonzero = true;
    for (int r = 0; r < x.rows() && entrywise_nonzero; ++r)
      for (int c = 0; c < x.cols(); ++c)
        if (x.get(r, c) == Sign::Zero) {
          entrywise_nonzero = false;
          break;
        }

    if (entrywise_nonzero) {
      if (strategy == Strategy::Filtered && !zi && !zj &&
          !commute_check(blk[i][i], required, blk[j][j]))
        return out;
      out.push_back(required);
      return out;
    }

    const BlockFamily fam = block_family(spec.blocks[i], spec.blocks[j]);
    for_each_member(fam, [&](const SignMatrix& m) {
      if (!subpattern(required, m)) return;
      if (strategy == Strategy::SinglePass && !inner_cell_side_ok(i, j, m)) return;
      out.push_back(m);
    });
    return out;
  }

  SignMatrix assemble() const {
    SignMatrix a(total_order);
    for (int bi = 0; bi < nb; ++bi)
      for (int bj = bi; bj < nb; ++bj)
        for (int r = 0; r < blk[bi][bj].rows(); ++r)
          for (int c = 0; c < blk[bi][bj].cols(); ++c)
            a.set(offsets[bi] + r, offsets[bj] + c, blk[bi][bj].get(r, c));
    return a;
  }

  void dfs(std::size_t at, std::vector<int>& path_counts, GenStats& stats,
           const KPatternSink& emit) {
    if (at == cells.size()) {
      ++stats.branches;
      for (int c : path_counts)
        if (c != 1) stats.cells_assigned_once = false;
      SignMatrix a = assemble();
      if (strategy == Strategy::Filtered && mat_pow(a, k + 1) != a) {
        ++stats.filtered_out;
        return;
      }
      ++stats.emitted;
      emit(a);
      return;
    }
    const auto opts = options(at);
    if (opts.empty()) {
      ++stats.dead_ends;
      return;
    }
    const auto [i, j] = cells[at];
    for (const SignMatrix& m : opts) {
      blk[i][j] = m;
      ++path_counts[at];
      dfs(at + 1, path_counts, stats, emit);
      --path_counts[at];
      blk[i][j] = SignMatrix(spec.blocks[i].size(), spec.blocks[j].size());
    }
  }
};

}  // namespace

void generate_kpotent(const KDiagSpec& spec, Strategy strategy,
                      const KPatternSink& emit, GenStats* stats, int jobs) {
  if (spec.blocks.empty()) throw std::invalid_argument("empty block spec");
  (void)spec.potence();  // rejects all-zero specs
  if (strategy == Strategy::SinglePass && spec.zero_runs() >= 2)
    throw std::invalid_argument(
        "single-pass construction needs at most one run of zero diagonal "
        "blocks; use the filtered strategy for this spec");

  GenStats local;
  GenStats& st = stats ? *stats : local;

  if (spec.blocks.size() < 2) {
    KGen gen(spec, strategy);
    std::vector<int> counts;
    gen.dfs(0, counts, st, emit);
    return;
  }

  if (jobs <= 1) {
    KGen gen(spec, strategy);
    std::vector<int> counts(gen.cells.size(), 0);
    gen.dfs(0, counts, st, emit);
    return;
  }

  // Partition the subtrees under the first cell across workers; buffers
  // are flushed in candidate order, so output is independent of the job
  // count.
  std::vector<SignMatrix> firsts;
  {
    KGen probe(spec, strategy);
    firsts = probe.options(0);
    if (firsts.empty()) {
      ++st.dead_ends;
      return;
    }
  }

  std::vector<std::vector<SignMatrix>> buffers(firsts.size());
  std::vector<GenStats> parts(firsts.size());
  std::vector<std::thread> threads;
  const int workers = std::max(1, std::min<int>(jobs, int(firsts.size())));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t t = w; t < firsts.size(); t += std::size_t(workers)) {
        KPatternSink sink = [&buffers, t](const SignMatrix& m) {
          buffers[t].push_back(m);
        };
        KGen gen(spec, strategy);
        const auto [i, j] = gen.cells[0];
        gen.blk[i][j] = firsts[t];
        std::vector<int> counts(gen.cells.size(), 0);
        counts[0] = 1;
        gen.dfs(1, counts, parts[t], sink);
      }
    });
  }
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < firsts.size(); ++t) {
    st.branches += parts[t].branches;
    st.emitted += parts[t].emitted;
    st.dead_ends += parts[t].dead_ends;
    st.filtered_out += parts[t].filtered_out;
    st.cells_assigned_once = st.cells_assigned_once && parts[t].cells_assigned_once;
    for (const SignMatrix& m : buffers[t]) emit(m);
  }
}

void sample_kpotent(const KDiagSpec& spec, Strategy strategy, long long count,
                    std::uint64_t seed, const KPatternSink& emit) {
  if (strategy == Strategy::SinglePass && spec.zero_runs() >= 2)
    throw std::invalid_argument(
        "single-pass construction needs at most one run of zero diagonal "
        "blocks; use the filtered strategy for this spec");
  (void)spec.potence();
  std::uint64_t state = seed;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state;
  };
  KGen gen(spec, strategy);
  for (long long s = 0; s < count; ++s) {
    long long attempts = 0;
    while (true) {
      if (++attempts > 100000)
        throw std::runtime_error("sampling failed to complete a branch");
      bool dead = false;
      for (std::size_t at = 0; at < gen.cells.size(); ++at) {
        const auto opts = gen.options(at);
        if (opts.empty()) {
          dead = true;
          break;
        }
        const auto [i, j] = gen.cells[at];
        gen.blk[i][j] = opts[(next() >> 33) % opts.size()];
      }
      if (!dead) {
        SignMatrix a = gen.assemble();
        if (strategy != Strategy::Filtered || mat_pow(a, gen.k + 1) == a) {
          emit(a);
          break;
        }
      }
    }
  }
}

KPotenceCondition condition_of_kpotence(const SignMatrix& a,
                                        std::span<const int> block_sizes, int k) {
  if (!a.square()) throw std::invalid_argument("square pattern required");
  int n = 0;
  for (int s : block_sizes) n += s;
  if (n != a.order())
    throw std::invalid_argument("block partition does not cover the pattern");
  const int nb = int(block_sizes.size());
  std::vector<int> off(nb, 0);
  for (int b = 1; b < nb; ++b) off[b] = off[b - 1] + block_sizes[b - 1];

  std::vector<std::vector<SignMatrix>> blk(nb, std::vector<SignMatrix>(nb));
  for (int bi = 0; bi < nb; ++bi)
    for (int bj = 0; bj < nb; ++bj) {
      std::vector<int> rows(block_sizes[bi]), cols(block_sizes[bj]);
      for (int r = 0; r < block_sizes[bi]; ++r) rows[r] = off[bi] + r;
      for (int c = 0; c < block_sizes[bj]; ++c) cols[c] = off[bj] + c;
      blk[bi][bj] = submatrix(a, rows, cols);
    }

  KPotenceCondition out;
  for (int i = 0; i < nb; ++i)
    for (int j = i; j < nb; ++j) {
      SignMatrix acc(block_sizes[i], block_sizes[j]);
      // Chains i <= i_1 <= ... <= i_k <= j, product of k+1 block factors.
      std::function<void(int, int, const SignMatrix&)> rec =
          [&](int depth, int prev, const SignMatrix& prod) {
            if (prod.is_zero()) return;
            if (depth == k) {
              acc = mat_add(acc, mat_mul(prod, blk[prev][j]));
              return;
            }
            for (int t = prev; t <= j; ++t)
              rec(depth + 1, t, mat_mul(prod, blk[prev][t]));
          };
      rec(0, i, identity_pattern(block_sizes[i]));
      if (!acc.is_proper() || acc != blk[i][j]) {
        out.all = false;
        out.failures.push_back({i, j});
      }
    }
  return out;
}

}  // namespace signpat
