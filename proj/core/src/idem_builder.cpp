#include "signpat/idem_builder.hpp"

#include <stdexcept>
#include <thread>

#include "signpat/pattern_text.hpp"

namespace signpat {

namespace {

Sign cell_sum(const SignMatrix& m, int l, int i, int j) {
  // sum_{p=i+1}^{j-1} a_lp a_pj
  Sign acc = Sign::Zero;
  for (int p = i + 1; p < j; ++p)
    acc = sign_add(acc, sign_mul(m.get(l, p), m.get(p, j)));
  return acc;
}

struct Cell {
  int i, j;
};

std::vector<Cell> column_major_cells(int n) {
  std::vector<Cell> cells;
  for (int j = 1; j < n; ++j)
    for (int i = j - 1; i >= 0; --i) cells.push_back({i, j});
  return cells;
}

SignMatrix diag_matrix(const DiagSpec& spec) {
  SignMatrix m(int(spec.diag.size()));
  for (int i = 0; i < m.order(); ++i) m.set(i, i, spec.diag[i]);
  return m;
}

struct DfsContext {
  const DiagSpec& spec;
  const std::vector<Cell>& cells;
  const PatternSink& emit;
  GenStats& stats;
  std::vector<int> path_counts;

  void run(SignMatrix& m, std::size_t at) {
    if (at == cells.size()) {
      ++stats.branches;
      for (int c : path_counts)
        if (c != 1) stats.cells_assigned_once = false;
      ++stats.emitted;
      emit(m);
      return;
    }
    const auto [i, j] = cells[at];
    const ChoiceSet cs = free_choices(m, i, j, spec);
    if (cs.empty()) {
      ++stats.dead_ends;
      return;
    }
    cs.for_each([&](Sign s) {
      m.set(i, j, s);
      ++path_counts[at];
      run(m, at + 1);
      --path_counts[at];
      m.set(i, j, Sign::Zero);
    });
  }
};

}  // namespace

DiagSpec parse_diag_spec(std::string_view s) {
  DiagSpec spec;
  for (char c : s) {
    if (c == '0')
      spec.diag.push_back(Sign::Zero);
    else if (c == '+')
      spec.diag.push_back(Sign::Plus);
    else
      throw ParseError(std::string("diagonal spec must use only '0' and '+', got '") +
                       c + "'");
  }
  if (spec.diag.empty()) throw ParseError("empty diagonal spec");
  return spec;
}

ChoiceSet free_choices(const SignMatrix& partial, int i, int j,
                       const DiagSpec& spec) {
  const int n = int(spec.diag.size());
  if (i < 0 || j >= n || i >= j)
    throw std::invalid_argument("free_choices requires 0 <= i < j < n");

  ChoiceSet all{true, true, true};
  if (i == j - 1) {
    if (spec.diag[i] == Sign::Zero && spec.diag[j] == Sign::Zero)
      return {true, false, false};
    return all;
  }

  const Sign x = cell_sum(partial, i, i, j);
  if (x == Sign::Amb)
    throw std::logic_error("ambiguous X sum on a prefix not producible by the algorithm");
  if (x != Sign::Zero) {
    ChoiceSet only;
    only.zero = false;
    only.plus = x == Sign::Plus;
    only.minus = x == Sign::Minus;
    return only;
  }
  if (spec.diag[i] == Sign::Zero && spec.diag[j] == Sign::Zero)
    return {true, false, false};

  bool plus_ok = true, minus_ok = true;
  for (int l = i - 1; l >= 0; --l) {
    const Sign a_li = partial.get(l, i);
    if (a_li == Sign::Zero) continue;
    const Sign xl = cell_sum(partial, l, i, j);
    if (xl == Sign::Amb)
      throw std::logic_error("ambiguous X^l sum on a prefix not producible by the algorithm");
    if (xl == Sign::Zero) continue;
    // a_li * s = xl has the unique nonzero solution s = a_li * xl.
    const Sign s = sign_mul(a_li, xl);
    plus_ok = plus_ok && s == Sign::Plus;
    minus_ok = minus_ok && s == Sign::Minus;
  }
  return {true, plus_ok, minus_ok};
}

void generate_idempotent(const DiagSpec& spec, const PatternSink& emit,
                         GenStats* stats, int jobs) {
  GenStats local;
  GenStats& st = stats ? *stats : local;
  const auto cells = column_major_cells(int(spec.diag.size()));

  if (cells.empty()) {
    SignMatrix m = diag_matrix(spec);
    ++st.branches;
    ++st.emitted;
    emit(m);
    return;
  }

  if (jobs <= 1 || cells.size() < 2) {
    SignMatrix m = diag_matrix(spec);
    DfsContext ctx{spec, cells, emit, st, std::vector<int>(cells.size(), 0)};
    ctx.run(m, 0);
    return;
  }

  // Split on the first cell; workers own disjoint subtrees and their
  // buffers are flushed in choice order, so output is independent of the
  // job count.
  SignMatrix root = diag_matrix(spec);
  const ChoiceSet first = free_choices(root, cells[0].i, cells[0].j, spec);
  std::vector<Sign> firsts;
  first.for_each([&](Sign s) { firsts.push_back(s); });

  std::vector<std::vector<SignMatrix>> buffers(firsts.size());
  std::vector<GenStats> stats_parts(firsts.size());
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < firsts.size(); ++t) {
    threads.emplace_back([&, t] {
      SignMatrix m = root;
      m.set(cells[0].i, cells[0].j, firsts[t]);
      PatternSink sink = [&](const SignMatrix& g) { buffers[t].push_back(g); };
      DfsContext ctx{spec, cells, sink, stats_parts[t],
                     std::vector<int>(cells.size(), 0)};
      ctx.path_counts[0] = 1;
      ctx.run(m, 1);
    });
  }
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < firsts.size(); ++t) {
    st.branches += stats_parts[t].branches;
    st.emitted += stats_parts[t].emitted;
    st.dead_ends += stats_parts[t].dead_ends;
    st.cells_assigned_once =
        st.cells_assigned_once && stats_parts[t].cells_assigned_once;
    for (const SignMatrix& m : buffers[t]) emit(m);
  }
}

void sample_idempotent(const DiagSpec& spec, long long count,
                       std::uint64_t seed, const PatternSink& emit) {
  const auto cells = column_major_cells(int(spec.diag.size()));
  std::uint64_t state = seed;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state;
  };
  for (long long s = 0; s < count; ++s) {
    SignMatrix m = diag_matrix(spec);
    for (const auto& [i, j] : cells) {
      const ChoiceSet cs = free_choices(m, i, j, spec);
      std::vector<Sign> opts;
      cs.for_each([&](Sign v) { opts.push_back(v); });
      if (opts.empty())
        throw std::logic_error("empty choice set on an algorithm prefix");
      m.set(i, j, opts[(next() >> 33) % opts.size()]);
    }
    emit(m);
  }
}

}  // namespace signpat
