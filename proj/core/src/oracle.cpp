#include "signpat/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

namespace signpat {

namespace {

struct Cell {
  int i, j;
};

std::vector<Cell> free_cells(const EnumSpec& spec) {
  std::vector<Cell> cells;
  if (spec.shape == EnumSpec::Shape::Full) {
    for (int i = 0; i < spec.n; ++i)
      for (int j = 0; j < spec.n; ++j) cells.push_back({i, j});
  } else {
    for (int j = 1; j < spec.n; ++j)
      for (int i = j - 1; i >= 0; --i) cells.push_back({i, j});
  }
  return cells;
}

constexpr Sign kValueOrder[3] = {Sign::Zero, Sign::Plus, Sign::Minus};

bool masked_amb(const SignMatrix& power, const SignMatrix& a) {
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j)
      if (power.get(i, j) == Sign::Amb && is_nonzero(a.get(i, j))) return true;
  return false;
}

// Minimal k <= k_max with A^{k+1} = A, with the optional masked-Amb early
// exit used by the enumeration loops.
std::optional<int> potence_k(const SignMatrix& a, int k_max, bool prune) {
  std::unordered_map<SignMatrix, int, SignMatrixHash> seen;
  seen.emplace(a, 1);
  SignMatrix p = a;
  for (int e = 2; e <= k_max + 1; ++e) {
    p = mat_mul(p, a);
    if (p == a) return e - 1;
    if (prune && masked_amb(p, a)) return std::nullopt;
    if (!seen.emplace(p, e).second) return std::nullopt;
  }
  return std::nullopt;
}

bool predicate_holds(const EnumSpec& spec, const SignMatrix& a) {
  switch (spec.predicate) {
    case EnumSpec::Predicate::Idempotent:
      return mat_mul(a, a) == a;
    case EnumSpec::Predicate::KPotent: {
      const auto k = potence_k(a, spec.k, spec.prune_masked_amb);
      return k && *k == spec.k;
    }
    case EnumSpec::Predicate::PotentAny:
      return potence_k(a, default_potence_cap(spec.n), spec.prune_masked_amb)
          .has_value();
  }
  return false;
}

void validate(const EnumSpec& spec, const std::vector<Cell>& cells) {
  if (spec.n < 1) throw std::invalid_argument("enumeration order must be positive");
  const int cap =
      spec.shape == EnumSpec::Shape::Full ? spec.cap_full : spec.cap_upper;
  if (spec.n > cap) {
    long long count = 1;
    for (std::size_t c = 0; c < cells.size(); ++c) count *= 3;
    throw std::invalid_argument(
        "enumeration order " + std::to_string(spec.n) + " exceeds the cap " +
        std::to_string(cap) + " (" + std::to_string(count) +
        " candidates would be required)");
  }
  if (spec.shape == EnumSpec::Shape::UpperTriangular &&
      int(spec.diag.size()) != spec.n)
    throw std::invalid_argument("diagonal length must match the order");
}

SignMatrix seed_matrix(const EnumSpec& spec) {
  SignMatrix m(spec.n);
  if (spec.shape == EnumSpec::Shape::UpperTriangular)
    for (int i = 0; i < spec.n; ++i) m.set(i, i, spec.diag[i]);
  return m;
}

// Scans assignments with lex index in [lo, hi); first cell most significant.
template <typename F>
void scan_range(const EnumSpec& spec, const std::vector<Cell>& cells,
                long long lo, long long hi, F&& on_match) {
  SignMatrix m = seed_matrix(spec);
  const int nc = int(cells.size());
  std::vector<int> digits(nc, 0);
  long long rest = lo;
  for (int c = nc - 1; c >= 0; --c) {
    digits[c] = int(rest % 3);
    rest /= 3;
  }
  for (int c = 0; c < nc; ++c)
    m.set(cells[c].i, cells[c].j, kValueOrder[digits[c]]);

  for (long long idx = lo; idx < hi; ++idx) {
    if (predicate_holds(spec, m)) on_match(m);
    // odometer increment, rightmost cell fastest
    for (int c = nc - 1; c >= 0; --c) {
      if (digits[c] < 2) {
        ++digits[c];
        m.set(cells[c].i, cells[c].j, kValueOrder[digits[c]]);
        break;
      }
      digits[c] = 0;
      m.set(cells[c].i, cells[c].j, kValueOrder[0]);
    }
  }
}

template <typename PerWorker, typename Merge>
void run_partitioned(const std::vector<Cell>& cells, int jobs,
                     PerWorker&& per_worker, Merge&& merge) {
  long long total = 1;
  for (std::size_t c = 0; c < cells.size(); ++c) total *= 3;
  const int workers = std::max(1, int(std::min<long long>(jobs, total)));
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    const long long lo = total * w / workers;
    const long long hi = total * (w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] { per_worker(w, lo, hi); });
  }
  for (auto& t : threads) t.join();
  for (int w = 0; w < workers; ++w) merge(w);
}

}  // namespace

void enumerate(const EnumSpec& spec,
               const std::function<void(const SignMatrix&)>& emit, int jobs) {
  const auto cells = free_cells(spec);
  validate(spec, cells);
  if (jobs <= 1) {
    long long total = 1;
    for (std::size_t c = 0; c < cells.size(); ++c) total *= 3;
    scan_range(spec, cells, 0, total, emit);
    return;
  }
  std::vector<std::vector<SignMatrix>> buffers;
  buffers.resize(std::max(1, jobs));
  run_partitioned(
      cells, jobs,
      [&](int w, long long lo, long long hi) {
        scan_range(spec, cells, lo, hi,
                   [&](const SignMatrix& m) { buffers[w].push_back(m); });
      },
      [&](int w) {
        for (const SignMatrix& m : buffers[w]) emit(m);
      });
}

SignMatrix canonical_form(const SignMatrix& a) {
  if (!a.square()) throw std::invalid_argument("canonical_form requires a square pattern");
  const int n = a.order();
  if (n > 8) throw std::invalid_argument("canonical_form capped at order 8");

  std::optional<SignMatrix> best;
  const SignMatrix t = transposed(a);
  const SignMatrix bases[4] = {a, t, negated(a), negated(t)};
  std::vector<int> perm(n);
  std::vector<Sign> d(n);
  for (const SignMatrix& base : bases) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const SignMatrix mp = permuted(base, perm);
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        for (int i = 0; i < n; ++i)
          d[i] = (mask >> i) & 1u ? Sign::Minus : Sign::Plus;
        SignMatrix ms = signature_similar(mp, d);
        if (!best || ms < *best) best = std::move(ms);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return *best;
}

Census census(const EnumSpec& spec, int jobs) {
  const auto cells = free_cells(spec);
  validate(spec, cells);
  const int workers = std::max(1, jobs);
  std::vector<long long> counts(workers, 0);
  std::vector<std::set<SignMatrix>> canon(workers);
  Census out;
  run_partitioned(
      cells, workers,
      [&](int w, long long lo, long long hi) {
        scan_range(spec, cells, lo, hi, [&](const SignMatrix& m) {
          ++counts[w];
          canon[w].insert(canonical_form(m));
        });
      },
      [&](int w) {
        out.total += counts[w];
        if (w > 0) canon[0].merge(canon[w]);
      });
  out.classes = static_cast<long long>(canon[0].size());
  return out;
}

}  // namespace signpat
