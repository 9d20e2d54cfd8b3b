#include "signpat/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace signpat {

namespace {

// Tarjan. Components are emitted in reverse topological order; we do not
// rely on that order, the condensation is re-sorted below.
std::vector<std::vector<int>> strongly_connected_components(const SignMatrix& a) {
  const int n = a.order();
  std::vector<int> number(n, -1), low(n, 0), stack_pos(n, -1);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  std::function<void(int)> visit = [&](int v) {
    number[v] = low[v] = counter++;
    stack_pos[v] = int(stack.size());
    stack.push_back(v);
    for (int w = 0; w < n; ++w) {
      if (!is_nonzero(a.get(v, w))) continue;
      if (number[w] == -1) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (stack_pos[w] != -1) {
        low[v] = std::min(low[v], number[w]);
      }
    }
    if (low[v] == number[v]) {
      std::vector<int> comp(stack.begin() + stack_pos[v], stack.end());
      for (int w : comp) stack_pos[w] = -1;
      stack.resize(stack.size() - comp.size());
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };

  for (int v = 0; v < n; ++v)
    if (number[v] == -1) visit(v);
  return comps;
}

}  // namespace

bool is_irreducible(const SignMatrix& a) {
  if (!a.square()) throw std::invalid_argument("is_irreducible requires a square pattern");
  const int n = a.order();
  if (n == 0) return false;
  if (n == 1) return is_nonzero(a.get(0, 0));
  return strongly_connected_components(a).size() == 1;
}

FrobeniusForm frobenius_normal_form(const SignMatrix& a) {
  if (!a.square())
    throw std::invalid_argument("frobenius_normal_form requires a square pattern");
  const int n = a.order();
  auto comps = strongly_connected_components(a);
  const int m = int(comps.size());

  std::vector<int> comp_of(n, -1);
  for (int c = 0; c < m; ++c)
    for (int v : comps[c]) comp_of[v] = c;

  // Condensation edges and indegrees.
  std::vector<std::set<int>> succ(m);
  std::vector<int> indeg(m, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_nonzero(a.get(i, j))) continue;
      int ci = comp_of[i], cj = comp_of[j];
      if (ci != cj && succ[ci].insert(cj).second) ++indeg[cj];
    }

  // Kahn with lowest-original-index tie-breaking. Sources first, so every
  // cross-component entry lands above the block diagonal.
  std::set<std::pair<int, int>> avail;  // (min original vertex, component)
  for (int c = 0; c < m; ++c)
    if (indeg[c] == 0) avail.insert({comps[c][0], c});

  FrobeniusForm form;
  form.perm.assign(n, -1);
  int next = 0;
  while (!avail.empty()) {
    const int c = avail.begin()->second;
    avail.erase(avail.begin());
    for (int v : comps[c]) form.perm[v] = next++;
    form.block_sizes.push_back(int(comps[c].size()));
    const bool zero_one =
        comps[c].size() == 1 && !is_nonzero(a.get(comps[c][0], comps[c][0]));
    form.kinds.push_back(zero_one ? DiagBlockKind::ZeroOne
                                  : DiagBlockKind::Irreducible);
    for (int d : succ[c])
      if (--indeg[d] == 0) avail.insert({comps[d][0], d});
  }
  return form;
}

SignMatrix apply_form(const SignMatrix& a, const FrobeniusForm& f) {
  return permuted(a, f.perm);
}

StripResult strip_extraneous(const SignMatrix& a) {
  if (!a.square()) throw std::invalid_argument("strip_extraneous requires a square pattern");
  const int n = a.order();
  StripResult out;
  for (int i = 0; i < n; ++i) {
    bool empty = true;
    for (int t = 0; t < n && empty; ++t)
      if (is_nonzero(a.get(i, t)) || is_nonzero(a.get(t, i))) empty = false;
    if (!empty) out.kept.push_back(i);
  }
  out.pattern = submatrix(a, out.kept, out.kept);
  return out;
}

}  // namespace signpat
