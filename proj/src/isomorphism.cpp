#include "nsd/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <vector>

#include "nsd/graph6.hpp"

namespace nsd {
namespace {

using Coloring = std::vector<int>;

int count_colors(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Relabels vertices so that sorting by `key` gives dense color ids. Keys are
// compared whole, so callers must put the previous color first to keep the
// result a refinement.
template <typename Key>
Coloring dense_by_key(const std::vector<Key>& keys) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  Coloring out(n);
  int color = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || keys[idx[i]] != keys[idx[i - 1]]) ++color;
    out[idx[i]] = color;
  }
  return out;
}

Coloring refine(const Graph& g, Coloring c) {
  const int n = g.order();
  int cells = count_colors(c);
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> keys(n);
    for (int v = 0; v < n; ++v) {
      keys[v].first = c[v];
      for (int w : g.neighbors(v)) keys[v].second.push_back(c[w]);
      std::sort(keys[v].second.begin(), keys[v].second.end());
    }
    Coloring next = dense_by_key(keys);
    const int next_cells = count_colors(next);
    c = std::move(next);
    if (next_cells == cells) return c;
    cells = next_cells;
  }
}

Coloring initial_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<std::tuple<int, int>> keys(n);
  for (int v = 0; v < n; ++v) {
    int triangles = 0;
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (g.adjacent(nb[i], nb[j])) ++triangles;
    keys[v] = {g.degree(v), triangles};
  }
  return dense_by_key(keys);
}

void search(const Graph& g, const Coloring& c, std::string& best) {
  const int n = g.order();
  const int cells = count_colors(c);
  if (cells == n) {
    std::string code = emit_graph6(g.relabeled(c));
    if (best.empty() || code < best) best = std::move(code);
    return;
  }
  // Target cell: smallest non-singleton, ties to the lowest color.
  std::vector<int> cell_size(cells, 0);
  for (int v = 0; v < n; ++v) ++cell_size[c[v]];
  int target = -1;
  for (int k = 0; k < cells; ++k) {
    if (cell_size[k] > 1 && (target < 0 || cell_size[k] < cell_size[target])) target = k;
  }
  for (int v = 0; v < n; ++v) {
    if (c[v] != target) continue;
    Coloring child = c;
    for (int w = 0; w < n; ++w) {
      if (w != v && child[w] >= target) ++child[w];
    }
    search(g, refine(g, std::move(child)), best);
  }
}

}  // namespace

bool isomorphic_by_permutation(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges()) {
      if (!b.adjacent(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string canonical_certificate(const Graph& g) {
  std::string best;
  search(g, refine(g, initial_coloring(g)), best);
  return best;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.order() <= 8) return isomorphic_by_permutation(a, b);
  return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace nsd
