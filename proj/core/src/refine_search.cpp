#include "refine_search.hpp"

#include <algorithm>
#include <map>

namespace bicay::internal {

namespace {

// Signature of a vertex under the current colouring.
std::vector<int> signature(const Graph& g, const std::vector<int>& colors, int v) {
  std::vector<int> sig;
  sig.reserve(g.degree(v) + 1);
  sig.push_back(colors[v]);
  for (int w : g.neighbors(v)) sig.push_back(colors[w]);
  std::sort(sig.begin() + 1, sig.end());
  return sig;
}

int color_count(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

}  // namespace

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int n = g.vertex_count();
  for (;;) {
    std::vector<std::vector<int>> sigs(n);
    for (int v = 0; v < n; ++v) sigs[v] = signature(g, colors, v);
    std::vector<std::vector<int>> distinct = sigs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sigs[v]) - distinct.begin());
    if (color_count(next) == color_count(colors)) return next;
    colors = std::move(next);
  }
}

namespace {

struct Searcher {
  const Graph& a;
  const Graph& b;
  bool exclude_identity;
  std::vector<int> result;

  // Refines both sides and compares signature multisets; false on mismatch.
  bool refine_pair(std::vector<int>& ca, std::vector<int>& cb) const {
    const int n = a.vertex_count();
    for (;;) {
      std::vector<std::vector<int>> siga(n), sigb(n);
      for (int v = 0; v < n; ++v) {
        siga[v] = signature(a, ca, v);
        sigb[v] = signature(b, cb, v);
      }
      std::vector<std::vector<int>> da = siga, db = sigb;
      std::sort(da.begin(), da.end());
      std::sort(db.begin(), db.end());
      if (da != db) return false;  // compares with multiplicity
      da.erase(std::unique(da.begin(), da.end()), da.end());
      std::vector<int> na(n), nb(n);
      for (int v = 0; v < n; ++v) {
        na[v] = static_cast<int>(std::lower_bound(da.begin(), da.end(), siga[v]) - da.begin());
        nb[v] = static_cast<int>(std::lower_bound(da.begin(), da.end(), sigb[v]) - da.begin());
      }
      bool stable = color_count(na) == color_count(ca);
      ca = std::move(na);
      cb = std::move(nb);
      if (stable) return true;
    }
  }

  bool complete(const std::vector<int>& ca, const std::vector<int>& cb) {
    const int n = a.vertex_count();
    std::vector<int> of_color(n, -1);
    for (int v = 0; v < n; ++v) of_color[cb[v]] = v;
    std::vector<int> map(n);
    bool identity = true;
    for (int v = 0; v < n; ++v) {
      map[v] = of_color[ca[v]];
      identity = identity && map[v] == v;
    }
    if (identity && exclude_identity) return false;
    for (int v = 0; v < n; ++v) {
      if (a.degree(v) != b.degree(map[v])) return false;
      for (int w : a.neighbors(v))
        if (!b.has_edge(map[v], map[w])) return false;
    }
    result = std::move(map);
    return true;
  }

  bool run(std::vector<int> ca, std::vector<int> cb) {
    if (!refine_pair(ca, cb)) return false;
    const int n = a.vertex_count();
    // First colour class with more than one vertex.
    int cells = color_count(ca);
    std::vector<int> size_of(cells, 0);
    for (int v = 0; v < n; ++v) ++size_of[ca[v]];
    int split = -1;
    for (int c = 0; c < cells; ++c)
      if (size_of[c] > 1) {
        split = c;
        break;
      }
    if (split < 0) return complete(ca, cb);

    int va = -1;
    for (int v = 0; v < n; ++v)
      if (ca[v] == split) {
        va = v;
        break;
      }
    for (int u = 0; u < n; ++u) {
      if (cb[u] != split) continue;
      std::vector<int> ca2 = ca, cb2 = cb;
      ca2[va] = cells;
      cb2[u] = cells;
      if (run(std::move(ca2), std::move(cb2))) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> search_mapping(const Graph& a, const Graph& b,
                                               const std::vector<std::pair<int, int>>& pins,
                                               bool exclude_identity) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  const int n = a.vertex_count();
  if (n == 0) return std::vector<int>{};
  std::vector<int> ca(n, 0), cb(n, 0);
  int next = 1;
  for (auto [src, dst] : pins) {
    ca[src] = next;
    cb[dst] = next;
    ++next;
  }
  Searcher s{a, b, exclude_identity, {}};
  if (s.run(std::move(ca), std::move(cb))) return s.result;
  return std::nullopt;
}

}  // namespace bicay::internal
