#pragma once

// Test-side oracles, deliberately independent of the library's algorithms:
// a factorial-filter automorphism counter, a plain backtracking counter, and
// an induced-layer brute-force Cartesian factorizer.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bicay/graph.hpp"

namespace bicay::test_oracles {

/// Checks all n! bijections. Only for graphs with at most ~8 vertices.
inline std::uint64_t count_automorphisms_exhaustive(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v : g.neighbors(u)) {
        if (u > v) continue;
        if (!g.has_edge(perm[u], perm[v])) {
          ok = false;
          break;
        }
      }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Depth-first counter with adjacency-consistency pruning only; workable up
/// to a few dozen vertices on structured graphs.
inline std::uint64_t count_automorphisms_backtracking(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  auto consistent = [&](int v, int image) {
    if (g.degree(v) != g.degree(image)) return false;
    for (int w : g.neighbors(v))
      if (map[w] >= 0 && !g.has_edge(image, map[w])) return false;
    for (int w = 0; w < v; ++w)
      if (!g.has_edge(v, w) && map[w] >= 0 && g.has_edge(image, map[w])) return false;
    return true;
  };
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int image = 0; image < n; ++image) {
      if (used[image] || !consistent(v, image)) continue;
      map[v] = image;
      used[image] = 1;
      rec(v + 1);
      map[v] = -1;
      used[image] = 0;
    }
  };
  rec(0);
  return count;
}

inline std::vector<std::vector<int>> brute_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int r = 0; r < n; ++r) {
    std::vector<int> queue{r};
    dist[r][r] = 0;
    for (std::size_t at = 0; at < queue.size(); ++at)
      for (int w : g.neighbors(queue[at]))
        if (dist[r][w] < 0) {
          dist[r][w] = dist[r][queue[at]] + 1;
          queue.push_back(w);
        }
  }
  return dist;
}

inline bool try_layers(const Graph& g, const std::vector<int>& lx,
                       const std::vector<std::vector<int>>& dist, Graph& x_out, Graph& y_out) {
  const int n = g.vertex_count();
  auto project = [&](const std::vector<int>& layer, int v) -> int {
    int best = -1, best_d = -1, ties = 0;
    for (std::size_t j = 0; j < layer.size(); ++j) {
      int d = dist[v][layer[j]];
      if (best < 0 || d < best_d) {
        best = static_cast<int>(j);
        best_d = d;
        ties = 1;
      } else if (d == best_d) {
        ++ties;
      }
    }
    return ties == 1 ? best : -1;
  };
  std::vector<int> px(n);
  for (int v = 0; v < n; ++v)
    if ((px[v] = project(lx, v)) < 0) return false;
  std::vector<int> ly;
  for (int v = 0; v < n; ++v)
    if (px[v] == px[0]) ly.push_back(v);
  if (lx.size() * ly.size() != static_cast<std::size_t>(n)) return false;
  std::vector<int> py(n);
  for (int v = 0; v < n; ++v)
    if ((py[v] = project(ly, v)) < 0) return false;
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    int idx = px[v] * static_cast<int>(ly.size()) + py[v];
    if (seen[idx]) return false;
    seen[idx] = 1;
  }
  Graph x(static_cast<int>(lx.size())), y(static_cast<int>(ly.size()));
  for (std::size_t i = 0; i < lx.size(); ++i)
    for (std::size_t j = i + 1; j < lx.size(); ++j)
      if (g.has_edge(lx[i], lx[j])) x.add_edge(static_cast<int>(i), static_cast<int>(j));
  for (std::size_t i = 0; i < ly.size(); ++i)
    for (std::size_t j = i + 1; j < ly.size(); ++j)
      if (g.has_edge(ly[i], ly[j])) y.add_edge(static_cast<int>(i), static_cast<int>(j));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool want = (px[u] == px[v] && y.has_edge(py[u], py[v])) ||
                  (py[u] == py[v] && x.has_edge(px[u], px[v]));
      if (want != g.has_edge(u, v)) return false;
    }
  x_out = std::move(x);
  y_out = std::move(y);
  return true;
}

/// Tries every induced layer candidate through vertex 0.
inline bool brute_split(const Graph& g, Graph& x_out, Graph& y_out) {
  const int n = g.vertex_count();
  auto dist = brute_distances(g);
  for (int p = 2; p <= n / 2; ++p) {
    if (n % p) continue;
    std::vector<int> pick;
    std::function<bool(int, int)> rec = [&](int from, int need) -> bool {
      if (need == 0) {
        std::vector<int> layer{0};
        layer.insert(layer.end(), pick.begin(), pick.end());
        return try_layers(g, layer, dist, x_out, y_out);
      }
      for (int v = from; v < n; ++v) {
        pick.push_back(v);
        if (rec(v + 1, need - 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (rec(1, p - 1)) return true;
  }
  return false;
}

inline std::vector<std::string> brute_prime_factors(const Graph& g) {
  Graph x, y;
  if (!brute_split(g, x, y)) return {graph6_encode(g)};
  auto fx = brute_prime_factors(x);
  auto fy = brute_prime_factors(y);
  fx.insert(fx.end(), fy.begin(), fy.end());
  std::sort(fx.begin(), fx.end());
  return fx;
}

inline Graph random_connected_graph(std::mt19937& rng, int min_n, int max_n) {
  std::uniform_int_distribution<int> nd(min_n, max_n);
  for (;;) {
    int n = nd(rng);
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double p = 0.25 + 0.5 * coin(rng);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

}  // namespace bicay::test_oracles
