#include "bicay/cartesian.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "bicay/aut.hpp"
#include "bicay/errors.hpp"

namespace bicay {

Graph cartesian_product(const Graph& x, const Graph& y) {
  const long long n = static_cast<long long>(x.vertex_count()) * y.vertex_count();
  if (n > 1 << 20) throw resource_error("product size beyond bound");
  const int ny = y.vertex_count();
  Graph out(static_cast<int>(n));
  for (int u = 0; u < x.vertex_count(); ++u) {
    for (auto [a, b] : y.edges()) out.add_edge(u * ny + a, u * ny + b);
  }
  for (auto [u, v] : x.edges()) {
    for (int a = 0; a < ny; ++a) out.add_edge(u * ny + a, v * ny + a);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> all_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int root = 0; root < n; ++root) {
    auto& d = dist[root];
    d[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v))
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          queue.push_back(w);
        }
    }
  }
  return dist;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Is there a square through the incident edge pair {x,y}, {y,z}? Any w != y
// adjacent to both far endpoints closes one.
bool spans_square(const Graph& g, int x, int y, int z) {
  for (int w : g.neighbors(x))
    if (w != y && g.has_edge(w, z)) return true;
  return false;
}

}  // namespace

FactorDecomposition prime_factorization(const Graph& g) {
  if (!is_connected(g)) throw precondition_error("prime factorization needs a connected graph");
  const int n = g.vertex_count();

  FactorDecomposition out;
  out.coordinates.assign(std::max(n, 0), {});
  if (n <= 1) return out;  // empty product

  auto edge_list = g.edges();
  const int m = static_cast<int>(edge_list.size());
  auto dist = all_distances(g);

  // The product relation: Djokovic-Winkler on arbitrary pairs, plus incident
  // pairs spanning no square; classes of its transitive closure are the
  // edge sets of the prime factors.
  UnionFind classes(m);
  for (int e = 0; e < m; ++e) {
    auto [x, y] = edge_list[e];
    for (int f = e + 1; f < m; ++f) {
      auto [u, v] = edge_list[f];
      if (dist[x][u] + dist[y][v] != dist[x][v] + dist[y][u]) {
        classes.unite(e, f);
        continue;
      }
      int shared = -1, ex = -1, fx = -1;
      if (x == u) shared = x, ex = y, fx = v;
      else if (x == v) shared = x, ex = y, fx = u;
      else if (y == u) shared = y, ex = x, fx = v;
      else if (y == v) shared = y, ex = x, fx = u;
      if (shared >= 0 && !spans_square(g, ex, shared, fx)) classes.unite(e, f);
    }
  }

  std::vector<int> class_id(m);
  std::vector<int> roots;
  for (int e = 0; e < m; ++e) {
    int r = classes.find(e);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      class_id[e] = static_cast<int>(roots.size());
      roots.push_back(r);
    } else {
      class_id[e] = static_cast<int>(it - roots.begin());
    }
  }
  const int k = static_cast<int>(roots.size());

  // Factor i = the component of vertex 0 in the subgraph of class-i edges,
  // with vertices renumbered in ascending order.
  std::vector<std::vector<int>> layer(k);
  for (int i = 0; i < k; ++i) {
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::deque<int> queue{0};
    std::vector<int> verts{0};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e = 0; e < m; ++e) {
        if (class_id[e] != i) continue;
        auto [x, y] = edge_list[e];
        int other = -1;
        if (x == v) other = y;
        else if (y == v) other = x;
        if (other >= 0 && !seen[other]) {
          seen[other] = 1;
          verts.push_back(other);
          queue.push_back(other);
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    layer[i] = std::move(verts);
  }

  for (int i = 0; i < k; ++i) {
    std::vector<int> pos(n, -1);
    for (std::size_t j = 0; j < layer[i].size(); ++j) pos[layer[i][j]] = static_cast<int>(j);
    Graph factor(static_cast<int>(layer[i].size()));
    for (int e = 0; e < m; ++e) {
      if (class_id[e] != i) continue;
      auto [x, y] = edge_list[e];
      if (pos[x] >= 0 && pos[y] >= 0) factor.add_edge(pos[x], pos[y]);
    }
    out.factors.push_back(std::move(factor));
  }

  // Coordinates: projection onto each base layer is the unique distance
  // minimizer there.
  for (int v = 0; v < n; ++v) {
    out.coordinates[v].resize(k);
    for (int i = 0; i < k; ++i) {
      int best = -1, best_d = -1, ties = 0;
      for (std::size_t j = 0; j < layer[i].size(); ++j) {
        int d = dist[v][layer[i][j]];
        if (best < 0 || d < best_d) {
          best = static_cast<int>(j);
          best_d = d;
          ties = 1;
        } else if (d == best_d) {
          ++ties;
        }
      }
      if (ties != 1)
        throw verification_error("factorization projection is not unique; relation classes are wrong");
      out.coordinates[v][i] = best;
    }
  }

  // Reassembly check: the coordinate map must be an isomorphism onto the
  // abstract product.
  {
    std::vector<long long> stride(k, 1);
    for (int i = k - 2; i >= 0; --i)
      stride[i] = stride[i + 1] * out.factors[i + 1].vertex_count();
    std::vector<int> index(n);
    std::vector<char> taken(n, 0);
    long long total = 1;
    for (const auto& f : out.factors) total *= f.vertex_count();
    if (total != n) throw verification_error("factor sizes do not multiply to the graph order");
    for (int v = 0; v < n; ++v) {
      long long idx = 0;
      for (int i = 0; i < k; ++i) idx += stride[i] * out.coordinates[v][i];
      if (taken[idx]) throw verification_error("coordinate map is not injective");
      taken[static_cast<int>(idx)] = 1;
      index[v] = static_cast<int>(idx);
    }
    Graph rebuilt = assemble(out);
    Graph relab = g.relabeled(Permutation(index));
    if (!(relab == rebuilt)) throw verification_error("reassembled product differs from the input");
  }

  // Primality certification: re-factorizing each factor must be trivial.
  if (k >= 2) {
    for (const auto& f : out.factors) {
      if (prime_factorization(f).factors.size() != 1)
        throw verification_error("a reported factor is not prime");
    }
  }
  return out;
}

Graph assemble(const FactorDecomposition& d) {
  Graph acc(1);
  for (const auto& f : d.factors) acc = cartesian_product(acc, f);
  return acc;
}

bool relatively_prime(const Graph& x, const Graph& y) {
  if (!is_connected(x) || !is_connected(y))
    throw precondition_error("relative primality needs connected graphs");
  auto fx = prime_factorization(x), fy = prime_factorization(y);
  for (const auto& a : fx.factors)
    for (const auto& b : fy.factors)
      if (are_graphs_isomorphic(a, b)) return false;
  return true;
}

PermGroup aut_of_product(const FactorDecomposition& d) {
  const int k = static_cast<int>(d.factors.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (are_graphs_isomorphic(d.factors[i], d.factors[j]))
        throw precondition_error("factors are not pairwise relatively prime");

  long long n = 1;
  for (const auto& f : d.factors) n *= f.vertex_count();
  std::vector<long long> s(k, 1);
  for (int i = k - 2; i >= 0; --i) s[i] = s[i + 1] * d.factors[i + 1].vertex_count();

  std::vector<Permutation> gens;
  std::uint64_t expected = 1;
  for (int i = 0; i < k; ++i) {
    PermGroup aut_i = automorphism_group(d.factors[i]);
    expected *= aut_i.order();
    for (const auto& a : aut_i.generators()) {
      std::vector<int> images(static_cast<std::size_t>(n));
      for (long long v = 0; v < n; ++v) {
        long long ci = (v / s[i]) % d.factors[i].vertex_count();
        images[v] = static_cast<int>(v + (a[static_cast<int>(ci)] - ci) * s[i]);
      }
      gens.emplace_back(std::move(images));
    }
  }
  PermGroup out(static_cast<int>(n), std::move(gens));
  if (out.order() != expected)
    throw verification_error("coordinatewise generators do not generate the product group");
  return out;
}

std::vector<std::vector<int>> fiber_blocks(const FactorDecomposition& d, int base_vertex) {
  const int k = static_cast<int>(d.factors.size());
  const int n = static_cast<int>(d.coordinates.size());
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({base_vertex});
    return out;
  }
  for (int i = 0; i < k; ++i) {
    std::vector<int> fiber;
    for (int v = 0; v < n; ++v) {
      bool match = true;
      for (int j = 0; j < k && match; ++j)
        if (j != i) match = d.coordinates[v][j] == d.coordinates[base_vertex][j];
      if (match) fiber.push_back(v);
    }
    out.push_back(std::move(fiber));
  }
  return out;
}

std::string write_decomposition_report(const FactorDecomposition& d) {
  std::ostringstream out;
  out << "factors " << d.factors.size() << "\n";
  for (const auto& f : d.factors) out << graph6_encode(f) << "\n";
  out << "coords\n";
  for (std::size_t v = 0; v < d.coordinates.size(); ++v) {
    out << v << ": (";
    for (std::size_t i = 0; i < d.coordinates[v].size(); ++i) {
      if (i) out << ',';
      out << d.coordinates[v][i];
    }
    out << ")\n";
  }
  return out.str();
}

}  // namespace bicay
