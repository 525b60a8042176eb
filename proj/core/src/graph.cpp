#include "bicay/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "bicay/errors.hpp"

namespace bicay {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), adj_(n) {
  if (n < 0) throw validation_error("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw validation_error("edge endpoint out of range");
  if (u == v) throw validation_error("loops are not allowed");
  if (has_edge(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(const Permutation& p) const {
  if (p.degree() != n_) throw precondition_error("relabeling degree mismatch");
  Graph out(n_);
  for (auto [u, v] : edges()) out.add_edge(p[u], p[v]);
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        queue.push_back(w);
      }
  }
  return count == n;
}

std::optional<std::array<std::vector<int>, 2>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, -1);
  std::array<std::vector<int>, 2> parts;
  for (int start = 0; start < n; ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) parts[colour[v]].push_back(v);
  return parts;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;
  // BFS from every vertex; a non-tree edge at the frontier closes a shortest
  // cycle through the root.
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v]) {
          int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

Graph cayley_graph(const GroupTable& g, const std::vector<int>& connection_set) {
  for (int s : connection_set) {
    if (s <= 0 || s >= g.order())
      throw validation_error("connection set contains the identity or an out-of-range element");
    if (std::find(connection_set.begin(), connection_set.end(), g.inv(s)) == connection_set.end())
      throw validation_error("connection set is not inverse-closed");
  }
  Graph out(g.order());
  for (int x = 0; x < g.order(); ++x)
    for (int s : connection_set) out.add_edge(x, g.mul(s, x));
  return out;
}

PermGroup right_regular_group(const GroupTable& g) {
  return PermGroup(g.order(), regular_representation_generators(g));
}

void validate_triple(const BiCayleyTriple& t) {
  const GroupTable& h = t.group;
  auto check_symmetric = [&](const std::vector<int>& set, const char* name) {
    for (int s : set) {
      if (s <= 0 || s >= h.order())
        throw validation_error(std::string(name) + " contains the identity or an out-of-range element");
      if (std::find(set.begin(), set.end(), h.inv(s)) == set.end())
        throw validation_error(std::string(name) + " is not inverse-closed");
    }
  };
  check_symmetric(t.right, "R");
  check_symmetric(t.left, "L");
  for (int s : t.spokes)
    if (s < 0 || s >= h.order()) throw validation_error("S element out of range");
  if (t.spokes.empty()) throw validation_error("S must be non-empty");
}

Graph bicayley_graph(const BiCayleyTriple& t) {
  validate_triple(t);
  const GroupTable& h = t.group;
  const int n = h.order();
  Graph out(2 * n);
  for (int x = 0; x < n; ++x) {
    for (int r : t.right) out.add_edge(x, h.mul(r, x));          // g = r*h
    for (int l : t.left) out.add_edge(n + x, n + h.mul(l, x));
    for (int s : t.spokes) out.add_edge(x, n + h.mul(s, x));     // h0 ~ (s h)1
  }
  return out;
}

Permutation br_permutation(const GroupTable& h, int g) {
  const int n = h.order();
  std::vector<int> images(2 * n);
  for (int x = 0; x < n; ++x) {
    images[x] = h.mul(x, g);
    images[n + x] = n + h.mul(x, g);
  }
  return Permutation(std::move(images));
}

PermGroup br_generators(const BiCayleyTriple& t) {
  std::vector<Permutation> gens;
  for (int g : generating_set(t.group)) gens.push_back(br_permutation(t.group, g));
  if (gens.empty()) gens.push_back(Permutation::identity(2 * t.group.order()));
  return PermGroup(2 * t.group.order(), std::move(gens));
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << ' ' << v << "\n";
  return out.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string keyword;
  int n = -1;
  if (!(in >> keyword >> n) || keyword != "n" || n < 0)
    throw parse_error("expected header line 'n <count>'", 0);
  Graph g(n);
  int u, v;
  while (in >> u >> v) g.add_edge(u, v);
  if (!in.eof() && in.fail()) throw parse_error("malformed edge line", static_cast<std::size_t>(in.tellg()));
  return g;
}

}  // namespace bicay
