#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicay/group_table.hpp"
#include "bicay/perm_group.hpp"
#include "bicay/permutation.hpp"

namespace bicay {

/// Finite simple undirected graph with adjacency sets and a bit matrix for
/// O(1) edge tests.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  void add_edge(int u, int v);  // idempotent; rejects loops and out-of-range
  bool has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  /// Edges as sorted (u, v) pairs with u < v.
  std::vector<std::pair<int, int>> edges() const;

  /// Relabels vertices: vertex v of the result is p[v]... i.e. result has an
  /// edge {p[u], p[v]} for every edge {u, v}.
  Graph relabeled(const Permutation& p) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

private:
  int n_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;
};

bool is_connected(const Graph& g);

/// The two colour classes if g has no odd cycle (class containing vertex 0 of
/// each component first), as sorted vertex lists.
std::optional<std::array<std::vector<int>, 2>> bipartition(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Cay(G, S): vertex set G, edges {g, sg}. S must be inverse-closed and
/// identity-free.
Graph cayley_graph(const GroupTable& g, const std::vector<int>& connection_set);

/// Right translations R(g) for a generating set of G, as a PermGroup on the
/// vertices of Cay(G, S).
PermGroup right_regular_group(const GroupTable& g);

/// A bi-Cayley triple (H, R, L, S). Vertices of the graph are h0 = h and
/// h1 = |H| + h; right edges join h0 ~ g0 for g h^-1 in R, left edges join
/// h1 ~ g1 for g h^-1 in L, spokes join h0 ~ g1 for g h^-1 in S.
struct BiCayleyTriple {
  GroupTable group;
  std::vector<int> right;
  std::vector<int> left;
  std::vector<int> spokes;
};

/// Checks R = R^-1, L = L^-1, identity not in R or L, S non-empty.
void validate_triple(const BiCayleyTriple& t);

Graph bicayley_graph(const BiCayleyTriple& t);

/// BR(g) on the 2|H| vertices: h_i -> (hg)_i.
Permutation br_permutation(const GroupTable& h, int g);

/// BR(H) given by BR(g) over a generating set of H.
PermGroup br_generators(const BiCayleyTriple& t);

/// Standard graph6. Encoding of the 0-vertex graph is "?".
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

/// Edge-list text format: first line "n <count>", then "u v" per edge,
/// 0-indexed, u < v, sorted lexicographically.
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

/// An edge-preserving bijection a -> b, or nullopt; absence is exhaustive.
std::optional<std::vector<int>> are_graphs_isomorphic(const Graph& a, const Graph& b);

}  // namespace bicay
