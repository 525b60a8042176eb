#pragma once

#include <cstdint>
#include <vector>

#include "bicay/graph.hpp"
#include "bicay/perm_group.hpp"

namespace bicay {

/// How a permutation group acts on the points 0..degree-1.
struct ActionReport {
  std::uint64_t group_order;
  int orbit_count;
  bool semiregular;  // every non-identity element is fixed-point-free
  bool transitive;
};

inline constexpr int kDefaultAutVertexBound = 256;

/// Full automorphism group with exact order, computed by iterated colour
/// refinement plus depth-first individualization. Generators are emitted in
/// lexicographic order by image list.
PermGroup automorphism_group(const Graph& g, int max_vertices = kDefaultAutVertexBound);

/// True iff some automorphism other than the identity fixes `fixed_vertex`.
/// For a Cayley graph this decides GRR-ness without computing the full group.
bool has_nontrivial_vertex_stabilizer(const Graph& g, int fixed_vertex,
                                      int max_vertices = kDefaultAutVertexBound);

ActionReport action_report(const PermGroup& group);

/// True iff a^-1 b a lies in B for all generators b of B and a of Aut(g).
/// B's generators must be automorphisms of g.
bool is_normal_in_aut(const Graph& g, const PermGroup& b);

bool is_vertex_transitive(const Graph& g);

/// The subgroup of Aut(g) fixing each bipartition class setwise (index 1 or 2).
/// g must be bipartite and connected.
PermGroup bipartition_kernel(const Graph& g);

/// Every automorphism maps `subset` to itself or to a disjoint set.
bool is_block(const Graph& g, const std::vector<int>& subset);
bool is_block(const PermGroup& aut, const std::vector<int>& subset);

}  // namespace bicay
