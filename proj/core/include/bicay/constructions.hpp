#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicay/catalog.hpp"
#include "bicay/graph.hpp"
#include "bicay/perm_group.hpp"

namespace bicay {

/// Q_n together with its translation group N (order 2^n) and the even-weight
/// half E (order 2^(n-1)), which is semiregular with two orbits and normal in
/// Aut(Q_n). Vertex v is the bitmask of its tuple.
struct Hypercube {
  Graph graph;
  PermGroup translations;  // R(N)
  PermGroup half;          // E
};
Hypercube hypercube(int n);

/// The Moebius-Kantor graph GP(8,3): outer vertices 0..7, inner vertices
/// 8..15 (vertex i' = 8+i), with the four explicit automorphisms and
/// Q8 = <alpha, alpha^beta>.
struct MoebiusKantor {
  Graph graph;
  Permutation alpha, beta, gamma, delta;
  PermGroup q8;
  GroupTable q8_table;                  // <alpha, alpha^beta> as a table
  std::vector<Permutation> q8_embedding;  // index -> permutation
};
MoebiusKantor moebius_kantor();

/// Godsil's classification: a group has a GRR unless it is abelian of
/// exponent > 2 (C), generalized dicyclic (D), or one of thirteen
/// exceptional groups (E).
struct GroupClass {
  enum class Tag { HasGrr, ClassC, ClassD, ClassE };
  Tag tag;
  int e_item = 0;        // 1..8 when tag == ClassE
  std::string e_member;  // catalog name of the matched exceptional group
};
GroupClass classify_group(const GroupTable& g);

struct SearchBudget {
  std::uint64_t max_candidates = 2000000;
};

enum class SearchStatus {
  Found,
  ExhaustedNone,  // full space scanned, no witness exists
  Inconclusive,   // budget ran out first
};

struct ConnectionSearchResult {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::vector<int> witness;  // connection set when status == Found
  std::uint64_t examined = 0;
};

/// First (by size, then lexicographic) inverse-closed generating S with
/// Aut(Cay(G,S)) = R(G).
ConnectionSearchResult grr_search(const GroupTable& g, SearchBudget budget = {});

/// First inverse-closed generating S with R(G) normal in Aut(Cay(G,S)).
/// With require_k2_coprime, witnesses whose graph has a K2 prime factor are
/// skipped: normality alone does not rule such graphs out (C3 [] C4 is a
/// normal Cayley graph of Dic3 with no splitting involution in S), and the
/// product step of the construction needs a K2-free partner.
ConnectionSearchResult normal_cayley_search(const GroupTable& g, SearchBudget budget = {},
                                            bool require_k2_coprime = false);

struct BiCayleySearchResult {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::optional<BiCayleyTriple> witness;
  std::uint64_t examined = 0;
};

/// First triple (R, L, S), ordered by total size then lexicographically with
/// S normalized to contain the identity, whose bi-Cayley graph is connected
/// with BR(H) normal in its automorphism group. The vertex-transitivity
/// filter is used by the pipeline, which certifies transitive witnesses.
BiCayleySearchResult normal_bicayley_search(const GroupTable& h, SearchBudget budget = {},
                                            bool require_vertex_transitive = false);

/// How an exceptional group's witness is assembled.
struct ClassEConstruction {
  CatalogEntry group;
  std::vector<int> connection_set;
  enum class Partner {
    Hypercube,   // item 1: the witness is Q_{rank+1} over the group itself
    K2,          // items 2..7: Cay(G, S) [] K2
    Cycle,       // item 8: GP(8,3) [] C_n, S generates the cyclic factor
  } partner;
  int cycle_length = 0;
  std::string description;
};
ClassEConstruction class_e_connection_set(const std::string& member_name);

}  // namespace bicay
