#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bicay/constructions.hpp"
#include "bicay/graph.hpp"
#include "bicay/group_table.hpp"
#include "bicay/perm_group.hpp"

namespace bicay {

/// Machine-checkable record of a witness graph: every flag is re-derivable
/// from the graph and the BR generators. A certificate is valid when the
/// action is semiregular with exactly two orbits, BR is normal in Aut, and
/// the graph is connected; main-theorem witnesses are vertex-transitive too.
struct Certificate {
  std::string group_name;
  int group_order = 0;
  int graph_order = 0;
  std::string graph6;
  std::vector<Permutation> br_generators;
  bool semiregular = false;
  int orbit_count = 0;
  std::uint64_t aut_order = 0;
  bool br_normal = false;
  bool vertex_transitive = false;
  bool connected = false;
  std::string trace;  // which construction branch fired
};

struct WitnessResult {
  Graph graph;
  PermGroup br;
  /// The verified isomorphism g -> BR(g), one permutation per group element.
  std::vector<Permutation> embedding;
  Certificate certificate;
};

/// Builds a vertex-transitive normal bi-Cayley graph over G by the
/// constructive case analysis (GRR / class C / class D / class E), verifying
/// every claimed property before returning. Throws verification_error on any
/// failed predicate and inconclusive_error when a search runs out of budget.
WitnessResult construct_normal_bicayley(const GroupTable& g, const std::string& name = "",
                                        SearchBudget budget = {});

/// The GRR branch on a given connection set (exposed so the twice-K2 case
/// can be driven directly).
WitnessResult build_from_grr(const GroupTable& g, const std::vector<int>& connection_set,
                             const std::string& name);

struct VerifyOutcome {
  bool ok = false;
  std::vector<std::string> mismatches;  // itemized failing fields
};

/// Recomputes every certificate field from the graph and BR and compares.
VerifyOutcome verify_certificate(const Graph& g, const PermGroup& br, const Certificate& claimed);

struct SweepRow {
  std::string name;
  int order = 0;
  std::string branch;
  int graph_order = 0;
  std::uint64_t aut_order = 0;
  double millis = 0.0;
};

/// Certifies every catalog group of order <= max_order; any failure aborts
/// with the offending group named.
std::vector<SweepRow> theorem_sweep(int max_order, SearchBudget budget = {});

/// Line-oriented "key: value" serialization, keys in fixed order, graph as
/// graph6, permutations as image lists (generators joined by "; ").
std::string write_certificate(const Certificate& c);
Certificate parse_certificate(const std::string& text);

}  // namespace bicay
