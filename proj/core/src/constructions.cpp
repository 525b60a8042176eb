#include "bicay/constructions.hpp"

#include <algorithm>
#include <functional>

#include "bicay/aut.hpp"
#include "bicay/cartesian.hpp"
#include "bicay/errors.hpp"

namespace bicay {

Hypercube hypercube(int n) {
  if (n < 1 || n > 10) throw resource_error("hypercube dimension out of range");
  GroupTable group = GroupTable::elementary_abelian_2(n);
  std::vector<int> basis;
  for (int b = 0; b < n; ++b) basis.push_back(1 << b);
  Hypercube out{cayley_graph(group, basis), PermGroup(1, {}), PermGroup(1, {})};

  std::vector<Permutation> translations;
  for (int b : basis) translations.push_back(right_translation(group, b));
  out.translations = PermGroup(group.order(), translations);

  std::vector<Permutation> half;
  for (int b = 0; b + 1 < n; ++b)
    half.push_back(right_translation(group, (1 << b) | (1 << (b + 1))));
  if (half.empty()) half.push_back(Permutation::identity(group.order()));
  out.half = PermGroup(group.order(), half);
  return out;
}

MoebiusKantor moebius_kantor() {
  MoebiusKantor mk;
  Graph g(16);
  for (int i = 0; i < 8; ++i) {
    g.add_edge(i, (i + 1) % 8);          // outer
    g.add_edge(8 + i, 8 + (i + 3) % 8);  // inner
    g.add_edge(i, 8 + i);                // spokes
  }
  mk.graph = g;

  // Vertex i' is 8+i. The four permutations from the source description.
  mk.alpha = Permutation::from_cycles(
      16, {{1, 3, 5, 7}, {0, 2, 4, 6}, {9, 11, 13, 15}, {8, 10, 12, 14}});
  mk.beta = Permutation::from_cycles(16, {{0, 9, 2}, {8, 14, 3}, {4, 13, 6}, {7, 12, 10}});
  mk.gamma = Permutation::from_cycles(
      16, {{1, 9}, {2, 14}, {3, 11}, {4, 8}, {5, 13}, {6, 10}, {7, 15}, {0, 12}});
  mk.delta = Permutation::from_cycles(
      16, {{1, 9}, {2, 12}, {3, 15}, {4, 10}, {5, 13}, {6, 8}, {7, 11}, {0, 14}});

  for (const Permutation* p : {&mk.alpha, &mk.beta, &mk.gamma, &mk.delta})
    for (auto [u, v] : g.edges())
      if (!g.has_edge((*p)[u], (*p)[v]))
        throw verification_error("stored permutation is not an automorphism of GP(8,3)");

  Permutation alpha_beta = mk.alpha.conjugated_by(mk.beta);
  GeneratedGroup q8 = group_from_generators({mk.alpha, alpha_beta});
  if (q8.table.order() != 8) throw verification_error("<alpha, alpha^beta> does not have order 8");
  mk.q8 = PermGroup(16, {mk.alpha, alpha_beta});
  mk.q8_table = q8.table;
  mk.q8_embedding = q8.embedding;
  return mk;
}

GroupClass classify_group(const GroupTable& g) {
  if (is_abelian(g) && exponent(g) > 2) return {GroupClass::Tag::ClassC, 0, ""};
  if (is_generalized_dicyclic(g)) return {GroupClass::Tag::ClassD, 0, ""};
  for (const CatalogEntry* e : class_e_members()) {
    if (e->table.order() == g.order() && are_isomorphic(g, e->table))
      return {GroupClass::Tag::ClassE, class_e_item(e->name), e->name};
  }
  return {GroupClass::Tag::HasGrr, 0, ""};
}

namespace {

// Inverse-closed subsets, enumerated by element count then lexicographically
// by sorted element indices. Atoms are involutions and inverse pairs ordered
// by least element, which makes atom-combination order agree with element
// order. The callback returns true to stop.
bool enumerate_inverse_closed(const GroupTable& g,
                              const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<std::vector<int>> atoms;
  for (int x = 1; x < g.order(); ++x) {
    if (g.inv(x) == x)
      atoms.push_back({x});
    else if (x < g.inv(x))
      atoms.push_back({x, g.inv(x)});
  }
  int total = 0;
  for (const auto& a : atoms) total += static_cast<int>(a.size());

  std::vector<int> current;
  std::function<bool(std::size_t, int)> rec = [&](std::size_t from, int remaining) -> bool {
    if (remaining == 0) return visit(current);
    for (std::size_t i = from; i < atoms.size(); ++i) {
      if (static_cast<int>(atoms[i].size()) > remaining) continue;
      current.insert(current.end(), atoms[i].begin(), atoms[i].end());
      bool stop = rec(i + 1, remaining - static_cast<int>(atoms[i].size()));
      current.resize(current.size() - atoms[i].size());
      if (stop) return true;
    }
    return false;
  };

  for (int size = 1; size <= total; ++size)
    if (rec(0, size)) return true;
  return false;
}

bool generates(const GroupTable& g, const std::vector<int>& set) {
  return static_cast<int>(closure(g, set).size()) == g.order();
}

// Nontrivial group automorphisms, used to skip connection sets with a
// nontrivial setwise stabilizer (such a set can never give a GRR).
std::vector<std::vector<int>> nontrivial_group_automorphisms(const GroupTable& g) {
  std::vector<std::vector<int>> auts;
  try {
    // Past a couple thousand automorphisms the per-set scan costs more than
    // the graph stabilizer check it would save.
    auts = automorphisms_of_group(g, 2000);
  } catch (const resource_error&) {
    return {};
  }
  std::vector<std::vector<int>> out;
  for (auto& a : auts) {
    bool id = true;
    for (int x = 0; x < g.order() && id; ++x) id = a[x] == x;
    if (!id) out.push_back(std::move(a));
  }
  return out;
}

bool set_fixed_by(const std::vector<int>& aut, const std::vector<int>& set,
                  std::vector<char>& scratch) {
  for (int s : set) scratch[s] = 1;
  bool fixed = true;
  for (int s : set)
    if (!scratch[aut[s]]) {
      fixed = false;
      break;
    }
  for (int s : set) scratch[s] = 0;
  return fixed;
}

}  // namespace

ConnectionSearchResult grr_search(const GroupTable& g, SearchBudget budget) {
  ConnectionSearchResult result;
  if (g.order() == 1) {
    // Cay(C1, {}) is a single vertex and its own GRR.
    result.status = SearchStatus::Found;
    return result;
  }
  auto auts = nontrivial_group_automorphisms(g);
  std::vector<char> scratch(g.order(), 0);
  bool stopped = enumerate_inverse_closed(g, [&](const std::vector<int>& s) {
    if (result.examined >= budget.max_candidates) {
      result.status = SearchStatus::Inconclusive;
      return true;
    }
    ++result.examined;
    if (!generates(g, s)) return false;
    for (const auto& a : auts)
      if (set_fixed_by(a, s, scratch)) return false;  // Aut(G,S) nontrivial
    Graph cay = cayley_graph(g, s);
    if (has_nontrivial_vertex_stabilizer(cay, 0)) return false;
    result.status = SearchStatus::Found;
    result.witness = s;
    return true;
  });
  if (!stopped) result.status = SearchStatus::ExhaustedNone;
  return result;
}

ConnectionSearchResult normal_cayley_search(const GroupTable& g, SearchBudget budget,
                                            bool require_k2_coprime) {
  ConnectionSearchResult result;
  if (g.order() == 1) {
    result.status = SearchStatus::Found;
    return result;
  }
  PermGroup right = right_regular_group(g);
  bool stopped = enumerate_inverse_closed(g, [&](const std::vector<int>& s) {
    if (result.examined >= budget.max_candidates) {
      result.status = SearchStatus::Inconclusive;
      return true;
    }
    ++result.examined;
    if (!generates(g, s)) return false;
    Graph cay = cayley_graph(g, s);
    if (!is_normal_in_aut(cay, right)) return false;
    if (require_k2_coprime) {
      for (const Graph& f : prime_factorization(cay).factors)
        if (f.vertex_count() == 2) return false;
    }
    result.status = SearchStatus::Found;
    result.witness = s;
    return true;
  });
  if (!stopped) result.status = SearchStatus::ExhaustedNone;
  return result;
}

BiCayleySearchResult normal_bicayley_search(const GroupTable& h, SearchBudget budget,
                                            bool require_vertex_transitive) {
  BiCayleySearchResult result;
  const int n = h.order();
  if (n > 16) throw resource_error("bi-Cayley triple search is bounded at order 16");

  // Inverse-closed candidate sets for R and L (the empty set included),
  // in size-then-lex order.
  std::vector<std::vector<int>> symmetric_sets{{}};
  enumerate_inverse_closed(h, [&](const std::vector<int>& s) {
    symmetric_sets.push_back(s);
    return false;
  });
  std::stable_sort(symmetric_sets.begin(), symmetric_sets.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  // Spoke sets normalized to contain the identity (BiCay(H,R,L,S) and
  // BiCay(H,R,L,Ss^-1) are isomorphic via right translation of H1).
  std::vector<std::vector<int>> spoke_sets;
  std::vector<int> rest;
  std::function<void(int, int)> gen_spokes = [&](int from, int remaining) {
    if (remaining == 0) {
      std::vector<int> s{0};
      s.insert(s.end(), rest.begin(), rest.end());
      spoke_sets.push_back(std::move(s));
      return;
    }
    for (int x = from; x < n; ++x) {
      rest.push_back(x);
      gen_spokes(x + 1, remaining - 1);
      rest.pop_back();
    }
  };
  for (int extra = 0; extra < n; ++extra) gen_spokes(1, extra);
  // spoke_sets is grouped by size and lexicographic within a size already.

  PermGroup br = br_generators(BiCayleyTriple{h, {}, {}, {0}});

  const int max_total = 3 * n;
  for (int total = 1; total <= max_total; ++total) {
    for (const auto& r : symmetric_sets) {
      if (static_cast<int>(r.size()) >= total) continue;
      for (const auto& l : symmetric_sets) {
        int spoke_size = total - static_cast<int>(r.size()) - static_cast<int>(l.size());
        if (spoke_size < 1 || spoke_size > n) continue;
        for (const auto& s : spoke_sets) {
          if (static_cast<int>(s.size()) != spoke_size) continue;
          if (result.examined >= budget.max_candidates) {
            result.status = SearchStatus::Inconclusive;
            return result;
          }
          ++result.examined;
          BiCayleyTriple triple{h, r, l, s};
          Graph graph = bicayley_graph(triple);
          if (!is_connected(graph)) continue;
          if (!is_normal_in_aut(graph, br)) continue;
          if (require_vertex_transitive && !is_vertex_transitive(graph)) continue;
          result.status = SearchStatus::Found;
          result.witness = std::move(triple);
          return result;
        }
      }
    }
  }
  result.status = SearchStatus::ExhaustedNone;
  return result;
}

ClassEConstruction class_e_connection_set(const std::string& member_name) {
  int item = class_e_item(member_name);
  if (item == 0) throw precondition_error("not an exceptional group: " + member_name);
  auto entry = find_group(member_name);
  ClassEConstruction out{*entry, {}, ClassEConstruction::Partner::K2, 0, ""};
  const GroupTable& g = entry->table;
  auto mark = [&](const std::string& k) { return entry->marked.at(k); };

  switch (item) {
    case 1: {
      // C2^r: the witness is the hypercube Q_{r+1} over the group itself.
      out.partner = ClassEConstruction::Partner::Hypercube;
      for (int b = 0; g.order() >> (b + 1); ++b) out.connection_set.push_back(1 << b);
      out.description = "hypercube over the even half";
      break;
    }
    case 2: {
      int a = mark("a"), b = mark("b");
      out.connection_set = {g.mul(a, b), b};
      out.description = "2n-cycle Cay(G,{ab,b}) [] K2";
      break;
    }
    case 3: {
      out.connection_set = {mark("r123"), mark("r132"), mark("r124"), mark("r142")};
      out.description = "Cay(Alt4,{(123),(132),(124),(142)}) [] K2";
      break;
    }
    case 4: {
      out.connection_set = {mark("a"), mark("b"), mark("c")};
      out.description = "girth-6 cubic Cay(G,{a,b,c}) [] K2";
      break;
    }
    case 5: {
      int a = mark("a"), b = mark("b");
      out.connection_set = {a, g.inv(a), b, g.power(a, 4), g.mul(g.power(a, 4), b)};
      out.description = "Cay(G,{a,a^-1,b,a^4,a^4 b}) [] K2";
      break;
    }
    case 6: {
      int a = mark("a"), b = mark("b"), c = mark("c");
      out.connection_set = {c, g.mul(c, a), g.mul(c, b)};
      out.description = "girth-6 cubic Cay(G,{c,ca,cb}) [] K2";
      break;
    }
    case 7: {
      int a = mark("a"), b = mark("b");
      out.connection_set = {a, b, g.inv(a), g.inv(b)};
      out.description = "Cay(G,{a,b,a^-1,b^-1}) [] K2";
      break;
    }
    case 8: {
      // GP(8,3) [] C_n over Q8 x Z_n; S generates the cyclic direct factor.
      out.partner = ClassEConstruction::Partner::Cycle;
      out.cycle_length = g.order() / 8;
      int z = 1;  // (identity of Q8, generator of Z_n) in the product indexing
      out.connection_set = {z, g.inv(z)};
      out.description = "GP(8,3) [] C" + std::to_string(out.cycle_length);
      break;
    }
    default:
      break;
  }

  // Witness sets on the group itself must be inverse-closed and generating.
  if (item >= 2 && item <= 7) {
    for (int s : out.connection_set)
      if (std::find(out.connection_set.begin(), out.connection_set.end(), g.inv(s)) ==
          out.connection_set.end())
        throw verification_error("exceptional connection set is not inverse-closed");
    if (!(static_cast<int>(closure(g, out.connection_set).size()) == g.order()))
      throw verification_error("exceptional connection set does not generate");
  }
  return out;
}

}  // namespace bicay
