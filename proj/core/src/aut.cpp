#include "bicay/aut.hpp"

#include <algorithm>
#include <set>

#include "bicay/errors.hpp"
#include "refine_search.hpp"

namespace bicay {

namespace {

std::vector<int> pinned_colors(int n, const std::vector<std::pair<int, int>>& pins, bool domain) {
  std::vector<int> colors(n, 0);
  int next = 1;
  for (auto [src, dst] : pins) {
    colors[domain ? src : dst] = next;
    ++next;
  }
  return colors;
}

}  // namespace

PermGroup automorphism_group(const Graph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices) throw resource_error("graph exceeds the automorphism engine vertex bound");

  std::vector<Permutation> gens;
  std::vector<std::pair<int, int>> pins;
  std::uint64_t order = 1;

  std::vector<int> colors = internal::refine_colors(g, pinned_colors(n, pins, true));
  for (int v = 0; v < n; ++v) {
    int cell_size = 0;
    for (int w = 0; w < n; ++w) cell_size += colors[w] == colors[v];
    if (cell_size == 1) continue;

    std::uint64_t in_orbit = 1;  // v itself
    for (int u = 0; u < n; ++u) {
      if (u == v || colors[u] != colors[v]) continue;
      auto pins2 = pins;
      pins2.emplace_back(v, u);
      if (auto m = internal::search_mapping(g, g, pins2)) {
        gens.emplace_back(std::move(*m));
        ++in_orbit;
      }
    }
    if (order > UINT64_MAX / in_orbit) throw resource_error("automorphism group order exceeds 64 bits");
    order *= in_orbit;
    pins.emplace_back(v, v);
    colors = internal::refine_colors(g, pinned_colors(n, pins, true));
  }

  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  PermGroup group(n, std::move(gens));
  if (group.order() != order)
    throw verification_error("automorphism engine order mismatch against its stabilizer chain");
  return group;
}

bool has_nontrivial_vertex_stabilizer(const Graph& g, int fixed_vertex, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw resource_error("graph exceeds the automorphism engine vertex bound");
  std::vector<std::pair<int, int>> pins{{fixed_vertex, fixed_vertex}};
  return internal::search_mapping(g, g, pins, /*exclude_identity=*/true).has_value();
}

ActionReport action_report(const PermGroup& group) {
  ActionReport report;
  report.group_order = group.order();
  auto orbits = group.orbits();
  report.orbit_count = static_cast<int>(orbits.size());
  report.transitive = report.orbit_count == 1 && group.degree() > 0;
  // Semiregular iff every orbit has full group size (trivial stabilizers).
  report.semiregular = true;
  for (const auto& orbit : orbits)
    if (orbit.size() != report.group_order) report.semiregular = false;
  if (group.degree() == 0) report.semiregular = true;
  return report;
}

bool is_normal_in_aut(const Graph& g, const PermGroup& b) {
  for (const auto& gen : b.generators())
    for (auto [u, v] : g.edges())
      if (!g.has_edge(gen[u], gen[v]))
        throw precondition_error("B is not a subgroup of Aut(g)");
  PermGroup aut = automorphism_group(g);
  for (const auto& a : aut.generators())
    for (const auto& gen : b.generators())
      if (!b.contains(gen.conjugated_by(a))) return false;
  return true;
}

bool is_vertex_transitive(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  // Only orbit structure is needed, not the full group order.
  PermGroup aut = automorphism_group(g);
  return aut.orbits().size() == 1;
}

PermGroup bipartition_kernel(const Graph& g) {
  auto parts = bipartition(g);
  if (!parts) throw precondition_error("graph is not bipartite");
  if (!is_connected(g)) throw precondition_error("graph is not connected");
  std::vector<char> side(g.vertex_count(), 0);
  for (int v : (*parts)[1]) side[v] = 1;

  PermGroup aut = automorphism_group(g);
  std::vector<Permutation> preserving, swapping;
  for (const auto& a : aut.generators()) {
    // Connectedness makes every automorphism preserve or swap the two classes.
    if (g.vertex_count() > 0 && side[a[0]] == side[0])
      preserving.push_back(a);
    else
      swapping.push_back(a);
  }
  // Reidemeister-Schreier generators of the index-2 kernel over the
  // transversal {1, s0}.
  std::vector<Permutation> gens;
  if (swapping.empty()) {
    gens = preserving;
  } else {
    const Permutation& s0 = swapping.front();
    for (const auto& a : preserving) {
      gens.push_back(a);
      gens.push_back(s0.then(a).then(s0.inverse()));
    }
    for (const auto& a : swapping) {
      gens.push_back(a.then(s0.inverse()));
      gens.push_back(s0.then(a));
    }
  }
  PermGroup kernel(g.vertex_count(), std::move(gens));
  std::uint64_t expected = swapping.empty() ? aut.order() : aut.order() / 2;
  if (kernel.order() != expected)
    throw verification_error("bipartition kernel has unexpected index");
  return kernel;
}

bool is_block(const PermGroup& aut, const std::vector<int>& subset) {
  if (subset.empty()) throw precondition_error("block candidate must be non-empty");
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> start = subset;
  std::sort(start.begin(), start.end());
  seen.insert(start);
  queue.push_back(start);
  for (std::size_t at = 0; at < queue.size(); ++at) {
    for (const auto& gen : aut.generators()) {
      std::vector<int> image;
      image.reserve(queue[at].size());
      for (int v : queue[at]) image.push_back(gen[v]);
      std::sort(image.begin(), image.end());
      if (image == start) continue;
      bool disjoint = true;
      std::size_t i = 0, j = 0;
      while (i < image.size() && j < start.size()) {
        if (image[i] == start[j]) {
          disjoint = false;
          break;
        }
        (image[i] < start[j]) ? ++i : ++j;
      }
      if (!disjoint) return false;
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  return true;
}

bool is_block(const Graph& g, const std::vector<int>& subset) {
  return is_block(automorphism_group(g), subset);
}

}  // namespace bicay
