#include <algorithm>

#include "bicay/errors.hpp"
#include "bicay/graph.hpp"
#include "refine_search.hpp"

namespace bicay {

std::optional<std::vector<int>> are_graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  if (a.vertex_count() > 1024) throw resource_error("isomorphism test beyond configured bound");

  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;

  auto map = internal::search_mapping(a, b, {});
  if (map) {
    // The searcher already verified edges; keep an independent sanity check.
    for (auto [u, v] : a.edges())
      if (!b.has_edge((*map)[u], (*map)[v]))
        throw verification_error("isomorphism search returned a non-isomorphism");
  }
  return map;
}

}  // namespace bicay
