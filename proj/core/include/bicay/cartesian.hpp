#pragma once

#include <string>
#include <vector>

#include "bicay/graph.hpp"
#include "bicay/perm_group.hpp"

namespace bicay {

/// x[]y with row-major vertex order: vertex (u, v) has index u*|y| + v.
Graph cartesian_product(const Graph& x, const Graph& y);

/// A certified prime factor decomposition. Every factor is prime with >= 2
/// vertices (the one-vertex graph decomposes into zero factors), and
/// coordinates[v][i] is the position of v in factors[i]. Reassembling via the
/// product rule reproduces the input exactly.
struct FactorDecomposition {
  std::vector<Graph> factors;
  std::vector<std::vector<int>> coordinates;
};

/// Factorizes a connected graph over the Cartesian product using the
/// square-property edge relation; the result is validated by reassembly.
FactorDecomposition prime_factorization(const Graph& g);

/// Rebuilds the product graph described by a decomposition (for checks).
Graph assemble(const FactorDecomposition& d);

/// No common prime factor (both graphs connected).
bool relatively_prime(const Graph& x, const Graph& y);

/// Aut of the assembled product acting coordinatewise, valid only when the
/// factors are pairwise relatively prime (throws precondition_error
/// otherwise). Cross-checked against the direct engine in tests.
PermGroup aut_of_product(const FactorDecomposition& d);

/// The fibers V_{x_i} through `base_vertex`: vary coordinate i, fix the rest.
std::vector<std::vector<int>> fiber_blocks(const FactorDecomposition& d, int base_vertex);

/// Text report: "factors <k>", one graph6 line per factor, "coords", then
/// "v: (c1,...,ck)" per vertex.
std::string write_decomposition_report(const FactorDecomposition& d);

}  // namespace bicay
