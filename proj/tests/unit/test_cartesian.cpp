#include <doctest.h>

#include <algorithm>
#include <random>

#include "bicay/aut.hpp"
#include "bicay/cartesian.hpp"
#include "bicay/catalog.hpp"
#include "bicay/constructions.hpp"
#include "bicay/errors.hpp"
#include "bicay/graph.hpp"
#include "support/oracles.hpp"

using namespace bicay;
using test_oracles::brute_prime_factors;

namespace {

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph k2_graph() {
  Graph g(2);
  g.add_edge(0, 1);
  return g;
}

bool same_factor_multiset(const FactorDecomposition& d, std::vector<std::string> brute) {
  // Compare up to isomorphism: match each factor against the brute list.
  std::vector<Graph> bg;
  for (const auto& s : brute) bg.push_back(graph6_decode(s));
  if (bg.size() != d.factors.size()) return false;
  std::vector<char> used(bg.size(), 0);
  for (const Graph& f : d.factors) {
    bool matched = false;
    for (std::size_t i = 0; i < bg.size() && !matched; ++i) {
      if (used[i] || bg[i].vertex_count() != f.vertex_count()) continue;
      if (are_graphs_isomorphic(f, bg[i])) {
        used[i] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

Graph random_connected_graph(std::mt19937& rng, int max_n) {
  return test_oracles::random_connected_graph(rng, 2, max_n);
}

}  // namespace

TEST_CASE("cartesian products") {
  Graph q2 = cartesian_product(k2_graph(), k2_graph());
  CHECK(are_graphs_isomorphic(q2, cycle_graph(4)).has_value());

  Graph q = k2_graph();
  for (int i = 0; i < 3; ++i) q = cartesian_product(q, k2_graph());
  CHECK(are_graphs_isomorphic(q, hypercube(4).graph).has_value());

  Graph big = cartesian_product(moebius_kantor().graph, k2_graph());
  CHECK(big.vertex_count() == 32);
  for (int v = 0; v < 32; ++v) CHECK(big.degree(v) == 4);
}

TEST_CASE("prime factorization of named graphs") {
  FactorDecomposition q4 = prime_factorization(hypercube(4).graph);
  CHECK(q4.factors.size() == 4);
  for (const Graph& f : q4.factors) CHECK(f.vertex_count() == 2);

  CHECK(prime_factorization(moebius_kantor().graph).factors.size() == 1);

  FactorDecomposition c4 = prime_factorization(cycle_graph(4));
  CHECK(c4.factors.size() == 2);

  CHECK(prime_factorization(cycle_graph(6)).factors.size() == 1);

  Graph two(2);
  CHECK_THROWS_AS(prime_factorization(two), precondition_error);
}

TEST_CASE("factorization round trip against explicit products") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 12; ++trial) {
    Graph x = random_connected_graph(rng, 4);
    Graph y = random_connected_graph(rng, 3);
    Graph prod = cartesian_product(x, y);
    FactorDecomposition d = prime_factorization(prod);
    CHECK(are_graphs_isomorphic(assemble(d), prod).has_value());
    auto fx = prime_factorization(x).factors.size();
    auto fy = prime_factorization(y).factors.size();
    CHECK(d.factors.size() == fx + fy);
  }
}

TEST_CASE("factorizer agrees with the brute-force oracle") {
  std::mt19937 rng(7151);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_connected_graph(rng, 10);
    CHECK(same_factor_multiset(prime_factorization(g), brute_prime_factors(g)));
  }
  // And on known products.
  for (const Graph& g :
       {cartesian_product(cycle_graph(3), k2_graph()),
        cartesian_product(cycle_graph(5), cycle_graph(3)), hypercube(3).graph})
    CHECK(same_factor_multiset(prime_factorization(g), brute_prime_factors(g)));
}

TEST_CASE("commutativity and associativity up to isomorphism") {
  Graph a = cycle_graph(3), b = cycle_graph(5), c = k2_graph();
  CHECK(are_graphs_isomorphic(cartesian_product(a, b), cartesian_product(b, a)).has_value());
  CHECK(are_graphs_isomorphic(cartesian_product(cartesian_product(a, b), c),
                              cartesian_product(a, cartesian_product(b, c)))
            .has_value());
}

TEST_CASE("relative primality") {
  CHECK(relatively_prime(moebius_kantor().graph, hypercube(2).graph));
  CHECK_FALSE(relatively_prime(cycle_graph(4), k2_graph()));
  CHECK(relatively_prime(cycle_graph(6), moebius_kantor().graph));
}

TEST_CASE("automorphisms of products with coprime factors") {
  Graph gpk2 = cartesian_product(moebius_kantor().graph, k2_graph());
  FactorDecomposition d = prime_factorization(gpk2);
  PermGroup lifted = aut_of_product(d);
  CHECK(lifted.order() == 192);
  CHECK(automorphism_group(gpk2).order() == 192);

  FactorDecomposition cyl = prime_factorization(cartesian_product(k2_graph(), cycle_graph(5)));
  CHECK(aut_of_product(cyl).order() == 20);

  // Repeated factors: the corollary does not apply.
  CHECK_THROWS_AS(aut_of_product(prime_factorization(cycle_graph(4))), precondition_error);
}

TEST_CASE("fiber blocks") {
  FactorDecomposition q2 = prime_factorization(cycle_graph(4));
  auto blocks = fiber_blocks(q2, 0);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].size() == 2);
  CHECK(blocks[1].size() == 2);
  // With repeated isomorphic factors the fibers need not be blocks: a
  // rotation of C4 moves a K2 fiber onto an overlapping one.
  Graph c4 = cycle_graph(4);
  CHECK_FALSE(is_block(c4, blocks[0]));

  Graph gpk2 = cartesian_product(moebius_kantor().graph, k2_graph());
  FactorDecomposition d = prime_factorization(gpk2);
  auto big_blocks = fiber_blocks(d, 3);
  std::vector<std::size_t> sizes;
  for (const auto& blk : big_blocks) sizes.push_back(blk.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 16});
  for (const auto& blk : big_blocks) CHECK(is_block(gpk2, blk));

  FactorDecomposition prime = prime_factorization(moebius_kantor().graph);
  auto whole = fiber_blocks(prime, 0);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].size() == 16);
}

TEST_CASE("K2 factors of Cayley graphs over generalized dicyclic groups") {
  // The splitting-involution claim fails in general: Cay(Dic3, {a^2, a^-2,
  // b, b^-1}) is C3 [] C4 = C3 [] K2 [] K2, a normal Cayley graph with a K2
  // prime factor whose connection set contains no involution at all. (The
  // fiber-block step breaks when the K2 factor repeats.)
  GroupTable dic3 = find_group("Dic3")->table;
  REQUIRE(is_generalized_dicyclic(dic3).has_value());
  std::vector<int> s{2, 4, 6, dic3.inv(6)};
  std::sort(s.begin(), s.end());
  for (int x : s) CHECK(element_order(dic3, x) != 2);
  Graph cay = cayley_graph(dic3, s);
  Graph c3(3), c4(4);
  for (int i = 0; i < 3; ++i) c3.add_edge(i, (i + 1) % 3);
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  CHECK(are_graphs_isomorphic(cay, cartesian_product(c3, c4)).has_value());
  int k2_count = 0;
  for (const Graph& f : prime_factorization(cay).factors)
    k2_count += f.vertex_count() == 2;
  CHECK(k2_count == 2);
  CHECK(is_normal_in_aut(cay, right_regular_group(dic3)));

  // What the product construction actually needs survives: every catalog
  // generalized dicyclic group (other than the Q8 x C2^r family) has a
  // normal Cayley graph with no K2 factor, and the filtered search finds it.
  for (const char* name : {"Dic3", "Q16", "C4:C4"}) {
    GroupTable g = find_group(name)->table;
    REQUIRE(is_generalized_dicyclic(g).has_value());
    ConnectionSearchResult r = normal_cayley_search(g, {}, /*require_k2_coprime=*/true);
    REQUIRE(r.status == SearchStatus::Found);
    Graph w = cayley_graph(g, r.witness);
    for (const Graph& f : prime_factorization(w).factors) CHECK(f.vertex_count() > 2);
    CHECK(is_normal_in_aut(w, right_regular_group(g)));
  }
}
