#include <doctest.h>

#include <algorithm>

#include "bicay/catalog.hpp"
#include "bicay/errors.hpp"
#include "bicay/group_table.hpp"

using namespace bicay;

namespace {

// Hand-written quaternion table over {1, -1, i, -i, j, -j, k, -k}, an
// independent oracle for the dicyclic construction.
GroupTable q8_literal() {
  // index: 1=0, -1=1, i=2, -i=3, j=4, -j=5, k=6, -k=7
  auto neg = [](int x) { return x < 2 ? x ^ 1 : ((x - 2) ^ 1) + 2; };
  return GroupTable::from_function(8, [&](int a, int b) -> int {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == 1) return neg(b);
    if (b == 1) return neg(a);
    int sign = (a & 1) ^ (b & 1);              // both units carry a sign bit
    int ia = (a - 2) >> 1, ib = (b - 2) >> 1;  // 0=i, 1=j, 2=k
    if (ia == ib) return sign == 0 ? 1 : 0;    // x * x = -1
    int ic = 3 - ia - ib;
    bool forward = (ib - ia + 3) % 3 == 1;  // i*j=k, j*k=i, k*i=j
    int s = (forward ? 0 : 1) ^ sign;
    return 2 * ic + 2 + s;
  });
}

}  // namespace

TEST_CASE("group_from_generators") {
  Permutation swap2 = Permutation::from_cycles(2, {{0, 1}});
  CHECK(group_from_generators({swap2}).table.order() == 2);

  Permutation r = Permutation::from_cycles(3, {{0, 1, 2}});
  Permutation t = Permutation::from_cycles(3, {{0, 1}});
  GeneratedGroup s3 = group_from_generators({r, t});
  CHECK(s3.table.order() == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(s3.embedding[a] * s3.embedding[b] == s3.embedding[s3.table.mul(a, b)]);

  CHECK_THROWS_AS(group_from_generators({Permutation::from_cycles(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}})}, 8),
                  resource_error);
}

TEST_CASE("direct products") {
  GroupTable c2c2 = direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2));
  CHECK(c2c2.order() == 4);
  CHECK(exponent(c2c2) == 2);

  GroupTable q8c3 = direct_product(GroupTable::dicyclic(2), GroupTable::cyclic(3));
  CHECK(q8c3.order() == 24);
  CHECK_FALSE(is_abelian(q8c3));
  CHECK(exponent(q8c3) == 12);

  GroupTable g = GroupTable::dicyclic(3);
  CHECK(are_isomorphic(direct_product(GroupTable::trivial(), g), g));
}

TEST_CASE("semidirect_by_inversion") {
  CHECK(are_isomorphic(semidirect_by_inversion(GroupTable::cyclic(3)), find_group("D6")->table));
  CHECK(are_isomorphic(semidirect_by_inversion(GroupTable::cyclic(4)), find_group("D8")->table));
  // Inversion fixes an exponent-2 group elementwise, so C2^2 just gains a factor.
  CHECK(are_isomorphic(semidirect_by_inversion(GroupTable::elementary_abelian_2(2)),
                       GroupTable::elementary_abelian_2(3)));
  CHECK_THROWS_AS(semidirect_by_inversion(GroupTable::dicyclic(2)), precondition_error);

  // The first |A| indices multiply as A (index-2 embedding).
  GroupTable a = GroupTable::cyclic(5);
  GroupTable h = semidirect_by_inversion(a);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(h.mul(x, y) == a.mul(x, y));
  CHECK(exponent(h) <= 2 * exponent(a));
}

TEST_CASE("structural invariants") {
  StructuralInvariants c4c2 =
      structural_invariants(direct_product(GroupTable::cyclic(4), GroupTable::cyclic(2)));
  CHECK(c4c2.abelian);
  CHECK(c4c2.exponent == 4);

  GroupTable q8 = GroupTable::dicyclic(2);
  StructuralInvariants inv = structural_invariants(q8);
  CHECK_FALSE(inv.abelian);
  CHECK(inv.exponent == 4);
  CHECK(inv.center_order == 2);
  CHECK(inv.order_spectrum == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});

  CHECK(are_isomorphic(q8, q8_literal()));

  StructuralInvariants e = structural_invariants(GroupTable::elementary_abelian_2(3));
  CHECK(e.abelian);
  CHECK(e.exponent == 2);
}

TEST_CASE("generalized dicyclic witness") {
  GroupTable q8 = GroupTable::dicyclic(2);
  auto w = is_generalized_dicyclic(q8);
  REQUIRE(w.has_value());
  CHECK(w->abelian_index2.size() == 4);
  CHECK(element_order(q8, w->b) == 4);
  for (int x : w->abelian_index2)
    CHECK(q8.mul(q8.mul(q8.inv(w->b), x), w->b) == q8.inv(x));

  CHECK_FALSE(is_generalized_dicyclic(find_group("D8")->table).has_value());
  CHECK_FALSE(is_generalized_dicyclic(GroupTable::cyclic(8)).has_value());

  // Self-oracle: a reversed-order scan agrees on existence across the catalog.
  for (const CatalogEntry* e : catalog_small_groups(16)) {
    const GroupTable& g = e->table;
    bool found = false;
    if (!is_abelian(g)) {
      auto subs = index2_subgroups(g);
      for (auto it = subs.rbegin(); it != subs.rend() && !found; ++it) {
        std::vector<char> in(g.order(), 0);
        for (int x : *it) in[x] = 1;
        bool abelian = true;
        for (int x : *it)
          for (int y : *it) abelian = abelian && g.mul(x, y) == g.mul(y, x);
        if (!abelian) continue;
        for (int b = g.order() - 1; b >= 1 && !found; --b) {
          if (in[b] || element_order(g, b) != 4) continue;
          bool ok = true;
          for (int x : *it) ok = ok && g.mul(g.mul(g.inv(b), x), b) == g.inv(x);
          found = ok;
        }
      }
    }
    CHECK(found == is_generalized_dicyclic(g).has_value());
  }
}

TEST_CASE("split off elementary abelian 2-part") {
  GroupTable q8 = GroupTable::dicyclic(2);
  ElementaryAbelianSplit s0 = split_off_elementary_abelian_2(q8);
  CHECK(s0.rank == 0);
  CHECK(are_isomorphic(s0.g1, q8));

  ElementaryAbelianSplit s1 =
      split_off_elementary_abelian_2(direct_product(q8, GroupTable::cyclic(2)));
  CHECK(s1.rank == 1);
  CHECK(are_isomorphic(s1.g1, q8));

  ElementaryAbelianSplit s4 = split_off_elementary_abelian_2(GroupTable::elementary_abelian_2(4));
  CHECK(s4.rank == 4);
  CHECK(s4.g1.order() == 1);

  // The recorded coordinates are an isomorphism onto g1 x C2^rank.
  for (const char* name : {"Q8xC2", "D8xC2", "C6xC2", "C4xC2^2", "Dic3"}) {
    GroupTable g = find_group(name)->table;
    ElementaryAbelianSplit s = split_off_elementary_abelian_2(g);
    GroupTable rebuilt = s.g1;
    for (int i = 0; i < s.rank; ++i) rebuilt = direct_product(rebuilt, GroupTable::cyclic(2));
    CHECK(are_isomorphic(g, rebuilt));
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        auto [a1, av] = s.coords[a];
        auto [b1, bv] = s.coords[b];
        auto [p1, pv] = s.coords[g.mul(a, b)];
        CHECK(p1 == s.g1.mul(a1, b1));
        CHECK(pv == (av ^ bv));
      }
  }
}

TEST_CASE("isomorphism testing") {
  Permutation r = Permutation::from_cycles(3, {{0, 1, 2}});
  Permutation t = Permutation::from_cycles(3, {{0, 1}});
  GroupTable sym3 = group_from_generators({r, t}).table;
  CHECK(are_isomorphic(find_group("D6")->table, sym3));

  CHECK_FALSE(are_isomorphic(GroupTable::dicyclic(2), find_group("D8")->table));
  CHECK_FALSE(are_isomorphic(direct_product(GroupTable::cyclic(4), GroupTable::cyclic(2)),
                             GroupTable::elementary_abelian_2(3)));

  GroupTable a = semidirect_by_inversion(GroupTable::cyclic(6));
  GroupTable b = find_group("D12")->table;
  auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      CHECK((*iso)[a.mul(x, y)] == b.mul((*iso)[x], (*iso)[y]));
}

TEST_CASE("isomorphism is an equivalence on the catalog") {
  std::vector<const CatalogEntry*> small;
  for (auto* e : catalog_small_groups(12))
    if (e->table.order() <= 12) small.push_back(e);
  for (auto* e : small) CHECK(are_isomorphic(e->table, e->table));  // reflexive
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i + 1; j < small.size(); ++j) {
      bool ij = are_isomorphic(small[i]->table, small[j]->table);
      bool ji = are_isomorphic(small[j]->table, small[i]->table);
      CHECK(ij == ji);  // symmetric
      CHECK_FALSE(ij);  // entries are pairwise non-isomorphic
    }

  // Transitivity across three distinct realizations of the same group.
  Permutation r = Permutation::from_cycles(3, {{0, 1, 2}});
  Permutation t = Permutation::from_cycles(3, {{0, 1}});
  GroupTable a = find_group("D6")->table;
  GroupTable b = group_from_generators({r, t}).table;
  GroupTable c = GroupTable::from_function(6, [&](int x, int y) {
    // relabeled copy: conjugate the table by a fixed permutation
    static const int p[6] = {0, 3, 4, 1, 5, 2}, q[6] = {0, 3, 5, 1, 2, 4};
    return p[find_group("D6")->table.mul(q[x], q[y])];
  });
  CHECK(are_isomorphic(a, b));
  CHECK(are_isomorphic(b, c));
  CHECK(are_isomorphic(a, c));
}
