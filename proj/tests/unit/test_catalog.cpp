#include <doctest.h>

#include <map>

#include "bicay/catalog.hpp"
#include "bicay/group_table.hpp"

using namespace bicay;

TEST_CASE("catalog is complete and irredundant up to order 16") {
  // Known number of groups per order.
  const std::map<int, int> expected{{1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},
                                    {7, 1},  {8, 5},  {9, 2},  {10, 2}, {11, 1}, {12, 5},
                                    {13, 1}, {14, 2}, {15, 1}, {16, 14}};
  std::map<int, int> got;
  for (const CatalogEntry* e : catalog_small_groups(16))
    if (e->table.order() <= 16) ++got[e->table.order()];
  CHECK(got == expected);

  // Pairwise non-isomorphic within each order (completeness then follows
  // from the counts).
  auto groups = catalog_small_groups(16);
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      if (groups[i]->table.order() == groups[j]->table.order())
        CHECK_FALSE(are_isomorphic(groups[i]->table, groups[j]->table));
}

TEST_CASE("stored generators reproduce each entry") {
  for (const CatalogEntry* e : catalog_small_groups(16)) {
    GeneratedGroup g = group_from_generators(e->generators);
    CHECK(g.table.order() == e->table.order());
    CHECK(are_isomorphic(g.table, e->table));
  }
}

TEST_CASE("exceptional entries") {
  auto members = class_e_members();
  CHECK(members.size() == 13);
  CHECK(find_group("E7")->table.order() == 27);
  CHECK(find_group("Q8xC4")->table.order() == 32);
  CHECK(find_group("E6")->table.order() == 18);

  // All exceptional entries present even under a small order bound.
  int e_count = 0;
  for (const CatalogEntry* e : catalog_small_groups(8))
    if (class_e_item(e->name) > 0) ++e_count;
  CHECK(e_count == 13);
}

TEST_CASE("catalog bounds and lookup") {
  auto only_trivial = catalog_small_groups(1);
  int small = 0;
  for (auto* e : only_trivial)
    if (e->table.order() <= 1) ++small;
  CHECK(small == 1);

  CHECK(find_group("Q8").has_value());
  CHECK(find_group("Alt4").has_value());
  CHECK_FALSE(find_group("nonsense").has_value());

  auto c20 = find_group("C20");
  REQUIRE(c20.has_value());
  CHECK(c20->table.order() == 20);
  auto d20 = find_group("D20");
  REQUIRE(d20.has_value());
  CHECK(d20->table.order() == 20);
  CHECK_FALSE(is_abelian(d20->table));
  auto q8c2sq = find_group("Q8xC2^2");
  REQUIRE(q8c2sq.has_value());
  CHECK(q8c2sq->table.order() == 32);
  CHECK(is_generalized_dicyclic(q8c2sq->table).has_value());
}
