#include <doctest.h>

#include "bicay/errors.hpp"
#include "bicay/perm_group.hpp"
#include "bicay/permutation.hpp"

using namespace bicay;

TEST_CASE("permutation basics") {
  Permutation id(4);
  CHECK(id.is_identity());
  Permutation c = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  CHECK(c[0] == 1);
  CHECK(c.order() == 4);
  CHECK((c * c.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), validation_error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), validation_error);
}

TEST_CASE("composition order is left-to-right") {
  Permutation a = Permutation::from_cycles(3, {{0, 1}});
  Permutation b = Permutation::from_cycles(3, {{1, 2}});
  // x^(ab) = (x^a)^b: 0 -> 1 -> 2
  CHECK((a * b)[0] == 2);
  CHECK((b * a)[0] == 1);
}

TEST_CASE("permutation text round trip") {
  Permutation p = Permutation::from_cycles(5, {{0, 3}, {1, 4, 2}});
  CHECK(Permutation::parse(p.to_string()) == p);
}

TEST_CASE("perm group order and membership") {
  Permutation c4 = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  PermGroup rot(4, {c4});
  CHECK(rot.order() == 4);
  CHECK(rot.contains(c4 * c4));
  CHECK_FALSE(rot.contains(Permutation::from_cycles(4, {{0, 1}})));

  Permutation s1 = Permutation::from_cycles(4, {{0, 1}});
  Permutation s2 = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  PermGroup sym4(4, {s1, s2});
  CHECK(sym4.order() == 24);
  CHECK(sym4.elements().size() == 24);
}

TEST_CASE("perm group order equals exhaustive closure size") {
  // A few groups with known orders, compared against element enumeration.
  Permutation a = Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}});
  Permutation b = Permutation::from_cycles(6, {{1, 5}, {2, 4}});
  PermGroup d12(6, {a, b});
  CHECK(d12.order() == 12);
  CHECK(d12.elements().size() == d12.order());

  PermGroup trivial(5, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.orbits().size() == 5);
}
