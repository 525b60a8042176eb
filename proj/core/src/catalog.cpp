#include "bicay/catalog.hpp"

#include <algorithm>

#include "bicay/errors.hpp"

namespace bicay {

namespace {

Permutation nat_cycle(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Permutation(std::move(img));
}

Permutation nat_reflection(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (n - i) % n;
  return Permutation(std::move(img));
}

CatalogEntry with_regular_generators(std::string name, GroupTable table,
                                     std::map<std::string, int> marked = {}) {
  CatalogEntry e;
  e.name = std::move(name);
  e.generators = regular_representation_generators(table);
  e.table = std::move(table);
  e.marked = std::move(marked);
  return e;
}

CatalogEntry cyclic_entry(int n) {
  CatalogEntry e;
  e.name = "C" + std::to_string(n);
  e.table = GroupTable::cyclic(n);
  e.generators = {nat_cycle(n)};
  return e;
}

// Dihedral group of order 2n as inversion adjoined to C_n; elements are
// e*n + i, the rotation generator a = 1 and a reflection b = n.
CatalogEntry dihedral_entry(int n) {
  CatalogEntry e;
  e.name = "D" + std::to_string(2 * n);
  e.table = semidirect_by_inversion(GroupTable::cyclic(n));
  e.generators = {nat_cycle(n), nat_reflection(n)};
  e.marked = {{"a", 1}, {"b", n}};
  return e;
}

CatalogEntry elementary_entry(int rank) {
  CatalogEntry e;
  e.name = "C2^" + std::to_string(rank);
  e.table = GroupTable::elementary_abelian_2(rank);
  for (int b = 0; b < rank; ++b) e.generators.push_back(right_translation(e.table, 1 << b));
  return e;
}

GroupTable modular16() {
  // <a,b | a^8 = b^2 = 1, bab = a^5>, elements e*8 + i.
  return GroupTable::from_function(16, [](int x, int y) {
    int i = x % 8, e = x / 8;
    int j = y % 8, f = y / 8;
    return ((e ^ f) * 8) + ((i + j * (e ? 5 : 1)) % 8);
  });
}

GroupTable semidihedral16() {
  // <a,b | a^8 = b^2 = 1, bab = a^3>, elements e*8 + i.
  return GroupTable::from_function(16, [](int x, int y) {
    int i = x % 8, e = x / 8;
    int j = y % 8, f = y / 8;
    return ((e ^ f) * 8) + ((i + j * (e ? 3 : 1)) % 8);
  });
}

GroupTable c4_sd_c4() {
  // <a,b | a^4 = b^4 = 1, b^-1 a b = a^-1>, elements i*4 + j.
  return GroupTable::from_function(16, [](int x, int y) {
    int i = x / 4, j = x % 4;
    int k = y / 4, l = y % 4;
    int ii = (j % 2) ? (i - k + 8) % 4 : (i + k) % 4;
    return ii * 4 + (j + l) % 4;
  });
}

GroupTable c2sq_sd_c4() {
  // (C2 x C2) : C4 with the order-4 generator swapping the two factors;
  // elements v*4 + j, v a 2-bit vector.
  auto swap_bits = [](int v) { return ((v & 1) << 1) | ((v >> 1) & 1); };
  return GroupTable::from_function(16, [=](int x, int y) {
    int v = x / 4, j = x % 4;
    int w = y / 4, l = y % 4;
    int ww = (j % 2) ? swap_bits(w) : w;
    return (v ^ ww) * 4 + (j + l) % 4;
  });
}

GroupTable pauli16() {
  // Central product C4 o D8: phases i^s times X^a Z^b with
  // X^a1 Z^b1 * X^a2 Z^b2 = (-1)^(b1 a2) X^(a1+a2) Z^(b1+b2);
  // elements s*4 + a*2 + b.
  return GroupTable::from_function(16, [](int x, int y) {
    int s1 = x / 4, a1 = (x >> 1) & 1, b1 = x & 1;
    int s2 = y / 4, a2 = (y >> 1) & 1, b2 = y & 1;
    int s = (s1 + s2 + 2 * (b1 & a2)) % 4;
    return s * 4 + ((a1 ^ a2) << 1) + (b1 ^ b2);
  });
}

GroupTable heisenberg3() {
  // Exponent-3 extraspecial group of order 27: triples over Z3 with
  // (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2); elements x*9+y*3+z.
  return GroupTable::from_function(27, [](int u, int v) {
    int x1 = u / 9, y1 = (u / 3) % 3, z1 = u % 3;
    int x2 = v / 9, y2 = (v / 3) % 3, z2 = v % 3;
    return ((x1 + x2) % 3) * 9 + ((y1 + y2) % 3) * 3 + (z1 + z2 + x1 * y2) % 3;
  });
}

CatalogEntry alt4_entry() {
  CatalogEntry e;
  e.name = "Alt4";
  Permutation r({1, 2, 0, 3});   // (0 1 2)
  Permutation s({1, 0, 3, 2});   // (0 1)(2 3)
  GeneratedGroup gen = group_from_generators({r, s});
  e.table = gen.table;
  e.generators = {r, s};
  auto locate = [&](const Permutation& p) {
    for (int i = 0; i < e.table.order(); ++i)
      if (gen.embedding[i] == p) return i;
    throw verification_error("Alt4 element lookup failed");
  };
  e.marked = {{"r123", locate(Permutation({1, 2, 0, 3}))},
              {"r132", locate(Permutation({2, 0, 1, 3}))},
              {"r124", locate(Permutation({1, 3, 2, 0}))},
              {"r142", locate(Permutation({3, 0, 2, 1}))}};
  return e;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw verification_error("catalog validation failed: " + what);
}

// The stored relations of the exceptional groups, checked on the marked
// elements of each realization at load time.
void validate_entry(const CatalogEntry& e) {
  GeneratedGroup regen = group_from_generators(e.generators);
  require(regen.table.order() == e.table.order(), e.name + ": stored generators reproduce order");

  const GroupTable& g = e.table;
  auto m = [&](const std::string& key) { return e.marked.at(key); };
  if (e.name == "D6" || e.name == "D8" || e.name == "D10" || e.name.starts_with("D")) {
    if (e.marked.count("a")) {
      int a = m("a"), b = m("b");
      int n = g.order() / 2;
      require(element_order(g, a) == n && element_order(g, b) == 2, e.name + ": a^n = b^2 = 1");
      require(g.mul(g.mul(g.inv(b), a), b) == g.inv(a), e.name + ": b^-1 a b = a^-1");
    }
  }
  if (e.name == "E4") {
    int a = m("a"), b = m("b"), c = m("c");
    require(element_order(g, a) == 2 && element_order(g, b) == 2 && element_order(g, c) == 2,
            "E4: a^2 = b^2 = c^2 = 1");
    int abc = g.mul_word({a, b, c});
    require(abc == g.mul_word({b, c, a}) && abc == g.mul_word({c, a, b}), "E4: abc = bca = cab");
    require(closure(g, {a, b, c}).size() == 16u, "E4: <a,b,c> has order 16");
  }
  if (e.name == "E5") {
    int a = m("a"), b = m("b");
    require(element_order(g, a) == 8 && element_order(g, b) == 2, "E5: a^8 = b^2 = 1");
    require(g.mul_word({b, a, b}) == g.power(a, 5), "E5: bab = a^5");
    require(closure(g, {a, b}).size() == 16u, "E5: <a,b> has order 16");
  }
  if (e.name == "E6") {
    int a = m("a"), b = m("b"), c = m("c");
    require(element_order(g, a) == 3 && element_order(g, b) == 3 && element_order(g, c) == 2,
            "E6: a^3 = b^3 = c^2 = 1");
    require(g.mul(a, b) == g.mul(b, a), "E6: ab = ba");
    require(element_order(g, g.mul(c, a)) == 2 && element_order(g, g.mul(c, b)) == 2,
            "E6: (ca)^2 = (cb)^2 = 1");
    require(closure(g, {a, b, c}).size() == 18u, "E6: <a,b,c> has order 18");
  }
  if (e.name == "E7") {
    int a = m("a"), b = m("b"), c = m("c");
    require(element_order(g, a) == 3 && element_order(g, b) == 3 && element_order(g, c) == 3,
            "E7: a^3 = b^3 = c^3 = 1");
    require(g.mul(a, c) == g.mul(c, a) && g.mul(b, c) == g.mul(c, b), "E7: c is central");
    require(g.mul_word({g.inv(a), g.inv(b), a, b}) == c, "E7: c = [a,b]");
    require(g.order() == 27, "E7: order 27");
  }
  if (e.name == "Q8xC3" || e.name == "Q8xC4") {
    require(!is_abelian(g), e.name + ": nonabelian");
  }
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;

  GroupTable q8 = GroupTable::dicyclic(2);

  auto add = [&](CatalogEntry e) { cat.push_back(std::move(e)); };

  add(cyclic_entry(1));
  add(cyclic_entry(2));
  add(cyclic_entry(3));
  add(cyclic_entry(4));
  add(elementary_entry(2));
  add(cyclic_entry(5));
  add(cyclic_entry(6));
  add(dihedral_entry(3));
  add(cyclic_entry(7));
  add(cyclic_entry(8));
  add(with_regular_generators("C4xC2", direct_product(GroupTable::cyclic(4), GroupTable::cyclic(2))));
  add(elementary_entry(3));
  add(dihedral_entry(4));
  add(with_regular_generators("Q8", q8, {{"i", 1}, {"j", 4}}));
  add(cyclic_entry(9));
  add(with_regular_generators("C3^2", direct_product(GroupTable::cyclic(3), GroupTable::cyclic(3))));
  add(cyclic_entry(10));
  add(dihedral_entry(5));
  add(cyclic_entry(11));
  add(cyclic_entry(12));
  add(with_regular_generators("C6xC2", direct_product(GroupTable::cyclic(6), GroupTable::cyclic(2))));
  add(dihedral_entry(6));
  add(with_regular_generators("Dic3", GroupTable::dicyclic(3)));
  add(alt4_entry());
  add(cyclic_entry(13));
  add(cyclic_entry(14));
  add(dihedral_entry(7));
  add(cyclic_entry(15));
  add(cyclic_entry(16));
  add(with_regular_generators("C4xC4", direct_product(GroupTable::cyclic(4), GroupTable::cyclic(4))));
  add(with_regular_generators("C8xC2", direct_product(GroupTable::cyclic(8), GroupTable::cyclic(2))));
  add(with_regular_generators("C4xC2^2",
                              direct_product(GroupTable::cyclic(4), GroupTable::elementary_abelian_2(2))));
  add(elementary_entry(4));
  add(dihedral_entry(8));
  add(with_regular_generators("SD16", semidihedral16(), {{"a", 1}, {"b", 8}}));
  add(with_regular_generators("Q16", GroupTable::dicyclic(4)));
  add(with_regular_generators("E5", modular16(), {{"a", 1}, {"b", 8}}));
  add(with_regular_generators("E4", pauli16(), {{"a", 2}, {"b", 7}, {"c", 1}}));
  add(with_regular_generators("D8xC2",
                              direct_product(semidirect_by_inversion(GroupTable::cyclic(4)),
                                             GroupTable::cyclic(2))));
  add(with_regular_generators("Q8xC2", direct_product(q8, GroupTable::cyclic(2))));
  add(with_regular_generators("C4:C4", c4_sd_c4()));
  add(with_regular_generators("C2^2:C4", c2sq_sd_c4()));

  // Exceptional groups beyond order 16, always present.
  add(with_regular_generators(
      "E6", semidirect_by_inversion(direct_product(GroupTable::cyclic(3), GroupTable::cyclic(3))),
      {{"a", 3}, {"b", 1}, {"c", 9}}));
  add(with_regular_generators("Q8xC3", direct_product(q8, GroupTable::cyclic(3))));
  add(with_regular_generators("E7", heisenberg3(), {{"a", 9}, {"b", 3}, {"c", 1}}));
  add(with_regular_generators("Q8xC4", direct_product(q8, GroupTable::cyclic(4))));

  std::stable_sort(cat.begin(), cat.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) {
                     return a.table.order() < b.table.order();
                   });
  for (const auto& e : cat) validate_entry(e);
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& small_group_catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

std::vector<const CatalogEntry*> catalog_small_groups(int max_order) {
  if (max_order > 64) throw resource_error("catalog bound is 64");
  std::vector<const CatalogEntry*> out;
  for (const auto& e : small_group_catalog()) {
    if (e.table.order() <= max_order || class_e_item(e.name) > 0) out.push_back(&e);
  }
  return out;
}

int class_e_item(const std::string& name) {
  if (name == "C2^2" || name == "C2^3" || name == "C2^4") return 1;
  if (name == "D6" || name == "D8" || name == "D10") return 2;
  if (name == "Alt4") return 3;
  if (name == "E4") return 4;
  if (name == "E5") return 5;
  if (name == "E6") return 6;
  if (name == "E7") return 7;
  if (name == "Q8xC3" || name == "Q8xC4") return 8;
  return 0;
}

std::vector<const CatalogEntry*> class_e_members() {
  std::vector<const CatalogEntry*> out;
  for (int item = 1; item <= 8; ++item)
    for (const auto& e : small_group_catalog())
      if (class_e_item(e.name) == item) out.push_back(&e);
  return out;
}

std::optional<CatalogEntry> find_group(const std::string& name) {
  for (const auto& e : small_group_catalog())
    if (e.name == name) return e;

  auto parse_tail = [](const std::string& s, const std::string& prefix) -> std::optional<int> {
    if (!s.starts_with(prefix)) return std::nullopt;
    std::string tail = s.substr(prefix.size());
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    return std::stoi(tail);
  };

  if (auto r = parse_tail(name, "Q8xC2^")) {
    if (*r < 0 || *r > 4) return std::nullopt;
    GroupTable g = GroupTable::dicyclic(2);
    for (int i = 0; i < *r; ++i) g = direct_product(g, GroupTable::cyclic(2));
    return with_regular_generators(name, std::move(g));
  }
  if (auto n = parse_tail(name, "Dic")) {
    if (*n < 2 || 4 * *n > 64) return std::nullopt;
    return with_regular_generators(name, GroupTable::dicyclic(*n));
  }
  if (auto n = parse_tail(name, "C")) {
    if (*n < 1 || *n > 64) return std::nullopt;
    return cyclic_entry(*n);
  }
  if (auto n = parse_tail(name, "D")) {
    if (*n < 6 || *n > 64 || *n % 2) return std::nullopt;
    return dihedral_entry(*n / 2);
  }
  return std::nullopt;
}

}  // namespace bicay
