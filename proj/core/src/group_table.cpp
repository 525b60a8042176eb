#include "bicay/group_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "bicay/errors.hpp"

namespace bicay {

namespace {

// Deterministic xorshift for associativity spot checks on large tables.
struct SplitMix {
  std::uint64_t s = 0x9e3779b97f4a7c15ULL;
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

}  // namespace

void GroupTable::finish() {
  const int n = order_;
  if (n <= 0) throw validation_error("group order must be positive");
  for (int x : mul_)
    if (x < 0 || x >= n) throw validation_error("multiplication table entry out of range");
  for (int a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      throw validation_error("element 0 is not an identity");
  }
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0) throw validation_error("one-sided inverse");
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw validation_error("element without inverse");
  }
  // Cancellation: rows and columns must be permutations.
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int p = mul(a, b);
      if (seen[p]) throw validation_error("row is not a permutation");
      seen[p] = 1;
    }
  }
  // Associativity: exhaustive up to order 64, deterministic samples beyond.
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw validation_error("multiplication is not associative");
  } else {
    SplitMix rng;
    for (int t = 0; t < 40000; ++t) {
      int a = static_cast<int>(rng.next() % n);
      int b = static_cast<int>(rng.next() % n);
      int c = static_cast<int>(rng.next() % n);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw validation_error("multiplication is not associative");
    }
  }
}

int GroupTable::mul_word(const std::vector<int>& word) const {
  int acc = 0;
  for (int w : word) acc = mul(acc, w);
  return acc;
}

int GroupTable::power(int a, int e) const {
  int acc = 0;
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  for (int i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

GroupTable GroupTable::trivial() { return cyclic(1); }

GroupTable GroupTable::cyclic(int n) {
  return from_function(n, [n](int a, int b) { return (a + b) % n; });
}

GroupTable GroupTable::elementary_abelian_2(int rank) {
  if (rank < 0 || rank > 16) throw resource_error("elementary abelian rank out of range");
  int n = 1 << rank;
  return from_function(n, [](int a, int b) { return a ^ b; });
}

GroupTable GroupTable::dicyclic(int m) {
  if (m < 1) throw validation_error("dicyclic parameter must be positive");
  // Elements a^i b^e with a of order 2m, b^2 = a^m, b a b^-1 = a^-1.
  const int two_m = 2 * m;
  auto idx = [two_m](int i, int e) { return e * two_m + ((i % two_m) + two_m) % two_m; };
  return from_function(4 * m, [=](int x, int y) {
    int i = x % two_m, e = x / two_m;
    int j = y % two_m, f = y / two_m;
    if (e == 0) return idx(i + j, f);
    if (f == 0) return idx(i - j, 1);
    return idx(i - j + m, 0);
  });
}

GroupTable GroupTable::from_function(int n, const std::function<int(int, int)>& f) {
  GroupTable g;
  g.order_ = n;
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul_[a * n + b] = f(a, b);
  g.finish();
  return g;
}

GeneratedGroup group_from_generators(const std::vector<Permutation>& gens, int max_order) {
  if (gens.empty()) throw precondition_error("generator list is empty");
  const int degree = gens[0].degree();
  for (const auto& p : gens)
    if (p.degree() != degree) throw precondition_error("generators have mixed degrees");

  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::map<Permutation, int> index{{elements[0], 0}};
  for (std::size_t at = 0; at < elements.size(); ++at) {
    for (const auto& s : gens) {
      Permutation next = elements[at].then(s);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(next));
        if (static_cast<int>(elements.size()) > max_order)
          throw resource_error("generated group exceeds the configured order bound");
      }
    }
  }

  const int n = static_cast<int>(elements.size());
  GroupTable table = GroupTable::from_function(
      n, [&](int a, int b) { return index.at(elements[a].then(elements[b])); });
  return GeneratedGroup{std::move(table), std::move(elements)};
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int nb = b.order();
  return GroupTable::from_function(a.order() * nb, [&](int x, int y) {
    return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  });
}

GroupTable semidirect_by_inversion(const GroupTable& a) {
  if (!is_abelian(a)) throw precondition_error("inversion is an automorphism only of abelian groups");
  const int n = a.order();
  return GroupTable::from_function(2 * n, [&](int x, int y) {
    int ax = x % n, ex = x / n;
    int ay = y % n, ey = y / n;
    int prod = a.mul(ax, ex ? a.inv(ay) : ay);
    return (ex ^ ey) * n + prod;
  });
}

int element_order(const GroupTable& g, int a) {
  int ord = 1;
  for (int acc = a; acc != 0; acc = g.mul(acc, a)) ++ord;
  return ord;
}

bool is_abelian(const GroupTable& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

int exponent(const GroupTable& g) {
  int e = 1;
  for (int a = 0; a < g.order(); ++a) e = std::lcm(e, element_order(g, a));
  return e;
}

std::vector<int> center_elements(const GroupTable& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

StructuralInvariants structural_invariants(const GroupTable& g) {
  StructuralInvariants inv;
  inv.abelian = is_abelian(g);
  inv.exponent = 1;
  for (int a = 0; a < g.order(); ++a) {
    int o = element_order(g, a);
    inv.exponent = std::lcm(inv.exponent, o);
    ++inv.order_spectrum[o];
  }
  inv.center_order = static_cast<int>(center_elements(g).size());
  return inv;
}

std::vector<int> closure(const GroupTable& g, std::vector<int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (int s : seed)
    if (!in[s]) {
      in[s] = 1;
      elems.push_back(s);
    }
  for (std::size_t at = 0; at < elems.size(); ++at) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      int p = g.mul(elems[at], elems[j]);
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(p);
      }
      p = g.mul(elems[j], elems[at]);
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> generating_set(const GroupTable& g) {
  std::vector<int> gens;
  std::vector<int> have{0};
  while (static_cast<int>(have.size()) < g.order()) {
    int next = -1;
    std::vector<char> in(g.order(), 0);
    for (int e : have) in[e] = 1;
    for (int a = 1; a < g.order(); ++a)
      if (!in[a]) {
        next = a;
        break;
      }
    gens.push_back(next);
    have = closure(g, gens);
  }
  return gens;
}

std::vector<std::vector<int>> index2_subgroups(const GroupTable& g) {
  const int n = g.order();
  // Index-2 subgroups are kernels of surjections onto C2; all contain the
  // subgroup generated by squares and commutators.
  std::vector<int> seed;
  for (int a = 0; a < n; ++a) {
    seed.push_back(g.mul(a, a));
    for (int b = 0; b < n; ++b)
      seed.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  }
  std::vector<int> k = closure(g, seed);
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int h : k) coset_of[g.mul(h, a)] = id;  // left coset Ka
  }
  const int q = static_cast<int>(reps.size());
  if (q == 1) return {};
  // The quotient is elementary abelian of order 2^r; label cosets by F2 vectors.
  std::vector<int> vec(q, -1);
  vec[coset_of[0]] = 0;
  std::vector<int> basis;
  for (int c = 0; c < q; ++c) {
    if (vec[c] >= 0) continue;
    int b = static_cast<int>(basis.size());
    basis.push_back(c);
    // span grows by XOR with the new basis bit
    std::vector<int> known;
    for (int d = 0; d < q; ++d)
      if (vec[d] >= 0) known.push_back(d);
    for (int d : known) {
      int prod = coset_of[g.mul(reps[d], reps[c])];
      vec[prod] = vec[d] ^ (1 << b);
    }
  }
  const int r = static_cast<int>(basis.size());
  std::vector<std::vector<int>> out;
  for (int phi = 1; phi < (1 << r); ++phi) {
    std::vector<int> sub;
    for (int a = 0; a < n; ++a) {
      int v = vec[coset_of[a]];
      if (__builtin_parity(static_cast<unsigned>(v & phi)) == 0) sub.push_back(a);
    }
    out.push_back(std::move(sub));
  }
  return out;
}

SubgroupTable subgroup_table(const GroupTable& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  if (elements.empty() || elements[0] != 0)
    throw precondition_error("subgroup must contain the identity");
  const int m = static_cast<int>(elements.size());
  std::vector<int> back(g.order(), -1);
  for (int i = 0; i < m; ++i) back[elements[i]] = i;
  GroupTable t = GroupTable::from_function(m, [&](int a, int b) {
    int p = back[g.mul(elements[a], elements[b])];
    if (p < 0) throw precondition_error("element set is not closed");
    return p;
  });
  return SubgroupTable{std::move(t), std::move(elements)};
}

std::optional<GeneralizedDicyclicWitness> is_generalized_dicyclic(const GroupTable& g) {
  if (is_abelian(g)) return std::nullopt;
  for (const auto& sub : index2_subgroups(g)) {
    std::vector<char> in(g.order(), 0);
    for (int e : sub) in[e] = 1;
    bool abelian = true;
    for (std::size_t i = 0; i < sub.size() && abelian; ++i)
      for (std::size_t j = i + 1; j < sub.size() && abelian; ++j)
        abelian = g.mul(sub[i], sub[j]) == g.mul(sub[j], sub[i]);
    if (!abelian) continue;
    for (int b = 1; b < g.order(); ++b) {
      if (in[b] || element_order(g, b) != 4) continue;
      bool inverts = true;
      for (int x : sub) {
        if (g.mul(g.mul(g.inv(b), x), b) != g.inv(x)) {
          inverts = false;
          break;
        }
      }
      if (inverts) return GeneralizedDicyclicWitness{sub, b};
    }
  }
  return std::nullopt;
}

ElementaryAbelianSplit split_off_elementary_abelian_2(const GroupTable& g) {
  ElementaryAbelianSplit split;
  split.g1 = g;
  split.rank = 0;
  split.coords.resize(g.order());
  for (int a = 0; a < g.order(); ++a) split.coords[a] = {a, 0};

  for (;;) {
    const GroupTable& cur = split.g1;
    // Look for a central involution z and an index-2 subgroup K avoiding it;
    // then cur = K x <z>.
    int z = -1;
    std::vector<int> ksub;
    std::vector<int> center = center_elements(cur);
    for (const auto& sub : index2_subgroups(cur)) {
      std::vector<char> in(cur.order(), 0);
      for (int e : sub) in[e] = 1;
      for (int c : center) {
        if (c != 0 && element_order(cur, c) == 2 && !in[c]) {
          z = c;
          ksub = sub;
          break;
        }
      }
      if (z >= 0) break;
    }
    if (z < 0) break;

    SubgroupTable k = subgroup_table(cur, ksub);
    std::vector<int> back(cur.order(), -1);
    for (int i = 0; i < k.table.order(); ++i) back[k.to_parent[i]] = i;
    // Map each cur-element to (K part, z bit).
    std::vector<std::pair<int, int>> decomp(cur.order());
    for (int a = 0; a < cur.order(); ++a) {
      if (back[a] >= 0)
        decomp[a] = {back[a], 0};
      else
        decomp[a] = {back[cur.mul(a, z)], 1};
    }
    for (auto& pc : split.coords) {
      auto [g1, bits] = pc;
      auto [knew, bit] = decomp[g1];
      pc = {knew, bits | (bit << split.rank)};
    }
    split.g1 = std::move(k.table);
    ++split.rank;
    if (split.rank > 16) throw resource_error("elementary abelian rank out of range");
  }
  return split;
}

namespace {

struct IsoSearch {
  const GroupTable& a;
  const GroupTable& b;
  std::vector<int> gens;                 // generating sequence of a
  std::vector<std::vector<int>> layers;  // elements of a newly reached per generator
  std::vector<int> map;                  // a -> b, -1 unknown

  // Extends the partial map by assigning image to gens[level] and closing
  // multiplicatively; returns false on conflict.
  bool extend(int level, const std::vector<int>& word_of);

  bool search(int level);
};

std::vector<int> order_profile(const GroupTable& g) {
  std::vector<int> prof;
  for (int x = 0; x < g.order(); ++x) prof.push_back(element_order(g, x));
  return prof;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const GroupTable& a, const GroupTable& b,
                                                 int max_order) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > max_order) throw resource_error("isomorphism search beyond configured bound");
  StructuralInvariants ia = structural_invariants(a), ib = structural_invariants(b);
  if (ia.abelian != ib.abelian || ia.exponent != ib.exponent ||
      ia.center_order != ib.center_order || ia.order_spectrum != ib.order_spectrum)
    return std::nullopt;

  const int n = a.order();
  std::vector<int> gens = generating_set(a);
  if (gens.empty()) return std::vector<int>{0};  // trivial group

  std::vector<int> prof_a = order_profile(a), prof_b = order_profile(b);

  // map[x] for x in the subgroup generated so far; backtracking on images of
  // the generating sequence, closing the map after each assignment.
  std::vector<int> map(n, -1);
  map[0] = 0;

  struct Frame {
    std::vector<int> map;
  };

  std::vector<int> known{0};

  std::function<bool(std::size_t, std::vector<int>&, std::vector<int>&)> rec =
      [&](std::size_t level, std::vector<int>& m, std::vector<int>& kn) -> bool {
    if (level == gens.size()) return true;
    int gen = gens[level];
    for (int img = 0; img < n; ++img) {
      if (prof_b[img] != prof_a[gen]) continue;
      std::vector<int> m2 = m;
      std::vector<int> kn2 = kn;
      std::vector<char> used(n, 0);
      for (int x : kn2)
        used[m2[x]] = 1;
      if (used[img]) continue;
      m2[gen] = img;
      used[img] = 1;
      kn2.push_back(gen);
      bool ok = true;
      // close under products
      for (std::size_t i = 0; ok && i < kn2.size(); ++i) {
        for (std::size_t j = 0; ok && j < kn2.size(); ++j) {
          int prod = a.mul(kn2[i], kn2[j]);
          int want = b.mul(m2[kn2[i]], m2[kn2[j]]);
          if (m2[prod] == -1) {
            if (used[want]) {
              ok = false;
            } else {
              m2[prod] = want;
              used[want] = 1;
              kn2.push_back(prod);
            }
          } else if (m2[prod] != want) {
            ok = false;
          }
        }
      }
      if (ok && rec(level + 1, m2, kn2)) {
        m = std::move(m2);
        kn = std::move(kn2);
        return true;
      }
    }
    return false;
  };

  if (!rec(0, map, known)) return std::nullopt;
  if (static_cast<int>(known.size()) != n) return std::nullopt;  // gens did not generate (cannot happen)
  // Exhaustive check that the full map respects multiplication.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return std::nullopt;
  return map;
}

bool are_isomorphic(const GroupTable& a, const GroupTable& b, int max_order) {
  return find_isomorphism(a, b, max_order).has_value();
}

std::vector<std::vector<int>> automorphisms_of_group(const GroupTable& g, std::size_t bound) {
  const int n = g.order();
  std::vector<int> gens = generating_set(g);
  std::vector<std::vector<int>> out;
  if (gens.empty()) {
    out.push_back({0});
    return out;
  }
  std::vector<int> prof(n);
  for (int x = 0; x < n; ++x) prof[x] = element_order(g, x);

  std::vector<int> map(n, -1);
  map[0] = 0;
  std::vector<int> known{0};

  std::function<void(std::size_t, std::vector<int>&, std::vector<int>&)> rec =
      [&](std::size_t level, std::vector<int>& m, std::vector<int>& kn) {
        if (level == gens.size()) {
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              if (m[g.mul(x, y)] != g.mul(m[x], m[y])) return;
          out.push_back(m);
          if (out.size() > bound) throw resource_error("too many group automorphisms");
          return;
        }
        int gen = gens[level];
        for (int img = 0; img < n; ++img) {
          if (prof[img] != prof[gen]) continue;
          std::vector<int> m2 = m;
          std::vector<int> kn2 = kn;
          std::vector<char> used(n, 0);
          for (int x : kn2) used[m2[x]] = 1;
          if (used[img]) continue;
          m2[gen] = img;
          used[img] = 1;
          kn2.push_back(gen);
          bool ok = true;
          for (std::size_t i = 0; ok && i < kn2.size(); ++i) {
            for (std::size_t j = 0; ok && j < kn2.size(); ++j) {
              int prod = g.mul(kn2[i], kn2[j]);
              int want = g.mul(m2[kn2[i]], m2[kn2[j]]);
              if (m2[prod] == -1) {
                if (used[want]) {
                  ok = false;
                } else {
                  m2[prod] = want;
                  used[want] = 1;
                  kn2.push_back(prod);
                }
              } else if (m2[prod] != want) {
                ok = false;
              }
            }
          }
          if (ok) rec(level + 1, m2, kn2);
        }
      };
  rec(0, map, known);
  return out;
}

Permutation right_translation(const GroupTable& g, int a) {
  std::vector<int> images(g.order());
  for (int x = 0; x < g.order(); ++x) images[x] = g.mul(x, a);
  return Permutation(std::move(images));
}

std::vector<Permutation> regular_representation_generators(const GroupTable& g) {
  std::vector<Permutation> out;
  for (int a : generating_set(g)) out.push_back(right_translation(g, a));
  if (out.empty()) out.push_back(Permutation::identity(g.order()));
  return out;
}

}  // namespace bicay
