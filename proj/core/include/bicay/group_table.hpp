#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicay/permutation.hpp"

namespace bicay {

/// A finite group as a dense multiplication table on element indices
/// 0..order-1. Element 0 is always the identity.
class GroupTable {
public:
  GroupTable() = default;

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }

  /// mul(a, mul(b, c)) evaluated left to right over a word.
  int mul_word(const std::vector<int>& word) const;

  int power(int a, int e) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  static GroupTable trivial();
  static GroupTable cyclic(int n);
  static GroupTable elementary_abelian_2(int rank);  // index arithmetic is XOR
  static GroupTable dicyclic(int m);                 // order 4m; dicyclic(2) = Q8

  /// Builds from an arbitrary multiplication function on 0..n-1 that already
  /// has 0 as its identity; the table is validated exhaustively for n <= 64.
  static GroupTable from_function(int n, const std::function<int(int, int)>& f);

  bool operator==(const GroupTable&) const = default;

private:
  void finish();  // derive inverses, validate

  int order_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

struct GeneratedGroup {
  GroupTable table;
  std::vector<Permutation> embedding;  // element index -> permutation
};

/// Closes a non-empty generator list under composition and returns the
/// resulting group together with the index -> permutation isomorphism.
/// Throws resource_error if the order would exceed `max_order`.
GeneratedGroup group_from_generators(const std::vector<Permutation>& gens, int max_order = 100000);

GroupTable direct_product(const GroupTable& a, const GroupTable& b);  // index = a*|B|+b

/// Adjoins an involution acting on the abelian group A by inversion.
/// A = C_n gives the dihedral group of order 2n.
GroupTable semidirect_by_inversion(const GroupTable& a);

int element_order(const GroupTable& g, int a);
bool is_abelian(const GroupTable& g);
int exponent(const GroupTable& g);
std::vector<int> center_elements(const GroupTable& g);

struct StructuralInvariants {
  bool abelian;
  int exponent;
  int center_order;
  std::map<int, int> order_spectrum;  // element order -> count
};
StructuralInvariants structural_invariants(const GroupTable& g);

/// Subgroup generated by `seed`, as a sorted element set.
std::vector<int> closure(const GroupTable& g, std::vector<int> seed);

/// Greedy small generating sequence (empty for the trivial group).
std::vector<int> generating_set(const GroupTable& g);

/// All subgroups of index 2, each as a sorted element set.
std::vector<std::vector<int>> index2_subgroups(const GroupTable& g);

/// The subgroup `elements` (which must be closed) as its own GroupTable;
/// `elements` must contain 0. Element i of the result is elements[i] after
/// moving the identity to the front.
struct SubgroupTable {
  GroupTable table;
  std::vector<int> to_parent;  // new index -> parent index
};
SubgroupTable subgroup_table(const GroupTable& g, std::vector<int> elements);

struct GeneralizedDicyclicWitness {
  std::vector<int> abelian_index2;  // the subgroup L
  int b;                            // order-4 element outside L inverting it
};

/// Decides whether g is generalized dicyclic by scanning all abelian index-2
/// subgroups and all candidate b of order 4.
std::optional<GeneralizedDicyclicWitness> is_generalized_dicyclic(const GroupTable& g);

struct ElementaryAbelianSplit {
  GroupTable g1;  // no direct factor C2 remains
  int rank;       // g ~ g1 x C2^rank
  /// coords[g] = (index into g1, bitmask in C2^rank)
  std::vector<std::pair<int, int>> coords;
};

/// Splits off a maximal elementary abelian 2-group direct factor.
ElementaryAbelianSplit split_off_elementary_abelian_2(const GroupTable& g);

/// Finds an isomorphism a -> b as an index map, or nullopt. The returned map
/// is verified against every product. Invariant pre-filters first, then
/// backtracking on images of a generating sequence.
std::optional<std::vector<int>> find_isomorphism(const GroupTable& a, const GroupTable& b,
                                                 int max_order = 512);
bool are_isomorphic(const GroupTable& a, const GroupTable& b, int max_order = 512);

/// All automorphisms of g as index maps, stopping with resource_error if more
/// than `bound` exist.
std::vector<std::vector<int>> automorphisms_of_group(const GroupTable& g,
                                                     std::size_t bound = 200000);

/// Right-multiplication permutation R(a): x -> x*a.
Permutation right_translation(const GroupTable& g, int a);

/// R(g) for a greedy generating set (the regular representation).
std::vector<Permutation> regular_representation_generators(const GroupTable& g);

}  // namespace bicay
