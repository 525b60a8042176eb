#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bicay/permutation.hpp"

namespace bicay {

/// A permutation group given by generators. A base and strong generating set
/// is built eagerly (deterministically, with base points tried in the order
/// 0, 1, 2, ...), so order and membership queries are exact and the object is
/// immutable afterwards.
class PermGroup {
public:
  PermGroup() = default;  // the trivial group on zero points
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool contains(const Permutation& p) const;

  /// Orbits of the natural action on 0..degree-1, each sorted, ordered by
  /// smallest element.
  std::vector<std::vector<int>> orbits() const;

  /// Every element, enumerated from the stabilizer chain; throws
  /// resource_error if the order exceeds `bound`.
  std::vector<Permutation> elements(std::uint64_t bound = 1000000) const;

private:
  struct Level {
    int base_point;
    std::vector<Permutation> gens;       // strong generators for this level down
    std::vector<int> orbit;              // insertion order
    std::vector<int> where;              // point -> index into orbit, or -1
    std::vector<Permutation> transversal;  // parallel to orbit; maps base_point -> orbit[i]
  };

  void build(const std::vector<Permutation>& input);
  void add_generator(std::size_t level, const Permutation& g);
  void recompute_orbit(std::size_t level);
  // Returns the level where sifting stopped and the residue.
  std::pair<std::size_t, Permutation> sift(const Permutation& p) const;

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

}  // namespace bicay
