#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bicay {

/// A bijection on the points 0..degree-1, stored as an image list.
class Permutation {
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(int degree);

  /// Takes ownership of an image list; throws validation_error if it is not
  /// a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  bool fixes(int point) const { return images_[point] == point; }
  bool fixed_point_free() const;

  Permutation inverse() const;

  /// Composition "this first, then next": result[p] = next[this[p]].
  Permutation then(const Permutation& next) const;

  Permutation conjugated_by(const Permutation& g) const;  // g^-1 * this * g

  std::uint64_t order() const;

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& other) const {
    return images_ <=> other.images_;
  }

  /// Space-separated image list, the serialization used in group files.
  std::string to_string() const;
  static Permutation parse(const std::string& line);

private:
  std::vector<int> images_;
};

/// x^(a*b) = (x^a)^b.
inline Permutation operator*(const Permutation& a, const Permutation& b) { return a.then(b); }

}  // namespace bicay
