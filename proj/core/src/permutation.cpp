#include "bicay/permutation.hpp"

#include <numeric>
#include <sstream>

#include "bicay/errors.hpp"

namespace bicay {

Permutation::Permutation(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int img : images_) {
    if (img < 0 || img >= degree() || seen[img])
      throw validation_error("image list is not a bijection");
    seen[img] = 1;
  }
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= degree) throw validation_error("cycle point out of range");
      if (p.images_[from] != from) throw validation_error("cycles are not disjoint");
      p.images_[from] = to;
    }
  }
  return Permutation(std::move(p.images_));  // re-validate
}

bool Permutation::is_identity() const {
  for (int p = 0; p < degree(); ++p)
    if (images_[p] != p) return false;
  return true;
}

bool Permutation::fixed_point_free() const {
  for (int p = 0; p < degree(); ++p)
    if (images_[p] == p) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int p = 0; p < degree(); ++p) inv[images_[p]] = p;
  Permutation r;
  r.images_ = std::move(inv);
  return r;
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree()) throw precondition_error("degree mismatch in composition");
  std::vector<int> out(images_.size());
  for (int p = 0; p < degree(); ++p) out[p] = next.images_[images_[p]];
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse().then(*this).then(g);
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t ord = 1;
  for (int p = 0; p < degree(); ++p) {
    if (seen[p]) continue;
    std::uint64_t len = 0;
    for (int q = p; !seen[q]; q = images_[q]) {
      seen[q] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (int p = 0; p < degree(); ++p) {
    if (p) out << ' ';
    out << images_[p];
  }
  return out.str();
}

Permutation Permutation::parse(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> images;
  int x;
  while (in >> x) images.push_back(x);
  if (images.empty()) throw parse_error("empty image list", 0);
  return Permutation(std::move(images));
}

}  // namespace bicay
