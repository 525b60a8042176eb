#include "bicay/perm_group.hpp"

#include <algorithm>
#include <functional>

#include "bicay/errors.hpp"

namespace bicay {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators) : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree_) throw precondition_error("generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(g);
  }
  build(gens_);
}

void PermGroup::build(const std::vector<Permutation>& input) {
  levels_.clear();
  for (const auto& g : input) add_generator(0, g);
  order_ = 1;
  std::uint64_t acc = 1;
  for (const auto& lvl : levels_) {
    std::uint64_t sz = lvl.orbit.size();
    if (acc > UINT64_MAX / sz) throw resource_error("group order exceeds 64 bits");
    acc *= sz;
  }
  order_ = acc;
}

void PermGroup::recompute_orbit(std::size_t level) {
  Level& lvl = levels_[level];
  lvl.orbit.clear();
  lvl.transversal.clear();
  lvl.where.assign(degree_, -1);
  lvl.orbit.push_back(lvl.base_point);
  lvl.where[lvl.base_point] = 0;
  lvl.transversal.push_back(Permutation::identity(degree_));
  for (std::size_t at = 0; at < lvl.orbit.size(); ++at) {
    for (const auto& g : lvl.gens) {
      int img = g[lvl.orbit[at]];
      if (lvl.where[img] < 0) {
        lvl.where[img] = static_cast<int>(lvl.orbit.size());
        lvl.orbit.push_back(img);
        lvl.transversal.push_back(lvl.transversal[at].then(g));
      }
    }
  }
}

void PermGroup::add_generator(std::size_t level, const Permutation& g) {
  if (g.is_identity()) return;
  if (level == levels_.size()) {
    // New level: first point moved by g, scanning 0, 1, 2, ...
    int base = -1;
    for (int p = 0; p < degree_; ++p)
      if (g[p] != p) {
        base = p;
        break;
      }
    Level lvl;
    lvl.base_point = base;
    levels_.push_back(std::move(lvl));
    recompute_orbit(level);
  }

  // Membership-style check: sift through this level and below.
  {
    Permutation r = g;
    std::size_t l = level;
    while (l < levels_.size() && !r.is_identity()) {
      const Level& cur = levels_[l];
      int img = r[cur.base_point];
      if (cur.where[img] < 0) break;
      r = r.then(cur.transversal[cur.where[img]].inverse());
      ++l;
    }
    if (r.is_identity()) return;
  }

  levels_[level].gens.push_back(g);
  recompute_orbit(level);

  // Schreier generators: closure of the level's stabilizer. Snapshots, since
  // the recursion may grow levels_ and invalidate references.
  const std::vector<Permutation> gens_now = levels_[level].gens;
  const std::vector<int> orbit_now = levels_[level].orbit;
  for (std::size_t at = 0; at < orbit_now.size(); ++at) {
    for (const auto& s : gens_now) {
      const Level& lvl = levels_[level];
      int img = s[orbit_now[at]];
      Permutation schreier =
          lvl.transversal[at].then(s).then(lvl.transversal[lvl.where[img]].inverse());
      if (!schreier.is_identity()) add_generator(level + 1, schreier);
    }
  }
}

std::pair<std::size_t, Permutation> PermGroup::sift(const Permutation& p) const {
  Permutation r = p;
  std::size_t l = 0;
  for (; l < levels_.size(); ++l) {
    if (r.is_identity()) break;
    const Level& lvl = levels_[l];
    int img = r[lvl.base_point];
    if (lvl.where[img] < 0) return {l, r};
    r = r.then(lvl.transversal[lvl.where[img]].inverse());
  }
  return {l, r};
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p).second.is_identity();
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> owner(degree_);
  for (int i = 0; i < degree_; ++i) owner[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (owner[x] != x) x = owner[x] = owner[owner[x]];
    return x;
  };
  for (const auto& g : gens_)
    for (int p = 0; p < degree_; ++p) {
      int a = find(p), b = find(g[p]);
      if (a != b) owner[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(degree_, -1);
  for (int p = 0; p < degree_; ++p) {
    int root = find(p);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(p);
  }
  return out;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t bound) const {
  if (order_ > bound) throw resource_error("group too large to enumerate");
  // Sifting writes p = r.then(t) level by level, so deeper transversal
  // factors come first in composition order.
  std::vector<Permutation> out{Permutation::identity(degree_)};
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(out.size() * it->transversal.size());
    for (const auto& tail : out)
      for (const auto& t : it->transversal) next.push_back(tail.then(t));
    out = std::move(next);
  }
  return out;
}

}  // namespace bicay
