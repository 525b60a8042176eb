#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicay/group_table.hpp"

namespace bicay {

/// A catalog group: table, a stored permutation realization that reproduces
/// it, and named elements used by the exceptional-group constructions.
struct CatalogEntry {
  std::string name;
  GroupTable table;
  std::vector<Permutation> generators;
  std::map<std::string, int> marked;  // e.g. "a", "b", "c"
};

/// Complete, isomorphism-irredundant list of all groups of order <= 16
/// (1,1,1,2,1,2,1,5,2,2,1,5,1,2,1,14 per order) plus the exceptional groups
/// of Godsil's classification up to order 32. Built and validated once.
const std::vector<CatalogEntry>& small_group_catalog();

/// Entries of order <= max_order, plus the exceptional-class entries which
/// are always included.
std::vector<const CatalogEntry*> catalog_small_groups(int max_order);

/// The thirteen exceptional groups, in classification order:
/// C2^2, C2^3, C2^4 | D6, D8, D10 | Alt4 | E4 | E5 | E6 | E7 | Q8xC3, Q8xC4.
/// Theorem text counts "thirteen" with the two direct products listed last
/// as one item.
std::vector<const CatalogEntry*> class_e_members();

/// Which exceptional item (1..8) a member name belongs to, or 0.
int class_e_item(const std::string& name);

/// Catalog lookup by stable name, plus the parametric families C<n>,
/// D<2n>, Dic<n>, and Q8xC2^<r>.
std::optional<CatalogEntry> find_group(const std::string& name);

}  // namespace bicay
