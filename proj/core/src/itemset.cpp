#include "armine/itemset.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>

namespace armine {

Itemset::Itemset(std::initializer_list<ItemId> ids) : Itemset(std::vector<ItemId>(ids)) {}

Itemset::Itemset(std::vector<ItemId> ids) : items_(std::move(ids)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

Itemset Itemset::from_sorted(std::vector<ItemId> ids) {
  assert(std::adjacent_find(ids.begin(), ids.end(), std::greater_equal<>{}) == ids.end());
  Itemset s;
  s.items_ = std::move(ids);
  return s;
}

bool Itemset::contains(ItemId id) const noexcept {
  return std::binary_search(items_.begin(), items_.end(), id);
}

bool Itemset::is_subset_of(const Itemset& other) const noexcept {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool Itemset::is_disjoint_with(const Itemset& other) const noexcept {
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

Itemset Itemset::united_with(const Itemset& other) const {
  std::vector<ItemId> out;
  out.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out));
  return from_sorted(std::move(out));
}

Itemset Itemset::minus(const Itemset& other) const {
  std::vector<ItemId> out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(out));
  return from_sorted(std::move(out));
}

}  // namespace armine
