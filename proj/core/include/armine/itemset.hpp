#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace armine {

using ItemId = std::uint32_t;

/// A set of item ids held in canonical (strictly ascending) form.
class Itemset {
 public:
  Itemset() = default;
  Itemset(std::initializer_list<ItemId> ids);
  explicit Itemset(std::vector<ItemId> ids);

  /// Wraps ids that are already strictly ascending. Checked in debug builds.
  static Itemset from_sorted(std::vector<ItemId> ids);

  std::span<const ItemId> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  ItemId operator[](std::size_t i) const { return items_[i]; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  bool contains(ItemId id) const noexcept;
  bool is_subset_of(const Itemset& other) const noexcept;
  bool is_disjoint_with(const Itemset& other) const noexcept;

  Itemset united_with(const Itemset& other) const;
  Itemset minus(const Itemset& other) const;

  /// Lexicographic on the canonical id sequence.
  friend auto operator<=>(const Itemset&, const Itemset&) = default;
  friend bool operator==(const Itemset&, const Itemset&) = default;

 private:
  std::vector<ItemId> items_;
};

/// Ordering used by reports: by size first, then lexicographic ids.
struct SizeThenLex {
  bool operator()(const Itemset& a, const Itemset& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace armine
