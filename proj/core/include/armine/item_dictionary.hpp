#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "armine/itemset.hpp"

namespace armine {

/// Bijection between item tokens and dense ids, assigned in first-seen order.
class ItemDictionary {
 public:
  /// Trims surrounding whitespace. Throws Error(kInvalidItemToken) when
  /// nothing is left.
  ItemId intern(std::string_view token);

  std::optional<ItemId> find(std::string_view token) const;
  const std::string& resolve(ItemId id) const;

  std::size_t size() const noexcept { return id_to_token_.size(); }
  const std::vector<std::string>& tokens() const noexcept { return id_to_token_; }

  friend bool operator==(const ItemDictionary& a, const ItemDictionary& b) {
    return a.id_to_token_ == b.id_to_token_;
  }

 private:
  std::unordered_map<std::string, ItemId> token_to_id_;
  std::vector<std::string> id_to_token_;
};

std::string_view trim(std::string_view s) noexcept;

}  // namespace armine
