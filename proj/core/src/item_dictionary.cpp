#include "armine/item_dictionary.hpp"

#include "armine/error.hpp"

namespace armine {

std::string_view trim(std::string_view s) noexcept {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

ItemId ItemDictionary::intern(std::string_view token) {
  const auto t = trim(token);
  if (t.empty()) throw Error(ErrorCode::kInvalidItemToken, "empty item token");
  std::string key(t);
  if (auto it = token_to_id_.find(key); it != token_to_id_.end()) return it->second;
  const auto id = static_cast<ItemId>(id_to_token_.size());
  id_to_token_.push_back(key);
  token_to_id_.emplace(std::move(key), id);
  return id;
}

std::optional<ItemId> ItemDictionary::find(std::string_view token) const {
  if (auto it = token_to_id_.find(std::string(trim(token))); it != token_to_id_.end()) {
    return it->second;
  }
  return std::nullopt;
}

const std::string& ItemDictionary::resolve(ItemId id) const {
  if (id >= id_to_token_.size()) {
    throw Error(ErrorCode::kUnknownItem, "item id " + std::to_string(id) + " not in dictionary");
  }
  return id_to_token_[id];
}

}  // namespace armine
