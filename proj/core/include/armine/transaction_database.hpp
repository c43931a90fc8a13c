#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "armine/contingency.hpp"
#include "armine/item_dictionary.hpp"
#include "armine/itemset.hpp"

namespace armine {

using Transaction = Itemset;

/// Immutable, in-memory transaction corpus.
///
/// Besides the horizontal transaction list the database keeps one bitmap
/// per item (bit t set iff transaction t contains the item). Support
/// counting is an AND + popcount over those bitmaps. All query methods are
/// const and safe to call concurrently.
class TransactionDatabase {
 public:
  TransactionDatabase() = default;
  TransactionDatabase(ItemDictionary dictionary, std::vector<Transaction> transactions);

  std::size_t n() const noexcept { return transactions_.size(); }
  std::size_t item_count() const noexcept { return dictionary_.size(); }
  const ItemDictionary& dictionary() const noexcept { return dictionary_; }
  const std::vector<Transaction>& transactions() const noexcept { return transactions_; }

  /// Number of transactions containing every item of `s`. The empty set is
  /// contained in all n transactions. Throws Error(kUnknownItem).
  std::uint64_t support_count(const Itemset& s) const;

  /// Joint counts for disjoint, non-empty x and y.
  ContingencyTable contingency_of(const Itemset& x, const Itemset& y) const;

  /// Itemset for a list of tokens; throws Error(kUnknownItem) on tokens
  /// not in the dictionary.
  Itemset itemset_of(std::initializer_list<std::string_view> tokens) const;

  friend bool operator==(const TransactionDatabase& a, const TransactionDatabase& b) {
    return a.dictionary_ == b.dictionary_ && a.transactions_ == b.transactions_;
  }

 private:
  using Word = std::uint64_t;

  void check_items(const Itemset& s) const;
  /// Writes the cover bitmap of `s` into `out` (size words_per_item_).
  void cover(const Itemset& s, std::vector<Word>& out) const;

  ItemDictionary dictionary_;
  std::vector<Transaction> transactions_;
  std::size_t words_per_item_ = 0;
  std::vector<Word> bitmaps_;  // item-major, words_per_item_ words each
};

}  // namespace armine
