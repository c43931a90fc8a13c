#include "armine/transaction_database.hpp"

#include <algorithm>
#include <bit>

#include "armine/error.hpp"

namespace armine {

TransactionDatabase::TransactionDatabase(ItemDictionary dictionary,
                                         std::vector<Transaction> transactions)
    : dictionary_(std::move(dictionary)), transactions_(std::move(transactions)) {
  words_per_item_ = (transactions_.size() + 63) / 64;
  bitmaps_.assign(words_per_item_ * dictionary_.size(), 0);
  for (std::size_t t = 0; t < transactions_.size(); ++t) {
    for (const ItemId id : transactions_[t]) {
      if (id >= dictionary_.size()) {
        throw Error(ErrorCode::kInternalInvariantViolation,
                    "transaction references item id outside the dictionary");
      }
      bitmaps_[id * words_per_item_ + t / 64] |= Word{1} << (t % 64);
    }
  }
}

void TransactionDatabase::check_items(const Itemset& s) const {
  if (!s.empty() && s.items().back() >= dictionary_.size()) {
    throw Error(ErrorCode::kUnknownItem,
                "item id " + std::to_string(s.items().back()) + " not in dictionary");
  }
}

void TransactionDatabase::cover(const Itemset& s, std::vector<Word>& out) const {
  out.resize(words_per_item_);
  if (s.empty()) {
    std::fill(out.begin(), out.end(), ~Word{0});
    if (const auto tail = transactions_.size() % 64; tail != 0) {
      out.back() = (Word{1} << tail) - 1;
    }
    return;
  }
  const Word* first = bitmaps_.data() + s[0] * words_per_item_;
  std::copy(first, first + words_per_item_, out.begin());
  for (std::size_t k = 1; k < s.size(); ++k) {
    const Word* row = bitmaps_.data() + s[k] * words_per_item_;
    for (std::size_t w = 0; w < words_per_item_; ++w) out[w] &= row[w];
  }
}

std::uint64_t TransactionDatabase::support_count(const Itemset& s) const {
  check_items(s);
  if (s.empty()) return transactions_.size();
  if (s.size() == 1) {
    const Word* row = bitmaps_.data() + s[0] * words_per_item_;
    std::uint64_t count = 0;
    for (std::size_t w = 0; w < words_per_item_; ++w) count += std::popcount(row[w]);
    return count;
  }
  std::uint64_t count = 0;
  for (std::size_t w = 0; w < words_per_item_; ++w) {
    Word acc = ~Word{0};
    for (const ItemId id : s) acc &= bitmaps_[id * words_per_item_ + w];
    count += std::popcount(acc);
  }
  return count;
}

ContingencyTable TransactionDatabase::contingency_of(const Itemset& x, const Itemset& y) const {
  if (x.empty() || y.empty()) {
    throw Error(ErrorCode::kEmptyItemset, "contingency needs non-empty itemsets");
  }
  if (!x.is_disjoint_with(y)) {
    throw Error(ErrorCode::kNonDisjointItemsets, "antecedent and consequent overlap");
  }
  check_items(x);
  check_items(y);

  std::vector<Word> cx, cy;
  cover(x, cx);
  cover(y, cy);
  std::uint64_t both = 0, only_x = 0, only_y = 0;
  for (std::size_t w = 0; w < words_per_item_; ++w) {
    both += std::popcount(cx[w] & cy[w]);
    only_x += std::popcount(cx[w] & ~cy[w]);
    only_y += std::popcount(~cx[w] & cy[w]);
  }
  const std::uint64_t n = transactions_.size();
  return ContingencyTable{both, only_x, only_y, n - both - only_x - only_y};
}

Itemset TransactionDatabase::itemset_of(std::initializer_list<std::string_view> tokens) const {
  std::vector<ItemId> ids;
  for (const auto token : tokens) {
    const auto id = dictionary_.find(token);
    if (!id) throw Error(ErrorCode::kUnknownItem, "unknown item '" + std::string(token) + "'");
    ids.push_back(*id);
  }
  return Itemset(std::move(ids));
}

}  // namespace armine
