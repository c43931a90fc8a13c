#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "armine/itemset.hpp"
#include "armine/threshold.hpp"
#include "armine/transaction_database.hpp"

namespace armine {

struct MiningConfig {
  Threshold min_support;
  Threshold min_confidence;
  std::optional<std::size_t> max_itemset_size;  // unbounded when empty
  /// Workers for the support-counting pass. Output does not depend on it.
  std::size_t num_workers = 1;
};

struct FrequentItemset {
  Itemset itemset;
  std::uint64_t count = 0;
  double support = 0.0;  // count / n

  friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
};

/// Level-wise Apriori search. Returns every itemset of size >= 1 (and at
/// most max_itemset_size) whose support passes `cfg.min_support`, ordered
/// by SizeThenLex. Item ids range over the whole dictionary, so with a zero
/// threshold itemsets of count 0 are reported too.
std::vector<FrequentItemset> apriori(const TransactionDatabase& db, const MiningConfig& cfg);

/// Apriori candidate generation for level k+1.
///
/// Joins pairs of canonical size-k itemsets sharing their first k-1 items,
/// then drops any candidate with a k-subset missing from the input. The
/// result is sorted lexicographically. Throws
/// Error(kInternalInvariantViolation) on mixed-size input.
std::vector<Itemset> candidate_join_prune(std::vector<Itemset> level_k_frequent);

}  // namespace armine
