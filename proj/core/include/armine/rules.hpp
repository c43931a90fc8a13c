#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "armine/apriori.hpp"
#include "armine/itemset.hpp"
#include "armine/transaction_database.hpp"

namespace armine {

/// X => Y with X, Y non-empty and disjoint.
class AssociationRule {
 public:
  /// Throws Error(kEmptyItemset) or Error(kNonDisjointItemsets).
  AssociationRule(Itemset antecedent, Itemset consequent);

  const Itemset& antecedent() const noexcept { return antecedent_; }
  const Itemset& consequent() const noexcept { return consequent_; }
  Itemset items() const { return antecedent_.united_with(consequent_); }

  friend auto operator<=>(const AssociationRule&, const AssociationRule&) = default;
  friend bool operator==(const AssociationRule&, const AssociationRule&) = default;

 private:
  Itemset antecedent_;
  Itemset consequent_;
};

/// Emits X => Z\X for every frequent Z with |Z| >= 2 and every non-empty
/// proper subset X whose confidence count(Z)/count(X) passes
/// cfg.min_confidence. Rules are sorted by (antecedent, consequent).
std::vector<AssociationRule> generate_rules(std::span<const FrequentItemset> frequent,
                                            const MiningConfig& cfg,
                                            const TransactionDatabase& db);

}  // namespace armine
