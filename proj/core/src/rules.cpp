#include "armine/rules.hpp"

#include <algorithm>
#include <map>

#include "armine/error.hpp"

namespace armine {

AssociationRule::AssociationRule(Itemset antecedent, Itemset consequent)
    : antecedent_(std::move(antecedent)), consequent_(std::move(consequent)) {
  if (antecedent_.empty() || consequent_.empty()) {
    throw Error(ErrorCode::kEmptyItemset, "rule sides must be non-empty");
  }
  if (!antecedent_.is_disjoint_with(consequent_)) {
    throw Error(ErrorCode::kNonDisjointItemsets, "rule sides must be disjoint");
  }
}

std::vector<AssociationRule> generate_rules(std::span<const FrequentItemset> frequent,
                                            const MiningConfig& cfg,
                                            const TransactionDatabase& db) {
  std::map<Itemset, std::uint64_t> counts;
  for (const auto& f : frequent) counts.emplace(f.itemset, f.count);
  const auto count_of = [&](const Itemset& s) {
    if (auto it = counts.find(s); it != counts.end()) return it->second;
    return db.support_count(s);
  };

  std::vector<AssociationRule> rules;
  for (const auto& z : frequent) {
    const std::size_t k = z.itemset.size();
    if (k < 2) continue;
    if (k >= 64) {
      throw Error(ErrorCode::kInternalInvariantViolation, "itemset too large for rule enumeration");
    }
    const auto ids = z.itemset.items();
    // Every mask except empty and full: the 2^k - 2 proper splits.
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
      std::vector<ItemId> lhs, rhs;
      for (std::size_t b = 0; b < k; ++b) {
        ((mask >> b) & 1 ? lhs : rhs).push_back(ids[b]);
      }
      auto x = Itemset::from_sorted(std::move(lhs));
      if (!cfg.min_confidence.admits(z.count, count_of(x))) continue;
      rules.emplace_back(std::move(x), Itemset::from_sorted(std::move(rhs)));
    }
  }
  std::sort(rules.begin(), rules.end());
  return rules;
}

}  // namespace armine
