#include "armine/apriori.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "armine/error.hpp"

namespace armine {
namespace {

std::vector<std::uint64_t> count_all(const TransactionDatabase& db,
                                     const std::vector<Itemset>& candidates,
                                     std::size_t workers) {
  std::vector<std::uint64_t> counts(candidates.size());
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, candidates.size() / 64));
  if (workers == 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) counts[i] = db.support_count(candidates[i]);
    return counts;
  }
  // Contiguous slices, each worker writes only its own range of `counts`.
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (candidates.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(candidates.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) counts[i] = db.support_count(candidates[i]);
      });
    }
  }
  return counts;
}

}  // namespace

std::vector<Itemset> candidate_join_prune(std::vector<Itemset> level) {
  if (level.empty()) return {};
  const std::size_t k = level.front().size();
  for (const auto& s : level) {
    if (s.size() != k) {
      throw Error(ErrorCode::kInternalInvariantViolation,
                  "candidate generation needs itemsets of one size");
    }
  }
  std::sort(level.begin(), level.end());
  level.erase(std::unique(level.begin(), level.end()), level.end());
  const std::set<Itemset> known(level.begin(), level.end());

  std::vector<Itemset> out;
  std::vector<ItemId> buf(k + 1);
  for (std::size_t i = 0; i < level.size(); ++i) {
    const auto a = level[i].items();
    for (std::size_t j = i + 1; j < level.size(); ++j) {
      const auto b = level[j].items();
      // Sorted input: once the (k-1)-prefix differs no later j can match.
      if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;
      std::copy(a.begin(), a.end(), buf.begin());
      buf[k] = b[k - 1];
      bool all_frequent = true;
      // Subsets dropping one of the last two items are a and b themselves.
      for (std::size_t drop = 0; drop + 2 <= k && all_frequent; ++drop) {
        std::vector<ItemId> sub;
        sub.reserve(k);
        for (std::size_t m = 0; m <= k; ++m) {
          if (m != drop) sub.push_back(buf[m]);
        }
        all_frequent = known.contains(Itemset::from_sorted(std::move(sub)));
      }
      if (all_frequent) out.push_back(Itemset::from_sorted(buf));
    }
  }
  return out;
}

std::vector<FrequentItemset> apriori(const TransactionDatabase& db, const MiningConfig& cfg) {
  std::vector<FrequentItemset> result;
  const std::size_t cap = cfg.max_itemset_size.value_or(db.item_count());
  if (cap == 0) return result;
  const auto n = static_cast<std::uint64_t>(db.n());

  std::vector<Itemset> candidates;
  candidates.reserve(db.item_count());
  for (ItemId id = 0; id < db.item_count(); ++id) candidates.push_back(Itemset{id});

  for (std::size_t level = 1; level <= cap && !candidates.empty(); ++level) {
    const auto counts = count_all(db, candidates, cfg.num_workers);
    std::vector<Itemset> frequent;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!cfg.min_support.admits(counts[i], n)) continue;
      const double support =
          n == 0 ? 0.0 : static_cast<double>(counts[i]) / static_cast<double>(n);
      result.push_back({candidates[i], counts[i], support});
      frequent.push_back(candidates[i]);
    }
    if (level == cap) break;
    candidates = candidate_join_prune(std::move(frequent));
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    return SizeThenLex{}(a.itemset, b.itemset);
  });
  return result;
}

}  // namespace armine
