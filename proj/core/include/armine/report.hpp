#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "armine/apriori.hpp"
#include "armine/measures.hpp"
#include "armine/transaction_database.hpp"

namespace armine {

inline constexpr std::string_view kVersion = "0.1.0";

enum class InputFormat { kBasket, kMatrix };
enum class OutputFormat { kTable, kCsv, kJson };
enum class SortDirection { kAscending, kDescending };

struct RunConfig {
  std::filesystem::path input;
  InputFormat input_format = InputFormat::kBasket;
  std::string min_support = "0.1";
  std::string min_confidence = "0";
  std::vector<MeasureId> measures{core_measures().begin(), core_measures().end()};
  std::optional<MeasureId> sort_by;
  SortDirection sort_direction = SortDirection::kDescending;
  std::optional<std::size_t> top_k;
  OutputFormat output = OutputFormat::kTable;
  int precision = 3;
  std::optional<std::size_t> max_itemset_size;
  std::size_t threads = 1;
  bool with_angle = false;
  std::optional<std::filesystem::path> out;
};

/// Throws Error(kInvalidConfig / kInvalidThreshold) on bad settings.
void validate(const RunConfig& cfg);

struct RuleRow {
  RuleScoreCard card;
  std::optional<MeasureValue> cosine_angle;  // set when requested
};

struct Report {
  std::size_t n = 0;
  std::vector<std::string> tokens;  // id -> token
  std::string min_support;
  std::string min_confidence;
  std::vector<MeasureId> measures;
  bool with_angle = false;
  std::vector<FrequentItemset> frequent_itemsets;
  std::vector<RuleRow> rules;
};

Report build_report(const TransactionDatabase& db, const RunConfig& cfg);

std::string render(const Report& report, OutputFormat format, int precision);

/// `+`-joined tokens in ascending token order.
std::string join_itemset(const Itemset& s, const std::vector<std::string>& tokens);

/// Round-half-even fixed-point text; non-finite values never reach here.
std::string format_fixed(double v, int precision);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitConfigError = 3;

/// Load, mine, score, render. Writes the report to `out` (or cfg.out) and a
/// one-line diagnostic to `err` on failure. Returns the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace armine
