#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "armine/error.hpp"
#include "armine/measures.hpp"
#include "armine/report.hpp"

namespace armine::cli {
namespace {

std::string measure_list() {
  std::string out;
  for (const auto& m : all_measures()) {
    if (!out.empty()) out += ", ";
    out += m.name;
  }
  return out;
}

std::vector<MeasureId> parse_measures(const std::string& spec) {
  if (spec == "all") {
    std::vector<MeasureId> ids;
    for (const auto& m : all_measures()) ids.push_back(m.id);
    return ids;
  }
  std::vector<MeasureId> ids;
  std::stringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto name = std::string(trim(token));
    if (name.empty()) continue;
    const auto id = measure_from_name(name);
    if (!id) throw Error(ErrorCode::kInvalidConfig, "unknown measure '" + name + "'");
    if (std::find(ids.begin(), ids.end(), *id) == ids.end()) ids.push_back(*id);
  }
  return ids;
}

}  // namespace

int main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mine frequent itemsets and association rules, scored with interestingness measures."};
  app.name("armine");

  RunConfig cfg;
  std::string input;
  std::string format = "basket";
  std::string output = "table";
  std::string measures;
  std::string sort_by;
  std::string sort_order = "desc";
  std::size_t top_k = 0;
  std::size_t max_size = 0;
  std::string out_path;

  app.add_option("--input,-i", input, "Transaction file")->required();
  app.add_option("--format", format, "Input format: basket or matrix")
      ->check(CLI::IsMember({"basket", "matrix"}));
  app.add_option("--min-support", cfg.min_support, "Minimum support as a decimal in [0,1]")
      ->capture_default_str();
  app.add_option("--min-confidence", cfg.min_confidence, "Minimum confidence as a decimal in [0,1]")
      ->capture_default_str();
  app.add_option("--measures", measures,
                 "Comma-separated measures, or 'all'. Known: " + measure_list());
  app.add_option("--sort-by", sort_by, "Measure used to rank rules");
  app.add_option("--sort-order", sort_order, "asc or desc")->check(CLI::IsMember({"asc", "desc"}));
  app.add_option("--top-k", top_k, "Keep only the first k rules");
  app.add_option("--output,-o", output, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--precision", cfg.precision, "Decimal places in rounded output")
      ->capture_default_str();
  app.add_option("--max-itemset-size", max_size, "Largest itemset to mine");
  app.add_option("--threads", cfg.threads, "Support-counting workers")->capture_default_str();
  app.add_flag("--with-angle", cfg.with_angle, "Add the cosine angle in degrees");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.set_version_flag("--version", std::string(kVersion));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "armine: configuration error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    cfg.input = input;
    cfg.input_format = format == "matrix" ? InputFormat::kMatrix : InputFormat::kBasket;
    if (app.count("--measures") > 0) cfg.measures = parse_measures(measures);
    if (app.count("--sort-by") > 0) {
      const auto id = measure_from_name(sort_by);
      if (!id) throw Error(ErrorCode::kInvalidConfig, "unknown measure '" + sort_by + "'");
      cfg.sort_by = *id;
    }
    cfg.sort_direction = sort_order == "asc" ? SortDirection::kAscending : SortDirection::kDescending;
    if (app.count("--top-k") > 0) cfg.top_k = top_k;
    if (app.count("--max-itemset-size") > 0) cfg.max_itemset_size = max_size;
    if (app.count("--out") > 0) cfg.out = out_path;
    cfg.output = output == "csv" ? OutputFormat::kCsv
                 : output == "json" ? OutputFormat::kJson
                                    : OutputFormat::kTable;
  } catch (const Error& e) {
    err << "armine: configuration error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return run(cfg, out, err);
}

}  // namespace armine::cli
