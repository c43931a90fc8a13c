#include "armine/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "armine/error.hpp"
#include "armine/io.hpp"
#include "armine/rules.hpp"

namespace armine {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> sorted_tokens(const Itemset& s, const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (const ItemId id : s) out.push_back(tokens.at(id));
  std::sort(out.begin(), out.end());
  return out;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string cell_rounded(const MeasureValue& v, int precision) {
  switch (v.kind()) {
    case MeasureValue::Kind::kDefined: return format_fixed(v.value(), precision);
    case MeasureValue::Kind::kPositiveInfinity: return "inf";
    case MeasureValue::Kind::kUndefined: return "undefined";
  }
  return "";
}

std::string cell_full(const MeasureValue& v) {
  return v.is_defined() ? shortest(v.value()) : cell_rounded(v, 1);
}

Json to_json(const MeasureValue& v) {
  switch (v.kind()) {
    case MeasureValue::Kind::kDefined: return v.value();
    case MeasureValue::Kind::kPositiveInfinity: return "+inf";
    case MeasureValue::Kind::kUndefined: {
      Json j = Json::object();
      j["undefined"] = std::string(to_string(v.reason()));
      return j;
    }
  }
  return nullptr;
}

/// Column names and cell values for one rule row, in display order.
struct Columns {
  std::vector<std::string> names;
  std::vector<const MeasureValue*> values;
};

Columns columns_of(const Report& report, const RuleRow& row) {
  Columns c;
  for (const auto id : report.measures) {
    c.names.emplace_back(name_of(id));
    c.values.push_back(&row.card.scores.at(id));
    if (id == MeasureId::kCosine && row.cosine_angle) {
      c.names.emplace_back("cosine-angle");
      c.values.push_back(&*row.cosine_angle);
    }
  }
  if (report.with_angle && row.cosine_angle &&
      std::find(report.measures.begin(), report.measures.end(), MeasureId::kCosine) ==
          report.measures.end()) {
    c.names.emplace_back("cosine-angle");
    c.values.push_back(&*row.cosine_angle);
  }
  return c;
}

std::vector<std::string> header_names(const Report& report) {
  Columns c;
  for (const auto id : report.measures) {
    c.names.emplace_back(name_of(id));
    if (id == MeasureId::kCosine && report.with_angle) c.names.emplace_back("cosine-angle");
  }
  if (report.with_angle && std::find(report.measures.begin(), report.measures.end(),
                                     MeasureId::kCosine) == report.measures.end()) {
    c.names.emplace_back("cosine-angle");
  }
  return c.names;
}

void write_grid(std::ostringstream& out, const std::vector<std::vector<std::string>>& grid,
                std::size_t text_columns) {
  if (grid.empty()) return;
  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      const std::string pad(width[c] - row[c].size(), ' ');
      line += c < text_columns ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

std::string render_table(const Report& r, int precision) {
  std::ostringstream out;
  out << "armine " << kVersion << '\n'
      << "transactions: " << r.n << '\n'
      << "items: " << r.tokens.size() << '\n'
      << "min-support: " << r.min_support << '\n'
      << "min-confidence: " << r.min_confidence << "\n\n";

  out << "Frequent itemsets: " << r.frequent_itemsets.size() << '\n';
  std::vector<std::vector<std::string>> grid{{"itemset", "count", "support"}};
  for (const auto& f : r.frequent_itemsets) {
    grid.push_back({join_itemset(f.itemset, r.tokens), std::to_string(f.count),
                    format_fixed(f.support, precision)});
  }
  write_grid(out, grid, 1);

  out << "\nRules\n";
  grid.clear();
  std::vector<std::string> header{"antecedent", "consequent"};
  for (auto& name : header_names(r)) header.push_back(std::move(name));
  grid.push_back(std::move(header));
  for (const auto& row : r.rules) {
    std::vector<std::string> line{join_itemset(row.card.rule.antecedent(), r.tokens),
                                  join_itemset(row.card.rule.consequent(), r.tokens)};
    for (const auto* v : columns_of(r, row).values) line.push_back(cell_rounded(*v, precision));
    grid.push_back(std::move(line));
  }
  write_grid(out, grid, 2);
  out << r.rules.size() << (r.rules.size() == 1 ? " rule\n" : " rules\n");
  return out.str();
}

std::string render_csv(const Report& r, int precision) {
  std::ostringstream out;
  const auto names = header_names(r);
  out << "antecedent,consequent";
  for (const auto& name : names) out << ',' << name;
  for (const auto& name : names) out << ',' << name << "_rounded";
  out << '\n';
  for (const auto& row : r.rules) {
    out << join_itemset(row.card.rule.antecedent(), r.tokens) << ','
        << join_itemset(row.card.rule.consequent(), r.tokens);
    const auto values = columns_of(r, row).values;
    for (const auto* v : values) out << ',' << cell_full(*v);
    for (const auto* v : values) out << ',' << cell_rounded(*v, precision);
    out << '\n';
  }
  return out.str();
}

std::string render_json(const Report& r) {
  Json doc = Json::object();
  Json meta = Json::object();
  meta["tool"] = "armine";
  meta["version"] = std::string(kVersion);
  meta["n"] = r.n;
  meta["items"] = r.tokens.size();
  meta["min_support"] = r.min_support;
  meta["min_confidence"] = r.min_confidence;
  meta["measures"] = header_names(r);
  doc["meta"] = std::move(meta);

  Json frequent = Json::array();
  for (const auto& f : r.frequent_itemsets) {
    Json j = Json::object();
    j["items"] = sorted_tokens(f.itemset, r.tokens);
    j["count"] = f.count;
    j["support"] = f.support;
    frequent.push_back(std::move(j));
  }
  doc["frequent_itemsets"] = std::move(frequent);

  Json rules = Json::array();
  for (const auto& row : r.rules) {
    Json j = Json::object();
    j["antecedent"] = sorted_tokens(row.card.rule.antecedent(), r.tokens);
    j["consequent"] = sorted_tokens(row.card.rule.consequent(), r.tokens);
    const auto& ct = row.card.contingency;
    j["contingency"] = Json{{"n11", ct.n11}, {"n10", ct.n10}, {"n01", ct.n01}, {"n00", ct.n00}};
    Json scores = Json::object();
    const auto cols = columns_of(r, row);
    for (std::size_t c = 0; c < cols.names.size(); ++c) scores[cols.names[c]] = to_json(*cols.values[c]);
    j["scores"] = std::move(scores);
    rules.push_back(std::move(j));
  }
  doc["rules"] = std::move(rules);
  return doc.dump(2) + "\n";
}

}  // namespace

std::string format_fixed(double v, int precision) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s(buf);
  // "-0.000" reads as a sign error in reports.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string join_itemset(const Itemset& s, const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : sorted_tokens(s, tokens)) {
    if (!out.empty()) out += '+';
    out += t;
  }
  return out;
}

void validate(const RunConfig& cfg) {
  Threshold::parse(cfg.min_support);
  Threshold::parse(cfg.min_confidence);
  if (cfg.precision < 1 || cfg.precision > 12) {
    throw Error(ErrorCode::kInvalidConfig, "precision must lie in [1, 12]");
  }
  if (cfg.top_k && *cfg.top_k == 0) throw Error(ErrorCode::kInvalidConfig, "top-k must be positive");
  if (cfg.max_itemset_size && *cfg.max_itemset_size == 0) {
    throw Error(ErrorCode::kInvalidConfig, "max-itemset-size must be positive");
  }
  if (cfg.threads == 0) throw Error(ErrorCode::kInvalidConfig, "threads must be positive");
}

Report build_report(const TransactionDatabase& db, const RunConfig& cfg) {
  MiningConfig mining;
  mining.min_support = Threshold::parse(cfg.min_support);
  mining.min_confidence = Threshold::parse(cfg.min_confidence);
  mining.max_itemset_size = cfg.max_itemset_size;
  mining.num_workers = cfg.threads;

  Report report;
  report.n = db.n();
  report.tokens = db.dictionary().tokens();
  report.min_support = cfg.min_support;
  report.min_confidence = cfg.min_confidence;
  report.measures = cfg.measures;
  report.with_angle = cfg.with_angle;
  report.frequent_itemsets = apriori(db, mining);

  for (auto& rule : generate_rules(report.frequent_itemsets, mining, db)) {
    RuleRow row{score_rule(rule, db, cfg.measures), std::nullopt};
    if (cfg.with_angle) row.cosine_angle = cosine_angle_degrees(row.card.contingency);
    report.rules.push_back(std::move(row));
  }

  if (cfg.sort_by) {
    const auto key = *cfg.sort_by;
    std::vector<std::pair<MeasureValue, RuleRow>> keyed;
    keyed.reserve(report.rules.size());
    for (auto& row : report.rules) {
      keyed.emplace_back(evaluate_directed(key, row.card.contingency), std::move(row));
    }
    const bool descending = cfg.sort_direction == SortDirection::kDescending;
    std::stable_sort(keyed.begin(), keyed.end(), [descending](const auto& a, const auto& b) {
      const auto c = rank_order(a.first, b.first);
      return descending ? c > 0 : c < 0;
    });
    report.rules.clear();
    for (auto& [_, row] : keyed) report.rules.push_back(std::move(row));
  }
  if (cfg.top_k && report.rules.size() > *cfg.top_k) report.rules.erase(report.rules.begin() + static_cast<std::ptrdiff_t>(*cfg.top_k), report.rules.end());
  return report;
}

std::string render(const Report& report, OutputFormat format, int precision) {
  switch (format) {
    case OutputFormat::kTable: return render_table(report, precision);
    case OutputFormat::kCsv: return render_csv(report, precision);
    case OutputFormat::kJson: return render_json(report);
  }
  return {};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
  } catch (const Error& e) {
    err << "armine: configuration error: " << e.what() << '\n';
    return kExitConfigError;
  }
  try {
    const auto db = cfg.input_format == InputFormat::kBasket ? load_basket_file(cfg.input)
                                                             : load_matrix_file(cfg.input);
    const auto text = render(build_report(db, cfg), cfg.output, cfg.precision);
    if (cfg.out) {
      std::ofstream file(*cfg.out, std::ios::binary);
      if (!file || !(file << text)) {
        throw Error(ErrorCode::kIoError, "cannot write '" + cfg.out->string() + "'");
      }
    } else {
      out << text;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "armine: " << (e.is_input_error() ? "input error: " : "error: ") << e.what() << '\n';
    return e.is_input_error() ? kExitInputError : kExitConfigError;
  }
}

}  // namespace armine
