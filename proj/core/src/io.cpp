#include "armine/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "armine/error.hpp"

namespace armine {
namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  return in;
}

std::string_view strip_bom(std::string_view line, std::size_t line_no) {
  if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
  return line;
}

}  // namespace

TransactionDatabase load_basket(std::istream& in) {
  ItemDictionary dict;
  std::vector<Transaction> transactions;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(strip_bom(raw, line_no));
    if (line.empty() || line.front() == '#') continue;
    if (line == kEmptyTransactionMarker) {
      transactions.emplace_back();
      continue;
    }
    std::vector<ItemId> ids;
    for (const auto token : split_commas(line)) {
      const auto t = trim(token);
      if (t.empty()) continue;
      if (t == kEmptyTransactionMarker) {
        throw Error(ErrorCode::kMalformedRecord, "'{}' must stand alone on its line", line_no);
      }
      ids.push_back(dict.intern(t));
    }
    if (ids.empty()) throw Error(ErrorCode::kMalformedRecord, "record has no items", line_no);
    transactions.emplace_back(std::move(ids));
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure");
  return TransactionDatabase(std::move(dict), std::move(transactions));
}

TransactionDatabase load_basket(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_basket(in);
}

TransactionDatabase load_basket_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return load_basket(in);
}

TransactionDatabase load_matrix(std::istream& in) {
  ItemDictionary dict;
  std::vector<ItemId> columns;
  std::vector<Transaction> transactions;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(strip_bom(raw, line_no));
    if (line.empty()) continue;
    const auto cells = split_commas(line);
    if (!have_header) {
      for (const auto cell : cells) {
        const auto before = dict.size();
        const auto id = dict.intern(cell);
        if (dict.size() == before) {
          throw Error(ErrorCode::kMalformedRecord,
                      "duplicate column '" + std::string(trim(cell)) + "'", line_no);
        }
        columns.push_back(id);
      }
      have_header = true;
      continue;
    }
    if (cells.size() != columns.size()) {
      throw Error(ErrorCode::kMalformedRecord,
                  "expected " + std::to_string(columns.size()) + " cells, found " +
                      std::to_string(cells.size()),
                  line_no);
    }
    std::vector<ItemId> ids;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto cell = trim(cells[c]);
      if (cell == "1") {
        ids.push_back(columns[c]);
      } else if (cell != "0") {
        throw Error(ErrorCode::kMalformedRecord,
                    "cell '" + std::string(cell) + "' is not 0 or 1", line_no);
      }
    }
    transactions.push_back(Itemset::from_sorted(std::move(ids)));
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure");
  if (!have_header) throw Error(ErrorCode::kMalformedRecord, "missing header row", line_no + 1);
  return TransactionDatabase(std::move(dict), std::move(transactions));
}

TransactionDatabase load_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_matrix(in);
}

TransactionDatabase load_matrix_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return load_matrix(in);
}

std::string to_basket(const TransactionDatabase& db) {
  std::string out;
  for (const auto& t : db.transactions()) {
    if (t.empty()) {
      out += kEmptyTransactionMarker;
    } else {
      bool first = true;
      for (const ItemId id : t) {
        if (!first) out += ',';
        out += db.dictionary().resolve(id);
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace armine
