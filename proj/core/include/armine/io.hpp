#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "armine/transaction_database.hpp"

namespace armine {

/// Basket text: one transaction per line, comma-separated tokens.
/// `#` lines are comments and blank lines are skipped. A line holding only
/// `{}` is an explicit empty transaction.
TransactionDatabase load_basket(std::istream& in);
TransactionDatabase load_basket(std::string_view text);
TransactionDatabase load_basket_file(const std::filesystem::path& path);

/// 0/1 matrix CSV: header of item tokens, one row per transaction.
/// All-zero rows are kept as empty transactions.
TransactionDatabase load_matrix(std::istream& in);
TransactionDatabase load_matrix(std::string_view text);
TransactionDatabase load_matrix_file(const std::filesystem::path& path);

/// Inverse of load_basket for databases whose items all occur somewhere.
std::string to_basket(const TransactionDatabase& db);

inline constexpr std::string_view kEmptyTransactionMarker = "{}";

}  // namespace armine
