#include "armine/threshold.hpp"

#include <cctype>

#include "armine/error.hpp"

namespace armine {

Threshold Threshold::parse(std::string_view text) {
  const auto fail = [&](const char* why) {
    return Error(ErrorCode::kInvalidThreshold, "'" + std::string(text) + "': " + why);
  };
  const auto dot = text.find('.');
  const auto whole = text.substr(0, dot);
  const auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw fail("not a decimal number");
  for (const char c : whole) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw fail("not a decimal number");
  }
  for (const char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw fail("not a decimal number");
  }
  if (frac.size() > 18) throw fail("more than 18 fractional digits");

  // Leading zeros in the integer part are harmless; anything but 0 or 1 is out of range.
  std::uint64_t int_part = 0;
  for (const char c : whole) {
    int_part = int_part * 10 + static_cast<std::uint64_t>(c - '0');
    if (int_part > 1) throw fail("must lie in [0, 1]");
  }
  std::uint64_t den = 1;
  std::uint64_t num = 0;
  for (const char c : frac) {
    den *= 10;
    num = num * 10 + static_cast<std::uint64_t>(c - '0');
  }
  num += int_part * den;
  if (num > den) throw fail("must lie in [0, 1]");

  Threshold t;
  t.numerator_ = num;
  t.denominator_ = den;
  t.text_ = std::string(text);
  return t;
}

double Threshold::value() const noexcept {
  return static_cast<double>(numerator_) / static_cast<double>(denominator_);
}

bool Threshold::admits(std::uint64_t count, std::uint64_t total) const noexcept {
  if (total == 0) return numerator_ == 0;
  using U = unsigned __int128;
  return U{count} * denominator_ >= U{numerator_} * total;
}

}  // namespace armine
