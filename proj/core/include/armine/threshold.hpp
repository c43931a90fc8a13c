#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace armine {

/// A fraction in [0, 1] held exactly as numerator / 10^digits.
///
/// Thresholds come from human-written decimals ("0.5", "0.75"), so the
/// comparison count / total >= threshold is done in integers and never
/// suffers from binary rounding.
class Threshold {
 public:
  /// Zero.
  Threshold() = default;

  /// Parses a plain decimal ("1", "0.5", ".25"). No sign, no exponent, at
  /// most 18 fractional digits. Throws Error(kInvalidThreshold) otherwise or
  /// when the value exceeds 1.
  static Threshold parse(std::string_view text);

  std::uint64_t numerator() const noexcept { return numerator_; }
  std::uint64_t denominator() const noexcept { return denominator_; }
  double value() const noexcept;
  const std::string& text() const noexcept { return text_; }

  /// Exact test of count / total >= *this. A zero total passes only a zero
  /// threshold.
  bool admits(std::uint64_t count, std::uint64_t total) const noexcept;

  friend bool operator==(const Threshold& a, const Threshold& b) noexcept {
    return static_cast<unsigned __int128>(a.numerator_) * b.denominator_ ==
           static_cast<unsigned __int128>(b.numerator_) * a.denominator_;
  }

 private:
  std::uint64_t numerator_ = 0;
  std::uint64_t denominator_ = 1;
  std::string text_ = "0";
};

}  // namespace armine
