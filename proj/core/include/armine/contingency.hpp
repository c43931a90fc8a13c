#pragma once

#include <cstdint>

namespace armine {

/// 2x2 joint counts for an (X, Y) pair. Every interestingness measure is a
/// function of this table alone.
struct ContingencyTable {
  std::uint64_t n11 = 0;  // X and Y
  std::uint64_t n10 = 0;  // X, not Y
  std::uint64_t n01 = 0;  // Y, not X
  std::uint64_t n00 = 0;  // neither

  std::uint64_t n() const noexcept { return n11 + n10 + n01 + n00; }
  std::uint64_t count_x() const noexcept { return n11 + n10; }
  std::uint64_t count_y() const noexcept { return n11 + n01; }

  double p_x() const noexcept { return ratio(count_x()); }
  double p_y() const noexcept { return ratio(count_y()); }
  double p_xy() const noexcept { return ratio(n11); }

  /// The table of the reversed rule Y => X.
  ContingencyTable swapped() const noexcept { return {n11, n01, n10, n00}; }

  friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;

 private:
  double ratio(std::uint64_t k) const noexcept {
    const auto total = n();
    return total == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(total);
  }
};

}  // namespace armine
