#pragma once

#include <compare>
#include <vector>

namespace liftenum {

/// Coordinate counts of one codeword over Z_{p^m} by p-adic valuation:
/// counts[i] is the number of entries of valuation exactly i (i < m) and
/// `zeros` the number of zero entries.
struct Composition {
  std::vector<int> counts;
  int zeros = 0;

  int length() const noexcept {
    int n = zeros;
    for (int c : counts) n += c;
    return n;
  }
  /// Number of nonzero entries.
  int support_size() const noexcept { return length() - zeros; }

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;
};

}  // namespace liftenum
