#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace localcc {

/// Walks the set partitions of {0..n-1} as restricted-growth strings
/// (a[0] = 0, a[i] <= 1 + max(a[0..i-1])) in lexicographic order.
///
///   RestrictedGrowth rg(n);
///   do { use(rg.labels()); } while (rg.next());
class RestrictedGrowth {
 public:
  explicit RestrictedGrowth(std::size_t n);

  const std::vector<std::size_t>& labels() const { return labels_; }
  std::size_t block_count() const;

  /// Advances to the next string; false after the last one (all distinct).
  bool next();

 private:
  std::vector<std::size_t> labels_;
  std::vector<std::size_t> prefix_max_;  // max of labels_[0..i]
};

/// Number of set partitions of an n-set by enumeration.
std::uint64_t count_partitions(std::size_t n);

}  // namespace localcc
