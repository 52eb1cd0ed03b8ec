#include "localcc/partition.hpp"

#include <algorithm>

namespace localcc {

RestrictedGrowth::RestrictedGrowth(std::size_t n) : labels_(n, 0), prefix_max_(n, 0) {}

std::size_t RestrictedGrowth::block_count() const {
  return labels_.empty() ? 0 : prefix_max_.back() + 1;
}

bool RestrictedGrowth::next() {
  const std::size_t n = labels_.size();
  if (n < 2) return false;
  // Rightmost position (never 0) that can still grow.
  std::size_t i = n - 1;
  while (i > 0 && labels_[i] > prefix_max_[i - 1]) --i;
  if (i == 0) return false;
  ++labels_[i];
  prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
  for (std::size_t j = i + 1; j < n; ++j) {
    labels_[j] = 0;
    prefix_max_[j] = prefix_max_[i];
  }
  return true;
}

std::uint64_t count_partitions(std::size_t n) {
  if (n == 0) return 1;
  RestrictedGrowth rg(n);
  std::uint64_t count = 0;
  do ++count;
  while (rg.next());
  return count;
}

}  // namespace localcc
