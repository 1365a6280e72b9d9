#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace specop {

// A finite sequence of pairwise distinct vertex labels. Positions define the
// total order; labels themselves are opaque.
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::vector<std::string> labels);

  // Labels "0", "1", ..., "n-1", optionally prefixed.
  static LinearOrder numbered(std::size_t n, std::string_view prefix = "");

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(std::size_t i) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // Half-open slice [begin, end).
  LinearOrder segment(std::size_t begin, std::size_t end) const;
  static LinearOrder concat(const std::vector<LinearOrder>& parts);

  bool operator==(const LinearOrder&) const = default;

 private:
  std::vector<std::string> labels_;
};

// A split of a linear order into k >= 1 contiguous nonempty segments
// (a strong composition of the order).
class SegmentedPartition {
 public:
  SegmentedPartition(LinearOrder parent, std::vector<std::size_t> segment_sizes);

  const LinearOrder& parent() const { return parent_; }
  std::size_t block_count() const { return ends_.size(); }
  std::size_t block_size(std::size_t j) const;
  std::size_t block_begin(std::size_t j) const;
  std::size_t block_end(std::size_t j) const;
  LinearOrder block(std::size_t j) const;
  std::size_t block_of(std::size_t vertex) const;
  std::vector<std::size_t> block_sizes() const;

  bool operator==(const SegmentedPartition&) const = default;

 private:
  LinearOrder parent_;
  std::vector<std::size_t> ends_;  // cumulative ends; back() == parent size
};

}  // namespace specop
