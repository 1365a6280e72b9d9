#include "specop/linear_order.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace specop {

namespace {

void check_distinct(const std::vector<std::string>& labels) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate label in linear order: " + l);
  }
}

}  // namespace

LinearOrder::LinearOrder(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  check_distinct(labels_);
}

LinearOrder LinearOrder::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(std::string(prefix) + std::to_string(i));
  return LinearOrder(std::move(labels));
}

const std::string& LinearOrder::label(std::size_t i) const {
  if (i >= labels_.size()) throw std::out_of_range("label index out of range");
  return labels_[i];
}

LinearOrder LinearOrder::segment(std::size_t begin, std::size_t end) const {
  if (begin > end || end > labels_.size())
    throw std::out_of_range("segment range out of bounds");
  LinearOrder out;
  out.labels_.assign(labels_.begin() + begin, labels_.begin() + end);
  return out;
}

LinearOrder LinearOrder::concat(const std::vector<LinearOrder>& parts) {
  std::vector<std::string> labels;
  for (const auto& p : parts)
    labels.insert(labels.end(), p.labels_.begin(), p.labels_.end());
  return LinearOrder(std::move(labels));
}

SegmentedPartition::SegmentedPartition(LinearOrder parent,
                                       std::vector<std::size_t> segment_sizes)
    : parent_(std::move(parent)) {
  if (segment_sizes.empty())
    throw std::invalid_argument("segmented partition needs at least one block");
  std::size_t acc = 0;
  ends_.reserve(segment_sizes.size());
  for (std::size_t s : segment_sizes) {
    if (s == 0) throw std::invalid_argument("empty segment in partition");
    acc += s;
    ends_.push_back(acc);
  }
  if (acc != parent_.size())
    throw std::invalid_argument("segment sizes do not cover the linear order");
}

std::size_t SegmentedPartition::block_size(std::size_t j) const {
  return block_end(j) - block_begin(j);
}

std::size_t SegmentedPartition::block_begin(std::size_t j) const {
  if (j >= ends_.size()) throw std::out_of_range("block index out of range");
  return j == 0 ? 0 : ends_[j - 1];
}

std::size_t SegmentedPartition::block_end(std::size_t j) const {
  if (j >= ends_.size()) throw std::out_of_range("block index out of range");
  return ends_[j];
}

LinearOrder SegmentedPartition::block(std::size_t j) const {
  return parent_.segment(block_begin(j), block_end(j));
}

std::size_t SegmentedPartition::block_of(std::size_t vertex) const {
  if (vertex >= parent_.size())
    throw std::out_of_range("vertex index out of range");
  auto it = std::upper_bound(ends_.begin(), ends_.end(), vertex);
  return static_cast<std::size_t>(it - ends_.begin());
}

std::vector<std::size_t> SegmentedPartition::block_sizes() const {
  std::vector<std::size_t> sizes(ends_.size());
  for (std::size_t j = 0; j < ends_.size(); ++j) sizes[j] = block_size(j);
  return sizes;
}

}  // namespace specop
