#include "qpa/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace qpa {

Partition::Partition(std::vector<int64_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition: parts must be nonnegative");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int64_t Partition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), int64_t{0});
}

std::vector<int64_t> Partition::padded(std::size_t count) const {
  if (parts_.size() > count) {
    throw std::domain_error("partition: more parts than the requested width");
  }
  std::vector<int64_t> out(parts_);
  out.resize(count, 0);
  return out;
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

namespace {

void emit_partitions(int64_t remaining, int64_t max_part, std::size_t max_length,
                     std::vector<int64_t>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (current.size() >= max_length) return;
  for (int64_t p = std::min(max_part, remaining); p >= 1; --p) {
    current.push_back(p);
    emit_partitions(remaining - p, p, max_length, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int64_t n, std::size_t max_length) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int64_t> current;
  emit_partitions(n, n, max_length, current, out);
  return out;
}

}  // namespace qpa
