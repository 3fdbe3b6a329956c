#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpa {

// Young diagram: weakly decreasing nonnegative parts. Trailing zeros are
// normalized away on construction; padded() restores a fixed-width view for
// formulas that need exactly d parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int64_t> parts);

  int64_t total() const;  // number of boxes
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // 1-based row length; rows past the end have length 0.
  int64_t part(std::size_t index) const {
    return (index >= 1 && index <= parts_.size()) ? parts_[index - 1] : 0;
  }

  const std::vector<int64_t>& parts() const { return parts_; }
  std::vector<int64_t> padded(std::size_t count) const;
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int64_t> parts_;
};

// All partitions of n with at most max_length rows.
std::vector<Partition> partitions_of(int64_t n, std::size_t max_length);

}  // namespace qpa
