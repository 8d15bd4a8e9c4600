#pragma once

// Integer partitions and the enumeration helpers built on them.

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "memo.hpp"

namespace cylkit {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so (2,1,0) and (2,1) are the same partition.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] > 0, "partition parts must be positive");
      require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// One-based part access; zero beyond the length.
  int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

  /// True when every part of `inner` fits inside this partition.
  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
      if (inner.part(i) > part(i)) return false;
    return true;
  }

  /// Fits in the m x (n-m) box.
  bool fits_box(int rows, int cols) const { return length() <= rows && part(1) <= cols; }

  Partition conjugate() const {
    std::vector<int> out;
    for (int c = 1; c <= part(1); ++c) {
      int count = 0;
      for (int p : parts_) count += (p >= c);
      out.push_back(count);
    }
    return Partition(std::move(out));
  }

  /// Parts padded with zeros to exactly `len` entries.
  std::vector<int> padded(int len) const {
    std::vector<int> out(parts_);
    out.resize(std::max<std::size_t>(len, out.size()), 0);
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// Sorts an exponent vector into a partition.
inline Partition sort_to_partition(std::vector<int> exponents) {
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  return Partition(std::move(exponents));
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_len, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All partitions of `size` with at most `max_len` parts, each at most
/// `max_part`, in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(int size, int max_part, int max_len) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> cur;
  detail::partitions_rec(size, std::max(0, max_part), std::max(0, max_len), cur, out);
  return out;
}

inline std::vector<Partition> partitions_of(int size) { return partitions_of(size, size, size); }

/// All partitions fitting in a rows x cols box, ordered by size then
/// decreasing lexicographic order.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int s = 0; s <= rows * cols; ++s) {
    auto level = partitions_of(s, cols, rows);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace cylkit

template <>
struct std::hash<cylkit::Partition> {
  std::size_t operator()(const cylkit::Partition& p) const noexcept {
    std::size_t seed = p.parts().size();
    for (int x : p.parts()) cylkit::hash_combine(seed, std::hash<int>{}(x));
    return seed;
  }
};
