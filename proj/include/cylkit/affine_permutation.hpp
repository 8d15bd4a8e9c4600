#pragma once

// The affine symmetric group in window notation: products, lengths, reduced
// words, pattern tests, cyclically decreasing/increasing elements and the
// canonical decomposition of an element into cyclically decreasing blocks.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "memo.hpp"
#include "partition.hpp"

namespace cylkit {

/// Element of the affine symmetric group with period n, stored by its window
/// [w(1), ..., w(n)]. The bi-infinite extension w(i+n) = w(i)+n is implied.
class AffinePermutation {
 public:
  AffinePermutation() : AffinePermutation(identity(2)) {}

  static AffinePermutation identity(int n) {
    require(n >= 2, "period must be at least 2");
    std::vector<Int> window(n);
    for (int i = 0; i < n; ++i) window[i] = i + 1;
    return AffinePermutation(n, std::move(window));
  }

  /// Validates residues and the window sum.
  static AffinePermutation from_window(std::vector<Int> window) {
    const int n = static_cast<int>(window.size());
    require(n >= 2, "period must be at least 2");
    std::vector<bool> seen(n, false);
    Int sum = 0;
    for (Int v : window) {
      Int r = mod(v, n);
      require(!seen[r], "window residues must be distinct mod n");
      seen[r] = true;
      sum += v;
    }
    require(sum == Int(n) * (n + 1) / 2, "window must sum to n(n+1)/2");
    return AffinePermutation(n, std::move(window));
  }

  int period() const { return n_; }
  std::span<const Int> window() const { return window_; }

  /// w(i) for any integer i.
  Int operator()(Int i) const {
    Int r = mod(i - 1, n_);
    return window_[r] + (i - 1 - r);
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (window_[i] != i + 1) return false;
    return true;
  }

  AffinePermutation inverse() const {
    std::vector<Int> out(n_);
    for (int i = 1; i <= n_; ++i) {
      Int v = window_[i - 1];
      Int r = mod(v - 1, n_);
      out[r] = i - (v - 1 - r);
    }
    return AffinePermutation(n_, std::move(out));
  }

  /// w * s_i: swaps the values at positions i and i+1.
  AffinePermutation times_generator(int i) const {
    check_letter(i);
    std::vector<Int> out(window_);
    if (i == 0) {
      Int first = out[0];
      out[0] = out[n_ - 1] - n_;
      out[n_ - 1] = first + n_;
    } else {
      std::swap(out[i - 1], out[i]);
    }
    return AffinePermutation(n_, std::move(out));
  }

  /// s_i * w: swaps the values i and i+1 (mod n).
  AffinePermutation generator_times(int i) const {
    check_letter(i);
    std::vector<Int> out(window_);
    for (Int& v : out) {
      Int r = mod(v, n_);
      if (r == i) {
        ++v;
      } else if (r == mod(i + 1, n_)) {
        --v;
      }
    }
    return AffinePermutation(n_, std::move(out));
  }

  /// Number of pairs (i, j) with 1 <= i <= n, i < j and w(i) > w(j).
  int length() const {
    Int total = 0;
    for (Int i = 1; i <= n_; ++i) {
      for (Int p = 1; p <= n_; ++p) {
        // j = p + k n with j > i and w(j) = w(p) + k n < w(i)
        Int lo = floor_div(i - p, n_) + 1;
        Int hi = floor_div(window_[i - 1] - window_[p - 1] - 1, n_);
        if (hi >= lo) total += hi - lo + 1;
      }
    }
    return static_cast<int>(total);
  }

  bool has_right_descent(int i) const { return (*this)(i) > (*this)(Int(i) + 1); }
  bool has_left_descent(int i) const { return inverse().has_right_descent(i); }

  std::vector<int> right_descents() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (has_right_descent(i)) out.push_back(i);
    return out;
  }

  std::vector<int> left_descents() const { return inverse().right_descents(); }

  /// Largest displacement |w(i) - i| over one period.
  Int max_displacement() const {
    Int m = 0;
    for (int i = 1; i <= n_; ++i) m = std::max(m, window_[i - 1] > i ? window_[i - 1] - i : i - window_[i - 1]);
    return m;
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << window_[i];
    os << ']';
    return os.str();
  }

  friend AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& v) {
    require(u.n_ == v.n_, "period mismatch in product");
    std::vector<Int> out(u.n_);
    for (int i = 1; i <= u.n_; ++i) out[i - 1] = u(v(i));
    return AffinePermutation(u.n_, std::move(out));
  }

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation& a, const AffinePermutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.window_ <=> b.window_;
  }

 private:
  AffinePermutation(int n, std::vector<Int> window) : n_(n), window_(std::move(window)) {}

  void check_letter(int i) const { require(i >= 0 && i < n_, "generator index out of range"); }

  int n_;
  std::vector<Int> window_;
};

}  // namespace cylkit

template <>
struct std::hash<cylkit::AffinePermutation> {
  std::size_t operator()(const cylkit::AffinePermutation& w) const noexcept {
    std::size_t seed = static_cast<std::size_t>(w.period());
    for (auto v : w.window()) cylkit::hash_combine(seed, std::hash<cylkit::Int>{}(v));
    return seed;
  }
};

namespace cylkit {

/// A word s_{i1} s_{i2} ... s_{il} in the generators of period n.
struct GeneratorWord {
  int n = 2;
  std::vector<int> letters;

  GeneratorWord() = default;
  GeneratorWord(int period, std::vector<int> word) : n(period), letters(std::move(word)) {
    require(n >= 2, "period must be at least 2");
    for (int a : letters) require(a >= 0 && a < n, "word letter out of range");
  }

  int size() const { return static_cast<int>(letters.size()); }

  /// Compact rendering: digits run together when n <= 10, else comma separated.
  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (n > 10 && i) os << ',';
      os << letters[i];
    }
    return os.str();
  }

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
  friend auto operator<=>(const GeneratorWord&, const GeneratorWord&) = default;
};

inline AffinePermutation word_to_permutation(const GeneratorWord& word) {
  AffinePermutation w = AffinePermutation::identity(word.n);
  for (int a : word.letters) w = w.times_generator(a);
  return w;
}

inline AffinePermutation word_to_permutation(int n, std::vector<int> letters) {
  return word_to_permutation(GeneratorWord(n, std::move(letters)));
}

inline int length(const AffinePermutation& w) { return w.length(); }

inline AffinePermutation multiply(const AffinePermutation& u, const AffinePermutation& v) { return u * v; }

/// True when l(uv) = l(u) + l(v).
inline bool is_length_additive(const AffinePermutation& u, const AffinePermutation& v) {
  return (u * v).length() == u.length() + v.length();
}

/// The reduced word obtained by always stripping the smallest right descent.
inline GeneratorWord reduced_word(AffinePermutation w) {
  std::vector<int> rev;
  while (!w.is_identity()) {
    int i = 0;
    while (!w.has_right_descent(i)) ++i;
    rev.push_back(i);
    w = w.times_generator(i);
  }
  std::reverse(rev.begin(), rev.end());
  return GeneratorWord(w.period(), std::move(rev));
}

namespace detail {
inline MemoTable<AffinePermutation, std::vector<std::vector<int>>>& reduced_word_memo() {
  static MemoTable<AffinePermutation, std::vector<std::vector<int>>> table;
  return table;
}

inline std::vector<std::vector<int>> reduced_words_rec(const AffinePermutation& w) {
  return reduced_word_memo().get_or_compute(w, [&] {
    std::vector<std::vector<int>> out;
    if (w.is_identity()) {
      out.emplace_back();
      return out;
    }
    for (int i : w.right_descents()) {
      for (auto word : reduced_words_rec(w.times_generator(i))) {
        word.push_back(i);
        out.push_back(std::move(word));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  });
}
}  // namespace detail

/// All reduced words of w, sorted lexicographically. Refuses l(w) > cap.
inline std::vector<GeneratorWord> enumerate_reduced_words(const AffinePermutation& w, int cap) {
  if (w.length() > cap)
    throw CapExceeded("reduced word enumeration: length " + std::to_string(w.length()) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<GeneratorWord> out;
  for (auto& letters : detail::reduced_words_rec(w)) out.emplace_back(w.period(), letters);
  return out;
}

/// Window criterion: no i < j < l in Z with w(i) > w(j) > w(l).
inline bool is_321_avoiding(const AffinePermutation& w) {
  const Int n = w.period();
  // an inversion i < j has j - i < 2 * max displacement
  const Int reach = 2 * w.max_displacement() + 1;
  for (Int i = 1; i <= n; ++i) {
    for (Int j = i + 1; j <= i + reach; ++j) {
      if (w(j) >= w(i)) continue;
      for (Int l = j + 1; l <= j + reach; ++l)
        if (w(l) < w(j)) return false;
    }
  }
  return true;
}

/// True iff p is the unique right descent of w. The identity counts as
/// p-Grassmannian for every p.
inline bool is_grassmannian(const AffinePermutation& w, int p) {
  if (w.is_identity()) return true;
  auto d = w.right_descents();
  return d.size() == 1 && d[0] == mod(p, w.period());
}

/// The residue p for which w is p-Grassmannian, if any (identity gives 0).
inline std::optional<int> grassmannian_residue(const AffinePermutation& w) {
  if (w.is_identity()) return 0;
  auto d = w.right_descents();
  if (d.size() == 1) return d[0];
  return std::nullopt;
}

/// Number of j < i with w(j) > w(i).
inline Int c_stat(const AffinePermutation& w, Int i) {
  const Int n = w.period();
  const Int wi = w(i);
  Int total = 0;
  for (Int p = 1; p <= n; ++p) {
    // j = p + k n < i and w(p) + k n > w(i)
    Int hi = floor_div(i - p - 1, n);
    Int lo = floor_div(wi - w(p), n) + 1;
    if (hi >= lo) total += hi - lo + 1;
  }
  return total;
}

/// Left weak order: w <= v iff v = x w with l(v) = l(x) + l(w).
inline bool left_weak_le(const AffinePermutation& w, const AffinePermutation& v) {
  return (v * w.inverse()).length() == v.length() - w.length();
}

enum class Direction { decreasing, increasing };
enum class Side { right, left };

/// A proper subset J of Z/nZ together with the direction of the cyclic
/// element it names (d_J or u_J).
class CyclicSet {
 public:
  static constexpr int max_period = 30;

  CyclicSet(int n, std::uint32_t mask, Direction dir = Direction::decreasing) : n_(n), mask_(mask), dir_(dir) {
    require(n >= 2 && n <= max_period, "cyclic set period out of range");
    require(mask < (std::uint32_t{1} << n), "cyclic set member out of range");
  }

  static CyclicSet from_members(int n, const std::vector<int>& members, Direction dir = Direction::decreasing) {
    std::uint32_t mask = 0;
    for (int a : members) {
      require(a >= 0 && a < n, "cyclic set member out of range");
      mask |= std::uint32_t{1} << a;
    }
    return CyclicSet(n, mask, dir);
  }

  /// The cyclic interval [a, b] = {a, a+1, ..., b} mod n; empty when b = a - 1.
  static CyclicSet interval(int n, Int a, Int b, Direction dir = Direction::decreasing) {
    require(b - a + 1 >= 0 && b - a + 1 < n, "cyclic interval must be proper");
    std::uint32_t mask = 0;
    for (Int x = a; x <= b; ++x) mask |= std::uint32_t{1} << mod(x, n);
    return CyclicSet(n, mask, dir);
  }

  int period() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  Direction direction() const { return dir_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int a) const { return (mask_ >> mod(a, n_)) & 1u; }
  bool is_proper() const { return size() < n_; }
  bool is_subset_of(const CyclicSet& other) const { return (mask_ & ~other.mask_) == 0; }

  CyclicSet with_direction(Direction dir) const { return CyclicSet(n_, mask_, dir); }
  CyclicSet complement() const { return CyclicSet(n_, ((std::uint32_t{1} << n_) - 1) & ~mask_, dir_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int a = 0; a < n_; ++a)
      if (contains(a)) out.push_back(a);
    return out;
  }

  /// Maximal cyclic intervals [p, q] of a proper set, ordered by start p.
  std::vector<std::pair<int, int>> intervals() const {
    require(is_proper(), "cyclic set must be a proper subset");
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < n_; ++p) {
      if (!contains(p) || contains(p - 1 + n_)) continue;
      int q = p;
      while (contains(q + 1)) ++q;
      out.emplace_back(p, q);
    }
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << '{';
    auto m = members();
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << '}';
    return os.str();
  }

  friend bool operator==(const CyclicSet&, const CyclicSet&) = default;

 private:
  int n_;
  std::uint32_t mask_;
  Direction dir_;
};

/// Word of d_J (each interval read q, q-1, ..., p) or u_J (p, ..., q).
inline GeneratorWord cyclic_word(const CyclicSet& J) {
  std::vector<int> letters;
  const int n = J.period();
  for (auto [p, q] : J.intervals()) {
    const int len = q - p + 1;
    for (int t = 0; t < len; ++t)
      letters.push_back(J.direction() == Direction::decreasing ? static_cast<int>(mod(q - t, n))
                                                               : static_cast<int>(mod(p + t, n)));
  }
  return GeneratorWord(n, std::move(letters));
}

namespace detail {
struct CyclicKey {
  int n;
  std::uint32_t mask;
  bool decreasing;
  friend bool operator==(const CyclicKey&, const CyclicKey&) = default;
};
struct CyclicKeyHash {
  std::size_t operator()(const CyclicKey& k) const noexcept {
    std::size_t seed = k.mask;
    hash_combine(seed, k.n);
    hash_combine(seed, k.decreasing);
    return seed;
  }
};
inline MemoTable<CyclicKey, AffinePermutation, CyclicKeyHash>& cyclic_memo() {
  static MemoTable<CyclicKey, AffinePermutation, CyclicKeyHash> table;
  return table;
}
}  // namespace detail

/// d_J or u_J according to J's direction. Throws for J = Z/nZ.
inline AffinePermutation cyclic_element(const CyclicSet& J) {
  require(J.is_proper(), "cyclic element needs a proper subset of Z/nZ");
  detail::CyclicKey key{J.period(), J.mask(), J.direction() == Direction::decreasing};
  return detail::cyclic_memo().get_or_compute(key, [&] { return word_to_permutation(cyclic_word(J)); });
}

inline AffinePermutation d_J(const CyclicSet& J) { return cyclic_element(J.with_direction(Direction::decreasing)); }
inline AffinePermutation u_J(const CyclicSet& J) { return cyclic_element(J.with_direction(Direction::increasing)); }

/// All proper subsets of Z/nZ of the given size, by increasing mask.
inline const std::vector<std::uint32_t>& proper_subsets_of_size(int n, int size) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<std::uint32_t>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({n, size});
  if (inserted && size < n) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
      if (std::popcount(mask) == size) it->second.push_back(mask);
  }
  return it->second;
}

/// Whether w factors as (v * x_J) [right side] or (x_J * v) [left side] with
/// lengths adding, where x_J is d_J or u_J.
inline bool has_cyclic_factor(const AffinePermutation& w, const CyclicSet& J, Side side) {
  // peel by multiplying with the inverse cyclic element: d_J^{-1} = u_J
  const CyclicSet opposite =
      J.with_direction(J.direction() == Direction::decreasing ? Direction::increasing : Direction::decreasing);
  const AffinePermutation inv = cyclic_element(opposite);
  const AffinePermutation rest = side == Side::right ? w * inv : inv * w;
  return rest.length() == w.length() - J.size();
}

/// The unique maximal J with w = v d_J (or the other side/direction
/// variants) and lengths adding. Every admissible J' is contained in it.
inline CyclicSet max_cyclic_factor(const AffinePermutation& w, Side side, Direction dir) {
  const int n = w.period();
  std::vector<std::uint32_t> valid;
  std::uint32_t best = 0;
  for (int s = 1; s < n; ++s) {
    for (std::uint32_t mask : proper_subsets_of_size(n, s)) {
      if (has_cyclic_factor(w, CyclicSet(n, mask, dir), side)) {
        valid.push_back(mask);
        if (std::popcount(mask) > std::popcount(best)) best = mask;
      }
    }
  }
  for (std::uint32_t mask : valid)
    ensure((mask & ~best) == 0, "cyclic factor of " + w.str() + " has no unique maximum");
  return CyclicSet(n, best, dir);
}

/// max |J| over right cyclically decreasing factors.
inline int maxr(const AffinePermutation& w) { return max_cyclic_factor(w, Side::right, Direction::decreasing).size(); }
/// max |J| over right cyclically increasing factors.
inline int maxc(const AffinePermutation& w) { return max_cyclic_factor(w, Side::right, Direction::increasing).size(); }

/// A partition with largest part at most n - 1.
class KBoundedPartition {
 public:
  KBoundedPartition(int n, Partition parts) : n_(n), parts_(std::move(parts)) {
    require(n >= 2, "period must be at least 2");
    require(parts_.part(1) <= n - 1, "k-bounded partition has a part exceeding n-1");
  }
  int period() const { return n_; }
  const Partition& partition() const { return parts_; }
  friend bool operator==(const KBoundedPartition&, const KBoundedPartition&) = default;

 private:
  int n_;
  Partition parts_;
};

/// w = d_{J_p} ... d_{J_1}; blocks[0] is J_1, the rightmost factor.
struct CyclicDecomposition {
  std::vector<CyclicSet> blocks;
  Partition shape;
};

namespace detail {
inline MemoTable<AffinePermutation, CyclicDecomposition>& cdd_memo() {
  static MemoTable<AffinePermutation, CyclicDecomposition> table;
  return table;
}
}  // namespace detail

/// Greedy peeling of maximal right cyclically decreasing factors, which
/// yields the lexicographically maximal block sizes.
inline CyclicDecomposition maximal_cdd(const AffinePermutation& w) {
  return detail::cdd_memo().get_or_compute(w, [&] {
    CyclicDecomposition out;
    std::vector<int> sizes;
    AffinePermutation rest = w;
    while (!rest.is_identity()) {
      CyclicSet J = max_cyclic_factor(rest, Side::right, Direction::decreasing);
      ensure(!J.empty(), "non-identity element without a cyclically decreasing factor");
      rest = rest * u_J(J);
      sizes.push_back(J.size());
      out.blocks.push_back(J);
    }
    for (std::size_t i = 1; i < sizes.size(); ++i)
      ensure(sizes[i - 1] >= sizes[i], "maximal decomposition of " + w.str() + " is not a partition");
    out.shape = Partition(sizes);
    return out;
  });
}

/// The 0-Grassmannian element d_{J_p} ... d_{J_1} with J_j = [-j+1, lambda_j - j].
inline AffinePermutation grassmannian_from_kbounded(const KBoundedPartition& lambda) {
  const int n = lambda.period();
  const auto& parts = lambda.partition();
  AffinePermutation w = AffinePermutation::identity(n);
  for (int j = parts.length(); j >= 1; --j)
    w = w * d_J(CyclicSet::interval(n, -j + 1, parts.part(j) - j));
  return w;
}

inline AffinePermutation grassmannian_from_kbounded(int n, const Partition& lambda) {
  return grassmannian_from_kbounded(KBoundedPartition(n, lambda));
}

/// Inverse of grassmannian_from_kbounded.
inline KBoundedPartition kbounded_from_grassmannian(const AffinePermutation& w) {
  require(is_grassmannian(w, 0), "element is not 0-Grassmannian: " + w.str());
  return KBoundedPartition(w.period(), maximal_cdd(w).shape);
}

/// All 0-Grassmannian elements of the given length, ordered like their
/// k-bounded partitions (decreasing lexicographic).
inline std::vector<AffinePermutation> grassmannian_elements(int n, int len) {
  std::vector<AffinePermutation> out;
  for (const auto& p : partitions_of(len, n - 1, len)) out.push_back(grassmannian_from_kbounded(n, p));
  return out;
}

namespace detail {
struct LevelKey {
  int n;
  int len;
  friend bool operator==(const LevelKey&, const LevelKey&) = default;
};
struct LevelKeyHash {
  std::size_t operator()(const LevelKey& k) const noexcept {
    std::size_t seed = k.n;
    hash_combine(seed, k.len);
    return seed;
  }
};
inline MemoTable<LevelKey, std::vector<AffinePermutation>, LevelKeyHash>& level_memo() {
  static MemoTable<LevelKey, std::vector<AffinePermutation>, LevelKeyHash> table;
  return table;
}
}  // namespace detail

/// Every element of the given length, sorted by window.
inline std::vector<AffinePermutation> elements_of_length(int n, int len) {
  return detail::level_memo().get_or_compute({n, len}, [&] {
    if (len == 0) return std::vector<AffinePermutation>{AffinePermutation::identity(n)};
    std::set<AffinePermutation> next;
    for (const auto& w : elements_of_length(n, len - 1))
      for (int i = 0; i < n; ++i)
        if (!w.has_right_descent(i)) next.insert(w.times_generator(i));
    return std::vector<AffinePermutation>(next.begin(), next.end());
  });
}

}  // namespace cylkit
