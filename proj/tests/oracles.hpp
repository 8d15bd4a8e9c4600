#pragma once

// Brute-force reference computations used only by the tests. None of these
// call the library routine they are checking.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "cylkit/cylkit.hpp"

namespace oracle {

using cylkit::Int;

/// Window after applying the letters left to right, each s_i swapping the
/// values at positions i and i+1 (periodically).
inline std::vector<Int> window_of_word(int n, const std::vector<int>& letters) {
  std::vector<Int> x(n);
  for (int i = 0; i < n; ++i) x[i] = i + 1;
  for (int a : letters) {
    if (a == 0) {
      const Int first = x[0];
      x[0] = x[n - 1] - n;
      x[n - 1] = first + n;
    } else {
      std::swap(x[a - 1], x[a]);
    }
  }
  return x;
}

inline Int value(const std::vector<Int>& window, Int i) {
  const Int n = Int(window.size());
  const Int r = cylkit::mod(i - 1, n) + 1;
  return window[r - 1] + (i - r);
}

/// Inversion count: pairs (i, j) with 1 <= i <= n, i < j, w(i) > w(j).
inline Int inversions(const std::vector<Int>& window) {
  const Int n = Int(window.size());
  Int spread = 0;
  for (Int i = 1; i <= n; ++i) spread = std::max(spread, std::abs(window[i - 1] - i));
  Int total = 0;
  for (Int i = 1; i <= n; ++i)
    for (Int j = i + 1; j <= i + 2 * spread + n; ++j)
      if (value(window, i) > value(window, j)) ++total;
  return total;
}

/// All words of the given length over Z/nZ.
inline void for_each_word(int n, int len, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> w(len, 0);
  while (true) {
    visit(w);
    int k = len - 1;
    while (k >= 0 && w[k] == n - 1) w[k--] = 0;
    if (k < 0) return;
    ++w[k];
  }
}

/// Reduced words of an element: words of length l(w) whose product is w.
inline std::set<std::vector<int>> reduced_words(const cylkit::AffinePermutation& w) {
  const int n = w.period();
  const int len = int(inversions({w.window().begin(), w.window().end()}));
  const std::vector<Int> target(w.window().begin(), w.window().end());
  std::set<std::vector<int>> out;
  for_each_word(n, len, [&](const std::vector<int>& word) {
    if (window_of_word(n, word) == target) out.insert(word);
  });
  return out;
}

/// Fully commutative test: no reduced word contains i, i+-1, i consecutively.
inline bool is_321_avoiding(const cylkit::AffinePermutation& w) {
  const int n = w.period();
  for (const auto& word : reduced_words(w))
    for (std::size_t k = 0; k + 2 < word.size(); ++k)
      if (word[k] == word[k + 2] && (cylkit::mod(word[k] - word[k + 1], n) == 1 ||
                                     cylkit::mod(word[k + 1] - word[k], n) == 1))
        return false;
  return true;
}

/// Monomial coefficients of the affine Stanley polynomial in N variables by
/// enumerating N-tuples of cyclically decreasing elements.
inline std::map<cylkit::Partition, Int> stanley_coefficients(const cylkit::AffinePermutation& w, int N) {
  using namespace cylkit;
  const int n = w.period();
  std::vector<std::pair<AffinePermutation, int>> factors;
  for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t{1} << n); ++mask) {
    CyclicSet J(n, mask);
    // d_J via its defining word: s_{i+1} before s_i
    std::vector<int> word;
    std::vector<int> members = J.members();
    std::vector<int> pending = members;
    while (!pending.empty()) {
      for (std::size_t k = 0; k < pending.size(); ++k) {
        const int a = pending[k];
        if (J.contains(a + 1) && std::find(pending.begin(), pending.end(), mod(a + 1, n)) != pending.end()) continue;
        word.push_back(a);
        pending.erase(pending.begin() + k);
        break;
      }
    }
    factors.emplace_back(AffinePermutation::from_window(window_of_word(n, word)), J.size());
  }
  std::map<Partition, Int> out;
  const int len = w.length();
  std::function<void(int, AffinePermutation, std::vector<int>&, int)> rec =
      [&](int slot, AffinePermutation acc, std::vector<int>& exps, int used) {
        if (slot == N) {
          if (used == len && acc == w) {
            std::vector<int> e = exps;
            std::sort(e.rbegin(), e.rend());
            if (std::equal(e.begin(), e.end(), exps.begin())) out[Partition(e)] += 1;
          }
          return;
        }
        for (const auto& [d, size] : factors) {
          if (used + size > len) continue;
          auto next = acc * d;
          if (next.length() != used + size) continue;
          exps.push_back(size);
          rec(slot + 1, next, exps, used + size);
          exps.pop_back();
        }
      };
  std::vector<int> exps;
  rec(0, AffinePermutation::identity(w.period()), exps, 0);
  return out;
}

/// Monomial coefficients of s_{lambda/mu} in N variables: count fillings of
/// the skew diagram with entries 1..N, rows weak, columns strict.
inline std::map<cylkit::Partition, Int> skew_schur_coefficients(const cylkit::Partition& lambda,
                                                                const cylkit::Partition& mu, int N) {
  std::vector<std::pair<int, int>> boxes;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = mu.part(r) + 1; c <= lambda.part(r); ++c) boxes.emplace_back(r, c);
  std::map<std::pair<int, int>, int> fill;
  std::map<cylkit::Partition, Int> out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == boxes.size()) {
      std::vector<int> content(N, 0);
      for (const auto& [b, v] : fill) ++content[v - 1];
      if (std::is_sorted(content.rbegin(), content.rend())) out[cylkit::Partition(content)] += 1;
      return;
    }
    const auto [r, c] = boxes[k];
    for (int v = 1; v <= N; ++v) {
      auto left = fill.find({r, c - 1});
      auto up = fill.find({r - 1, c});
      if (left != fill.end() && left->second > v) continue;
      if (up != fill.end() && up->second >= v) continue;
      fill[{r, c}] = v;
      rec(k + 1);
      fill.erase({r, c});
    }
  };
  rec(0);
  return out;
}

/// c^lambda_{mu, nu} by counting LR fillings of lambda/mu with content nu:
/// semistandard, reverse reading word a lattice word.
inline Int lr_coefficient(const cylkit::Partition& lambda, const cylkit::Partition& mu, const cylkit::Partition& nu) {
  if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu)) return 0;
  std::vector<std::pair<int, int>> boxes;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = mu.part(r) + 1; c <= lambda.part(r); ++c) boxes.emplace_back(r, c);
  const int N = nu.length();
  std::map<std::pair<int, int>, int> fill;
  Int count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == boxes.size()) {
      std::vector<int> seen(N + 1, 0);
      for (int r = 1; r <= lambda.length(); ++r)
        for (int c = lambda.part(r); c > mu.part(r); --c) {
          const int v = fill[{r, c}];
          ++seen[v];
          if (v > 1 && seen[v] > seen[v - 1]) return;
        }
      for (int v = 1; v <= N; ++v)
        if (seen[v] != nu.part(v)) return;
      ++count;
      return;
    }
    const auto [r, c] = boxes[k];
    for (int v = 1; v <= N; ++v) {
      auto left = fill.find({r, c - 1});
      auto up = fill.find({r - 1, c});
      if (left != fill.end() && left->second > v) continue;
      if (up != fill.end() && up->second >= v) continue;
      fill[{r, c}] = v;
      rec(k + 1);
      fill.erase({r, c});
    }
  };
  rec(0);
  return count;
}

/// Number of cylindric tableaux of the shape with the given content
/// (a composition). Cells of one period are filled freely and validity is
/// checked on the periodic lift: rows weak, columns strict.
inline Int cylindric_fillings(const cylkit::CylindricShape& shape, const std::vector<int>& content) {
  using namespace cylkit;
  const CylType t = shape.type();
  const auto outer = shape.outer();
  const auto inner = shape.inner();
  std::vector<std::pair<Int, Int>> boxes;
  for (Int r = 1; r <= t.m; ++r)
    for (Int c = inner.at(r) + 1; c <= outer.at(r); ++c) boxes.emplace_back(r, c);
  auto inside = [&](Int r, Int c) { return inner.at(r) < c && c <= outer.at(r); };
  // lift (r, c) into rows 1..m: (r + m, c - (n - m)) is the same cell
  auto lift = [&](Int r, Int c) {
    const Int r0 = mod(r - 1, t.m) + 1;
    return std::pair<Int, Int>{r0, c + (r - r0) / t.m * t.cols()};
  };
  const int N = int(content.size());
  std::map<std::pair<Int, Int>, int> fill;
  Int count = 0;
  std::function<void(std::size_t, std::vector<int>&)> rec = [&](std::size_t k, std::vector<int>& left) {
    if (k == boxes.size()) {
      for (const auto& [b, v] : fill) {
        const auto [r, c] = b;
        if (inside(r, c + 1) && fill.at(lift(r, c + 1)) < v) return;
        if (inside(r + 1, c) && fill.at(lift(r + 1, c)) <= v) return;
      }
      ++count;
      return;
    }
    for (int v = 1; v <= N; ++v) {
      if (left[v - 1] == 0) continue;
      --left[v - 1];
      fill[boxes[k]] = v;
      rec(k + 1, left);
      fill.erase(boxes[k]);
      ++left[v - 1];
    }
  };
  std::vector<int> left = content;
  Int total = 0;
  for (int a : content) total += a;
  if (total != Int(boxes.size())) return 0;
  rec(0, left);
  return count;
}

/// Monomial coefficients of the cylindric Schur polynomial via fillings.
inline std::map<cylkit::Partition, Int> cylindric_coefficients(const cylkit::CylindricShape& shape, int N) {
  std::map<cylkit::Partition, Int> out;
  const int size = int(cylkit::cell_count(shape));
  for (const auto& p : cylkit::partitions_of(size, size, N)) {
    std::vector<int> content = p.padded(N);
    if (Int c = cylindric_fillings(shape, content); c != 0) out[p] = c;
  }
  if (size == 0) out[cylkit::Partition{}] = 1;
  return out;
}

inline std::map<cylkit::Partition, Int> nonzero(const cylkit::SymmetricPolynomial& p) {
  std::map<cylkit::Partition, Int> out;
  for (const auto& [k, c] : p.coeffs())
    if (c != 0) out[k] = c;
  return out;
}

}  // namespace oracle
