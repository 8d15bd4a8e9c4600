#pragma once

// Cylindric shapes of type (m, n).
//
// Cells are pairs (r, c) in Z^2 modulo (r, c) ~ (r + m, c - (n - m)). A
// boundary is a periodic sequence b with b(r + m) = b(r) - (n - m) that is
// weakly decreasing in r; its order ideal is {(r, c) : c <= b(r)}. Row r of
// the partition lambda sits in row r of the plane, so lambda[d] is the
// boundary b(r) = lambda(r - d) + d, where lambda is extended periodically.
// The cell (r, c) lies on diagonal c - r mod n.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "affine_permutation.hpp"
#include "error.hpp"
#include "partition.hpp"
#include "symfunc.hpp"

namespace cylkit {

struct CylType {
  int m = 1;
  int n = 2;

  CylType() = default;
  CylType(int rows, int period) : m(rows), n(period) {
    require(0 < m && m < n, "cylinder type needs 0 < m < n");
  }
  int cols() const { return n - m; }
  friend bool operator==(const CylType&, const CylType&) = default;
};

/// One period b(1..m) of a weakly decreasing (m, n)-periodic boundary.
class PeriodicSequence {
 public:
  PeriodicSequence(CylType type, std::vector<Int> rows) : type_(type), rows_(std::move(rows)) {
    require(static_cast<int>(rows_.size()) == type_.m, "boundary needs exactly m entries");
    for (int r = 1; r <= type_.m; ++r)
      require(at(r - 1) >= at(r), "boundary must be weakly decreasing across the seam");
  }

  /// lambda[d]: b(r) = lambda(r - d) + d.
  static PeriodicSequence of(CylType type, const Partition& lambda, Int d) {
    require(lambda.fits_box(type.m, type.cols()), "partition " + lambda.str() + " does not fit the m x (n-m) box");
    std::vector<Int> rows(type.m);
    for (int r = 1; r <= type.m; ++r) rows[r - 1] = partition_at(type, lambda, r - d) + d;
    return PeriodicSequence(type, std::move(rows));
  }

  const CylType& type() const { return type_; }
  const std::vector<Int>& rows() const { return rows_; }

  /// b(r) for any integer r.
  Int at(Int r) const {
    const Int m = type_.m;
    Int r0 = mod(r - 1, m) + 1;
    Int k = (r - r0) / m;
    return rows_[r0 - 1] - k * type_.cols();
  }

  /// Pointwise containment of order ideals.
  bool contains(const PeriodicSequence& inner) const {
    require(type_ == inner.type_, "cylinder type mismatch");
    for (int r = 1; r <= type_.m; ++r)
      if (inner.at(r) > at(r)) return false;
    return true;
  }

  /// Number of cells between `inner` and this boundary, per period.
  Int cells_above(const PeriodicSequence& inner) const {
    Int total = 0;
    for (int r = 1; r <= type_.m; ++r) total += at(r) - inner.at(r);
    return total;
  }

  /// The unique (lambda, d) with this boundary equal to lambda[d].
  std::pair<Partition, Int> normalize() const {
    const Int cols = type_.cols();
    // g(d) = b(d) - d is strictly decreasing; take the largest d with g(d) >= n - m
    Int d = 0;
    while (at(d) - d < cols) --d;
    while (at(d + 1) - (d + 1) >= cols) ++d;
    std::vector<int> parts(type_.m);
    for (int r = 1; r <= type_.m; ++r) parts[r - 1] = static_cast<int>(at(r + d) - d);
    return {Partition(parts), d};
  }

  friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;
  friend auto operator<=>(const PeriodicSequence& a, const PeriodicSequence& b) { return a.rows_ <=> b.rows_; }

 private:
  static Int partition_at(CylType type, const Partition& lambda, Int r) {
    Int r0 = mod(r - 1, type.m) + 1;
    Int k = (r - r0) / type.m;
    return lambda.part(static_cast<int>(r0)) - k * type.cols();
  }

  CylType type_;
  std::vector<Int> rows_;
};

/// lambda[d] / mu[0], written lambda/d/mu.
class CylindricShape {
 public:
  CylindricShape(CylType type, Partition lambda, Int d, Partition mu)
      : type_(type), lambda_(std::move(lambda)), d_(d), mu_(std::move(mu)) {
    require(lambda_.fits_box(type.m, type.cols()), "outer partition " + lambda_.str() + " does not fit P_mn");
    require(mu_.fits_box(type.m, type.cols()), "inner partition " + mu_.str() + " does not fit P_mn");
    require(d_ >= 0, "cylindric shape offset must be non-negative");
    require(outer().contains(inner()),
            "cylindric shape " + lambda_.str() + "/" + std::to_string(d_) + "/" + mu_.str() + " is not contained");
  }

  /// lambda[r] / mu[s], shifted so the inner boundary has offset 0.
  static CylindricShape from_offsets(CylType type, Partition lambda, Int r, Partition mu, Int s) {
    return CylindricShape(type, std::move(lambda), r - s, std::move(mu));
  }

  const CylType& type() const { return type_; }
  const Partition& lambda() const { return lambda_; }
  Int d() const { return d_; }
  const Partition& mu() const { return mu_; }

  PeriodicSequence outer() const { return PeriodicSequence::of(type_, lambda_, d_); }
  PeriodicSequence inner() const { return PeriodicSequence::of(type_, mu_, 0); }

  std::string str() const { return lambda_.str() + "/" + std::to_string(d_) + "/" + mu_.str(); }

  friend bool operator==(const CylindricShape&, const CylindricShape&) = default;

 private:
  CylType type_;
  Partition lambda_;
  Int d_;
  Partition mu_;
};

inline CylindricShape shape_new(CylType type, Partition lambda, Int d, Partition mu) {
  return CylindricShape(type, std::move(lambda), d, std::move(mu));
}

/// |lambda| - |mu| + n d.
inline Int cell_count(const CylindricShape& shape) { return shape.outer().cells_above(shape.inner()); }

struct Cell {
  Int row;
  Int col;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Moves a cell to its representative with row in 1..m.
inline Cell canonical_cell(CylType type, Cell cell) {
  Int r0 = mod(cell.row - 1, type.m) + 1;
  Int k = (cell.row - r0) / type.m;
  return Cell{r0, cell.col + k * type.cols()};
}

inline Int diagonal(CylType type, Cell cell) { return mod(cell.col - cell.row, type.n); }

/// Cell representatives (rows 1..m) of the diagram, row by row.
inline std::vector<Cell> cells(const CylindricShape& shape) {
  std::vector<Cell> out;
  const auto outer = shape.outer();
  const auto inner = shape.inner();
  for (Int r = 1; r <= shape.type().m; ++r)
    for (Int c = inner.at(r) + 1; c <= outer.at(r); ++c) out.push_back({r, c});
  return out;
}

/// A_i acting on a boundary: adds the box on diagonal i when one is addable.
inline std::optional<PeriodicSequence> add_box(const PeriodicSequence& seq, int i) {
  const CylType& t = seq.type();
  for (Int r = 1; r <= t.m; ++r) {
    if (seq.at(r - 1) > seq.at(r) && mod(seq.at(r) + 1 - r, t.n) == mod(i, t.n)) {
      std::vector<Int> rows = seq.rows();
      ++rows[r - 1];
      return PeriodicSequence(t, std::move(rows));
    }
  }
  return std::nullopt;
}

/// Inverse of add_box, refusing to cut into `floor`.
inline std::optional<PeriodicSequence> remove_box(const PeriodicSequence& seq, int i, const PeriodicSequence& floor) {
  const CylType& t = seq.type();
  for (Int r = 1; r <= t.m; ++r) {
    if (seq.at(r) > seq.at(r + 1) && seq.at(r) > floor.at(r) && mod(seq.at(r) - r, t.n) == mod(i, t.n)) {
      std::vector<Int> rows = seq.rows();
      --rows[r - 1];
      return PeriodicSequence(t, std::move(rows));
    }
  }
  return std::nullopt;
}

/// A_{i1} ... A_{il} applied to seq (rightmost letter first).
inline std::optional<PeriodicSequence> apply_word(const PeriodicSequence& seq, const GeneratorWord& word) {
  std::optional<PeriodicSequence> cur = seq;
  for (auto it = word.letters.rbegin(); it != word.letters.rend() && cur; ++it) cur = add_box(*cur, *it);
  return cur;
}

/// A_w applied to seq, through the canonical reduced word of w.
inline std::optional<PeriodicSequence> apply_permutation(const PeriodicSequence& seq, const AffinePermutation& w) {
  require(w.period() == seq.type().n, "period mismatch between permutation and cylinder");
  return apply_word(seq, reduced_word(w));
}

/// Word w with A_w * inner = outer, found by peeling removable boxes from
/// outer (lowest row first) and recording their diagonals left to right.
inline GeneratorWord word_between(const PeriodicSequence& inner, const PeriodicSequence& outer) {
  require(outer.contains(inner), "outer boundary does not contain inner boundary");
  const CylType& t = outer.type();
  std::vector<int> letters;
  PeriodicSequence cur = outer;
  while (!(cur == inner)) {
    bool removed = false;
    for (Int r = 1; r <= t.m && !removed; ++r) {
      if (cur.at(r) > cur.at(r + 1) && cur.at(r) > inner.at(r)) {
        int diag = static_cast<int>(mod(cur.at(r) - r, t.n));
        letters.push_back(diag);
        cur = *remove_box(cur, diag, inner);
        removed = true;
      }
    }
    ensure(removed, "no removable box between boundaries");
  }
  return GeneratorWord(t.n, std::move(letters));
}

/// Every row has at most n-m cells and every column at most m cells.
inline bool is_toric(const CylindricShape& shape) {
  const CylType& t = shape.type();
  const auto outer = shape.outer();
  const auto inner = shape.inner();
  for (Int r = 1; r <= t.m; ++r)
    if (outer.at(r) - inner.at(r) > t.cols()) return false;
  for (Int c = 1; c <= t.cols(); ++c) {
    Int count = 0;
    // rows r0 + k m meet column c iff inner(r0) - k (n-m) < c <= outer(r0) - k (n-m)
    for (Int r0 = 1; r0 <= t.m; ++r0)
      count += floor_div(outer.at(r0) - c, t.cols()) - floor_div(inner.at(r0) - c, t.cols());
    if (count > t.m) return false;
  }
  return true;
}

/// w is 321-avoiding with maxc(w) <= m and maxr(w) <= n - m.
inline bool in_A(const AffinePermutation& w, CylType type) {
  require(w.period() == type.n, "period mismatch between permutation and cylinder");
  return is_321_avoiding(w) && maxc(w) <= type.m && maxr(w) <= type.cols();
}

inline bool in_A0(const AffinePermutation& w, CylType type) { return is_grassmannian(w, 0) && in_A(w, type); }

/// The shape A_w * (empty/0/empty) for w in A^0_{(n-m,m)}.
inline CylindricShape phi(const AffinePermutation& w, CylType type) {
  require(in_A0(w, type), "phi needs a 0-Grassmannian element of A_(n-m,m): " + w.str());
  auto result = apply_permutation(PeriodicSequence::of(type, Partition{}, 0), w);
  ensure(result.has_value(), "A_w annihilated the empty shape for " + w.str());
  auto [nu, e] = result->normalize();
  return CylindricShape(type, nu, e, Partition{});
}

/// Inverse of phi on shapes nu/e/empty.
inline AffinePermutation phi_inv(const CylindricShape& shape) {
  require(shape.mu().empty(), "phi_inv needs an empty inner partition");
  return word_to_permutation(word_between(shape.inner(), shape.outer()));
}

/// w with F_w equal to the cylindric skew Schur function of the shape.
inline AffinePermutation skew_word(const CylindricShape& shape) {
  const CylType& t = shape.type();
  auto outer = phi_inv(CylindricShape(t, shape.lambda(), shape.d(), Partition{}));
  auto inner = phi_inv(CylindricShape(t, shape.mu(), 0, Partition{}));
  return outer * inner.inverse();
}

/// r_m = s_{-m} ... s_{-1} s_{n-m-1} ... s_1 s_0.
inline AffinePermutation ribbon_r(CylType type) {
  std::vector<int> letters;
  for (int i = -type.m; i <= -1; ++i) letters.push_back(static_cast<int>(mod(i, type.n)));
  for (int i = type.cols() - 1; i >= 0; --i) letters.push_back(i);
  return word_to_permutation(type.n, letters);
}

inline AffinePermutation power(const AffinePermutation& w, int exponent) {
  AffinePermutation out = AffinePermutation::identity(w.period());
  for (int i = 0; i < exponent; ++i) out = out * w;
  return out;
}

struct RibbonDecomposition {
  AffinePermutation base;  // w^(0)
  int d = 0;
};

/// w = w^(0) r_m^d with lengths adding; d counts the letter n-m in a reduced word.
inline RibbonDecomposition ribbon_decomposition(const AffinePermutation& w, CylType type) {
  require(in_A0(w, type), "ribbon decomposition needs an element of A^0_(n-m,m): " + w.str());
  const auto word = reduced_word(w);
  const int d = static_cast<int>(std::count(word.letters.begin(), word.letters.end(), type.cols()));
  const auto tail = power(ribbon_r(type), d);
  const auto base = w * tail.inverse();
  ensure(base.length() + tail.length() == w.length(), "ribbon decomposition is not length additive");
  return {base, d};
}

/// Cylindric semistandard tableau: entries on the cell representatives.
struct CylTableau {
  CylindricShape shape;
  std::map<Cell, int> entries;

  /// Entry at any lift of a cell of the shape.
  std::optional<int> at(Cell cell) const {
    auto it = entries.find(canonical_cell(shape.type(), cell));
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }

  /// Rows weakly increase to the right, columns strictly increase downward.
  bool is_valid() const {
    for (const auto& [cell, value] : entries) {
      if (auto right = at({cell.row, cell.col + 1}); right && *right < value) return false;
      if (auto below = at({cell.row + 1, cell.col}); below && *below <= value) return false;
    }
    return true;
  }

  /// Exponent vector (number of entries equal to 1, 2, ..., N).
  std::vector<int> weight(int N) const {
    std::vector<int> out(N, 0);
    for (const auto& [cell, value] : entries) ++out[value - 1];
    return out;
  }
};

namespace detail {

/// Every horizontal strip cur <= next <= outer of the given size.
inline void for_each_horizontal_strip(const PeriodicSequence& cur, const PeriodicSequence& outer, Int size,
                                      const std::function<void(const PeriodicSequence&)>& visit) {
  const CylType& t = cur.type();
  std::vector<Int> next(cur.rows());
  std::function<void(int, Int)> fill = [&](int r, Int left) {
    if (r > t.m) {
      if (left == 0) visit(PeriodicSequence(t, next));
      return;
    }
    // no two new cells share a column: next(r) <= cur(r - 1)
    const Int cap = std::min(outer.at(r), cur.at(r - 1));
    for (Int x = cur.at(r); x <= cap && x - cur.at(r) <= left; ++x) {
      next[r - 1] = x;
      fill(r + 1, left - (x - cur.at(r)));
    }
    next[r - 1] = cur.at(r);
  };
  fill(1, size);
}

inline Int count_cylindric_chains(const PeriodicSequence& inner, const PeriodicSequence& outer,
                                  const std::vector<int>& sizes) {
  std::map<std::pair<std::vector<Int>, int>, Int> memo;
  std::function<Int(const PeriodicSequence&, int)> rec = [&](const PeriodicSequence& cur, int t) -> Int {
    if (t == static_cast<int>(sizes.size())) return cur == outer ? 1 : 0;
    auto key = std::make_pair(cur.rows(), t);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Int total = 0;
    for_each_horizontal_strip(cur, outer, sizes[t], [&](const PeriodicSequence& next) {
      total = checked_add(total, rec(next, t + 1));
    });
    memo.emplace(key, total);
    return total;
  };
  return rec(inner, 0);
}

}  // namespace detail

inline constexpr Int default_cell_cap = 14;

/// Generating polynomial of cylindric semistandard tableaux of the shape with
/// entries at most N, in the monomial basis.
inline SymmetricPolynomial cylindric_schur_poly(const CylindricShape& shape, int N, Int cap = default_cell_cap) {
  const Int size = cell_count(shape);
  if (size > cap)
    throw CapExceeded("cylindric Schur polynomial: " + std::to_string(size) + " cells exceed cap " +
                      std::to_string(cap));
  const int degree = static_cast<int>(size);
  SymmetricPolynomial out(N, degree);
  for (const auto& alpha : partitions_of(degree, degree, N)) {
    Int c = detail::count_cylindric_chains(shape.inner(), shape.outer(), alpha.padded(N));
    if (c != 0) out.set(alpha, c);
  }
  return out;
}

/// Visits every cylindric semistandard tableau with entries at most N.
inline void for_each_tableau(const CylindricShape& shape, int N, const std::function<void(const CylTableau&)>& visit,
                             Int cap = default_cell_cap) {
  if (cell_count(shape) > cap) throw CapExceeded("tableau enumeration: shape exceeds cell cap");
  const auto outer = shape.outer();
  CylTableau tab{shape, {}};
  std::function<void(const PeriodicSequence&, int)> rec = [&](const PeriodicSequence& cur, int value) {
    if (value > N) {
      if (cur == outer) visit(tab);
      return;
    }
    for (Int size = 0; size <= outer.cells_above(cur); ++size) {
      detail::for_each_horizontal_strip(cur, outer, size, [&](const PeriodicSequence& next) {
        std::vector<Cell> added;
        for (Int r = 1; r <= shape.type().m; ++r)
          for (Int c = cur.at(r) + 1; c <= next.at(r); ++c) added.push_back({r, c});
        for (const auto& cell : added) tab.entries[cell] = value;
        rec(next, value + 1);
        for (const auto& cell : added) tab.entries.erase(cell);
      });
    }
  };
  rec(shape.inner(), 1);
}

/// Plain-text picture of the diagram: each cell shows its diagonal index.
/// Rows 1 - m .. 2m are drawn so the wraparound is visible.
inline std::string render_diagram(const CylindricShape& shape, int periods = 3) {
  const CylType& t = shape.type();
  const auto outer = shape.outer();
  const auto inner = shape.inner();
  const Int first = 1 - t.m;
  const Int last = first + Int(periods) * t.m - 1;
  Int min_col = outer.at(first);
  for (Int r = first; r <= last; ++r)
    if (outer.at(r) > inner.at(r)) min_col = std::min(min_col, inner.at(r) + 1);
  const int width = static_cast<int>(std::to_string(t.n - 1).size()) + 1;
  std::ostringstream os;
  for (Int r = first; r <= last; ++r) {
    std::string line;
    for (Int c = min_col; c <= outer.at(r); ++c) {
      std::string cell = c > inner.at(r) ? std::to_string(diagonal(t, {r, c})) : ".";
      cell.resize(width, ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace cylkit
