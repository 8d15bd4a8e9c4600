#pragma once

// Affine Stanley symmetric functions F_w and their expansion into affine
// Schur functions F_u (u 0-Grassmannian) by repeated dual Pieri steps, plus
// the cylindric wrapper that reads the coefficients as Gromov-Witten
// invariants.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "affine_permutation.hpp"
#include "cylindric.hpp"
#include "error.hpp"
#include "memo.hpp"
#include "partition.hpp"
#include "rational_solve.hpp"
#include "symfunc.hpp"

namespace cylkit {

inline constexpr int default_length_cap = 16;
inline constexpr int default_oracle_cap = 9;

namespace detail {
struct DecompositionKey {
  AffinePermutation w;
  std::vector<int> sizes;
  friend bool operator==(const DecompositionKey&, const DecompositionKey&) = default;
};
struct DecompositionKeyHash {
  std::size_t operator()(const DecompositionKey& k) const noexcept {
    std::size_t seed = std::hash<AffinePermutation>{}(k.w);
    for (int s : k.sizes) hash_combine(seed, s);
    return seed;
  }
};
inline MemoTable<DecompositionKey, Int, DecompositionKeyHash>& decomposition_memo() {
  static MemoTable<DecompositionKey, Int, DecompositionKeyHash> table;
  return table;
}

struct PolyKey {
  AffinePermutation w;
  int nvars;
  friend bool operator==(const PolyKey&, const PolyKey&) = default;
};
struct PolyKeyHash {
  std::size_t operator()(const PolyKey& k) const noexcept {
    std::size_t seed = std::hash<AffinePermutation>{}(k.w);
    hash_combine(seed, k.nvars);
    return seed;
  }
};
inline MemoTable<PolyKey, SymmetricPolynomial, PolyKeyHash>& stanley_memo() {
  static MemoTable<PolyKey, SymmetricPolynomial, PolyKeyHash> table;
  return table;
}
}  // namespace detail

/// Number of factorizations w = d_{J_1} d_{J_2} ... with |J_t| = sizes[t] and
/// lengths adding. Zero entries stand for identity factors.
inline Int count_decompositions(const AffinePermutation& w, std::vector<int> sizes) {
  sizes.erase(std::remove(sizes.begin(), sizes.end(), 0), sizes.end());
  Int total_size = 0;
  for (int s : sizes) total_size += s;
  if (total_size != w.length()) return 0;
  if (sizes.empty()) return 1;
  return detail::decomposition_memo().get_or_compute({w, sizes}, [&] {
    const int n = w.period();
    const std::vector<int> rest(sizes.begin() + 1, sizes.end());
    Int total = 0;
    for (std::uint32_t mask : proper_subsets_of_size(n, sizes[0])) {
      // w = d_J * (u_J w) with lengths adding
      const AffinePermutation tail = u_J(CyclicSet(n, mask)) * w;
      if (tail.length() == w.length() - sizes[0]) total = checked_add(total, count_decompositions(tail, rest));
    }
    return total;
  });
}

/// F_w(x_1..x_N) in the monomial basis.
inline SymmetricPolynomial stanley_monomials(const AffinePermutation& w, int N, int cap = default_length_cap) {
  const int len = w.length();
  if (len > cap)
    throw CapExceeded("affine Stanley polynomial: length " + std::to_string(len) + " exceeds cap " +
                      std::to_string(cap));
  return detail::stanley_memo().get_or_compute({w, N}, [&] {
    SymmetricPolynomial out(N, len);
    for (const auto& alpha : partitions_of(len, len, N)) {
      Int c = count_decompositions(w, alpha.parts());
      if (c != 0) out.set(alpha, c);
    }
    return out;
  });
}

/// f^t: s_i -> s_{i+t}, i.e. x -> w(x - t) + t.
inline AffinePermutation rotate(const AffinePermutation& w, int t) {
  const int n = w.period();
  std::vector<Int> window(n);
  for (int i = 1; i <= n; ++i) window[i - 1] = w(Int(i) - t) + t;
  return AffinePermutation::from_window(std::move(window));
}

/// Residues occurring in the reduced words of w (all reduced words share them).
inline std::set<int> letters_used(const AffinePermutation& w) {
  auto word = reduced_word(w);
  return {word.letters.begin(), word.letters.end()};
}

/// mu < nu: smaller size, or equal size and mu_a > nu_a at the last index a
/// where they differ.
inline bool partition_less(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) return mu.size() < nu.size();
  for (int a = std::max(mu.length(), nu.length()); a >= 1; --a)
    if (mu.part(a) != nu.part(a)) return mu.part(a) > nu.part(a);
  return false;
}

/// Well-founded order driving the expansion. Sizes compare as in
/// partition_less, but within a size the comparison is reversed: a B- branch
/// keeps the size and shortens the last row, which moves it up in
/// partition_less, so the strictly decreasing measure is the mirrored order.
inline bool tail_precedes(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return partition_less(b, a);
}

struct TailOrder {
  bool operator()(const Partition& a, const Partition& b) const { return tail_precedes(a, b); }
};

struct Grassmannianization {
  AffinePermutation v;
  int p = 0;
};

/// sum_{i=1}^{k-1} i (k - i) with k = n - 1.
inline Int grassmannianize_bound(int n) {
  const Int k = n - 1;
  Int total = 0;
  for (Int i = 1; i < k; ++i) total += i * (k - i);
  return total;
}

/// Right extension v with wv p-Grassmannian, built by sorting the
/// c-statistics c_{q+1} >= c_{q+2} >= ... one position at a time.
inline Grassmannianization grassmannianize(const AffinePermutation& w) {
  const int n = w.period();
  if (auto p = grassmannian_residue(w)) return {AffinePermutation::identity(n), *p};

  AffinePermutation x = w;
  AffinePermutation v = AffinePermutation::identity(n);
  auto push = [&](Int b) {
    const int i = static_cast<int>(mod(b, n));
    ensure(!x.has_right_descent(i), "grassmannianize applied a descent to " + x.str());
    x = x.times_generator(i);
    v = v.times_generator(i);
  };
  // argmax of c over the integer range [lo, hi], smallest index on ties
  auto argmax = [&](Int lo, Int hi) {
    Int best = lo;
    for (Int j = lo + 1; j <= hi; ++j)
      if (c_stat(x, j) > c_stat(x, best)) best = j;
    return best;
  };

  const Int i1 = argmax(1, n);
  const Int j1 = argmax(i1 + 1, i1 + n - 1);
  for (Int b = i1; b <= j1 - 2; ++b) push(b);
  Int q = j1 - 2;
  Int sorted = 2;  // c_{q+1} >= ... >= c_{q+sorted} dominate the rest of the period
  while (sorted < n && !grassmannian_residue(x)) {
    const Int j = argmax(q + sorted + 1, q + n);
    const Int t = j - q - sorted - 1;
    for (Int b = q + sorted; b >= q + 1; --b)
      for (Int s = b; s <= b + t - 1; ++s) push(s);
    q += t;
    ++sorted;
  }
  auto p = grassmannian_residue(x);
  ensure(p.has_value(), "grassmannianize did not reach a Grassmannian element from " + w.str());
  ensure(v.length() <= grassmannianize_bound(n), "grassmannianize exceeded its length bound on " + w.str());
  return {v, *p};
}

/// (n-m)(m-1)/2, doubled to stay integral.
inline Int grassmannianize_321_bound_doubled(CylType type) { return Int(type.cols()) * (type.m - 1); }

/// Right extension v in A_(n-m,m) for w in A_(n-m,m) using every letter:
/// flatten one period of the inner boundary of w's cylindric shape.
inline Grassmannianization grassmannianize_321(const AffinePermutation& w, CylType type) {
  require(in_A(w, type), "grassmannianize_321 needs an element of A_(n-m,m): " + w.str());
  const int n = type.n;
  if (auto p = grassmannian_residue(w)) return {AffinePermutation::identity(n), *p};
  require(static_cast<int>(letters_used(w).size()) == n,
          "grassmannianize_321 needs every generator to occur in " + w.str());

  std::optional<PeriodicSequence> beta;
  for (const auto& lambda : partitions_in_box(type.m, type.cols())) {
    auto start = PeriodicSequence::of(type, lambda, 0);
    if (apply_permutation(start, w)) {
      beta = start;
      break;
    }
  }
  ensure(beta.has_value(), "A_w annihilates every boundary for " + w.str());

  Int best_a = 1;
  Int best_size = -1;
  for (Int a = 1; a <= type.m; ++a) {
    const Int floor = beta->at(a + type.m - 1);
    Int size = 0;
    for (Int r = a; r <= a + type.m - 1; ++r) size += beta->at(r) - floor;
    if (best_size < 0 || size < best_size) {
      best_size = size;
      best_a = a;
    }
  }
  const Int flat = beta->at(best_a + type.m - 1);
  std::vector<Int> rows(type.m);
  for (Int r = 1; r <= type.m; ++r) {
    // lift r into [a, a + m - 1]; each period step down adds n - m
    Int k = floor_div(best_a + type.m - 1 - r, type.m);
    rows[r - 1] = flat + k * type.cols();
  }
  const PeriodicSequence alpha(type, rows);
  const AffinePermutation v = word_to_permutation(word_between(alpha, *beta));
  const int p = static_cast<int>(mod(flat + 1 - best_a, n));

  ensure(is_length_additive(w, v), "grassmannianize_321 produced a non-additive extension for " + w.str());
  ensure(is_grassmannian(w * v, p), "grassmannianize_321 did not reach a Grassmannian element from " + w.str());
  ensure(in_A(v, type), "grassmannianize_321 left A_(n-m,m) for " + w.str());
  ensure(2 * Int(v.length()) <= grassmannianize_321_bound_doubled(type),
         "grassmannianize_321 exceeded its length bound on " + w.str());
  return {v, p};
}

/// The m with w in A_(n-m,m), when w uses every letter (m is then unique).
inline std::optional<CylType> cylinder_type_of(const AffinePermutation& w) {
  const int n = w.period();
  if (static_cast<int>(letters_used(w).size()) != n) return std::nullopt;
  for (int m = 1; m < n; ++m)
    if (in_A(w, CylType(m, n))) return CylType(m, n);
  return std::nullopt;
}

struct DualPieriBranches {
  AffinePermutation w_prime;
  CyclicSet J0;
  std::vector<AffinePermutation> plus;   // u_J w'
  std::vector<AffinePermutation> minus;  // w' u_J, J != J0
  std::vector<CyclicSet> minus_sets;
};

/// One dual Pieri step: w' = w d_{J0} with J0 = [-l+1, part-l], so that
/// F_w = sum_{plus} F_u - sum_{minus} F_u.
inline DualPieriBranches dual_pieri_branches(const AffinePermutation& w, int part, int index) {
  const int n = w.period();
  require(part >= 1 && part < n, "dual Pieri part must lie in 1..n-1");
  require(index >= 1, "dual Pieri part index must be positive");
  const CyclicSet J0 = CyclicSet::interval(n, -index + 1, part - index);
  const AffinePermutation w_prime = w * d_J(J0);
  require(w_prime.length() == w.length() + part, "w d_J0 is not length additive for " + w.str());
  DualPieriBranches out{w_prime, J0, {}, {}, {}};
  const int target = w_prime.length() - part;
  for (std::uint32_t mask : proper_subsets_of_size(n, part)) {
    const CyclicSet J(n, mask);
    const AffinePermutation u = u_J(J);
    if (auto left = u * w_prime; left.length() == target) out.plus.push_back(left);
    if (mask == J0.mask()) continue;
    if (auto right = w_prime * u; right.length() == target) {
      out.minus.push_back(right);
      out.minus_sets.push_back(J);
    }
  }
  return out;
}

/// v with w = u v, u cyclically decreasing of length q (left factors).
inline std::vector<AffinePermutation> left_pieri_quotients(const AffinePermutation& w, int q) {
  std::vector<AffinePermutation> out;
  for (std::uint32_t mask : proper_subsets_of_size(w.period(), q))
    if (auto v = u_J(CyclicSet(w.period(), mask)) * w; v.length() == w.length() - q) out.push_back(v);
  return out;
}

/// v with w = v u, u cyclically decreasing of length q (right factors).
inline std::vector<AffinePermutation> right_pieri_quotients(const AffinePermutation& w, int q) {
  std::vector<AffinePermutation> out;
  for (std::uint32_t mask : proper_subsets_of_size(w.period(), q))
    if (auto v = w * u_J(CyclicSet(w.period(), mask)); v.length() == w.length() - q) out.push_back(v);
  return out;
}

/// F_w = sum_u coeffs[u] F_u over 0-Grassmannian u.
struct AffineSchurExpansion {
  int n = 2;
  std::map<AffinePermutation, Int> coeffs;

  Int coeff(const AffinePermutation& u) const {
    auto it = coeffs.find(u);
    return it == coeffs.end() ? 0 : it->second;
  }
  friend bool operator==(const AffineSchurExpansion&, const AffineSchurExpansion&) = default;
};

/// Which construction produced the Grassmannian extension.
enum class ExtensionMethod { general, cylindric };

struct ExpansionStart {
  Grassmannianization extension;
  ExtensionMethod method;
};

/// Picks the cylindric extension when w lies in some A_(n-m,m) and uses every
/// letter, the general c-statistic sweep otherwise.
inline ExpansionStart choose_extension(const AffinePermutation& w) {
  if (auto type = cylinder_type_of(w)) return {grassmannianize_321(w, *type), ExtensionMethod::cylindric};
  return {grassmannianize(w), ExtensionMethod::general};
}

namespace detail {
inline MemoTable<AffinePermutation, AffineSchurExpansion>& expansion_memo() {
  static MemoTable<AffinePermutation, AffineSchurExpansion> table;
  return table;
}

/// Without the top-level memo; used by the memoized entry point.
inline AffineSchurExpansion expand_affine_schur_uncached(const AffinePermutation& w) {
  const int n = w.period();
  const auto start = choose_extension(w);
  const int p = start.extension.p;
  const AffinePermutation w0 = rotate(w, -p);
  const AffinePermutation v0 = rotate(start.extension.v, -p);
  ensure(is_grassmannian(w0 * v0, 0) && is_length_additive(w0, v0), "rotated extension is not 0-Grassmannian");
  const Partition shape = maximal_cdd(v0).shape;
  ensure(grassmannian_from_kbounded(n, shape) == v0, "extension is not recovered from its shape");

  // signed work items grouped by tail shape; the largest tail is always
  // processed first, so every contribution to it has already been merged
  std::map<Partition, std::map<AffinePermutation, Int>, TailOrder> work;
  work[shape][w0] = 1;
  AffineSchurExpansion out{n, {}};
  while (!work.empty()) {
    auto node = work.extract(std::prev(work.end()));
    const Partition& tail = node.key();
    for (const auto& [u, c] : node.mapped()) {
      if (c == 0) continue;
      if (tail.empty()) {
        ensure(is_grassmannian(u, 0), "work item with empty tail is not 0-Grassmannian: " + u.str());
        out.coeffs[u] = checked_add(out.coeffs[u], c);
        continue;
      }
      const int index = tail.length();
      const int part = tail.part(index);
      std::vector<int> shorter_parts(tail.parts().begin(), tail.parts().end() - 1);
      const Partition shorter(shorter_parts);
      const AffinePermutation v_short = grassmannian_from_kbounded(n, shorter);
      const auto branches = dual_pieri_branches(u, part, index);
      ensure(d_J(branches.J0) * v_short == grassmannian_from_kbounded(n, tail), "tail block mismatch");
      for (const auto& x : branches.plus) {
        auto& slot = work[shorter][x];
        slot = checked_add(slot, c);
      }
      for (std::size_t t = 0; t < branches.minus.size(); ++t) {
        const AffinePermutation new_tail = d_J(branches.minus_sets[t]) * v_short;
        ensure(is_grassmannian(new_tail, 0), "B- tail is not 0-Grassmannian");
        const Partition new_shape = maximal_cdd(new_tail).shape;
        ensure(tail_precedes(new_shape, tail), "B- branch did not decrease the tail shape");
        auto& slot = work[new_shape][branches.minus[t]];
        slot = checked_sub(slot, c);
      }
    }
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
    ensure(it->second >= 0, "negative coefficient " + std::to_string(it->second) + " on " + it->first.str() +
                                " in the expansion of " + w.str());
    it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
  }
  return out;
}
}  // namespace detail

/// F_w as a non-negative combination of affine Schur functions.
inline AffineSchurExpansion expand_affine_schur(const AffinePermutation& w, int cap = default_length_cap) {
  if (w.length() > cap)
    throw CapExceeded("expansion: length " + std::to_string(w.length()) + " exceeds cap " + std::to_string(cap));
  return detail::expansion_memo().get_or_compute(w, [&] { return detail::expand_affine_schur_uncached(w); });
}

/// Independent expansion: solve F_w = sum c_u F_u exactly over all
/// 0-Grassmannian u of length l(w), in l(w) variables.
inline AffineSchurExpansion oracle_expand(const AffinePermutation& w, int cap = default_oracle_cap) {
  const int len = w.length();
  if (len > cap)
    throw CapExceeded("oracle: length " + std::to_string(len) + " exceeds cap " + std::to_string(cap));
  const int n = w.period();
  const int N = std::max(1, len);
  const auto basis = grassmannian_elements(n, len);
  const auto monomials = partitions_of(len, len, N);
  std::vector<std::vector<Int>> A(monomials.size(), std::vector<Int>(basis.size()));
  std::vector<Int> b(monomials.size());
  const auto target = stanley_monomials(w, N, cap);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto column = stanley_monomials(basis[c], N, cap);
    for (std::size_t r = 0; r < monomials.size(); ++r) A[r][c] = column.coeff(monomials[r]);
  }
  for (std::size_t r = 0; r < monomials.size(); ++r) b[r] = target.coeff(monomials[r]);
  auto x = solve_exact(A, b);
  ensure(x.has_value(), "oracle system is singular or inconsistent for " + w.str());
  AffineSchurExpansion out{n, {}};
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Rational& value = (*x)[c];
    ensure(denominator(value) == 1, "oracle produced a non-integral coefficient for " + w.str());
    if (value != 0) out.coeffs[basis[c]] = static_cast<Int>(numerator(value));
  }
  return out;
}

/// Cylindric skew Schur function expanded in cylindric Schur functions
/// s_{nu/e/empty}, keyed by (nu, e).
struct SchurExpansion {
  CylType type;
  AffinePermutation word;  // the skew word whose F equals the shape's function
  std::map<std::pair<Partition, Int>, Int> coeffs;

  Int coeff(const Partition& nu, Int e) const {
    auto it = coeffs.find({nu, e});
    return it == coeffs.end() ? 0 : it->second;
  }
};

inline SchurExpansion expand_cylindric(const CylindricShape& shape, int cap = default_length_cap) {
  const CylType& type = shape.type();
  const AffinePermutation w = skew_word(shape);
  SchurExpansion out{type, w, {}};
  for (const auto& [u, c] : expand_affine_schur(w, cap).coeffs) {
    ensure(in_A0(u, type), "expansion key " + u.str() + " lies outside A^0_(n-m,m)");
    const auto image = phi(u, type);
    out.coeffs[{image.lambda(), image.d()}] = c;
  }
  return out;
}

/// C^{lambda,d}_{mu,nu}: the (nu, 0) coefficient of s_{lambda/d/mu}.
inline Int gromov_witten(CylType type, const Partition& lambda, Int d, const Partition& mu, const Partition& nu,
                         int cap = default_length_cap) {
  require(nu.fits_box(type.m, type.cols()), "partition " + nu.str() + " does not fit P_mn");
  const CylindricShape shape(type, lambda, d, mu);
  if (lambda.size() + type.n * d != mu.size() + nu.size()) return 0;
  return expand_cylindric(shape, cap).coeff(nu, 0);
}

/// Schur expansion of the toric Schur polynomial in m variables, restricted
/// to nu in P_mn.
inline std::map<Partition, Int> toric_gw_oracle(const CylindricShape& shape) {
  require(is_toric(shape), "toric oracle needs a toric shape: " + shape.str());
  const CylType& type = shape.type();
  std::map<Partition, Int> out;
  for (const auto& [nu, c] : expand_in_schur(cylindric_schur_poly(shape, type.m)))
    if (nu.fits_box(type.m, type.cols()) && c != 0) out[nu] = c;
  return out;
}

}  // namespace cylkit
