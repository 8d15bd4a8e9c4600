#pragma once

// The affine nilCoxeter algebra: A_v A_w = A_{vw} when lengths add and 0
// otherwise. Elements are kept homogeneous in length.

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "affine_permutation.hpp"
#include "cylindric.hpp"
#include "error.hpp"
#include "memo.hpp"
#include "rational_solve.hpp"
#include "stanley.hpp"

namespace cylkit {

class NilCoxeterElement {
 public:
  explicit NilCoxeterElement(int n) : n_(n) { require(n >= 2, "period must be at least 2"); }

  static NilCoxeterElement unit(int n) { return basis(AffinePermutation::identity(n)); }

  /// A_w.
  static NilCoxeterElement basis(const AffinePermutation& w) {
    NilCoxeterElement out(w.period());
    out.add_term(w, 1);
    return out;
  }

  int period() const { return n_; }
  const std::map<AffinePermutation, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Common length of the keys; nullopt for the zero element.
  std::optional<int> grade() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.length();
  }

  Int coeff(const AffinePermutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const AffinePermutation& w, Int c) {
    require(w.period() == n_, "period mismatch in nilCoxeter element");
    if (c == 0) return;
    if (auto g = grade()) require(w.length() == *g, "nilCoxeter elements are kept homogeneous");
    Int& slot = terms_[w];
    slot = checked_add(slot, c);
    if (slot == 0) terms_.erase(w);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      os << (first ? "" : " + ") << c << "*A" << w.str();
      first = false;
    }
    return os.str();
  }

  friend bool operator==(const NilCoxeterElement&, const NilCoxeterElement&) = default;

 private:
  int n_;
  std::map<AffinePermutation, Int> terms_;
};

inline NilCoxeterElement nc_add(const NilCoxeterElement& a, const NilCoxeterElement& b) {
  require(a.period() == b.period(), "period mismatch in nilCoxeter sum");
  NilCoxeterElement out = a;
  for (const auto& [w, c] : b.terms()) out.add_term(w, c);
  return out;
}

inline NilCoxeterElement nc_scale(Int factor, const NilCoxeterElement& a) {
  NilCoxeterElement out(a.period());
  for (const auto& [w, c] : a.terms()) out.add_term(w, checked_mul(factor, c));
  return out;
}

inline NilCoxeterElement nc_sub(const NilCoxeterElement& a, const NilCoxeterElement& b) {
  return nc_add(a, nc_scale(-1, b));
}

inline NilCoxeterElement nc_multiply(const NilCoxeterElement& a, const NilCoxeterElement& b) {
  require(a.period() == b.period(), "period mismatch in nilCoxeter product");
  NilCoxeterElement out(a.period());
  for (const auto& [v, c1] : a.terms()) {
    for (const auto& [w, c2] : b.terms()) {
      const AffinePermutation vw = v * w;
      if (vw.length() == v.length() + w.length()) out.add_term(vw, checked_mul(c1, c2));
    }
  }
  return out;
}

inline NilCoxeterElement operator+(const NilCoxeterElement& a, const NilCoxeterElement& b) { return nc_add(a, b); }
inline NilCoxeterElement operator-(const NilCoxeterElement& a, const NilCoxeterElement& b) { return nc_sub(a, b); }
inline NilCoxeterElement operator*(const NilCoxeterElement& a, const NilCoxeterElement& b) { return nc_multiply(a, b); }

namespace detail {
inline NilCoxeterElement cyclic_sum(int i, int n, Direction dir) {
  require(i < n, "h_i and e_i need i < n");
  if (i < 0) return NilCoxeterElement(n);
  if (i == 0) return NilCoxeterElement::unit(n);
  NilCoxeterElement out(n);
  for (std::uint32_t mask : proper_subsets_of_size(n, i)) out.add_term(cyclic_element(CyclicSet(n, mask, dir)), 1);
  return out;
}
}  // namespace detail

/// h_i = sum over |J| = i of A_{d_J}; h_0 = 1 and h_i = 0 for i < 0.
inline NilCoxeterElement hh(int i, int n) { return detail::cyclic_sum(i, n, Direction::decreasing); }

/// e_i = sum over |J| = i of A_{u_J}.
inline NilCoxeterElement ee(int i, int n) { return detail::cyclic_sum(i, n, Direction::increasing); }

/// h_lambda = h_{lambda_1} h_{lambda_2} ...
inline NilCoxeterElement hh_product(const Partition& lambda, int n) {
  NilCoxeterElement out = NilCoxeterElement::unit(n);
  for (int part : lambda.parts()) out = out * hh(part, n);
  return out;
}

/// Image in A_{m,n}: keeps the terms A_w with w in A_(n-m,m).
inline NilCoxeterElement quotient_project(const NilCoxeterElement& a, CylType type) {
  require(a.period() == type.n, "period mismatch between element and cylinder");
  NilCoxeterElement out(a.period());
  for (const auto& [w, c] : a.terms())
    if (in_A(w, type)) out.add_term(w, c);
  return out;
}

namespace detail {
struct TypeLevelKey {
  int m;
  int n;
  int len;
  friend bool operator==(const TypeLevelKey&, const TypeLevelKey&) = default;
};
struct TypeLevelKeyHash {
  std::size_t operator()(const TypeLevelKey& k) const noexcept {
    std::size_t seed = k.m;
    hash_combine(seed, k.n);
    hash_combine(seed, k.len);
    return seed;
  }
};
inline MemoTable<TypeLevelKey, std::vector<AffinePermutation>, TypeLevelKeyHash>& type_level_memo() {
  static MemoTable<TypeLevelKey, std::vector<AffinePermutation>, TypeLevelKeyHash> table;
  return table;
}
}  // namespace detail

/// Elements of A_(n-m,m) of the given length, sorted. A_(n-m,m) is closed
/// under length-additive factors, so growing it one letter at a time suffices.
inline std::vector<AffinePermutation> elements_in_A(CylType type, int len) {
  return detail::type_level_memo().get_or_compute({type.m, type.n, len}, [&] {
    if (len == 0) return std::vector<AffinePermutation>{AffinePermutation::identity(type.n)};
    std::set<AffinePermutation> next;
    for (const auto& w : elements_in_A(type, len - 1)) {
      for (int i = 0; i < type.n; ++i) {
        if (w.has_right_descent(i)) continue;
        auto x = w.times_generator(i);
        if (in_A(x, type)) next.insert(x);
      }
    }
    return std::vector<AffinePermutation>(next.begin(), next.end());
  });
}

namespace detail {
inline MemoTable<AffinePermutation, NilCoxeterElement>& kschur_memo() {
  static MemoTable<AffinePermutation, NilCoxeterElement> table;
  return table;
}
}  // namespace detail

inline constexpr int default_kschur_cap = 8;

/// Noncommutative k-Schur function s_u = sum_w c^w_u A_w, read off the
/// F-expansions of every w of length l(u).
inline NilCoxeterElement nc_kschur(const AffinePermutation& u, int cap = default_kschur_cap) {
  require(is_grassmannian(u, 0), "nc_kschur needs a 0-Grassmannian element: " + u.str());
  if (u.length() > cap)
    throw CapExceeded("nc_kschur: length " + std::to_string(u.length()) + " exceeds cap " + std::to_string(cap));
  return detail::kschur_memo().get_or_compute(u, [&] {
    NilCoxeterElement out(u.period());
    for (const auto& w : elements_of_length(u.period(), u.length())) out.add_term(w, expand_affine_schur(w).coeff(u));
    return out;
  });
}

/// Image of s_u in A_{m,n}; only w in A_(n-m,m) are expanded.
inline NilCoxeterElement nc_kschur_projected(const AffinePermutation& u, CylType type) {
  require(is_grassmannian(u, 0), "nc_kschur needs a 0-Grassmannian element: " + u.str());
  NilCoxeterElement out(u.period());
  for (const auto& w : elements_in_A(type, u.length())) out.add_term(w, expand_affine_schur(w).coeff(u));
  return out;
}

/// Whether a lies in the span of the h_lambda (lambda k-bounded, |lambda| = grade).
inline bool in_h_span(const NilCoxeterElement& a) {
  if (a.is_zero()) return true;
  const int n = a.period();
  const int grade = *a.grade();
  std::vector<NilCoxeterElement> columns;
  std::set<AffinePermutation> keys;
  for (const auto& [w, c] : a.terms()) keys.insert(w);
  for (const auto& lambda : partitions_of(grade, n - 1, grade)) {
    columns.push_back(hh_product(lambda, n));
    for (const auto& [w, c] : columns.back().terms()) keys.insert(w);
  }
  std::vector<std::vector<Int>> A;
  std::vector<Int> b;
  for (const auto& w : keys) {
    std::vector<Int> row;
    for (const auto& col : columns) row.push_back(col.coeff(w));
    A.push_back(std::move(row));
    b.push_back(a.coeff(w));
  }
  // h_lambda are independent, so a solution exists exactly when a is in the span
  return solve_exact(A, b).has_value();
}

/// Sum of A_{u_{J^c} d_J} over |J| = n - m.
inline NilCoxeterElement ribbon_sum(CylType type) {
  NilCoxeterElement out(type.n);
  for (std::uint32_t mask : proper_subsets_of_size(type.n, type.cols())) {
    const CyclicSet J(type.n, mask);
    out.add_term(u_J(J.complement()) * d_J(J), 1);
  }
  return out;
}

struct CheckResult {
  explicit CheckResult(std::string check = {}) : name(std::move(check)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample

  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
};

struct IdentityReport {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

struct IdentityCaps {
  int max_len = 6;  // lengths of alpha / w in the symmetry, decomposition and d = c checks
};

namespace detail {

/// Every (left, right) with alpha = left * right and lengths adding.
inline std::vector<std::pair<AffinePermutation, AffinePermutation>> factorizations(const AffinePermutation& alpha) {
  std::set<AffinePermutation> rights{alpha};
  std::vector<AffinePermutation> frontier{alpha};
  while (!frontier.empty()) {
    std::vector<AffinePermutation> next;
    for (const auto& x : frontier)
      for (int i : x.left_descents())
        if (auto y = x.generator_times(i); rights.insert(y).second) next.push_back(y);
    frontier = std::move(next);
  }
  std::vector<std::pair<AffinePermutation, AffinePermutation>> out;
  for (const auto& right : rights) out.emplace_back(alpha * right.inverse(), right);
  return out;
}

inline CheckResult check_h_commute(int n) {
  CheckResult r{"h_i h_j = h_j h_i"};
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ++r.cases;
      if (!(hh(i, n) * hh(j, n) == hh(j, n) * hh(i, n)))
        r.fail("h_" + std::to_string(i) + " h_" + std::to_string(j) + " at n=" + std::to_string(n));
    }
  return r;
}

inline CheckResult check_dj_annihilates(CylType type) {
  CheckResult r{"A_{d_J} A_i = 0 for i in J"};
  const int n = type.n;
  for (int s = 1; s < n; ++s)
    for (std::uint32_t mask : proper_subsets_of_size(n, s)) {
      const CyclicSet J(n, mask);
      const auto d = NilCoxeterElement::basis(d_J(J));
      const auto u = NilCoxeterElement::basis(u_J(J));
      for (int i : J.members()) {
        const auto a = NilCoxeterElement::basis(word_to_permutation(n, {i}));
        for (const auto& prod : {d * a, a * d, u * a, a * u}) {
          ++r.cases;
          if (!quotient_project(prod, type).is_zero()) r.fail("J=" + J.str() + " i=" + std::to_string(i));
        }
      }
    }
  return r;
}

inline CheckResult check_overlap_vanishes(CylType type) {
  CheckResult r{"A_{u_J} A_{d_J'} = 0 for overlapping J, J'"};
  const int n = type.n;
  for (std::uint32_t a = 1; a + 1 < (std::uint32_t{1} << n); ++a)
    for (std::uint32_t b = 1; b + 1 < (std::uint32_t{1} << n); ++b) {
      if ((a & b) == 0) continue;
      const auto u = NilCoxeterElement::basis(u_J(CyclicSet(n, a)));
      const auto d = NilCoxeterElement::basis(d_J(CyclicSet(n, b)));
      ++r.cases;
      if (!quotient_project(u * d, type).is_zero() || !quotient_project(d * u, type).is_zero())
        r.fail("J=" + CyclicSet(n, a).str() + " J'=" + CyclicSet(n, b).str());
    }
  return r;
}

inline CheckResult check_ribbon_sum(CylType type) {
  CheckResult r{"projected s_{r_m} is the n-connected ribbon sum"};
  const auto lhs = nc_kschur_projected(ribbon_r(type), type);
  const auto expected = quotient_project(ribbon_sum(type), type);
  const auto em_hnm = quotient_project(ee(type.m, type.n) * hh(type.cols(), type.n), type);
  r.cases = 2;
  if (!(lhs == expected)) r.fail("s_{r_m} = " + lhs.str());
  if (!(expected == ribbon_sum(type))) r.fail("a ribbon u_{J^c} d_J left A_(n-m,m)");
  if (!(em_hnm == lhs)) r.fail("e_m h_{n-m} = " + em_hnm.str());
  return r;
}

inline CheckResult check_ribbon_decomposition(CylType type, int max_len) {
  CheckResult r{"s_w = s_{w0} (s_{r_m})^d in A_{m,n}"};
  const auto ribbon = nc_kschur_projected(ribbon_r(type), type);
  for (int len = 0; len <= max_len; ++len)
    for (const auto& w : elements_in_A(type, len)) {
      if (!is_grassmannian(w, 0)) continue;
      ++r.cases;
      const auto dec = ribbon_decomposition(w, type);
      auto rhs = nc_kschur_projected(dec.base, type);
      for (int t = 0; t < dec.d; ++t) rhs = quotient_project(rhs * ribbon, type);
      if (!(nc_kschur_projected(w, type) == rhs)) r.fail("w=" + w.str());
    }
  return r;
}

inline CheckResult check_coefficient_symmetry(int n, int max_len) {
  CheckResult r{"c^{w1}_{v2} = c^{v1}_{w2}"};
  for (int len = 0; len <= max_len; ++len)
    for (const auto& alpha : grassmannian_elements(n, len)) {
      const auto fs = factorizations(alpha);
      for (const auto& [w1, w2] : fs)
        for (const auto& [v1, v2] : fs) {
          if (w1.length() != v2.length()) continue;
          ++r.cases;
          if (expand_affine_schur(w1).coeff(v2) != expand_affine_schur(v1).coeff(w2))
            r.fail("alpha=" + alpha.str() + " w1=" + w1.str() + " v1=" + v1.str());
        }
    }
  return r;
}

inline CheckResult check_structure_constants(int n, int max_len) {
  CheckResult r{"c^{u'}_u = d^w_{u,v}"};
  for (int len = 0; len <= max_len; ++len)
    for (const auto& w : grassmannian_elements(n, len))
      for (const auto& [u_prime, v] : factorizations(w)) {
        const auto sv = nc_kschur(v);
        for (const auto& u : grassmannian_elements(n, u_prime.length())) {
          ++r.cases;
          const Int d = (nc_kschur(u) * sv).coeff(w);
          if (expand_affine_schur(u_prime).coeff(u) != d)
            r.fail("w=" + w.str() + " u'=" + u_prime.str() + " u=" + u.str());
        }
      }
  return r;
}

}  // namespace detail

/// Machine check of the algebraic identities for one cylinder type.
inline IdentityReport verify_identities(CylType type, IdentityCaps caps = {}) {
  IdentityReport report;
  report.checks.push_back(detail::check_h_commute(type.n));
  report.checks.push_back(detail::check_dj_annihilates(type));
  report.checks.push_back(detail::check_overlap_vanishes(type));
  report.checks.push_back(detail::check_ribbon_sum(type));
  report.checks.push_back(detail::check_ribbon_decomposition(type, caps.max_len));
  report.checks.push_back(detail::check_coefficient_symmetry(type.n, caps.max_len));
  report.checks.push_back(detail::check_structure_constants(type.n, caps.max_len));
  return report;
}

}  // namespace cylkit
