#pragma once

// Exact symmetric polynomials in finitely many variables, stored in the
// monomial basis, together with Schur and skew Schur polynomials, the
// monomial-to-Schur change of basis and Littlewood-Richardson coefficients.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "memo.hpp"
#include "partition.hpp"

namespace cylkit {

/// Homogeneous symmetric polynomial in x_1..x_N: coefficient of m_lambda for
/// every partition lambda of `degree` with at most N parts. Zero coefficients
/// are never stored.
class SymmetricPolynomial {
 public:
  SymmetricPolynomial(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    require(nvars >= 0 && degree >= 0, "negative variable count or degree");
  }

  static SymmetricPolynomial one(int nvars) {
    SymmetricPolynomial p(nvars, 0);
    p.set(Partition{}, 1);
    return p;
  }

  /// The monomial symmetric polynomial m_lambda (zero if lambda has too many parts).
  static SymmetricPolynomial monomial(int nvars, const Partition& lambda) {
    SymmetricPolynomial p(nvars, lambda.size());
    if (lambda.length() <= nvars) p.set(lambda, 1);
    return p;
  }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<Partition, Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Int coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? 0 : it->second;
  }

  void set(const Partition& lambda, Int value) {
    require(lambda.size() == degree_, "monomial degree mismatch");
    require(lambda.length() <= nvars_, "monomial has more parts than variables");
    if (value == 0) {
      coeffs_.erase(lambda);
    } else {
      coeffs_[lambda] = value;
    }
  }

  void add_to(const Partition& lambda, Int value) { set(lambda, checked_add(coeff(lambda), value)); }

  /// Drops every monomial with more than `nvars` parts (x_{nvars+1} = ... = 0).
  SymmetricPolynomial restrict_to(int nvars) const {
    require(nvars <= nvars_, "cannot restrict to more variables");
    SymmetricPolynomial out(nvars, degree_);
    for (const auto& [lam, c] : coeffs_)
      if (lam.length() <= nvars) out.set(lam, c);
    return out;
  }

  friend bool operator==(const SymmetricPolynomial&, const SymmetricPolynomial&) = default;

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += std::to_string(it->second) + "*m" + it->first.str();
    }
    return out;
  }

 private:
  int nvars_;
  int degree_;
  std::map<Partition, Int> coeffs_;
};

namespace detail {
inline void check_grading(const SymmetricPolynomial& p, const SymmetricPolynomial& q) {
  require(p.nvars() == q.nvars(), "variable count mismatch");
  require(p.degree() == q.degree() || p.is_zero() || q.is_zero(), "degree mismatch");
}
}  // namespace detail

inline SymmetricPolynomial mono_add(const SymmetricPolynomial& p, const SymmetricPolynomial& q) {
  detail::check_grading(p, q);
  SymmetricPolynomial out = p.is_zero() ? SymmetricPolynomial(q.nvars(), q.degree()) : p;
  for (const auto& [lam, c] : q.coeffs()) out.add_to(lam, c);
  return out;
}

inline SymmetricPolynomial mono_scale(Int factor, const SymmetricPolynomial& p) {
  SymmetricPolynomial out(p.nvars(), p.degree());
  for (const auto& [lam, c] : p.coeffs()) out.set(lam, checked_mul(factor, c));
  return out;
}

inline SymmetricPolynomial mono_sub(const SymmetricPolynomial& p, const SymmetricPolynomial& q) {
  return mono_add(p, mono_scale(-1, q));
}

inline SymmetricPolynomial operator+(const SymmetricPolynomial& p, const SymmetricPolynomial& q) { return mono_add(p, q); }
inline SymmetricPolynomial operator-(const SymmetricPolynomial& p, const SymmetricPolynomial& q) { return mono_sub(p, q); }
inline SymmetricPolynomial operator*(Int c, const SymmetricPolynomial& p) { return mono_scale(c, p); }

/// Product of symmetric polynomials: the coefficient of x^alpha in p*q is the
/// sum over beta <= alpha (componentwise) of p[beta] q[alpha - beta].
inline SymmetricPolynomial mono_multiply(const SymmetricPolynomial& p, const SymmetricPolynomial& q) {
  require(p.nvars() == q.nvars(), "variable count mismatch");
  const int N = p.nvars();
  const int degree = p.degree() + q.degree();
  SymmetricPolynomial out(N, degree);
  for (const auto& alpha : partitions_of(degree, degree, N)) {
    const auto a = alpha.padded(N);
    std::vector<int> beta(N, 0);
    Int total = 0;
    std::function<void(int, int)> rec = [&](int i, int used) {
      if (i == N) {
        if (used != p.degree()) return;
        std::vector<int> rest(N);
        for (int t = 0; t < N; ++t) rest[t] = a[t] - beta[t];
        Int pc = p.coeff(sort_to_partition(beta));
        if (pc == 0) return;
        total = checked_add(total, checked_mul(pc, q.coeff(sort_to_partition(rest))));
        return;
      }
      for (int b = 0; b <= a[i] && used + b <= p.degree(); ++b) {
        beta[i] = b;
        rec(i + 1, used + b);
      }
      beta[i] = 0;
    };
    rec(0, 0);
    if (total != 0) out.set(alpha, total);
  }
  return out;
}

namespace detail {

/// Counts chains inner = l^0 <= l^1 <= ... <= l^N = outer of partitions with
/// each l^t / l^{t-1} a horizontal strip of size sizes[t-1]. The number of
/// rows is bounded by outer's length.
inline Int count_strip_chains(const std::vector<int>& inner, const std::vector<int>& outer,
                              const std::vector<int>& sizes) {
  const int rows = static_cast<int>(outer.size());
  std::map<std::pair<std::vector<int>, int>, Int> memo;
  std::function<Int(const std::vector<int>&, int)> rec = [&](const std::vector<int>& cur, int t) -> Int {
    if (t == static_cast<int>(sizes.size())) return cur == outer ? 1 : 0;
    auto key = std::make_pair(cur, t);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Int total = 0;
    std::vector<int> next(cur);
    // row r may grow up to min(outer[r], cur[r-1]); row 0 only to outer[0]
    std::function<void(int, int)> fill = [&](int r, int left) {
      if (r == rows) {
        if (left == 0) total = checked_add(total, rec(next, t + 1));
        return;
      }
      const int cap = std::min(outer[r], r == 0 ? outer[0] : cur[r - 1]);
      for (int x = cur[r]; x <= cap && x - cur[r] <= left; ++x) {
        next[r] = x;
        fill(r + 1, left - (x - cur[r]));
      }
      next[r] = cur[r];
    };
    fill(0, sizes[t]);
    memo.emplace(key, total);
    return total;
  };
  return rec(inner, 0);
}

struct SchurKey {
  Partition outer;
  Partition inner;
  int nvars;
  friend bool operator==(const SchurKey&, const SchurKey&) = default;
};
struct SchurKeyHash {
  std::size_t operator()(const SchurKey& k) const noexcept {
    std::size_t seed = std::hash<Partition>{}(k.outer);
    hash_combine(seed, std::hash<Partition>{}(k.inner));
    hash_combine(seed, k.nvars);
    return seed;
  }
};
inline MemoTable<SchurKey, SymmetricPolynomial, SchurKeyHash>& schur_memo() {
  static MemoTable<SchurKey, SymmetricPolynomial, SchurKeyHash> table;
  return table;
}

}  // namespace detail

/// Generating polynomial of semistandard tableaux of shape lambda/mu with
/// entries at most N.
inline SymmetricPolynomial skew_schur_poly(const Partition& lambda, const Partition& mu, int N) {
  require(lambda.contains(mu), "skew shape " + lambda.str() + "/" + mu.str() + " is not contained");
  return detail::schur_memo().get_or_compute({lambda, mu, N}, [&] {
    const int degree = lambda.size() - mu.size();
    SymmetricPolynomial out(N, degree);
    const auto outer = lambda.padded(lambda.length());
    const auto inner = mu.padded(lambda.length());
    for (const auto& alpha : partitions_of(degree, degree, N)) {
      Int c = detail::count_strip_chains(inner, outer, alpha.padded(N));
      if (c != 0) out.set(alpha, c);
    }
    return out;
  });
}

/// s_lambda(x_1..x_N); zero when lambda has more than N parts.
inline SymmetricPolynomial schur_poly(const Partition& lambda, int N) { return skew_schur_poly(lambda, Partition{}, N); }

/// Coefficients c_nu with p = sum c_nu s_nu(x_1..x_N), nu ranging over
/// partitions with at most N parts. Unitriangular elimination: the leading
/// monomial of s_nu in lexicographic order is m_nu with coefficient 1.
inline std::map<Partition, Int> expand_in_schur(const SymmetricPolynomial& p) {
  std::map<Partition, Int> out;
  SymmetricPolynomial rest = p;
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.coeffs().rbegin();
    const Partition nu = lead;
    const Int coeff = c;
    ensure(nu.length() <= p.nvars(), "monomial with more parts than variables");
    out[nu] = coeff;
    rest = mono_sub(rest, mono_scale(coeff, schur_poly(nu, p.nvars())));
    ensure(rest.coeff(nu) == 0, "Schur elimination failed to cancel the leading term");
  }
  return out;
}

/// Littlewood-Richardson coefficient c^lambda_{mu,nu}.
inline Int lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (!lambda.contains(mu)) return 0;
  const int N = std::max(1, nu.size());
  auto table = expand_in_schur(skew_schur_poly(lambda, mu, N));
  auto it = table.find(nu);
  return it == table.end() ? 0 : it->second;
}

}  // namespace cylkit
