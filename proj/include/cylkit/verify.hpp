#pragma once

// Property and oracle suites shared by the command line tool and the
// acceptance test. Each suite returns a pass/fail record with the first few
// counterexamples.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "affine_permutation.hpp"
#include "cylindric.hpp"
#include "nilcoxeter.hpp"
#include "stanley.hpp"
#include "symfunc.hpp"

namespace cylkit {

struct SuiteResult {
  explicit SuiteResult(std::string suite = {}) : name(std::move(suite)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> counterexamples;
  std::int64_t millis = 0;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    passed = false;
    if (counterexamples.size() < 5) counterexamples.push_back(describe());
  }
};

/// Scale of the suites. Unset fields use each suite's own defaults.
struct VerifyConfig {
  std::optional<int> n;
  std::optional<int> maxlen;
  int random_count = 200;
  std::uint32_t seed = 20240611;
};

namespace verify_detail {

inline AffinePermutation word(int n, std::vector<int> letters) { return word_to_permutation(n, std::move(letters)); }

inline std::string show(const AffinePermutation& w) { return reduced_word(w).str() + " " + w.str(); }

inline std::string show(const AffineSchurExpansion& e) {
  std::string out = "{";
  for (const auto& [u, c] : e.coeffs) out += reduced_word(u).str() + ":" + std::to_string(c) + " ";
  return out + "}";
}

inline AffinePermutation random_element(int n, int len, std::mt19937& rng) {
  AffinePermutation w = AffinePermutation::identity(n);
  std::uniform_int_distribution<int> letter(0, n - 1);
  while (w.length() < len) {
    const int i = letter(rng);
    if (!w.has_right_descent(i)) w = w.times_generator(i);
  }
  return w;
}

/// Inputs of the oracle suite: every w of length <= 6 for n in {3, 4} and
/// random w of length <= 7 for n in {5, 6}.
inline std::vector<AffinePermutation> oracle_inputs(const VerifyConfig& cfg) {
  std::vector<AffinePermutation> out;
  const std::vector<int> small = cfg.n ? (*cfg.n <= 4 ? std::vector<int>{*cfg.n} : std::vector<int>{})
                                       : std::vector<int>{3, 4};
  const std::vector<int> large = cfg.n ? (*cfg.n > 4 ? std::vector<int>{*cfg.n} : std::vector<int>{})
                                       : std::vector<int>{5, 6};
  for (int n : small)
    for (int len = 0; len <= cfg.maxlen.value_or(6); ++len)
      for (const auto& w : elements_of_length(n, len)) out.push_back(w);
  if (!large.empty()) {
    std::mt19937 rng(cfg.seed);
    const int maxlen = cfg.maxlen.value_or(7);
    std::uniform_int_distribution<int> length(0, maxlen);
    for (int k = 0; k < cfg.random_count; ++k) out.push_back(random_element(large[k % large.size()], length(rng), rng));
  }
  return out;
}

inline const std::vector<CylType>& shift_types() {
  static const std::vector<CylType> types{CylType(2, 4), CylType(2, 5), CylType(3, 6)};
  return types;
}

/// Every valid shape lambda/d/mu of the type with d <= max_d and at most
/// max_cells cells.
inline std::vector<CylindricShape> all_shapes(CylType type, Int max_cells, Int max_d) {
  std::vector<CylindricShape> out;
  const auto box = partitions_in_box(type.m, type.cols());
  for (Int d = 0; d <= max_d; ++d)
    for (const auto& lambda : box)
      for (const auto& mu : box) {
        const Int cells = lambda.size() - mu.size() + type.n * d;
        if (cells < 0 || cells > max_cells) continue;
        if (!PeriodicSequence::of(type, lambda, d).contains(PeriodicSequence::of(type, mu, 0))) continue;
        out.emplace_back(type, lambda, d, mu);
      }
  return out;
}

inline std::vector<CylindricShape> straight_shapes(CylType type, Int max_cells) {
  std::vector<CylindricShape> out;
  for (const auto& s : all_shapes(type, max_cells, max_cells / type.n + 1))
    if (s.mu().empty()) out.push_back(s);
  return out;
}

inline std::string show(const CylindricShape& s) {
  return s.str() + " in (" + std::to_string(s.type().m) + "," + std::to_string(s.type().n) + ")";
}

}  // namespace verify_detail

/// Acceptance 1: the worked expansion of 531420.
inline SuiteResult suite_golden() {
  using verify_detail::word;
  SuiteResult r{"golden"};
  const auto w = word(6, {5, 3, 1, 4, 2, 0});
  const std::map<AffinePermutation, Int> expected{{word(6, {3, 4, 5, 2, 1, 0}), 1},
                                                  {word(6, {4, 0, 5, 2, 1, 0}), 2},
                                                  {word(6, {5, 4, 0, 5, 1, 0}), 1},
                                                  {word(6, {1, 0, 5, 2, 1, 0}), 1}};
  const auto got = expand_affine_schur(w);
  r.check(got.coeffs == expected, [&] { return "531420 expanded to " + verify_detail::show(got); });
  return r;
}

/// Acceptance 2: the intermediate data of the worked example.
inline SuiteResult suite_intermediates() {
  using verify_detail::word;
  SuiteResult r{"intermediates"};
  const auto w = word(6, {5, 3, 1, 4, 2, 0});
  const auto b = dual_pieri_branches(w, 1, 2);
  const std::set<AffinePermutation> plus(b.plus.begin(), b.plus.end());
  const std::set<AffinePermutation> minus(b.minus.begin(), b.minus.end());
  const std::set<AffinePermutation> plus_expected{word(6, {5, 4, 1, 0, 5, 2}), word(6, {3, 4, 1, 0, 5, 2}),
                                                  word(6, {3, 5, 4, 0, 5, 2})};
  const std::set<AffinePermutation> minus_expected{word(6, {3, 5, 4, 1, 0, 5})};
  r.check(plus == plus_expected, [] { return std::string("B+ differs"); });
  r.check(minus == minus_expected, [] { return std::string("B- differs"); });

  auto F = [](const AffinePermutation& x) { return stanley_monomials(x, 6); };
  SymmetricPolynomial sum(6, 5);
  for (const auto& x : b.plus) sum = sum + F(x);
  for (const auto& x : b.minus) sum = sum - F(x);
  r.check(sum == F(w), [] { return std::string("F_w != sum B+ - sum B-"); });

  const auto s332_2 = skew_schur_poly({3, 3, 2}, {2}, 6);
  const auto s332_11 = skew_schur_poly({3, 3, 2}, {1, 1}, 6);
  const auto s321 = schur_poly({3, 2, 1}, 6);
  r.check(F(word(6, {5, 4, 1, 0, 5, 2})) == s332_2, [] { return std::string("F_541052 != s_(3,3,2)/(2)"); });
  r.check(F(word(6, {3, 5, 4, 0, 5, 2})) == s332_11, [] { return std::string("F_354052 != s_(3,3,2)/(1,1)"); });
  r.check(F(word(6, {3, 5, 4, 1, 0, 5})) == s321, [] { return std::string("F_354105 != s_(3,2,1)"); });
  const std::map<Partition, Int> resolved{{{2, 2, 2}, 1}, {{3, 3}, 1}, {{3, 2, 1}, 1}};
  r.check(expand_in_schur(s332_11 + s332_2 - s321) == resolved, [] { return std::string("Schur resolution"); });

  const auto w2 = word(6, {3, 4, 1, 0, 5, 2});
  const auto b2 = dual_pieri_branches(w2, 2, 1);
  const std::set<AffinePermutation> plus2(b2.plus.begin(), b2.plus.end());
  r.check(b2.minus.empty() &&
              plus2 == std::set<AffinePermutation>{word(6, {3, 4, 5, 2, 1, 0}), word(6, {4, 0, 5, 2, 1, 0})},
          [] { return std::string("F_341052 = F_345210 + F_405210 branch"); });
  r.check(F(w2) == F(word(6, {3, 4, 5, 2, 1, 0})) + F(word(6, {4, 0, 5, 2, 1, 0})),
          [] { return std::string("F_341052 polynomial identity"); });
  return r;
}

/// Acceptance 3: the dual Pieri expansion agrees with the linear-algebra oracle.
inline SuiteResult suite_oracle(const VerifyConfig& cfg = {}) {
  SuiteResult r{"oracle"};
  for (const auto& w : verify_detail::oracle_inputs(cfg)) {
    std::string error;
    bool same = false;
    try {
      same = expand_affine_schur(w).coeffs == oracle_expand(w).coeffs;
    } catch (const Error& e) {
      error = e.what();
    }
    r.check(same, [&] { return verify_detail::show(w) + (error.empty() ? "" : ": " + error); });
  }
  return r;
}

/// Acceptance 4: non-negative coefficients; support in A^0 for w in A.
inline SuiteResult suite_positivity(const VerifyConfig& cfg = {}) {
  SuiteResult r{"positivity"};
  for (const auto& w : verify_detail::oracle_inputs(cfg)) {
    const int n = w.period();
    std::optional<AffineSchurExpansion> e;
    std::string error;
    try {
      e = expand_affine_schur(w);
    } catch (const Error& ex) {
      error = ex.what();
    }
    r.check(e.has_value(), [&] { return verify_detail::show(w) + ": " + error; });
    if (!e) continue;
    bool nonneg = true;
    for (const auto& [u, c] : e->coeffs) nonneg = nonneg && c > 0;
    r.check(nonneg, [&] { return "negative coefficient for " + verify_detail::show(w); });
    if (!is_321_avoiding(w)) continue;
    for (const auto& [u, c] : e->coeffs)
      r.check(is_321_avoiding(u), [&] { return "non-321-avoiding key " + u.str() + " for " + w.str(); });
    for (int m = 1; m < n; ++m) {
      const CylType type(m, n);
      if (!in_A(w, type)) continue;
      for (const auto& [u, c] : e->coeffs)
        r.check(in_A0(u, type), [&] { return "key " + u.str() + " outside A^0 for " + w.str(); });
    }
  }
  return r;
}

/// Acceptance 5: the shift property, the toric oracle and LR coefficients.
inline SuiteResult suite_shift(const VerifyConfig& cfg = {}) {
  using verify_detail::show;
  SuiteResult r{"shift"};
  const Int max_cells = cfg.maxlen.value_or(9);
  for (const auto& type : verify_detail::shift_types()) {
    if (cfg.n && *cfg.n != type.n) continue;
    for (const auto& shape : verify_detail::all_shapes(type, max_cells, max_cells / type.n + 1)) {
      if (shape.d() == 0) continue;
      const auto lower_outer = PeriodicSequence::of(type, shape.lambda(), shape.d() - 1);
      if (!lower_outer.contains(shape.inner())) continue;
      const auto upper = expand_cylindric(shape);
      const auto lower = expand_cylindric(CylindricShape(type, shape.lambda(), shape.d() - 1, shape.mu()));
      bool same = true;
      for (const auto& [key, c] : upper.coeffs)
        if (key.second >= 1) same = same && lower.coeff(key.first, key.second - 1) == c;
      for (const auto& [key, c] : lower.coeffs) same = same && upper.coeff(key.first, key.second + 1) == c;
      r.check(same, [&] { return "shift fails at " + show(shape); });
    }
    for (const auto& shape : verify_detail::all_shapes(type, Int(type.m) * type.cols(), 2)) {
      if (!is_toric(shape)) continue;
      const auto full = expand_cylindric(shape);
      std::map<Partition, Int> slice;
      for (const auto& [key, c] : full.coeffs)
        if (key.second == 0) slice[key.first] = c;
      r.check(slice == toric_gw_oracle(shape), [&] { return "toric oracle differs at " + show(shape); });
      if (shape.d() != 0) continue;
      std::map<Partition, Int> lr;
      for (const auto& nu : partitions_of(shape.lambda().size() - shape.mu().size(), type.cols(), type.m))
        if (Int c = lr_coeff(shape.lambda(), shape.mu(), nu); c != 0) lr[nu] = c;
      r.check(slice == lr, [&] { return "LR coefficients differ at " + show(shape); });
    }
  }
  return r;
}

/// Acceptance 6: left and right dual Pieri quotients have equal F-sums.
inline SuiteResult suite_dual_pieri(const VerifyConfig& cfg = {}) {
  SuiteResult r{"dual-pieri"};
  const int maxlen = cfg.maxlen.value_or(6);
  for (int n = 2; n <= 5; ++n) {
    if (cfg.n && *cfg.n != n) continue;
    for (int len = 0; len <= maxlen; ++len)
      for (const auto& w : elements_of_length(n, len))
        for (int q = 1; q < n; ++q) {
          if (q > len) break;
          const int N = len;
          SymmetricPolynomial left(N, len - q);
          SymmetricPolynomial right(N, len - q);
          for (const auto& v : left_pieri_quotients(w, q)) left = left + stanley_monomials(v, N);
          for (const auto& v : right_pieri_quotients(w, q)) right = right + stanley_monomials(v, N);
          r.check(left == right, [&] { return verify_detail::show(w) + " q=" + std::to_string(q); });
        }
  }
  return r;
}

/// Acceptance 7: nilCoxeter identities.
inline SuiteResult suite_nilcoxeter(const VerifyConfig& cfg = {}) {
  SuiteResult r{"nilcoxeter"};
  for (int n = 2; n <= 5; ++n) {
    if (cfg.n && *cfg.n != n) continue;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        r.check(hh(i, n) * hh(j, n) == hh(j, n) * hh(i, n),
                [&] { return "h_" + std::to_string(i) + " h_" + std::to_string(j) + " n=" + std::to_string(n); });
  }
  for (int n = 2; n <= 4; ++n) {
    if (cfg.n && *cfg.n != n) continue;
    for (int i = 1; i < n; ++i) {
      std::vector<int> letters;
      for (int t = i - 1; t >= 0; --t) letters.push_back(t);
      r.check(nc_kschur(word_to_permutation(n, letters)) == hh(i, n),
              [&] { return "s_(" + std::to_string(i) + ") != h_" + std::to_string(i); });
    }
    for (int len = 0; len <= cfg.maxlen.value_or(6); ++len)
      for (const auto& u : grassmannian_elements(n, len)) {
        const auto s = nc_kschur(u);
        std::map<AffinePermutation, Int> grass;
        for (const auto& [w, c] : s.terms())
          if (is_grassmannian(w, 0)) grass[w] = c;
        r.check(grass == std::map<AffinePermutation, Int>{{u, 1}},
                [&] { return "0-Grassmannian terms of s_u for u=" + u.str(); });
        if (len <= 4) r.check(in_h_span(s), [&] { return "s_u outside the h-span for u=" + u.str(); });
      }
  }
  for (const auto& type : {CylType(1, 3), CylType(2, 4), CylType(2, 5), CylType(3, 6)}) {
    if (cfg.n && *cfg.n != type.n) continue;
    IdentityCaps caps{cfg.maxlen.value_or(7)};
    for (const auto& check : verify_identities(type, caps).checks) {
      r.cases += check.cases - 1;
      r.check(check.passed, [&] {
        return check.name + " at (" + std::to_string(type.m) + "," + std::to_string(type.n) + "): " + check.detail;
      });
    }
  }
  return r;
}

/// Acceptance 8: length bounds of both Grassmannian extensions.
inline SuiteResult suite_grassmannianize(const VerifyConfig& cfg = {}) {
  SuiteResult r{"grassmannianize"};
  auto check_one = [&](const AffinePermutation& w) {
    const auto g = grassmannianize(w);
    r.check(is_length_additive(w, g.v) && is_grassmannian(w * g.v, g.p) &&
                g.v.length() <= grassmannianize_bound(w.period()),
            [&] { return "general extension of " + verify_detail::show(w); });
    if (auto type = cylinder_type_of(w)) {
      const auto h = grassmannianize_321(w, *type);
      r.check(is_length_additive(w, h.v) && is_grassmannian(w * h.v, h.p) && in_A(h.v, *type) &&
                  2 * Int(h.v.length()) <= grassmannianize_321_bound_doubled(*type),
              [&] { return "cylindric extension of " + verify_detail::show(w); });
    }
  };
  const auto w = verify_detail::word(6, {5, 3, 1, 4, 2, 0});
  const auto ext = grassmannianize_321(w, CylType(3, 6));
  r.check(ext.v == verify_detail::word(6, {5, 1, 0}) && ext.p == 0 && ext.v.length() == 3,
          [&] { return "531420 extended by " + verify_detail::show(ext.v); });
  for (const auto& x : verify_detail::oracle_inputs(cfg)) check_one(x);
  if (!cfg.n && !cfg.maxlen)
    for (const auto& type : verify_detail::shift_types())
      for (const auto& shape : verify_detail::all_shapes(type, 9, 2)) check_one(skew_word(shape));
  return r;
}

/// Acceptance 9: phi is an order-preserving bijection and F matches the
/// cylindric Schur polynomials.
inline SuiteResult suite_bijection(const VerifyConfig& cfg = {}) {
  using verify_detail::show;
  SuiteResult r{"bijection"};
  const Int max_cells = cfg.maxlen.value_or(9);
  for (const auto& type : {CylType(1, 3), CylType(2, 4), CylType(2, 5), CylType(3, 6)}) {
    if (cfg.n && *cfg.n != type.n) continue;
    std::set<AffinePermutation> images;
    for (const auto& shape : verify_detail::straight_shapes(type, max_cells)) {
      const auto w = phi_inv(shape);
      images.insert(w);
      r.check(in_A0(w, type) && phi(w, type) == shape && w.length() == cell_count(shape),
              [&] { return "round trip fails at " + show(shape); });
      for (int N = 1; N <= cell_count(shape); ++N)
        r.check(stanley_monomials(w, N) == cylindric_schur_poly(shape, N),
                [&] { return "F != cylindric Schur at " + show(shape) + " N=" + std::to_string(N); });
    }
    std::vector<std::vector<AffinePermutation>> levels;
    std::set<AffinePermutation> grass;
    for (int len = 0; len <= max_cells; ++len) {
      levels.emplace_back();
      for (const auto& w : elements_in_A(type, len))
        if (is_grassmannian(w, 0)) {
          levels.back().push_back(w);
          grass.insert(w);
        }
    }
    r.check(grass == images, [&] { return std::string("phi_inv does not hit every element of A^0"); });
    for (int len = 0; len < max_cells; ++len)
      for (const auto& w : levels[len])
        for (const auto& v : levels[len + 1])
          r.check(left_weak_le(w, v) == phi(v, type).outer().contains(phi(w, type).outer()),
                  [&] { return "order mismatch for " + w.str() + " < " + v.str(); });
    for (const auto& shape : verify_detail::all_shapes(type, std::min<Int>(max_cells, 7), 2)) {
      const auto w = skew_word(shape);
      r.check(in_A(w, type) && w.length() == cell_count(shape),
              [&] { return "skew word outside A or of wrong length at " + show(shape); });
      for (int N = 1; N <= 4; ++N)
        r.check(stanley_monomials(w, N) == cylindric_schur_poly(shape, N),
                [&] { return "skew identity fails at " + show(shape) + " N=" + std::to_string(N); });
    }
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"golden",   "intermediates", "oracle",          "positivity", "shift",
                                              "dual-pieri", "nilcoxeter",  "grassmannianize", "bijection"};
  return names;
}

/// Runs a suite by name ("example2" runs golden and intermediates together).
inline SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg = {}) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  if (name == "golden") r = suite_golden();
  else if (name == "intermediates") r = suite_intermediates();
  else if (name == "example2") {
    r = suite_golden();
    auto more = suite_intermediates();
    r.name = "example2";
    r.cases += more.cases;
    r.passed = r.passed && more.passed;
    r.counterexamples.insert(r.counterexamples.end(), more.counterexamples.begin(), more.counterexamples.end());
  } else if (name == "oracle") r = suite_oracle(cfg);
  else if (name == "positivity") r = suite_positivity(cfg);
  else if (name == "shift") r = suite_shift(cfg);
  else if (name == "dual-pieri") r = suite_dual_pieri(cfg);
  else if (name == "nilcoxeter") r = suite_nilcoxeter(cfg);
  else if (name == "grassmannianize") r = suite_grassmannianize(cfg);
  else if (name == "bijection") r = suite_bijection(cfg);
  else throw PreconditionError("unknown suite: " + name);
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace cylkit
