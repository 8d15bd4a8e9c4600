#pragma once

// JSON forms of the cylkit value types (nlohmann::json).

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"

#include "affine_permutation.hpp"
#include "cylindric.hpp"
#include "error.hpp"
#include "nilcoxeter.hpp"
#include "partition.hpp"
#include "stanley.hpp"

namespace cylkit {

using json = nlohmann::ordered_json;

/// Orders expansion keys by (length, window).
inline bool key_order(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a < b;
}

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const AffinePermutation& w) {
  return json{{"n", w.period()}, {"window", std::vector<Int>(w.window().begin(), w.window().end())}};
}

inline json to_json(const GeneratorWord& word) { return json{{"n", word.n}, {"letters", word.letters}}; }

inline json to_json(const CylindricShape& s) {
  return json{{"m", s.type().m}, {"n", s.type().n}, {"lambda", s.lambda().parts()}, {"d", s.d()}, {"mu", s.mu().parts()}};
}

namespace detail {
template <class F>
auto parse_field(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}
}  // namespace detail

inline Partition partition_from_json(const json& j) {
  return detail::parse_field("partition", [&] { return Partition(j.get<std::vector<int>>()); });
}

inline AffinePermutation permutation_from_json(const json& j) {
  return detail::parse_field("permutation", [&] {
    auto w = AffinePermutation::from_window(j.at("window").get<std::vector<Int>>());
    require(w.period() == j.at("n").get<int>(), "permutation JSON: n does not match the window size");
    return w;
  });
}

inline GeneratorWord word_from_json(const json& j) {
  return detail::parse_field("word", [&] { return GeneratorWord(j.at("n").get<int>(), j.at("letters").get<std::vector<int>>()); });
}

inline CylindricShape shape_from_json(const json& j) {
  return detail::parse_field("shape", [&] {
    return CylindricShape(CylType(j.at("m").get<int>(), j.at("n").get<int>()),
                          Partition(j.at("lambda").get<std::vector<int>>()), j.at("d").get<Int>(),
                          Partition(j.at("mu").get<std::vector<int>>()));
  });
}

/// One entry per key, sorted by (length, window). Each key is rendered as
/// window, Grassmannian word and k-bounded partition, plus its shape (nu, e)
/// when a cylinder type is given.
inline json to_json(const AffineSchurExpansion& e, std::optional<CylType> type = std::nullopt) {
  std::vector<AffinePermutation> keys;
  for (const auto& [u, c] : e.coeffs) keys.push_back(u);
  std::sort(keys.begin(), keys.end(), key_order);
  json out = json::array();
  for (const auto& u : keys) {
    json item{{"window", to_json(u)["window"]},
              {"word", reduced_word(u).str()},
              {"partition", to_json(kbounded_from_grassmannian(u).partition())}};
    if (type && in_A0(u, *type)) {
      const auto shape = phi(u, *type);
      item["shape"] = json{{"lambda", shape.lambda().parts()}, {"e", shape.d()}};
    }
    item["coeff"] = e.coeff(u);
    out.push_back(std::move(item));
  }
  return out;
}

/// Keys (nu, e) sorted by (e, |nu|, nu).
inline std::vector<std::pair<Partition, Int>> sorted_keys(const SchurExpansion& e) {
  std::vector<std::pair<Partition, Int>> keys;
  for (const auto& [k, c] : e.coeffs) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return keys;
}

inline json to_json(const SchurExpansion& e) {
  json out = json::array();
  for (const auto& [nu, d] : sorted_keys(e))
    out.push_back(json{{"partition", nu.parts()}, {"e", d}, {"coeff", e.coeff(nu, d)}});
  return out;
}

inline json to_json(const NilCoxeterElement& a) {
  std::vector<AffinePermutation> keys;
  for (const auto& [w, c] : a.terms()) keys.push_back(w);
  std::sort(keys.begin(), keys.end(), key_order);
  json out = json::array();
  for (const auto& w : keys) out.push_back(json{{"window", to_json(w)["window"]}, {"coeff", a.coeff(w)}});
  return out;
}

inline NilCoxeterElement nilcoxeter_from_json(int n, const json& j) {
  return detail::parse_field("nilCoxeter element", [&] {
    NilCoxeterElement out(n);
    for (const auto& item : j) {
      auto w = AffinePermutation::from_window(item.at("window").get<std::vector<Int>>());
      out.add_term(w, item.at("coeff").get<Int>());
    }
    return out;
  });
}

}  // namespace cylkit
