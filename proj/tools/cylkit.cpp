// cylkit command line: affine Schur and cylindric Schur expansions,
// Gromov-Witten lookups, verification suites and cached corpus sweeps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cylkit/cylkit.hpp"

namespace {

using namespace cylkit;

constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_parse = 2;
constexpr int exit_cap = 3;
constexpr int exit_internal = 4;
constexpr int exit_io = 5;

constexpr int corpus_version = 1;

struct IoError : Error {
  using Error::Error;
};

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == item.size() && !item.empty(), "cannot parse " + what + ": '" + text + "'");
    out.push_back(value);
  }
  return out;
}

Partition parse_partition(const std::string& text, const std::string& what) {
  auto parts = parse_ints(text, what);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] >= 0, what + " has a negative part");
    require(i == 0 || parts[i] <= parts[i - 1], what + " is not weakly decreasing");
  }
  return Partition(std::move(parts));
}

std::string window_str(const AffinePermutation& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.window().size(); ++i) out += (i ? " " : "") + std::to_string(w.window()[i]);
  return out + "]";
}

struct Common {
  std::string output = "text";
  int cap = default_length_cap;

  bool json() const { return output == "json"; }
};

int run_expand(const Common& common, int n, const std::string& word_text, int m) {
  const GeneratorWord word(n, parse_ints(word_text, "word"));
  const auto w = word_to_permutation(word);
  // a non-reduced word names the group element it multiplies to
  const bool reduced = w.length() == word.size();
  std::optional<CylType> type;
  if (m > 0) type = CylType(m, n);
  const auto e = expand_affine_schur(w, common.cap);
  if (common.json()) {
    json out{{"n", n}, {"word", word.str()}, {"reduced", reduced}, {"window", to_json(w)["window"]},
             {"length", w.length()}};
    if (type) out["m"] = m;
    out["terms"] = to_json(e, type);
    std::cout << out.dump() << "\n";
    return exit_ok;
  }
  std::cout << "w = " << word.str() << "  n = " << n << "  window " << window_str(w) << "  length " << w.length() << "\n";
  if (!reduced) std::cout << "note: word is not reduced; expanding " << reduced_word(w).str() << "\n";
  std::cout << "F_w =";
  if (e.coeffs.empty()) std::cout << " 0";
  std::cout << "\n";
  for (const auto& item : to_json(e, type)) {
    std::cout << "  " << item["coeff"].get<Int>() << " x " << item["word"].get<std::string>()
              << "  window " << window_str(AffinePermutation::from_window(item["window"].get<std::vector<Int>>()))
              << "  partition " << partition_from_json(item["partition"]).str();
    if (item.contains("shape"))
      std::cout << "  shape " << partition_from_json(item["shape"]["lambda"]).str() << "/"
                << item["shape"]["e"].get<Int>();
    std::cout << "\n";
  }
  return exit_ok;
}

int run_cylindric(const Common& common, int m, int n, const std::string& lambda, Int d, const std::string& mu) {
  const CylindricShape shape(CylType(m, n), parse_partition(lambda, "lambda"), d, parse_partition(mu, "mu"));
  const auto e = expand_cylindric(shape, common.cap);
  const auto word = reduced_word(e.word);
  if (common.json()) {
    json out{{"shape", to_json(shape)},
             {"cells", cell_count(shape)},
             {"skew_word", word.str()},
             {"skew_window", to_json(e.word)["window"]},
             {"terms", to_json(e)}};
    std::cout << out.dump() << "\n";
    return exit_ok;
  }
  std::cout << "shape " << shape.str() << "  (m, n) = (" << m << ", " << n << ")  cells " << cell_count(shape) << "\n";
  std::cout << "skew word " << word.str() << "  window " << window_str(e.word) << "\n";
  std::cout << "s_shape =";
  if (e.coeffs.empty()) std::cout << " 0";
  std::cout << "\n";
  for (const auto& [nu, ee] : sorted_keys(e))
    std::cout << "  " << e.coeff(nu, ee) << " x s_" << nu.str() << "/" << ee << "\n";
  return exit_ok;
}

int run_gw(const Common& common, int m, int n, const std::string& lambda_text, Int d, const std::string& mu_text,
           const std::string& nu_text) {
  const CylType type(m, n);
  const auto lambda = parse_partition(lambda_text, "lambda");
  const auto mu = parse_partition(mu_text, "mu");
  const auto nu = parse_partition(nu_text, "nu");
  for (const auto* p : {&lambda, &mu, &nu})
    require(p->fits_box(m, type.cols()), "partition " + p->str() + " does not fit P_mn");
  const CylindricShape shape(type, lambda, d, mu);
  const Int left = lambda.size() + n * d;
  const Int right = mu.size() + nu.size();
  const Int value = gromov_witten(type, lambda, d, mu, nu, common.cap);

  std::optional<bool> toric_agrees;
  if (left == right && is_toric(shape)) {
    const auto oracle = toric_gw_oracle(shape);
    auto it = oracle.find(nu);
    toric_agrees = (it == oracle.end() ? 0 : it->second) == value;
  }
  std::optional<bool> lr_agrees;
  if (d == 0) lr_agrees = lr_coeff(lambda, mu, nu) == value;

  if (common.json()) {
    json out{{"m", m}, {"n", n}, {"lambda", lambda.parts()}, {"d", d}, {"mu", mu.parts()}, {"nu", nu.parts()},
             {"degree_lhs", left}, {"degree_rhs", right}, {"degree_ok", left == right}, {"value", value}};
    if (toric_agrees) out["toric_oracle_agrees"] = *toric_agrees;
    if (lr_agrees) out["lr_agrees"] = *lr_agrees;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "C^{" << lambda.str() << "," << d << "}_{" << mu.str() << "," << nu.str() << "} = " << value << "\n";
    std::cout << "degree: |lambda| + n d = " << left << ", |mu| + |nu| = " << right;
    std::cout << (left == right ? " (ok)" : " (mismatch, invariant vanishes)") << "\n";
    if (toric_agrees) std::cout << "toric oracle: " << (*toric_agrees ? "agrees" : "DISAGREES") << "\n";
    if (lr_agrees) std::cout << "Littlewood-Richardson: " << (*lr_agrees ? "agrees" : "DISAGREES") << "\n";
  }
  if ((toric_agrees && !*toric_agrees) || (lr_agrees && !*lr_agrees)) return exit_internal;
  return exit_ok;
}

int run_verify(const Common& common, const std::string& suite, const VerifyConfig& cfg) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names.push_back(suite);
  bool all = true;
  json report = json::array();
  for (const auto& name : names) {
    const auto r = run_suite(name, cfg);
    all = all && r.passed;
    if (common.json()) {
      report.push_back(json{{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases},
                            {"counterexamples", r.counterexamples}});
      continue;
    }
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  cases " << r.cases << "\n";
    for (const auto& c : r.counterexamples) std::cout << "  counterexample: " << c << "\n";
  }
  if (common.json()) std::cout << json{{"passed", all}, {"suites", report}}.dump() << "\n";
  return all ? exit_ok : exit_verify;
}

json corpus_header(int n, int maxlen, int cap) {
  return json{{"cylkit_corpus", corpus_version}, {"n", n}, {"maxlen", maxlen}, {"cap", cap}};
}

json corpus_record(const AffinePermutation& w, int cap) {
  return json{{"window", to_json(w)["window"]},
              {"word", reduced_word(w).str()},
              {"length", w.length()},
              {"expansion", to_json(expand_affine_schur(w, cap))}};
}

/// Appends one record per 321-avoiding w of length <= maxlen, in (length,
/// window) order, skipping windows already present in the cache.
int run_corpus(const Common& common, int n, int maxlen, const std::string& path) {
  require(n >= 2, "n must be at least 2");
  require(maxlen >= 0, "maxlen must be non-negative");
  if (maxlen > common.cap) throw CapExceeded("corpus: maxlen " + std::to_string(maxlen) + " exceeds cap");
  const json header = corpus_header(n, maxlen, common.cap);

  std::set<std::vector<Int>> done;
  bool fresh = true;
  {
    std::ifstream in(path);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      fresh = false;
      json j;
      try {
        j = json::parse(line);
        if (number == 1) {
          if (j != header) throw IoError(path + ": cache header does not match this configuration");
          continue;
        }
        done.insert(j.at("window").get<std::vector<Int>>());
      } catch (const json::exception&) {
        throw IoError(path + ":" + std::to_string(number) + ": corrupted cache line");
      }
    }
    if (in.bad()) throw IoError(path + ": read error");
  }

  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError(path + ": cannot open for writing");
  if (fresh) out << header.dump() << "\n";
  std::size_t written = 0;
  std::size_t total = 0;
  for (int len = 0; len <= maxlen; ++len)
    for (const auto& w : elements_of_length(n, len)) {
      if (!is_321_avoiding(w)) continue;
      ++total;
      if (done.count(std::vector<Int>(w.window().begin(), w.window().end()))) continue;
      out << corpus_record(w, common.cap).dump() << "\n" << std::flush;
      if (!out) throw IoError(path + ": write error");
      ++written;
    }
  if (common.json())
    std::cout << json{{"path", path}, {"records", total}, {"written", written}, {"cached", total - written}}.dump()
              << "\n";
  else
    std::cout << path << ": " << total << " records, " << written << " written, " << total - written << " cached\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cylkit: affine and cylindric Schur expansions"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--output", common.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", common.cap, "Length cap for expansions")->check(CLI::PositiveNumber);

  int n = 0;
  int m = 0;
  Int d = 0;
  std::string word;
  std::string lambda;
  std::string mu;
  std::string nu;

  auto* expand = app.add_subcommand("expand", "Expand F_w in affine Schur functions");
  expand->add_option("--n", n, "Period n")->required();
  expand->add_option("--word", word, "Reduced word, comma separated, left to right")->required();
  expand->add_option("--m", m, "Render keys as cylindric shapes of type (m, n)");

  auto* cylindric = app.add_subcommand("cylindric", "Expand s_{lambda/d/mu} in cylindric Schur functions");
  cylindric->add_option("--m", m, "Rows m of the cylinder type")->required();
  cylindric->add_option("--n", n, "Period n of the cylinder type")->required();
  cylindric->add_option("--lambda", lambda, "Outer partition, comma separated");
  cylindric->add_option("--d", d, "Shift of the outer partition");
  cylindric->add_option("--mu", mu, "Inner partition, comma separated");

  auto* gw = app.add_subcommand("gw", "Three-point Gromov-Witten invariant C^{lambda,d}_{mu,nu}");
  gw->add_option("--m", m, "Rows m of the cylinder type")->required();
  gw->add_option("--n", n, "Period n of the cylinder type")->required();
  gw->add_option("--lambda", lambda, "Partition lambda");
  gw->add_option("--d", d, "Degree d");
  gw->add_option("--mu", mu, "Partition mu");
  gw->add_option("--nu", nu, "Partition nu");

  std::string suite = "all";
  std::optional<int> verify_n;
  std::optional<int> maxlen;
  VerifyConfig cfg;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> choices = suite_names();
  choices.push_back("example2");
  choices.push_back("all");
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(choices));
  verify->add_option("--n", verify_n, "Restrict to period n");
  verify->add_option("--maxlen", maxlen, "Length bound");
  verify->add_option("--random", cfg.random_count, "Random samples for n > 4");
  verify->add_option("--seed", cfg.seed, "Seed for random samples");

  std::string cache;
  int corpus_maxlen = 4;
  auto* corpus = app.add_subcommand("corpus", "Write expansions of 321-avoiding elements to a JSON-lines cache");
  corpus->add_option("--n", n, "Period n")->required();
  corpus->add_option("--maxlen", corpus_maxlen, "Largest length to include");
  corpus->add_option("--cache", cache, "Cache file (CYLKIT_CACHE overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_parse;
  }

  try {
    if (*expand) return run_expand(common, n, word, m);
    if (*cylindric) return run_cylindric(common, m, n, lambda, d, mu);
    if (*gw) return run_gw(common, m, n, lambda, d, mu, nu);
    if (*verify) {
      cfg.n = verify_n;
      cfg.maxlen = maxlen;
      return run_verify(common, suite, cfg);
    }
    if (const char* env = std::getenv("CYLKIT_CACHE"); env && *env) cache = env;
    require(!cache.empty(), "corpus needs --cache or CYLKIT_CACHE");
    return run_corpus(common, n, corpus_maxlen, cache);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return exit_cap;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return exit_io;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}
