#include <gtest/gtest.h>

#include "cylkit/cylkit.hpp"

using namespace cylkit;

namespace {

AffinePermutation W(int n, std::vector<int> letters) { return word_to_permutation(n, std::move(letters)); }

}  // namespace

TEST(Serialize, RoundTrips) {
  const auto w = W(6, {5, 3, 1, 4, 2, 0});
  EXPECT_EQ(permutation_from_json(to_json(w)), w);
  const Partition p{3, 1, 1};
  EXPECT_EQ(partition_from_json(to_json(p)), p);
  const GeneratorWord word(6, {5, 3, 1});
  EXPECT_EQ(word_from_json(to_json(word)).letters, word.letters);
  const CylindricShape s(CylType(3, 6), {2, 1}, 1, {2, 1});
  EXPECT_EQ(shape_from_json(to_json(s)), s);
  const auto h = hh(2, 4);
  EXPECT_EQ(nilcoxeter_from_json(4, to_json(h)), h);
}

TEST(Serialize, MalformedInput) {
  EXPECT_THROW(permutation_from_json(json{{"n", 3}}), PreconditionError);
  EXPECT_THROW(permutation_from_json(json{{"n", 4}, {"window", {1, 2, 3}}}), PreconditionError);
  EXPECT_THROW(partition_from_json(json("x")), PreconditionError);
  EXPECT_THROW(shape_from_json(json{{"m", 3}, {"n", 6}, {"lambda", {1}}, {"d", 0}, {"mu", {2}}}), PreconditionError);
}

TEST(Serialize, ExpansionKeysAreSortedAndRenderedThreeWays) {
  const auto e = expand_affine_schur(W(6, {5, 3, 1, 4, 2, 0}));
  const auto j = to_json(e, CylType(3, 6));
  ASSERT_EQ(j.size(), 4u);
  for (std::size_t i = 1; i < j.size(); ++i) {
    const auto a = AffinePermutation::from_window(j[i - 1]["window"].get<std::vector<Int>>());
    const auto b = AffinePermutation::from_window(j[i]["window"].get<std::vector<Int>>());
    EXPECT_TRUE(key_order(a, b));
  }
  for (const auto& item : j) {
    EXPECT_TRUE(item.contains("word"));
    EXPECT_TRUE(item.contains("partition"));
    EXPECT_TRUE(item.contains("shape"));
  }
  EXPECT_EQ(j.dump(), to_json(e, CylType(3, 6)).dump());
}

TEST(Serialize, SchurExpansionOrder) {
  const auto e = expand_cylindric(CylindricShape(CylType(3, 6), {2, 1}, 1, {2, 1}));
  const auto j = to_json(e);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["e"], 0);
  EXPECT_EQ(j[3]["e"], 1);
  EXPECT_EQ(j[3]["partition"], json::array());
}
