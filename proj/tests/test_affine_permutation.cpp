#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cylkit;

namespace {

AffinePermutation W(int n, std::vector<int> letters) { return word_to_permutation(n, std::move(letters)); }

std::vector<Int> window(const AffinePermutation& w) { return {w.window().begin(), w.window().end()}; }

}  // namespace

TEST(AffinePermutation, WordToPermutationIdentity) {
  EXPECT_EQ(window(W(6, {})), (std::vector<Int>{1, 2, 3, 4, 5, 6}));
}

TEST(AffinePermutation, WordToPermutationMatchesSwapRule) {
  EXPECT_EQ(window(W(7, {4, 1, 0, 6})), oracle::window_of_word(7, {4, 1, 0, 6}));
  const auto w = W(6, {5, 3, 1, 4, 2, 0});
  EXPECT_EQ(window(w), oracle::window_of_word(6, {5, 3, 1, 4, 2, 0}));
  EXPECT_EQ(oracle::inversions(window(w)), 6);
}

TEST(AffinePermutation, FromWindowRejectsNonPermutations) {
  EXPECT_THROW(AffinePermutation::from_window({1, 1, 4}), PreconditionError);
  EXPECT_THROW(AffinePermutation::from_window({1, 2, 4}), PreconditionError);
  EXPECT_NO_THROW(AffinePermutation::from_window({0, 2, 4}));
}

TEST(AffinePermutation, LengthSmallCases) {
  EXPECT_EQ(AffinePermutation::identity(4).length(), 0);
  EXPECT_EQ(W(4, {0}).length(), 1);
  EXPECT_EQ(W(6, {5, 3, 1, 4, 2, 0}).length(), 6);
}

TEST(AffinePermutation, LengthEqualsInversionCount) {
  for (int n : {2, 3, 4, 5})
    for (int len = 0; len <= 5; ++len)
      for (const auto& w : elements_of_length(n, len)) EXPECT_EQ(oracle::inversions(window(w)), len) << w.str();
}

TEST(AffinePermutation, ElementsOfLengthMatchesWordEnumeration) {
  for (int n : {3, 4})
    for (int len = 0; len <= 4; ++len) {
      std::set<std::vector<Int>> brute;
      oracle::for_each_word(n, len, [&](const std::vector<int>& word) {
        auto x = oracle::window_of_word(n, word);
        if (oracle::inversions(x) == len) brute.insert(x);
      });
      std::set<std::vector<Int>> got;
      for (const auto& w : elements_of_length(n, len)) got.insert(window(w));
      EXPECT_EQ(got, brute) << "n=" << n << " len=" << len;
    }
}

TEST(AffinePermutation, MultiplyBasics) {
  const auto w = W(6, {5, 3, 1, 4, 2, 0});
  EXPECT_EQ(multiply(w, AffinePermutation::identity(6)), w);
  EXPECT_TRUE(multiply(W(5, {0}), W(5, {0})).is_identity());
  const auto wv = multiply(w, W(6, {5, 1, 0}));
  EXPECT_EQ(wv.length(), 9);
  EXPECT_TRUE(is_grassmannian(wv, 0));
  EXPECT_EQ(phi(wv, CylType(3, 6)), CylindricShape(CylType(3, 6), {2, 1}, 1, {}));
}

TEST(AffinePermutation, MultiplyIsWordConcatenation) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 4;
    std::vector<int> a(trial % 5), b(trial % 4);
    for (auto& x : a) x = int(rng() % n);
    for (auto& x : b) x = int(rng() % n);
    std::vector<int> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    EXPECT_EQ(window(W(n, a) * W(n, b)), oracle::window_of_word(n, ab));
  }
}

TEST(AffinePermutation, ReducedWordsSmallCases) {
  const auto id = enumerate_reduced_words(AffinePermutation::identity(3), 10);
  ASSERT_EQ(id.size(), 1u);
  EXPECT_TRUE(id[0].letters.empty());

  std::set<std::vector<int>> commuting;
  for (const auto& w : enumerate_reduced_words(W(4, {0, 2}), 10)) commuting.insert(w.letters);
  EXPECT_EQ(commuting, (std::set<std::vector<int>>{{0, 2}, {2, 0}}));

  std::set<std::vector<int>> single;
  for (const auto& w : enumerate_reduced_words(W(3, {1, 0}), 10)) single.insert(w.letters);
  EXPECT_EQ(single, oracle::reduced_words(W(3, {1, 0})));
  EXPECT_EQ(single, (std::set<std::vector<int>>{{1, 0}}));
}

TEST(AffinePermutation, ReducedWordsMatchBruteForce) {
  for (int n : {3, 4})
    for (int len = 0; len <= 5; ++len)
      for (const auto& w : elements_of_length(n, len)) {
        std::set<std::vector<int>> got;
        for (const auto& word : enumerate_reduced_words(w, 10)) got.insert(word.letters);
        EXPECT_EQ(got, oracle::reduced_words(w)) << w.str();
        EXPECT_EQ(word_to_permutation(reduced_word(w)), w);
      }
}

TEST(AffinePermutation, ReducedWordsCap) {
  EXPECT_THROW(enumerate_reduced_words(W(6, {5, 3, 1, 4, 2, 0}), 5), CapExceeded);
}

TEST(AffinePermutation, Is321AvoidingExamples) {
  EXPECT_FALSE(is_321_avoiding(W(3, {0, 1, 0})));
  EXPECT_TRUE(is_321_avoiding(W(6, {5, 3, 1, 4, 2, 0})));
  EXPECT_TRUE(is_321_avoiding(AffinePermutation::identity(5)));
}

TEST(AffinePermutation, Is321AvoidingMatchesWordScan) {
  for (int n : {3, 4, 5})
    for (int len = 0; len <= 5; ++len)
      for (const auto& w : elements_of_length(n, len))
        EXPECT_EQ(is_321_avoiding(w), oracle::is_321_avoiding(w)) << w.str();
}

TEST(AffinePermutation, Grassmannian) {
  EXPECT_TRUE(is_grassmannian(W(6, {5, 1, 0}), 0));
  EXPECT_FALSE(is_grassmannian(W(6, {5, 1, 0}), 3));
  EXPECT_TRUE(is_grassmannian(W(6, {3, 4, 5, 2, 1, 0}), 0));
  EXPECT_EQ(grassmannian_residue(W(6, {3, 4, 5, 2, 1, 0})), 0);
  EXPECT_EQ(grassmannian_residue(W(4, {0, 2})), std::nullopt);
}

TEST(AffinePermutation, CyclicElements) {
  const auto J = CyclicSet::from_members(7, {0, 1, 4, 6});
  EXPECT_EQ(cyclic_word(J).letters, (std::vector<int>{4, 1, 0, 6}));
  EXPECT_EQ(cyclic_word(J.with_direction(Direction::increasing)).letters, (std::vector<int>{4, 6, 0, 1}));
  const auto single = CyclicSet::from_members(6, {0});
  EXPECT_EQ(d_J(single), W(6, {0}));
  EXPECT_EQ(u_J(single), W(6, {0}));
  EXPECT_THROW(d_J(CyclicSet::from_members(3, {0, 1, 2})), PreconditionError);
}

TEST(AffinePermutation, CyclicElementsAreReducedAndUseEachLetterOnce) {
  for (int n : {3, 4, 5, 6})
    for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
      const CyclicSet J(n, mask);
      EXPECT_EQ(d_J(J).length(), J.size());
      EXPECT_EQ(u_J(J).length(), J.size());
      EXPECT_EQ(u_J(J), d_J(J).inverse()) << J.str();
    }
}

TEST(AffinePermutation, MaxCyclicFactor) {
  for (int n : {3, 4, 5})
    for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
      const CyclicSet J(n, mask);
      EXPECT_EQ(max_cyclic_factor(d_J(J), Side::right, Direction::decreasing).mask(), mask);
    }
  const auto r3 = W(6, {3, 4, 5, 2, 1, 0});
  const auto J = max_cyclic_factor(r3, Side::right, Direction::decreasing);
  EXPECT_EQ(J.members(), (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(max_cyclic_factor(AffinePermutation::identity(4), Side::right, Direction::decreasing).empty());
}

TEST(AffinePermutation, MaxCyclicFactorIsMaximumOverSubsets) {
  for (int n : {3, 4})
    for (int len = 0; len <= 5; ++len)
      for (const auto& w : elements_of_length(n, len)) {
        int best = 0;
        for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
          const CyclicSet J(n, mask);
          if ((w * u_J(J)).length() == len - J.size()) best = std::max(best, J.size());
        }
        EXPECT_EQ(maxr(w), best) << w.str();
      }
}

TEST(AffinePermutation, MaximalDecomposition) {
  EXPECT_EQ(maximal_cdd(W(6, {5, 1, 0})).shape, (Partition{2, 1}));
  const auto J = CyclicSet::from_members(5, {1, 2, 4});
  const auto single = maximal_cdd(d_J(J));
  ASSERT_EQ(single.blocks.size(), 1u);
  EXPECT_EQ(single.blocks[0].mask(), J.mask());
  EXPECT_TRUE(maximal_cdd(AffinePermutation::identity(4)).shape.empty());
}

TEST(AffinePermutation, GrassmannianFromKBounded) {
  EXPECT_EQ(reduced_word(grassmannian_from_kbounded(6, {2, 1})).letters, (std::vector<int>{5, 1, 0}));
  EXPECT_TRUE(grassmannian_from_kbounded(6, {}).is_identity());
  for (int n : {3, 5, 7})
    for (int i = 1; i < n; ++i) {
      std::vector<int> letters;
      for (int t = i - 1; t >= 0; --t) letters.push_back(t);
      EXPECT_EQ(grassmannian_from_kbounded(n, Partition{i}), W(n, letters));
    }
  EXPECT_THROW(grassmannian_from_kbounded(3, Partition{3}), PreconditionError);
}

TEST(AffinePermutation, KBoundedBijection) {
  for (int n : {3, 4, 5})
    for (int len = 0; len <= 6; ++len) {
      std::set<AffinePermutation> brute;
      for (const auto& w : elements_of_length(n, len))
        if (is_grassmannian(w, 0)) brute.insert(w);
      std::set<AffinePermutation> built;
      for (const auto& p : partitions_of(len, n - 1, len)) {
        const auto w = grassmannian_from_kbounded(n, p);
        EXPECT_EQ(w.length(), len);
        EXPECT_EQ(kbounded_from_grassmannian(w).partition(), p);
        built.insert(w);
      }
      EXPECT_EQ(built, brute) << "n=" << n << " len=" << len;
    }
}

TEST(AffinePermutation, CStatistic) {
  EXPECT_EQ(c_stat(AffinePermutation::identity(4), 2), 0);
  EXPECT_EQ(c_stat(W(4, {0}), 1), 1);
  for (int n : {3, 4})
    for (int len = 0; len <= 5; ++len)
      for (const auto& w : elements_of_length(n, len)) {
        const auto x = window(w);
        for (Int i = 1; i <= n; ++i) {
          Int brute = 0;
          for (Int j = i - 1; j >= i - 4 * n * (len + 1); --j)
            if (oracle::value(x, j) > oracle::value(x, i)) ++brute;
          EXPECT_EQ(c_stat(w, i), brute);
        }
        if (is_grassmannian(w, 0)) {
          for (Int i = 1; i < n; ++i) EXPECT_GE(c_stat(w, i), c_stat(w, i + 1));
          EXPECT_EQ(c_stat(w, n), 0);
        }
      }
}

TEST(AffinePermutation, LeftWeakOrder) {
  const auto w = W(6, {5, 3, 1, 4, 2, 0});
  EXPECT_TRUE(left_weak_le(W(6, {2, 0}), w));
  EXPECT_TRUE(left_weak_le(AffinePermutation::identity(6), w));
  EXPECT_FALSE(left_weak_le(W(6, {5}), w));
  EXPECT_TRUE(left_weak_le(w, w));
}
