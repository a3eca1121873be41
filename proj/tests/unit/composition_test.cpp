#include "antipal/composition.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace antipal {
namespace {

std::vector<Composition> collect(int n) {
  std::vector<Composition> out;
  for (const Composition& c : enumerate_compositions(n)) out.push_back(c);
  return out;
}

std::multiset<std::pair<int, int>> symmetric_pairs(const Composition& c) {
  std::multiset<std::pair<int, int>> out;
  for (std::size_t i = 0; i < c.size() / 2; ++i) {
    const int a = c[i];
    const int b = c[c.size() - 1 - i];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

TEST(CompositionTest, RejectsNonPositiveParts) {
  EXPECT_THROW(Composition({1, 0, 2}), std::invalid_argument);
  EXPECT_THROW(Composition({-1}), std::invalid_argument);
}

TEST(CompositionTest, SumAndReverse) {
  const Composition c{4, 2, 3, 3, 1};
  EXPECT_EQ(c.sum(), 13);
  EXPECT_EQ(c.reversed(), (Composition{1, 3, 3, 2, 4}));
  EXPECT_EQ(Composition{}.sum(), 0);
}

TEST(CompositionTextTest, FormatsAndParses) {
  EXPECT_EQ(to_string(Composition{}), "()");
  EXPECT_EQ(to_string(Composition{2, 1, 5}), "(2,1,5)");
  EXPECT_EQ(parse_composition("()"), Composition{});
  EXPECT_EQ(parse_composition(" ( 2, 1 ,5 ) "), (Composition{2, 1, 5}));
}

TEST(CompositionTextTest, RejectsMalformedText) {
  for (const char* bad : {"", "(", "1,2", "(1,,2)", "(1,2,)", "(0)",
                          "(-1,2)", "(a)", "(1 2)", "[1,2]"}) {
    EXPECT_THROW(parse_composition(bad), std::invalid_argument) << bad;
  }
}

TEST(CompositionTextTest, RoundTripProperty) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 12), part(1, 40);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> parts(static_cast<std::size_t>(len(rng)));
    for (int& p : parts) p = part(rng);
    const Composition c(parts);
    EXPECT_EQ(parse_composition(to_string(c)), c);
  }
}

TEST(EnumerateTest, ZeroYieldsOnlyEmptyComposition) {
  EXPECT_EQ(collect(0), std::vector<Composition>{Composition{}});
}

TEST(EnumerateTest, FiveContainsThePalindromes) {
  const auto all = collect(5);
  EXPECT_EQ(all.size(), 16u);
  for (const Composition& c : {Composition{5}, Composition{1, 3, 1},
                               Composition{2, 1, 2},
                               Composition{1, 1, 1, 1, 1}}) {
    EXPECT_NE(std::find(all.begin(), all.end(), c), all.end()) << to_string(c);
  }
}

TEST(EnumerateTest, FourHasFiveAntipalindromic) {
  std::vector<Composition> anti;
  for (const Composition& c : enumerate_compositions(4)) {
    if (is_antipalindromic(c)) anti.push_back(c);
  }
  EXPECT_EQ(anti, (std::vector<Composition>{{1, 1, 2}, {1, 3}, {2, 1, 1},
                                            {3, 1}, {4}}));
}

TEST(EnumerateTest, LexicographicAndDistinct) {
  for (int n = 0; n <= 12; ++n) {
    const auto all = collect(n);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
    for (const auto& c : all) EXPECT_EQ(c.sum(), n);
  }
}

TEST(EnumerateTest, CountsByLengthAreBinomial) {
  for (int n = 1; n <= 16; ++n) {
    std::vector<long> by_len(static_cast<std::size_t>(n) + 1, 0);
    long total = 0;
    for (const Composition& c : enumerate_compositions(n)) {
      ++by_len[c.size()];
      ++total;
    }
    EXPECT_EQ(total, 1L << (n - 1));
    for (int s = 1; s <= n; ++s) {
      EXPECT_EQ(BigCount(by_len[static_cast<std::size_t>(s)]),
                testing::pascal_binomial(n - 1, s - 1))
          << "n=" << n << " s=" << s;
    }
  }
}

TEST(EnumerateTest, PalindromicCountIsPowerOfTwo) {
  for (int n = 1; n <= 18; ++n) {
    long count = 0;
    for (const Composition& c : enumerate_compositions(n)) {
      if (is_palindromic(c)) ++count;
    }
    EXPECT_EQ(count, 1L << (n / 2)) << "n=" << n;
  }
}

TEST(EnumerateTest, RejectsNegative) {
  EXPECT_THROW(enumerate_compositions(-1), std::invalid_argument);
}

TEST(PredicateTest, Palindromic) {
  EXPECT_TRUE(is_palindromic(Composition{1, 3, 1}));
  EXPECT_FALSE(is_palindromic(Composition{1, 3}));
  EXPECT_TRUE(is_palindromic(Composition{}));
}

TEST(PredicateTest, Antipalindromic) {
  EXPECT_TRUE(is_antipalindromic(Composition{1, 1, 2}));
  EXPECT_TRUE(is_antipalindromic(Composition{5}));
  EXPECT_FALSE(is_antipalindromic(Composition{1, 3, 1}));
  EXPECT_TRUE(is_antipalindromic(Composition{}));
  // The middle part of an odd length composition is exempt.
  EXPECT_TRUE(is_antipalindromic(Composition{1, 7, 7, 3, 2}));
  EXPECT_FALSE(is_antipalindromic(Composition{1, 2, 3, 2, 4}));
}

TEST(FlipCanonicalTest, Examples) {
  EXPECT_EQ(flip_canonical(Composition{4, 2, 3, 3, 1}),
            (Composition{1, 2, 3, 3, 4}));
  EXPECT_EQ(flip_canonical(Composition{1, 2, 3, 3, 4}),
            (Composition{1, 2, 3, 3, 4}));
  EXPECT_EQ(flip_canonical(Composition{2, 1, 1}), (Composition{1, 1, 2}));
}

TEST(FlipCanonicalTest, FourFlipsOfOneClass) {
  const Composition expected{1, 2, 3, 3, 4};
  for (const Composition& c :
       {Composition{1, 3, 3, 2, 4}, Composition{1, 2, 3, 3, 4},
        Composition{4, 3, 3, 2, 1}, Composition{4, 2, 3, 3, 1}}) {
    EXPECT_EQ(flip_canonical(c), expected) << to_string(c);
  }
}

TEST(FlipCanonicalTest, RejectsNonAntipalindromic) {
  EXPECT_THROW(flip_canonical(Composition{1, 3, 1}), std::invalid_argument);
}

TEST(FlipCanonicalTest, ClassProperties) {
  for (int n = 0; n <= 12; ++n) {
    for (const Composition& c : enumerate_compositions(n)) {
      if (!is_antipalindromic(c)) continue;
      const Composition canon = flip_canonical(c);
      EXPECT_EQ(flip_canonical(canon), canon);
      EXPECT_EQ(canon.sum(), c.sum());
      EXPECT_EQ(canon.size(), c.size());
      EXPECT_EQ(symmetric_pairs(canon), symmetric_pairs(c));

      const Composition rev = c.reversed();
      EXPECT_TRUE(is_antipalindromic(rev));
      EXPECT_EQ(flip_canonical(rev), canon);

      std::set<Composition> cls;
      for (const Composition& f : testing::all_flips(c)) {
        EXPECT_TRUE(is_antipalindromic(f));
        EXPECT_EQ(flip_canonical(f), canon);
        cls.insert(f);
      }
      EXPECT_EQ(cls.size(), std::size_t{1} << (c.size() / 2));
    }
  }
}

TEST(BruteCountsTest, TableOneRowTen) {
  const CountTable t = brute_counts(10);
  EXPECT_EQ(t.ac0, 88);
  EXPECT_EQ(t.ac1, 105);
  EXPECT_EQ(t.ac, 193);
  EXPECT_EQ(t.rac0, 21);
  EXPECT_EQ(t.rac1, 34);
  EXPECT_EQ(t.rac, 55);
}

TEST(BruteCountsTest, TableTwoRowEight) {
  const CountTable t = brute_counts(8);
  EXPECT_EQ(t.by_length.at(3), (LengthCounts{18, 9}));
  EXPECT_EQ(t.by_length.at(4), (LengthCounts{20, 5}));
  EXPECT_EQ(t.by_length.at(5), (LengthCounts{12, 3}));
}

TEST(BruteCountsTest, RowZero) {
  const CountTable t = brute_counts(0);
  EXPECT_EQ(t.ac0, 1);
  EXPECT_EQ(t.ac1, 0);
  EXPECT_EQ(t.ac, 1);
  EXPECT_EQ(t.rac, 1);
  EXPECT_EQ(t.by_length.at(0), (LengthCounts{1, 1}));
}

TEST(BruteCountsTest, TableInvariants) {
  for (int n = 0; n <= 14; ++n) {
    const CountTable t = brute_counts(n);
    EXPECT_EQ(t.ac, t.ac0 + t.ac1);
    EXPECT_EQ(t.rac, t.rac0 + t.rac1);
    BigCount even = 0, odd = 0;
    for (const auto& [s, counts] : t.by_length) {
      (s % 2 == 0 ? even : odd) += counts.ac;
      EXPECT_EQ(counts.ac, counts.rac * pow2(s / 2)) << n << "," << s;
    }
    EXPECT_EQ(even, t.ac0);
    EXPECT_EQ(odd, t.ac1);
  }
}

TEST(BruteCountsTest, MaxLengthLimitsRowsOnly) {
  const CountTable full = brute_counts(8);
  const CountTable limited = brute_counts(8, 3);
  EXPECT_EQ(limited.by_length.size(), 4u);
  EXPECT_EQ(limited.ac, full.ac);
  EXPECT_EQ(limited.by_length.at(3), full.by_length.at(3));
  const CountTable wide = brute_counts(2, 5);
  EXPECT_EQ(wide.by_length.at(5), (LengthCounts{0, 0}));
}

}  // namespace
}  // namespace antipal
