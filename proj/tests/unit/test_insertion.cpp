#include <gtest/gtest.h>

#include <map>
#include <random>

#include "splab/errors.hpp"
#include "splab/insertion.hpp"
#include "splab/symfunc.hpp"
#include "test_support.hpp"

using namespace splab;
using splab::testing::L;
using splab::testing::P;

namespace {

std::vector<Word> words_over(int n, int max_len) {
  std::vector<Word> out{{}};
  std::vector<Word> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (int v = 1; v <= n; ++v) {
        Word u = w;
        u.push_back(v);
        next.push_back(u);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

int brute_hook(const Word& w) {
  int best = 0;
  for (unsigned mask = 0; mask < (1u << w.size()); ++mask) {
    Word sub;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (mask & (1u << i)) sub.push_back(w[i]);
    // Hook test by trying every split point.
    bool hook = false;
    for (std::size_t k = 0; k <= sub.size() && !hook; ++k) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < k; ++i) ok = ok && sub[i] > sub[i + 1];
      for (std::size_t i = k; i + 1 < sub.size(); ++i) ok = ok && sub[i] <= sub[i + 1];
      hook = ok;
    }
    if (hook) best = std::max(best, static_cast<int>(sub.size()));
  }
  return best;
}

}  // namespace

TEST(MixedInsertion, InsertOneIntoBase) {
  ShiftedTableau t = parse_tableau(splab::testing::read_data("insert_base.tab"));
  ShiftedTableau want = ShiftedTableau::straight({{L(1), L(1), P(4), P(6)}, {L(2), L(5)}});
  EXPECT_EQ(mixed_insert_letter(t, L(1)), want);
}

TEST(MixedInsertion, Words) {
  EXPECT_EQ(mixed_insert_word({7, 3, 9, 4}), ShiftedTableau::straight({{L(3), L(4), P(7)}, {L(9)}}));
  EXPECT_TRUE(mixed_insert_word({}).empty());
  EXPECT_EQ(mixed_insert_word({2, 1}), ShiftedTableau::straight({{L(1), P(2)}}));
  EXPECT_EQ(mixed_insert_word({5}), ShiftedTableau::straight({{L(5)}}));
}

TEST(MixedInsertion, AppendsWeaklyGreatest) {
  ShiftedTableau t = parse_tableau(splab::testing::read_data("insert_base.tab"));
  ShiftedTableau r = mixed_insert_letter(t, L(5));
  EXPECT_EQ(r, parse_tableau("1 2 5 5\n4 6'\n"));
}

TEST(MixedInsertion, Errors) {
  EXPECT_THROW(mixed_insert_letter(ShiftedTableau(), P(1)), MarkerError);
  ShiftedTableau skew = parse_tableau(". 1\n");
  EXPECT_THROW(mixed_insert_letter(skew, L(1)), ShapeError);
}

TEST(MixedInsertion, GrowsByOneAndStaysSemistandard) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    ShiftedTableau t;
    const int len = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) {
      ShiftedTableau next = mixed_insert_letter(t, L(1 + static_cast<int>(rng() % 6)));
      EXPECT_EQ(next.size(), t.size() + 1);
      EXPECT_TRUE(is_semistandard(next));
      EXPECT_TRUE(next.shape().straight());
      t = next;
    }
  }
}

TEST(Words, Parse) {
  EXPECT_EQ(parse_word("7 3 9 4"), (Word{7, 3, 9, 4}));
  EXPECT_EQ(parse_word("7,3,9,4"), (Word{7, 3, 9, 4}));
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_THROW(parse_word("x"), ParseError);
  EXPECT_THROW(parse_word("1 0"), ParseError);
  EXPECT_THROW(parse_word("12a"), ParseError);
  EXPECT_EQ(to_string(Word{1, 2}), "1 2");
}

TEST(HookWords, Recognizes) {
  EXPECT_TRUE(is_hook_word({4, 2, 1, 1, 6, 8, 8}));
  EXPECT_TRUE(is_hook_word({1, 2, 2, 5}));
  EXPECT_TRUE(is_hook_word({}));
  EXPECT_FALSE(is_hook_word({1, 2, 1}));
  EXPECT_TRUE(is_hook_word({3, 2, 1}));
  EXPECT_TRUE(is_hook_word({2, 1, 1}));
}

TEST(HookWords, LongestSubword) {
  EXPECT_EQ(longest_hook_subword_length({4, 2, 1, 1, 6, 8, 8}), 7);
  EXPECT_EQ(longest_hook_subword_length({1, 2, 1, 2}), 3);
  EXPECT_EQ(longest_hook_subword_length({}), 0);
}

TEST(HookWords, DynamicProgrammingMatchesSubwords) {
  for (const Word& w : words_over(3, 8)) ASSERT_EQ(longest_hook_subword_length(w), brute_hook(w)) << to_string(w);
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    Word w(12);
    for (int& v : w) v = 1 + static_cast<int>(rng() % 5);
    ASSERT_EQ(longest_hook_subword_length(w), brute_hook(w)) << to_string(w);
  }
}

TEST(HookSet, Membership) {
  EXPECT_TRUE(in_hook_set({4, 2, 1, 1, 6, 8, 8}, {7}));
  EXPECT_FALSE(in_hook_set({2, 1, 2}, {2, 1}));
  EXPECT_FALSE(in_hook_set({2, 1, 1}, {2, 1}));
  EXPECT_TRUE(in_hook_set({1, 2, 1}, {2, 1}));
  EXPECT_THROW(in_hook_set({1, 2}, {2, 1}), LengthError);
}

TEST(HookSet, Enumerate) {
  EXPECT_EQ(enumerate_hook_set({1}, 2), (std::vector<Word>{{1}, {2}}));
  EXPECT_EQ(enumerate_hook_set({2}, 2), (std::vector<Word>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  for (const Word& w : enumerate_hook_set({3, 1}, 3)) EXPECT_TRUE(in_hook_set(w, {3, 1}));
  std::size_t count = 0;
  for (const Word& w : words_over(3, 4))
    if (w.size() == 4 && in_hook_set(w, {3, 1})) ++count;
  EXPECT_EQ(enumerate_hook_set({3, 1}, 3).size(), count);
}

TEST(HookSet, CommutativeImageIsSchurP) {
  SymPoly image(2);
  for (const Word& w : enumerate_hook_set({2, 1}, 2)) {
    std::vector<int> e(2, 0);
    for (int v : w) ++e[static_cast<std::size_t>(v - 1)];
    image.add_term(e, 1);
  }
  SymPoly want(2);
  want.add_term({2, 1}, 1);
  want.add_term({1, 2}, 1);
  EXPECT_EQ(image, want);
}

TEST(Relations, Neighbors) {
  EXPECT_TRUE(relation_neighbors({1, 1, 3, 2}).count({1, 3, 1, 2}));
  EXPECT_TRUE(relation_neighbors({1, 2, 3}).empty());
  EXPECT_FALSE(relation_neighbors({1, 1, 3, 2}).count({1, 1, 3, 2}));
  EXPECT_EQ(plactic_relations().size(), 8u);
}

TEST(Relations, SoundOverFourLetters) {
  for (const Word& w : words_over(4, 6)) {
    const ShiftedTableau t = mixed_insert_word(w);
    for (const Word& v : relation_neighbors(w)) ASSERT_EQ(mixed_insert_word(v), t) << to_string(w) << " ~ " << to_string(v);
  }
}

TEST(Relations, CompleteAtLengthFour) {
  std::map<ShiftedTableau, std::set<Word>> classes;
  for (const Word& w : words_over(3, 4)) classes[mixed_insert_word(w)].insert(w);
  for (const auto& [t, members] : classes) EXPECT_EQ(relation_class(*members.begin()), members) << to_inline(t);
}

TEST(Relations, Equivalence) {
  EXPECT_TRUE(plactic_equivalent({3, 1, 2}, {3, 1, 2}));
  EXPECT_TRUE(plactic_equivalent({1, 1, 3, 2}, {1, 3, 1, 2}));
  EXPECT_FALSE(plactic_equivalent({1, 2}, {2, 1}));
}
