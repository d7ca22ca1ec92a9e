#include <gtest/gtest.h>

#include "wsq/errors.hpp"
#include "wsq/wiring.hpp"

using namespace wsq;

namespace {

const char* const kExampleWord = "2 1r 1 2 3 2r 2 1 4 1r 3 2 1";

std::string label(const KSubset& s) {
  std::string out;
  for (int x : s.indices()) out += std::to_string(x);
  return out;
}

std::vector<std::pair<std::string, std::string>> labels_at(const std::vector<Chamber>& chs, int level) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& ch : chs)
    if (ch.level == level) out.emplace_back(label(ch.red), label(ch.black));
  return out;
}

}  // namespace

TEST(ReducedWord, ParseRoundTrip) {
  const auto w = ReducedWord::parse(3, 5, kExampleWord);
  EXPECT_EQ(w.letters.size(), 13u);
  EXPECT_EQ(w.to_string(), kExampleWord);
  EXPECT_THROW(ReducedWord::parse(3, 5, "5"), PreconditionError);
  EXPECT_THROW(ReducedWord::parse(3, 5, "3r"), PreconditionError);
  EXPECT_THROW(ReducedWord::parse(3, 5, "2x"), PreconditionError);
}

TEST(ReducedWord, ValidityAndOptimality) {
  const auto w = ReducedWord::parse(3, 5, kExampleWord);
  EXPECT_TRUE(validate_word(w));
  EXPECT_TRUE(is_optimal(w));
  EXPECT_FALSE(validate_word(ReducedWord::parse(1, 2, "1 1")));
  // Black part 4 3 2 1 4 3 2 4 3 4 uses index 4 four times: valid, not optimal.
  const auto heavy = ReducedWord::parse(3, 5, "4 3 2 1 4 3 2 4 3 4 1r 2r 1r");
  EXPECT_TRUE(validate_word(heavy));
  EXPECT_FALSE(is_optimal(heavy));
}

TEST(ReducedWord, SquareShapesAreAlwaysOptimal) {
  int count = 0;
  for_each_reduced_shuffle(3, 3, false, [&](const ReducedWord& w) {
    ++count;
    EXPECT_TRUE(is_optimal(w));
  });
  // 2 words each for w0 in S_3, C(6,3) shuffles.
  EXPECT_EQ(count, 2 * 2 * 20);
}

TEST(ReducedWord, LongestElementWordCounts) {
  EXPECT_EQ(longest_element_words(2).size(), 1u);
  EXPECT_EQ(longest_element_words(3).size(), 2u);
  EXPECT_EQ(longest_element_words(4).size(), 16u);
  EXPECT_EQ(longest_element_words(5).size(), 768u);
}

TEST(Chambers, ExampleLabels) {
  const auto chs = chambers(ReducedWord::parse(3, 5, kExampleWord));
  EXPECT_EQ(chs.size(), 15u);
  using L = std::vector<std::pair<std::string, std::string>>;
  EXPECT_EQ(labels_at(chs, 1), (L{{"3", "1"}, {"2", "1"}, {"2", "3"}, {"2", "4"}, {"1", "4"}, {"1", "5"}}));
  EXPECT_EQ(labels_at(chs, 2),
            (L{{"23", "12"}, {"23", "13"}, {"23", "23"}, {"12", "23"}, {"12", "34"}, {"12", "45"}}));
  EXPECT_EQ(labels_at(chs, 3), (L{{"123", "123"}, {"123", "234"}, {"123", "345"}}));
}

TEST(Chambers, LabelProperties) {
  for (int k = 1; k <= 3; ++k)
    for (int m = k; m <= 4; ++m)
      for_each_reduced_shuffle(k, m, false, [&](const ReducedWord& w) {
        const auto chs = chambers(w);
        for (std::size_t c = 0; c < chs.size(); ++c) {
          EXPECT_EQ(chs[c].red.size(), chs[c].level);
          EXPECT_EQ(chs[c].black.size(), chs[c].level);
          if (c + 1 < chs.size() && chs[c + 1].level == chs[c].level) {
            // Neighbours differ by one swapped label in exactly one colour.
            const int red_change = (chs[c].red - chs[c + 1].red).size();
            const int black_change = (chs[c].black - chs[c + 1].black).size();
            EXPECT_EQ(red_change + black_change, 1) << w.to_string();
            EXPECT_EQ(chs[c].end + 1, chs[c + 1].start);
          }
        }
      });
}

TEST(Chambers, InvalidWordIsAnError) {
  EXPECT_THROW(chambers(ReducedWord::parse(2, 2, "1")), PreconditionError);
}

TEST(WordCollection, ExampleIsMaximalOfSizeSixteen) {
  const auto c = word_collection(ReducedWord::parse(3, 5, kExampleWord));
  EXPECT_EQ(c.k(), 3);
  EXPECT_EQ(c.n(), 8);
  EXPECT_EQ(c.size(), 16u);
  EXPECT_TRUE(validate(c).ok());
  EXPECT_TRUE(is_maximal(c));
}

TEST(WordCollection, NonOptimalIsAnError) {
  EXPECT_THROW(word_collection(ReducedWord::parse(3, 5, "4 3 2 1 4 3 2 4 3 4 1r 2r 1r")),
               PreconditionError);
}

TEST(WordCollection, AllOptimalWordsSmallShapes) {
  for (int k = 1; k <= 3; ++k)
    for (int m = k; m <= 4; ++m)
      for_each_reduced_shuffle(k, m, true, [&](const ReducedWord& w) {
        const auto c = word_collection(w);
        ASSERT_EQ(static_cast<int>(c.size()), k * m + 1) << w.to_string();
        ASSERT_TRUE(validate(c).ok()) << w.to_string();
        ASSERT_TRUE(is_maximal(c)) << w.to_string();
      });
}

TEST(WordCollection, ChamberMinorsPairwiseCompatible) {
  for_each_reduced_shuffle(3, 4, true, [&](const ReducedWord& w) {
    std::vector<MinorIndex> minors;
    for (const auto& ch : chambers(w)) minors.push_back(MinorIndex::make(ch.red, ch.black));
    for (const auto& p : minors)
      for (const auto& r : minors)
        if (!(p == r)) ASSERT_TRUE(chamber_minors_compatible(p, r)) << w.to_string();
  });
}

TEST(WordCollection, DihedralClosureIsAllOfThreeSix) {
  const auto closure = wiring_collections_up_to_dihedral(3, 3);
  EXPECT_EQ(closure, enumerate_component(base_collection(3, 6)));
}

TEST(Parametrizable, Examples) {
  for (int n = 4; n <= 9; ++n) EXPECT_TRUE(is_wiring_parametrizable(base_collection(2, n)));
  for (const auto& c : enumerate_component(base_collection(2, 5))) EXPECT_TRUE(is_wiring_parametrizable(c));
  EXPECT_THROW(is_wiring_parametrizable(base_collection(3, 6)), PreconditionError);
}

TEST(Parametrizable, NineGonHasACounterexample) {
  const auto all = enumerate_component(base_collection(2, 9));
  const auto bad = std::count_if(all.begin(), all.end(),
                                 [](const WSCollection& c) { return !is_wiring_parametrizable(c); });
  EXPECT_GT(bad, 0);
}

// The criterion agrees with "is a word collection up to dihedral translation".
TEST(Parametrizable, AgreesWithWordCollections) {
  for (int n = 4; n <= 7; ++n) {
    const auto words = wiring_collections_up_to_dihedral(2, n - 2);
    const std::set<WSCollection> from_words(words.begin(), words.end());
    for (const auto& c : enumerate_component(base_collection(2, n)))
      EXPECT_EQ(is_wiring_parametrizable(c), from_words.count(c) == 1) << "n=" << n;
  }
}
