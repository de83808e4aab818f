#include <gtest/gtest.h>

#include <random>

#include "permexpr/experiments.hpp"
#include "permexpr/word.hpp"
#include "support.hpp"

using namespace permexpr;

TEST(Word, ParseAndPrint) {
    Word w = Word::parse(4, "1.2.1.3.2.1");
    EXPECT_EQ(w.length(), 6);
    EXPECT_EQ(w.str(), "1.2.1.3.2.1");
    EXPECT_EQ(Word::parse(4, "e").length(), 0);
    EXPECT_EQ(Word(4, {}).str(), "e");
    EXPECT_THROW(Word::parse(3, "1.3"), Error);   // letter out of range
    EXPECT_THROW(Word::parse(3, "-1.2"), Error);  // inverse letters not allowed here
    EXPECT_THROW(Word::parse(3, "1..2"), Error);
}

TEST(ExtendedWord, ParseAndPrint) {
    ExtendedWord w = ExtendedWord::parse(3, "-1.-2.-1.2.1.2");
    EXPECT_EQ(w.length(), 6);
    EXPECT_FALSE(w.letters()[0].positive);
    EXPECT_TRUE(w.letters()[3].positive);
    EXPECT_EQ(w.str(), "-1.-2.-1.2.1.2");
    EXPECT_EQ(bar(Word::parse(3, "1.2")).str(), "-2.-1");
    EXPECT_EQ(bar_concat(Word::parse(3, "1.2.1"), Word::parse(3, "2.1.2")).str(), "-1.-2.-1.2.1.2");
}

TEST(Eval, Examples) {
    EXPECT_TRUE(eval(Word(4, {})).is_identity());
    EXPECT_EQ(eval(Word::parse(4, "1.2.1.3.2.1")), Permutation::flip(4));
    EXPECT_EQ(eval(Word::parse(4, "3.2.3.1.2.3")), Permutation::flip(4));
}

TEST(Eval, ReverseCompositionConvention) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto random_word = [&](int len) {
            std::vector<int> letters;
            for (int k = 0; k < len; ++k) letters.push_back(1 + static_cast<int>(rng() % (n - 1)));
            return Word(n, letters);
        };
        Word u = random_word(static_cast<int>(rng() % 8));
        Word v = random_word(static_cast<int>(rng() % 8));
        EXPECT_EQ(eval(concat(u, v)), eval(u).then(eval(v)));
    }
}

TEST(InversionSet, Examples) {
    EXPECT_TRUE(inversion_set(Permutation(4)).empty());
    EXPECT_EQ(inversion_set(Permutation::flip(4)).size(), 6u);
    auto inv = inversion_set(eval(Word::parse(3, "1.2")));
    std::vector<std::pair<int, int>> expected{{1, 2}, {1, 3}};
    EXPECT_EQ(inv, expected);
}

TEST(IsReduced, Examples) {
    EXPECT_FALSE(is_reduced(Word::parse(2, "1.1")));
    EXPECT_TRUE(is_reduced(Word::parse(4, "1.2.1.3.2.1")));
    EXPECT_TRUE(is_reduced(Word::parse(4, "1.3.2.1.3.2")));
}

TEST(IsReduced, AgreesWithCrossingOracle) {
    for (int n = 2; n <= 4; ++n) {
        // every word up to length 6, not only the reduced ones
        std::vector<Word> frontier{Word(n, {})};
        for (int len = 0; len <= 6; ++len) {
            std::vector<Word> next;
            for (const auto& w : frontier) {
                EXPECT_EQ(is_reduced(w), testsupport::no_pair_crosses_twice(w)) << w.str();
                for (int x = 1; x < n; ++x) {
                    auto letters = w.letters();
                    letters.push_back(x);
                    next.emplace_back(n, letters);
                }
            }
            frontier = std::move(next);
        }
    }
}

TEST(IsReduced, ReducedLengthBound) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_reduced_words(n, 10)) EXPECT_LE(w.length(), n * (n - 1) / 2);
}

TEST(ApplyRelation, Examples) {
    Word w = apply_relation(Word::parse(3, "1.2.1"), 0, RelationKind::type_i(1, 2));
    EXPECT_EQ(w.str(), "2.1.2");
    EXPECT_EQ(apply_relation(Word::parse(4, "1.3"), 0, RelationKind::type_ii(1, 3)).str(), "3.1");
    EXPECT_THROW(apply_relation(Word::parse(4, "1.3.2"), 0, RelationKind::type_i(1, 2)), PatternMismatch);
    EXPECT_THROW(RelationKind::type_i(1, 3), Error);
    EXPECT_THROW(RelationKind::type_ii(1, 2), Error);
}

TEST(ApplyRelation, PreservesLengthAndEval) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        int n = 3 + static_cast<int>(rng() % 4);
        std::vector<int> letters;
        int len = 2 + static_cast<int>(rng() % 8);
        for (int k = 0; k < len; ++k) letters.push_back(1 + static_cast<int>(rng() % (n - 1)));
        Word w(n, letters);
        for (const auto& [pos, kind] : applicable_relations(w)) {
            Word next = apply_relation(w, pos, kind);
            EXPECT_EQ(next.length(), w.length());
            EXPECT_EQ(eval(next), eval(w));
            // applying the inverted kind at the same position undoes the move
            EXPECT_EQ(apply_relation(next, pos, kind.inverted()), w);
        }
    }
}

TEST(Equivalent, Examples) {
    EXPECT_TRUE(equivalent(Word::parse(3, "1.2.1"), Word::parse(3, "2.1.2")));
    EXPECT_TRUE(equivalent(Word::parse(4, "1.2.1.3.2.1"), Word::parse(4, "3.2.3.1.2.3")));
    EXPECT_FALSE(equivalent(Word::parse(3, "1"), Word::parse(3, "2")));
    EXPECT_THROW(equivalent(Word::parse(3, "1"), Word::parse(4, "1")), StrandCountMismatch);
}

TEST(Permutation, Basics) {
    Permutation p = Permutation::from_images({2, 3, 1});
    EXPECT_EQ(p.of(1), 2);
    EXPECT_EQ(p.inverse().of(2), 1);
    EXPECT_TRUE(p.then(p.inverse()).then(Permutation(3)).is_identity());
    EXPECT_THROW(Permutation::from_images({1, 1, 3}), Error);
}
