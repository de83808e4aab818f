#include <gtest/gtest.h>

#include <random>

#include "permexpr/experiments.hpp"
#include "permexpr/families.hpp"
#include "permexpr/reversing.hpp"
#include "support.hpp"

using namespace permexpr;

TEST(Reverse, RuleExamples) {
    ReversingResult one = reverse(ExtendedWord::parse(3, "-1.2"));
    EXPECT_EQ(one.terminal.str(), "2.1.-2.-1");
    EXPECT_EQ(one.counts.type_i, 1);
    EXPECT_EQ(one.counts.total(), 1);

    ReversingResult two = reverse(ExtendedWord::parse(4, "-1.3"));
    EXPECT_EQ(two.terminal.str(), "3.-1");
    EXPECT_EQ(two.counts.type_ii, 1);

    ReversingResult digon = reverse(ExtendedWord::parse(3, "-2.2"));
    EXPECT_TRUE(digon.terminal.empty());
    EXPECT_EQ(digon.counts.type_iii, 1);
}

TEST(Reverse, DisplayedSequence) {
    ReversingResult r = reverse(ExtendedWord::parse(3, "-1.-2.-1.2.1.2"));
    EXPECT_TRUE(r.terminal.empty());
    EXPECT_EQ(r.counts.type_i, 1);
    EXPECT_EQ(r.counts.type_ii, 0);
    EXPECT_EQ(r.counts.type_iii, 4);
}

TEST(Reverse, TerminalShape) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng() % 5);
        ExtendedWord w = random_extended_word(n, static_cast<int>(rng() % 12), rng);
        ReversingResult r = reverse(w);
        // no negative letter may precede a positive one
        bool seen_negative = false;
        for (const auto& l : r.terminal.letters()) {
            if (!l.positive) seen_negative = true;
            EXPECT_FALSE(seen_negative && l.positive) << w.str();
        }
        // terminal is exactly v' bar(u')
        std::vector<ExtLetter> expected = as_extended(r.v_out).letters();
        for (const auto& l : bar(r.u_out).letters()) expected.push_back(l);
        EXPECT_EQ(r.terminal, ExtendedWord(n, expected)) << w.str();
    }
}

TEST(Reverse, StrategyIndependence) {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng() % 5);
        ExtendedWord w = random_extended_word(n, static_cast<int>(rng() % 13), rng);
        ReverseOptions leftmost, rightmost, random_pick;
        rightmost.strategy = Strategy::Rightmost;
        random_pick.strategy = Strategy::Random;
        random_pick.seed = rng();
        ReversingResult a = reverse(w, leftmost);
        ReversingResult b = reverse(w, rightmost);
        ReversingResult c = reverse(w, random_pick);
        EXPECT_EQ(a.terminal, b.terminal) << w.str();
        EXPECT_EQ(a.counts, b.counts) << w.str();
        EXPECT_EQ(a.terminal, c.terminal) << w.str();
        EXPECT_EQ(a.counts, c.counts) << w.str();
    }
}

TEST(Reverse, EquivalentReducedPairsReverseToEmpty) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        Permutation pi = random_permutation(n, rng);
        Word u = random_reduced_word(pi, rng);
        Word v = random_reduced_word(pi, rng);
        ReversingResult r = reverse(u, v);
        EXPECT_TRUE(r.terminal.empty()) << u.str() << " / " << v.str();
        EXPECT_TRUE(r.u_out.empty());
        EXPECT_TRUE(r.v_out.empty());
    }
}

// The completed pair (u v', v u') is reduced, equivalent, and evaluates to the
// least upper bound in the weak order.
TEST(Reverse, CompletionIsWeakOrderJoin) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);  // join oracle enumerates S_n
        Word u = random_reduced_word(random_permutation(n, rng), rng);
        Word v = random_reduced_word(random_permutation(n, rng), rng);
        ReversingResult r = reverse(u, v);
        Word left = concat(u, r.v_out), top = concat(v, r.u_out);
        EXPECT_TRUE(is_reduced(left));
        EXPECT_TRUE(is_reduced(top));
        EXPECT_EQ(eval(left), eval(top));
        EXPECT_EQ(eval(left), testsupport::join_oracle(eval(u), eval(v)));
    }
}

TEST(Complexity, Examples) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        Word u = random_reduced_word(random_permutation(n, rng), rng);
        EXPECT_EQ(complexity(u, u), 0) << u.str();
    }
    EXPECT_EQ(complexity(Word::parse(3, "1.2.1"), Word::parse(3, "2.1.2")), 1);

    ReversingResult r = reverse(Word::parse(4, "1.2.1.3.2.1"), Word::parse(4, "3.2.3.1.2.3"));
    EXPECT_EQ(r.counts.nontrivial(), 8);
    EXPECT_EQ(r.counts.type_i, 4);
    EXPECT_EQ(r.counts.type_ii, 4);
}

TEST(Complexity, BoundsDistanceOnSmallClasses) {
    for (const auto& pi : all_permutations(4)) {
        auto words = reduced_class(pi);
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = a + 1; b < words.size(); ++b)
                EXPECT_LE(dist_bfs(words[a], words[b]), complexity(words[a], words[b]));
    }
}

TEST(Complexity, FlipFamilyQuadraticLowerBound) {
    for (int n = 3; n <= 6; ++n) {
        auto [u, v] = flip_pair(n);
        long long l = u.length();
        EXPECT_GE(complexity(u, v), l * (l - 1) / 2) << "n=" << n;
    }
}

TEST(Reverse, BudgetGuard) {
    ReverseOptions opt;
    opt.step_budget = 1;
    EXPECT_THROW(reverse(ExtendedWord::parse(3, "-1.-2.-1.2.1.2"), opt), StepBudgetExceeded);
}
