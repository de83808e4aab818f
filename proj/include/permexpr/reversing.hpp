#pragma once

#include <cstdint>
#include <list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "word.hpp"

namespace permexpr {

enum class TileType : std::uint8_t { I, II, III, IPrime, IDoublePrime };

inline const char* tile_type_name(TileType t) {
    switch (t) {
        case TileType::I: return "I";
        case TileType::II: return "II";
        case TileType::III: return "III";
        case TileType::IPrime: return "I'";
        case TileType::IDoublePrime: return "I''";
    }
    return "?";
}

struct TileCounts {
    long long type_i = 0;
    long long type_ii = 0;
    long long type_iii = 0;
    long long i_prime = 0;
    long long i_double_prime = 0;
    long long nontrivial() const { return type_i + type_ii + i_prime + i_double_prime; }
    long long total() const { return nontrivial() + type_iii; }
    friend bool operator==(const TileCounts&, const TileCounts&) = default;
};

// One application of the reversing rule to the factor bar(s_i) s_j.
struct ReversingStep {
    int pos = 0;  // 0-based letter position of the factor in the current word
    TileType type = TileType::III;
    int i = 1;
    int j = 1;
    friend bool operator==(const ReversingStep&, const ReversingStep&) = default;
};

struct ReversingResult {
    ExtendedWord terminal;  // of the shape v' bar(u')
    Word v_out;             // v'
    Word u_out;             // u'
    std::vector<ReversingStep> steps;
    TileCounts counts;
};

enum class Strategy : std::uint8_t { Leftmost, Rightmost, Random };

inline constexpr long long kDefaultStepBudget = 100'000'000;

struct ReverseOptions {
    long long step_budget = kDefaultStepBudget;
    Strategy strategy = Strategy::Leftmost;
    std::uint64_t seed = 0;   // used by Strategy::Random
    bool log_steps = false;   // record the step list (positions, types)
};

// Rewrites the extended word by replacing factors bar(s_i) s_j until none
// remains: by s_j s_i bar(s_j) bar(s_i) when |i-j| = 1, by s_j bar(s_i) when
// |i-j| >= 2, and by the empty word when i = j. The terminal word and the
// per-type step counts do not depend on the strategy.
inline ReversingResult reverse(const ExtendedWord& w, const ReverseOptions& opt = {}) {
    // signed letters: +i for s_i, -i for bar(s_i)
    std::list<int> letters;
    for (const auto& l : w.letters()) letters.push_back(l.positive ? l.index : -l.index);

    ReversingResult result;
    std::mt19937_64 rng(opt.seed);
    long long budget = opt.step_budget;

    auto is_factor = [](std::list<int>::iterator it, std::list<int>::iterator next) {
        return *it < 0 && *next > 0;
    };

    // cursor scan for the leftmost strategy; a replacement at position p can
    // create a new factor no earlier than p-1
    auto cursor = letters.begin();
    int cursor_pos = 0;

    while (true) {
        std::list<int>::iterator it;
        int pos = 0;
        if (opt.strategy == Strategy::Leftmost) {
            it = cursor;
            pos = cursor_pos;
            while (it != letters.end()) {
                auto next = std::next(it);
                if (next == letters.end()) {
                    it = letters.end();
                    break;
                }
                if (is_factor(it, next)) break;
                ++it;
                ++pos;
            }
            if (it == letters.end()) break;
        } else {
            std::vector<std::pair<std::list<int>::iterator, int>> factors;
            int k = 0;
            for (auto scan = letters.begin(); scan != letters.end(); ++scan, ++k) {
                auto next = std::next(scan);
                if (next != letters.end() && is_factor(scan, next)) factors.emplace_back(scan, k);
            }
            if (factors.empty()) break;
            std::size_t pick = opt.strategy == Strategy::Rightmost
                                   ? factors.size() - 1
                                   : static_cast<std::size_t>(rng() % factors.size());
            it = factors[pick].first;
            pos = factors[pick].second;
        }

        if (--budget < 0) throw StepBudgetExceeded("reversing exceeded its step budget");

        auto next = std::next(it);
        int i = -*it;
        int j = *next;
        TileType type;
        if (i == j) {
            type = TileType::III;
            it = letters.erase(it);
            it = letters.erase(it);
        } else if (i - j == 1 || j - i == 1) {
            type = TileType::I;
            *it = j;
            *next = i;
            auto after = std::next(next);
            letters.insert(after, -j);
            letters.insert(after, -i);  // yields j, i, -j, -i
        } else {
            type = TileType::II;
            *it = j;
            *next = -i;
        }

        switch (type) {
            case TileType::I: ++result.counts.type_i; break;
            case TileType::II: ++result.counts.type_ii; break;
            default: ++result.counts.type_iii; break;
        }
        if (opt.log_steps) result.steps.push_back(ReversingStep{pos, type, i, j});

        if (opt.strategy == Strategy::Leftmost) {
            cursor = it;
            cursor_pos = pos;
            if (cursor != letters.begin()) {
                --cursor;
                --cursor_pos;
            }
        }
    }

    std::vector<ExtLetter> terminal;
    terminal.reserve(letters.size());
    for (int x : letters) terminal.push_back(ExtLetter{x < 0 ? -x : x, x > 0});
    result.terminal = ExtendedWord(w.strand_count(), std::move(terminal));

    std::vector<int> pos_part, neg_part;
    for (int x : letters) {
        if (x > 0)
            pos_part.push_back(x);
        else
            neg_part.push_back(-x);
    }
    std::reverse(neg_part.begin(), neg_part.end());
    result.v_out = Word(w.strand_count(), std::move(pos_part));
    result.u_out = Word(w.strand_count(), std::move(neg_part));
    return result;
}

inline ReversingResult reverse(const Word& u, const Word& v, const ReverseOptions& opt = {}) {
    return reverse(bar_concat(u, v), opt);
}

// Reversing complexity: the number of nontrivial tiles in the reversing
// diagram for (u, v). (The identifier "compl" is reserved in C++.)
inline long long complexity(const Word& u, const Word& v, long long step_budget = kDefaultStepBudget) {
    ReverseOptions opt;
    opt.step_budget = step_budget;
    return reverse(bar_concat(u, v), opt).counts.nontrivial();
}

}  // namespace permexpr
