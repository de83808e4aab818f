#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "derivation.hpp"
#include "families.hpp"
#include "invariants.hpp"
#include "normal_form.hpp"
#include "reversing.hpp"
#include "word.hpp"

namespace permexpr {

namespace detail {

// Run fn(k) for k in [0, count) on worker threads; results indexed, so the
// output is deterministic regardless of scheduling.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (workers <= 1 || count < 2) {
        for (std::size_t k = 0; k < count; ++k) fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) fn(k);
        });
    for (auto& t : pool) t.join();
}

}  // namespace detail

// All reduced expressions of one permutation, in deterministic order.
inline std::vector<Word> reduced_class(const Permutation& pi, std::size_t node_limit = kDefaultNodeLimit) {
    Word seed = nf_of_perm(pi);
    std::vector<Word> out;
    std::unordered_set<std::string> seen;
    std::deque<Word> queue;
    seen.insert(detail::encode(seed));
    queue.push_back(seed);
    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        out.push_back(w);
        for (const auto& [pos, kind] : applicable_relations(w)) {
            Word next = apply_relation(w, pos, kind);
            if (seen.insert(detail::encode(next)).second) {
                if (seen.size() > node_limit) throw StateSpaceExceeded("reduced_class exceeded node limit");
                queue.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.letters() < b.letters(); });
    return out;
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

// All reduced words over n strands with length <= maxlen, grown letter by
// letter; every prefix of a reduced word is reduced.
inline std::vector<Word> all_reduced_words(int n, int maxlen) {
    std::vector<Word> out, frontier{Word(n, {})};
    out.push_back(frontier.front());
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            std::vector<int> letters = w.letters();
            for (int x = 1; x < n; ++x) {
                letters.push_back(x);
                Word candidate(n, letters);
                if (is_reduced(candidate)) next.push_back(candidate);
                letters.pop_back();
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::from_images(std::move(images));
}

// A random reduced expression of pi: start from the normal form and take a
// random walk over relation applications.
inline Word random_reduced_word(const Permutation& pi, std::mt19937_64& rng, int walk = 48) {
    Word w = nf_of_perm(pi);
    for (int t = 0; t < walk; ++t) {
        auto moves = applicable_relations(w);
        if (moves.empty()) break;
        const auto& [pos, kind] = moves[static_cast<std::size_t>(rng() % moves.size())];
        w = apply_relation(w, pos, kind);
    }
    return w;
}

inline ExtendedWord random_extended_word(int n, int len, std::mt19937_64& rng) {
    std::vector<ExtLetter> letters;
    letters.reserve(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t)
        letters.push_back(ExtLetter{1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1)), (rng() & 1) != 0});
    return ExtendedWord(n, std::move(letters));
}

struct QuarticRow {
    int l = 1;
    long long engine_count = 0;  // reversing complexity
    long long formula_value = 0;
    TileCounts counts;
    bool digon_free = false;
};

inline std::vector<QuarticRow> experiment_quartic(int lmax, long long step_budget = kDefaultStepBudget) {
    std::vector<QuarticRow> rows(static_cast<std::size_t>(lmax));
    detail::parallel_for(rows.size(), [&](std::size_t k) {
        QuarticReport report = validate_quartic(static_cast<int>(k) + 1, step_budget);
        rows[k] = QuarticRow{report.l, report.engine_nontrivial, report.formula, report.counts,
                             report.digon_free_compacted};
    });
    return rows;
}

// Tally of the equality lower_bound = dist over equivalent reduced pairs:
// exhaustive over the permutations of n <= 4, sampled otherwise.
struct Eq8Report {
    int n = 4;
    bool exhaustive = true;
    long long pairs = 0;
    long long equal = 0;
    long long counterexamples = 0;
    long long skipped = 0;  // pairs where the search exceeded the node limit
    std::vector<std::string> examples;
};

inline Eq8Report experiment_eq8(int n, int samples = 200, std::uint64_t seed = 1,
                                std::size_t node_limit = kDefaultNodeLimit) {
    Eq8Report report;
    report.n = n;
    report.exhaustive = n <= 4;
    std::vector<std::pair<Word, Word>> cases;
    if (report.exhaustive) {
        for (const auto& pi : all_permutations(n)) {
            auto words = reduced_class(pi, node_limit);
            for (std::size_t a = 0; a < words.size(); ++a)
                for (std::size_t b = a + 1; b < words.size(); ++b) cases.emplace_back(words[a], words[b]);
        }
    } else {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < samples; ++t) {
            Permutation pi = random_permutation(n, rng);
            Word u = random_reduced_word(pi, rng);
            Word v = random_reduced_word(pi, rng);
            if (u == v) {
                --t;
                continue;
            }
            cases.emplace_back(std::move(u), std::move(v));
        }
    }
    report.pairs = static_cast<long long>(cases.size());
    std::vector<int> verdict(cases.size(), 0);  // 1 equal, 0 counterexample, -1 skipped
    std::vector<std::string> notes(cases.size());
    detail::parallel_for(cases.size(), [&](std::size_t k) {
        const auto& [u, v] = cases[k];
        LowerBound lb = lower_bound(u, v);
        try {
            long long d = dist_bfs(u, v, node_limit);
            verdict[k] = lb.total == d ? 1 : 0;
            if (lb.total != d)
                notes[k] = "counterexample: u=" + u.str() + " v=" + v.str() + " lower=" +
                           std::to_string(lb.total) + " dist=" + std::to_string(d);
        } catch (const StateSpaceExceeded&) {
            verdict[k] = -1;
        }
    });
    for (std::size_t k = 0; k < cases.size(); ++k) {
        if (verdict[k] == 1) ++report.equal;
        if (verdict[k] == -1) ++report.skipped;
        if (verdict[k] == 0) {
            ++report.counterexamples;
            if (report.examples.size() < 32) report.examples.push_back(notes[k]);
        }
    }
    return report;
}

struct GrowthRow {
    int l = 1;
    int n = 2;
    int samples = 0;
    long long max_compl = 0;
    long long bound_n2l = 0;  // n^2 l, the conjectured growth order
};

// Max reversing complexity over random length-l pairs, against the n^2 l
// growth conjecture. n = 0 picks the saturation value 2l.
inline std::vector<GrowthRow> experiment_growth(int lmax, int n = 0, int samples = 200, std::uint64_t seed = 1,
                                                long long step_budget = kDefaultStepBudget) {
    std::vector<GrowthRow> rows(static_cast<std::size_t>(lmax));
    detail::parallel_for(rows.size(), [&](std::size_t k) {
        int l = static_cast<int>(k) + 1;
        int nn = n > 0 ? n : std::max(2 * l, 2);
        GrowthRow row{l, nn, samples, 0, static_cast<long long>(nn) * nn * l};
        std::mt19937_64 rng(seed + 7919 * k);
        for (int t = 0; t < samples; ++t) {
            std::vector<int> us, vs;
            for (int s = 0; s < l; ++s) {
                us.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(nn - 1)));
                vs.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(nn - 1)));
            }
            row.max_compl = std::max(row.max_compl, complexity(Word(nn, us), Word(nn, vs), step_budget));
        }
        rows[k] = row;
    });
    return rows;
}

struct StabilizationRow {
    int l = 1;
    int n = 2;
    long long pairs = 0;
    bool exhaustive = true;
    long long max_compl = 0;
};

// Max reversing complexity N(n, l) over pairs of length-l n-expressions, for
// n up to past the saturation point 2l; exhaustive while the pair count is
// small, sampled beyond.
inline std::vector<StabilizationRow> experiment_stabilization(int lmax, long long exhaustive_limit = 200000,
                                                              int samples = 2000, std::uint64_t seed = 1,
                                                              long long step_budget = kDefaultStepBudget) {
    std::vector<std::pair<int, int>> cells;
    for (int l = 1; l <= lmax; ++l)
        for (int n = 2; n <= 2 * l + 2; ++n) cells.emplace_back(l, n);
    std::vector<StabilizationRow> rows(cells.size());
    detail::parallel_for(cells.size(), [&](std::size_t k) {
        auto [l, n] = cells[k];
        StabilizationRow row{l, n, 0, true, 0};
        double total = std::pow(static_cast<double>(n - 1), 2.0 * l);
        if (total <= static_cast<double>(exhaustive_limit)) {
            long long words = 1;
            for (int t = 0; t < l; ++t) words *= (n - 1);
            row.pairs = words * words;
            std::vector<int> letters(static_cast<std::size_t>(2 * l), 1);
            while (true) {
                std::vector<int> us(letters.begin(), letters.begin() + l);
                std::vector<int> vs(letters.begin() + l, letters.end());
                row.max_compl =
                    std::max(row.max_compl, complexity(Word(n, us), Word(n, vs), step_budget));
                int t = 2 * l - 1;
                while (t >= 0 && letters[static_cast<std::size_t>(t)] == n - 1) {
                    letters[static_cast<std::size_t>(t)] = 1;
                    --t;
                }
                if (t < 0) break;
                ++letters[static_cast<std::size_t>(t)];
            }
        } else {
            row.exhaustive = false;
            row.pairs = samples;
            std::mt19937_64 rng(seed + 104729 * k);
            for (int t = 0; t < samples; ++t) {
                std::vector<int> us, vs;
                for (int s = 0; s < l; ++s) {
                    us.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1)));
                    vs.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1)));
                }
                row.max_compl = std::max(row.max_compl, complexity(Word(n, us), Word(n, vs), step_budget));
            }
        }
        rows[k] = row;
    });
    return rows;
}

}  // namespace permexpr
