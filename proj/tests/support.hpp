#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "permexpr/derivation.hpp"
#include "permexpr/normal_form.hpp"
#include "permexpr/word.hpp"

namespace testsupport {

using namespace permexpr;

// Count how often each strand pair crosses by direct position simulation.
inline std::map<std::pair<int, int>, int> crossing_counts(const Word& w) {
    int n = w.strand_count();
    std::vector<int> arr(static_cast<std::size_t>(n));
    std::iota(arr.begin(), arr.end(), 1);
    std::map<std::pair<int, int>, int> counts;
    for (int x : w.letters()) {
        int a = arr[static_cast<std::size_t>(x - 1)], b = arr[static_cast<std::size_t>(x)];
        counts[{std::min(a, b), std::max(a, b)}] += 1;
        std::swap(arr[static_cast<std::size_t>(x - 1)], arr[static_cast<std::size_t>(x)]);
    }
    return counts;
}

inline bool no_pair_crosses_twice(const Word& w) {
    for (const auto& [pair, c] : crossing_counts(w))
        if (c > 1) return false;
    return true;
}

// Piecewise-linear position of a strand at height y (rows have height 1).
inline double strand_x_at(const std::vector<int>& trace, double y) {
    auto r = static_cast<std::size_t>(y);
    if (r + 1 >= trace.size()) return trace.back();
    double t = y - static_cast<double>(r);
    return trace[r] + t * (trace[r + 1] - trace[r]);
}

inline std::vector<int> trace_of(const Word& w, int strand) {
    int n = w.strand_count();
    std::vector<int> arr(static_cast<std::size_t>(n));
    std::iota(arr.begin(), arr.end(), 1);
    int pos = strand;
    std::vector<int> trace{pos};
    for (int x : w.letters()) {
        std::swap(arr[static_cast<std::size_t>(x - 1)], arr[static_cast<std::size_t>(x)]);
        if (pos == x)
            pos = x + 1;
        else if (pos == x + 1)
            pos = x;
        trace.push_back(pos);
    }
    return trace;
}

// Square-counting rasterizer: a unit square is right of the strand when the
// whole strand segment over its row stays at or left of the square's left
// edge, sampled at the row boundaries and the midpoint.
inline long long raster_area_right(const Word& w) {
    int n = w.strand_count();
    auto trace = trace_of(w, n);
    long long area = 0;
    for (int r = 0; r < w.length(); ++r)
        for (int col = 1; col <= n - 1; ++col) {
            bool inside = true;
            for (double y : {static_cast<double>(r), r + 0.5, static_cast<double>(r + 1)})
                inside = inside && strand_x_at(trace, y) <= col;
            if (inside) area += 1;
        }
    return area;
}

inline std::optional<long long> raster_area_between(const Word& w, int i) {
    auto left = trace_of(w, i), right = trace_of(w, i + 1);
    long long area = 0;
    int n = w.strand_count();
    for (int r = 0; r < w.length(); ++r) {
        if (left[static_cast<std::size_t>(r)] > right[static_cast<std::size_t>(r)]) return area;
        for (int col = 1; col <= n - 1; ++col) {
            bool inside = true;
            for (double y : {static_cast<double>(r), r + 0.5, static_cast<double>(r + 1)}) {
                double xl = strand_x_at(left, y), xr = strand_x_at(right, y);
                inside = inside && xl <= col && col + 1 <= xr;
            }
            if (inside) area += 1;
        }
    }
    if (left.back() < right.back()) return std::nullopt;  // never crossed
    return area;
}

// Enumerates every admissible shape function f and expands it letter by
// letter, independently of the library expansion.
inline std::vector<std::pair<std::vector<int>, Word>> enumerate_shapes(int n) {
    std::vector<std::pair<std::vector<int>, Word>> out;
    std::vector<int> f(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = i + 1;  // start at identity
    // odometer over f(i) in [1, i]
    std::vector<int> digits(static_cast<std::size_t>(n), 1);
    while (true) {
        std::vector<int> letters;
        for (int i = 1; i <= n; ++i)
            for (int x = i - 1; x >= digits[static_cast<std::size_t>(i - 1)]; --x) letters.push_back(x);
        out.emplace_back(digits, Word(n, letters));
        int k = n - 1;
        while (k >= 0 && digits[static_cast<std::size_t>(k)] == k + 1) {
            digits[static_cast<std::size_t>(k)] = 1;
            --k;
        }
        if (k < 0) break;
        ++digits[static_cast<std::size_t>(k)];
    }
    return out;
}

// Least upper bound in the weak order: the unique shortest permutation whose
// inversion set contains both inversion sets, found by brute force.
inline Permutation join_oracle(const Permutation& a, const Permutation& b) {
    int n = a.n();
    auto inv_a = inversion_set(a);
    auto inv_b = inversion_set(b);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::optional<Permutation> best;
    do {
        Permutation c = Permutation::from_images(images);
        auto inv_c = inversion_set(c);
        auto contains = [&](const std::vector<std::pair<int, int>>& sub) {
            return std::includes(inv_c.begin(), inv_c.end(), sub.begin(), sub.end());
        };
        if (!contains(inv_a) || !contains(inv_b)) continue;
        if (!best || inversion_count(c) < inversion_count(*best)) best = c;
    } while (std::next_permutation(images.begin(), images.end()));
    return *best;
}

// Shortest derivation between equivalent words, by breadth-first search with
// parent tracking.
inline Derivation optimal_derivation(const Word& u, const Word& v) {
    struct Entry {
        int parent;
        Step step;
    };
    std::vector<Word> words{u};
    std::unordered_map<std::string, int> index{{detail::encode(u), 0}};
    std::vector<Entry> entries{{-1, Step{}}};
    std::deque<int> queue{0};
    int found = u == v ? 0 : -1;
    while (found < 0 && !queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        Word w = words[static_cast<std::size_t>(cur)];
        for (const auto& [pos, kind] : applicable_relations(w)) {
            Word next = apply_relation(w, pos, kind);
            std::string code = detail::encode(next);
            if (index.count(code)) continue;
            int id = static_cast<int>(words.size());
            index[code] = id;
            words.push_back(next);
            entries.push_back({cur, Step{pos, kind}});
            if (next == v) {
                found = id;
                break;
            }
            queue.push_back(id);
        }
    }
    Derivation d;
    d.start = u;
    std::vector<Step> steps;
    for (int at = found; at > 0; at = entries[static_cast<std::size_t>(at)].parent)
        steps.push_back(entries[static_cast<std::size_t>(at)].step);
    std::reverse(steps.begin(), steps.end());
    d.steps = std::move(steps);
    return d;
}

}  // namespace testsupport
