#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "derivation.hpp"
#include "word.hpp"

namespace permexpr {

// The descending run s_{j,i} = s_{j-1} s_{j-2} ... s_i, empty when j = i.
struct DescendingRun {
    int j = 1;
    int i = 1;
    DescendingRun() = default;
    DescendingRun(int jj, int ii) : j(jj), i(ii) {
        if (i < 1 || j < i) throw Error("descending run requires j >= i >= 1");
    }
    int length() const { return j - i; }
    std::vector<int> letters() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(length()));
        for (int x = j - 1; x >= i; --x) out.push_back(x);
        return out;
    }
    friend bool operator==(const DescendingRun&, const DescendingRun&) = default;
};

// The shape s_{1,f(1)} s_{2,f(2)} ... s_{n,f(n)} with f(i) <= i.
struct NormalShape {
    int n = 1;
    std::vector<int> f;  // f[i-1] = f(i)
    NormalShape() : f{1} {}
    NormalShape(int nn, std::vector<int> ff) : n(nn), f(std::move(ff)) {
        if (n < 1 || static_cast<int>(f.size()) != n) throw Error("normal shape requires one value per strand");
        for (int i = 1; i <= n; ++i)
            if (f[static_cast<std::size_t>(i - 1)] < 1 || f[static_cast<std::size_t>(i - 1)] > i)
                throw Error("normal shape requires 1 <= f(i) <= i");
    }
    static NormalShape identity(int n) {
        std::vector<int> f(static_cast<std::size_t>(n));
        std::iota(f.begin(), f.end(), 1);
        return NormalShape(n, std::move(f));
    }
    friend bool operator==(const NormalShape&, const NormalShape&) = default;
};

inline Word expand(const DescendingRun& run, int n) { return Word(n, run.letters()); }

inline Word expand(const NormalShape& shape) {
    std::vector<int> letters;
    for (int i = 1; i <= shape.n; ++i) {
        DescendingRun run(i, shape.f[static_cast<std::size_t>(i - 1)]);
        auto part = run.letters();
        letters.insert(letters.end(), part.begin(), part.end());
    }
    return Word(shape.n, std::move(letters));
}

// Recovers the unique normal shape of a permutation by peeling the largest
// non-fixed point: if m is largest with pi(m) != m then f(m) = pi(m), and the
// run s_{m,f(m)} is stripped off the diagram.
inline NormalShape shape_of_perm(const Permutation& pi) {
    int n = pi.n();
    std::vector<int> f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 1);
    std::vector<int> images = pi.images();
    auto image = [&](int i) -> int& { return images[static_cast<std::size_t>(i - 1)]; };
    for (int m = n; m >= 2; --m) {
        if (image(m) == m) continue;
        int k = image(m);  // k < m since {1..m} is stable here
        f[static_cast<std::size_t>(m - 1)] = k;
        // strip the run: positions k..m-1 shift up, m goes to k
        for (int s = 1; s <= n; ++s) {
            int& y = image(s);
            if (y == k)
                y = m;
            else if (y > k && y <= m)
                y -= 1;
        }
    }
    return NormalShape(n, std::move(f));
}

inline Word nf_of_perm(const Permutation& pi) { return expand(shape_of_perm(pi)); }

// The unique normal expression equivalent to w.
inline Word nf(const Word& w) { return nf_of_perm(eval(w)); }

namespace detail {

// Positions of one strand at every row boundary of the diagram.
inline std::vector<int> strand_trace(const Word& w, int strand) {
    int n = w.strand_count();
    std::vector<int> arr(static_cast<std::size_t>(n));
    std::iota(arr.begin(), arr.end(), 1);
    int pos = strand;
    std::vector<int> trace;
    trace.reserve(static_cast<std::size_t>(w.length() + 1));
    trace.push_back(pos);
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

}  // namespace detail

// Count of whole unit squares strictly right of the n-th strand in the
// (n-1) x length grid: a row with the strand moving p -> p' contributes
// n - max(p, p'), the square cut by the diagonal being excluded.
inline long long area_right(const Word& w) {
    int n = w.strand_count();
    auto trace = detail::strand_trace(w, n);
    long long area = 0;
    for (std::size_t r = 0; r + 1 < trace.size(); ++r)
        area += n - std::max(trace[r], trace[r + 1]);
    return area;
}

// Whole unit squares between the strands starting at positions i and i+1,
// below the top line and above their crossing.
inline long long area_between(const Word& w, int i) {
    int n = w.strand_count();
    if (i < 1 || i >= n) throw Error("area_between: strand index out of range");
    auto left = detail::strand_trace(w, i);
    auto right = detail::strand_trace(w, i + 1);
    long long area = 0;
    for (std::size_t r = 0; r + 1 < left.size(); ++r) {
        if (left[r] > right[r]) return area;  // crossed before this row
        long long gap = std::min(right[r], right[r + 1]) - std::max(left[r], left[r + 1]);
        if (gap > 0) area += gap;
    }
    if (left.back() < right.back()) throw StrandsDoNotCross("strands " + std::to_string(i) + " and " +
                                                            std::to_string(i + 1) + " do not cross");
    return area;
}

struct PullResult {
    Derivation derivation;  // from the input word to prefix . s_{n,k}
    Word prefix;            // an (n-1)-expression, carried with strand count n-1
    DescendingRun run;      // the final descending run s_{n,k}
};

// Rewrites a reduced word into the form v . s_{n,k} with v not using the last
// strand, by the area-decreasing moves: each emitted step lowers area_right by
// exactly 1 (commutation) or 2 (braid move).
inline PullResult pull_last_strand(const Word& w) {
    if (!is_reduced(w)) throw NotReduced("pull_last_strand requires a reduced word");
    int n = w.strand_count();
    PullResult result;
    result.derivation.start = w;
    Word cur = w;
    long long guard = area_right(w) + 1;
    while (true) {
        const auto& letters = cur.letters();
        int len = cur.length();
        // the block s_{n,i} starts at the first letter n-1
        int t = 0;
        while (t < len && letters[static_cast<std::size_t>(t)] != n - 1) ++t;
        if (t == len) {
            // no crossing involves the last strand
            result.prefix = Word(std::max(n - 1, 1), letters);
            result.run = DescendingRun(n, n);
            return result;
        }
        int e = t;
        int i = n - 1;
        while (e + 1 < len && letters[static_cast<std::size_t>(e + 1)] == i - 1) {
            ++e;
            --i;
        }
        if (e == len - 1) {
            std::vector<int> head(letters.begin(), letters.begin() + t);
            result.prefix = Word(std::max(n - 1, 1), std::move(head));
            result.run = DescendingRun(n, i);
            return result;
        }
        int j = letters[static_cast<std::size_t>(e + 1)];
        Step step;
        if (j == i) throw NotReduced("last strand crosses a strand twice");
        if (j == i + 1) {
            // v s_{n,i+2} (s_{i+1} s_i s_{i+1}) w  ->  v s_{n,i+2} (s_i s_{i+1} s_i) w
            step = Step{e - 1, RelationKind::type_i(i + 1, i)};
        } else {
            // v s_{n,i+1} (s_i s_j) w  ->  v s_{n,i+1} (s_j s_i) w
            step = Step{e, RelationKind::type_ii(i, j)};
        }
        cur = apply_relation(cur, step.pos, step.kind);
        result.derivation.steps.push_back(step);
        if (--guard < 0) throw Error("pull_last_strand failed to make progress");
    }
}

// Derivation from a reduced word to its normal form, of length at most
// n(n-1) length(w) / 2, by pulling strands n, n-1, ... in turn.
inline Derivation derive_to_nf(const Word& w) {
    if (!is_reduced(w)) throw NotReduced("derive_to_nf requires a reduced word");
    Derivation d;
    d.start = w;
    Word prefix = w;
    for (int m = w.strand_count(); m >= 2; --m) {
        PullResult pulled = pull_last_strand(prefix.with_strand_count(m));
        // steps act on the prefix, whose letters sit at the front of the word
        d.steps.insert(d.steps.end(), pulled.derivation.steps.begin(), pulled.derivation.steps.end());
        prefix = pulled.prefix;
    }
    return d;
}

// Derivation from u to v through the common normal form; length at most
// n(n-1) length(u).
inline Derivation derive(const Word& u, const Word& v) {
    if (u.strand_count() != v.strand_count())
        throw StrandCountMismatch("derive: strand counts differ");
    if (!is_reduced(u) || !is_reduced(v)) throw NotReduced("derive requires reduced words");
    if (eval(u) != eval(v)) throw NotEquivalent("derive requires equivalent words");
    return concat(derive_to_nf(u), reversed(derive_to_nf(v)));
}

}  // namespace permexpr
