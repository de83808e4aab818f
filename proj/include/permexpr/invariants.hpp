#pragma once

#include <array>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "word.hpp"

namespace permexpr {

// The name of a crossing: the unordered pair of initial positions of the two
// strands that cross there. Stored normalized with p < q.
struct Name2 {
    int p = 1;
    int q = 2;
    Name2() = default;
    Name2(int a, int b) : p(a < b ? a : b), q(a < b ? b : a) {
        if (a == b) throw Error("name requires two distinct strands");
    }
    bool contains(int x) const { return p == x || q == x; }
    bool disjoint(const Name2& o) const {
        return !contains(o.p) && !contains(o.q);
    }
    std::string str() const { return "{" + std::to_string(p) + "," + std::to_string(q) + "}"; }
    friend auto operator<=>(const Name2&, const Name2&) = default;
};

// Sorted triple of strands, the name of a type I tile.
struct Name3 {
    std::array<int, 3> v{1, 2, 3};
    Name3() = default;
    Name3(int a, int b, int c) : v{a, b, c} {
        std::sort(v.begin(), v.end());
        if (v[0] == v[1] || v[1] == v[2]) throw Error("name requires three distinct strands");
    }
    std::string str() const {
        return "{" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + "}";
    }
    friend auto operator<=>(const Name3&, const Name3&) = default;
};

// Unordered pair of disjoint names, the name of a type II tile.
struct Name22 {
    Name2 a;
    Name2 b;
    Name22() : a(1, 2), b(3, 4) {}
    Name22(Name2 x, Name2 y) {
        if (!x.disjoint(y)) throw Error("pair of pairs must be disjoint");
        if (y < x) std::swap(x, y);
        a = x;
        b = y;
    }
    std::string str() const { return "{" + a.str() + "," + b.str() + "}"; }
    friend auto operator<=>(const Name22&, const Name22&) = default;
};

// S(u): the k-th entry is the name of the k-th crossing of u.
struct NameSequence {
    int n = 1;
    std::vector<Name2> names;
    friend bool operator==(const NameSequence&, const NameSequence&) = default;
};

inline NameSequence name_sequence(const Word& w) {
    if (!is_reduced(w)) throw NotReduced("name_sequence requires a reduced word");
    int n = w.strand_count();
    std::vector<int> arr(static_cast<std::size_t>(n));
    std::iota(arr.begin(), arr.end(), 1);
    NameSequence s;
    s.n = n;
    s.names.reserve(static_cast<std::size_t>(w.length()));
    for (int x : w.letters()) {
        auto& lo = arr[static_cast<std::size_t>(x - 1)];
        auto& hi = arr[static_cast<std::size_t>(x)];
        s.names.emplace_back(lo, hi);
        std::swap(lo, hi);
    }
    return s;
}

namespace detail {

// Position of each name in the sequence, -1 when absent. Also enforces that
// the two sequences are permuted images of one another with distinct entries.
class NamePositions {
public:
    explicit NamePositions(const NameSequence& s) : n_(s.n), pos_(static_cast<std::size_t>((s.n + 1) * (s.n + 1)), -1) {
        for (std::size_t k = 0; k < s.names.size(); ++k) {
            int& slot = at(s.names[k]);
            if (slot != -1) throw IncomparableSequences("name sequence has repeated entries");
            slot = static_cast<int>(k);
        }
    }
    int operator()(const Name2& m) const { return pos_[index(m)]; }
    bool present(const Name2& m) const { return pos_[index(m)] >= 0; }

private:
    int& at(const Name2& m) { return pos_[index(m)]; }
    std::size_t index(const Name2& m) const { return static_cast<std::size_t>(m.p * (n_ + 1) + m.q); }
    int n_;
    std::vector<int> pos_;
};

inline void ensure_comparable(const NameSequence& s, const NameSequence& t) {
    if (s.n != t.n || s.names.size() != t.names.size())
        throw IncomparableSequences("name sequences have different shapes");
    std::vector<Name2> a = s.names, b = t.names;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw IncomparableSequences("name sequences are not permuted images of one another");
}

}  // namespace detail

// Number of triples {p,q,r} whose three derived pairs appear in a different
// relative order in s and t. Pairs missing from both sequences are skipped.
inline long long i3(const NameSequence& s, const NameSequence& t) {
    detail::ensure_comparable(s, t);
    detail::NamePositions ps(s), pt(t);
    long long count = 0;
    int n = s.n;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            for (int r = q + 1; r <= n; ++r) {
                Name2 pairs[3] = {Name2(p, q), Name2(p, r), Name2(q, r)};
                // relative order of the present pairs, as index sequences
                std::array<int, 3> order_s{}, order_t{};
                int m = 0;
                for (int k = 0; k < 3; ++k)
                    if (ps.present(pairs[k])) {
                        order_s[m] = k;
                        order_t[m] = k;
                        ++m;
                    }
                if (m < 2) continue;
                auto by_pos = [&](const detail::NamePositions& np) {
                    return [&](int x, int y) { return np(pairs[x]) < np(pairs[y]); };
                };
                std::sort(order_s.begin(), order_s.begin() + m, by_pos(ps));
                std::sort(order_t.begin(), order_t.begin() + m, by_pos(pt));
                if (!std::equal(order_s.begin(), order_s.begin() + m, order_t.begin())) ++count;
            }
    return count;
}

// Number of disjoint pairs of pairs whose relative order differs in s and t.
inline long long i22(const NameSequence& s, const NameSequence& t) {
    detail::ensure_comparable(s, t);
    detail::NamePositions ps(s), pt(t);
    long long count = 0;
    int n = s.n;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            for (int r = q + 1; r <= n; ++r)
                for (int w = r + 1; w <= n; ++w) {
                    // the three pairings of {p,q,r,w} into disjoint pairs
                    Name2 pairings[3][2] = {
                        {Name2(p, q), Name2(r, w)},
                        {Name2(p, r), Name2(q, w)},
                        {Name2(p, w), Name2(q, r)},
                    };
                    for (auto& pairing : pairings) {
                        if (!ps.present(pairing[0]) || !ps.present(pairing[1])) continue;
                        bool before_s = ps(pairing[0]) < ps(pairing[1]);
                        bool before_t = pt(pairing[0]) < pt(pairing[1]);
                        if (before_s != before_t) ++count;
                    }
                }
    return count;
}

// Total number of unordered pairs of distinct names whose order differs.
inline long long inv_count(const NameSequence& s, const NameSequence& t) {
    detail::ensure_comparable(s, t);
    detail::NamePositions pt(t);
    long long count = 0;
    for (std::size_t k = 0; k < s.names.size(); ++k)
        for (std::size_t l = k + 1; l < s.names.size(); ++l)
            if (pt(s.names[k]) > pt(s.names[l])) ++count;
    return count;
}

struct LowerBound {
    long long total = 0;
    long long type_i = 0;   // obstruction count forcing type I relations
    long long type_ii = 0;  // obstruction count forcing type II relations
};

// dist(u,v) >= i3 + i22, with the split bounding each relation type.
inline LowerBound lower_bound(const Word& u, const Word& v) {
    if (u.strand_count() != v.strand_count())
        throw StrandCountMismatch("lower_bound: strand counts differ");
    NameSequence su = name_sequence(u), sv = name_sequence(v);
    if (eval(u) != eval(v)) throw NotEquivalent("lower_bound requires equivalent words");
    LowerBound b;
    b.type_i = i3(su, sv);
    b.type_ii = i22(su, sv);
    b.total = b.type_i + b.type_ii;
    return b;
}

}  // namespace permexpr
