#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace permexpr {

// Letters are generator indices: letter i stands for the transposition of the
// strands at positions i and i+1, legal range 1..n-1 for strand count n.
// Positions, strands and letter indices are 1-based throughout the public API.

namespace detail {

inline std::vector<std::string_view> split_dots(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t dot = text.find('.', start);
        if (dot == std::string_view::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, dot - start));
        start = dot + 1;
    }
    return parts;
}

inline int parse_int(std::string_view token) {
    if (token.empty()) throw Error("empty token in word");
    bool negative = token.front() == '-';
    std::size_t k = negative ? 1 : 0;
    if (k == token.size()) throw Error("stray '-' in word");
    long value = 0;
    for (; k < token.size(); ++k) {
        char c = token[k];
        if (c < '0' || c > '9') throw Error("invalid character in word: '" + std::string(token) + "'");
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw Error("letter index out of range");
    }
    return negative ? -static_cast<int>(value) : static_cast<int>(value);
}

}  // namespace detail

class Word {
public:
    Word() = default;
    Word(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
        if (n_ < 1) throw Error("strand count must be at least 1");
        for (int x : letters_)
            if (x < 1 || x >= n_)
                throw Error("letter " + std::to_string(x) + " out of range for n=" + std::to_string(n_));
    }

    // Dot-separated indices, e.g. "1.2.1"; the empty word is spelled "e".
    static Word parse(int n, std::string_view text) {
        if (text == "e") return Word(n, {});
        std::vector<int> letters;
        for (auto tok : detail::split_dots(text)) letters.push_back(detail::parse_int(tok));
        return Word(n, std::move(letters));
    }

    int strand_count() const { return n_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    const std::vector<int>& letters() const { return letters_; }
    int letter(int k) const { return letters_[static_cast<std::size_t>(k)]; }

    Word with_strand_count(int m) const { return Word(m, letters_); }

    std::string str() const {
        if (letters_.empty()) return "e";
        std::string out;
        for (std::size_t k = 0; k < letters_.size(); ++k) {
            if (k) out += '.';
            out += std::to_string(letters_[k]);
        }
        return out;
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    int n_ = 1;
    std::vector<int> letters_;
};

inline Word concat(const Word& u, const Word& v) {
    if (u.strand_count() != v.strand_count())
        throw StrandCountMismatch("cannot concatenate words with n=" + std::to_string(u.strand_count()) +
                                  " and n=" + std::to_string(v.strand_count()));
    std::vector<int> letters = u.letters();
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return Word(u.strand_count(), std::move(letters));
}

// A signed letter: index with sign, the negative form being the formal inverse.
struct ExtLetter {
    int index = 1;
    bool positive = true;
    friend bool operator==(const ExtLetter&, const ExtLetter&) = default;
};

class ExtendedWord {
public:
    ExtendedWord() = default;
    ExtendedWord(int n, std::vector<ExtLetter> letters) : n_(n), letters_(std::move(letters)) {
        if (n_ < 1) throw Error("strand count must be at least 1");
        for (const auto& l : letters_)
            if (l.index < 1 || l.index >= n_)
                throw Error("letter " + std::to_string(l.index) + " out of range for n=" + std::to_string(n_));
    }

    // Same syntax as Word, with '-' prefixing inverse letters: "-1.-2.-1.2.1.2".
    static ExtendedWord parse(int n, std::string_view text) {
        if (text == "e") return ExtendedWord(n, {});
        std::vector<ExtLetter> letters;
        for (auto tok : detail::split_dots(text)) {
            int v = detail::parse_int(tok);
            letters.push_back(ExtLetter{v < 0 ? -v : v, v > 0});
        }
        return ExtendedWord(n, std::move(letters));
    }

    int strand_count() const { return n_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    const std::vector<ExtLetter>& letters() const { return letters_; }

    bool all_positive() const {
        return std::all_of(letters_.begin(), letters_.end(), [](const ExtLetter& l) { return l.positive; });
    }

    // Valid only when every letter is positive.
    Word positive_word() const {
        std::vector<int> out;
        out.reserve(letters_.size());
        for (const auto& l : letters_) {
            if (!l.positive) throw Error("extended word contains inverse letters");
            out.push_back(l.index);
        }
        return Word(n_, std::move(out));
    }

    std::string str() const {
        if (letters_.empty()) return "e";
        std::string out;
        for (std::size_t k = 0; k < letters_.size(); ++k) {
            if (k) out += '.';
            if (!letters_[k].positive) out += '-';
            out += std::to_string(letters_[k].index);
        }
        return out;
    }

    friend bool operator==(const ExtendedWord&, const ExtendedWord&) = default;

private:
    int n_ = 1;
    std::vector<ExtLetter> letters_;
};

// bar(u): reverse the order of the letters and flip every sign.
inline ExtendedWord bar(const ExtendedWord& u) {
    std::vector<ExtLetter> out(u.letters().rbegin(), u.letters().rend());
    for (auto& l : out) l.positive = !l.positive;
    return ExtendedWord(u.strand_count(), std::move(out));
}

inline ExtendedWord as_extended(const Word& u) {
    std::vector<ExtLetter> out;
    out.reserve(static_cast<std::size_t>(u.length()));
    for (int x : u.letters()) out.push_back(ExtLetter{x, true});
    return ExtendedWord(u.strand_count(), std::move(out));
}

inline ExtendedWord bar(const Word& u) { return bar(as_extended(u)); }

// bar(u) v, the starting word of a reversing run for the pair (u, v).
inline ExtendedWord bar_concat(const Word& u, const Word& v) {
    if (u.strand_count() != v.strand_count())
        throw StrandCountMismatch("bar_concat: strand counts differ");
    ExtendedWord b = bar(u);
    std::vector<ExtLetter> letters = b.letters();
    for (int x : v.letters()) letters.push_back(ExtLetter{x, true});
    return ExtendedWord(u.strand_count(), std::move(letters));
}

class Permutation {
public:
    Permutation() : images_{1} {}
    explicit Permutation(int n) : images_(static_cast<std::size_t>(n)) {
        if (n < 1) throw Error("strand count must be at least 1");
        std::iota(images_.begin(), images_.end(), 1);
    }
    static Permutation from_images(std::vector<int> images) {
        Permutation p;
        p.images_ = std::move(images);
        int n = static_cast<int>(p.images_.size());
        if (n < 1) throw Error("permutation must act on at least one point");
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : p.images_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
                throw Error("images do not form a bijection of {1..n}");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
        return p;
    }
    // The order-reversing permutation i -> n+1-i, the longest element.
    static Permutation flip(int n) {
        Permutation p(n);
        for (int i = 1; i <= n; ++i) p.images_[static_cast<std::size_t>(i - 1)] = n + 1 - i;
        return p;
    }

    int n() const { return static_cast<int>(images_.size()); }
    int of(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 1; i <= n(); ++i)
            if (of(i) != i) return false;
        return true;
    }

    // this first, then other (diagram stacking order).
    Permutation then(const Permutation& other) const {
        if (n() != other.n()) throw StrandCountMismatch("composing permutations of different sizes");
        Permutation r(n());
        for (int i = 1; i <= n(); ++i) r.images_[static_cast<std::size_t>(i - 1)] = other.of(of(i));
        return r;
    }

    Permutation inverse() const {
        Permutation r(n());
        for (int i = 1; i <= n(); ++i) r.images_[static_cast<std::size_t>(of(i) - 1)] = i;
        return r;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// The permutation of initial strand positions to final positions obtained by
// stacking the crossings of the word top to bottom.
inline Permutation eval(const Word& w) {
    int n = w.strand_count();
    std::vector<int> arr(static_cast<std::size_t>(n));  // arr[pos-1] = strand at pos
    std::iota(arr.begin(), arr.end(), 1);
    for (int x : w.letters()) std::swap(arr[static_cast<std::size_t>(x - 1)], arr[static_cast<std::size_t>(x)]);
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int pos = 1; pos <= n; ++pos) images[static_cast<std::size_t>(arr[static_cast<std::size_t>(pos - 1)] - 1)] = pos;
    return Permutation::from_images(std::move(images));
}

// All unordered pairs {p,q} with (q-p)(pi(q)-pi(p)) < 0, sorted lexicographically.
inline std::vector<std::pair<int, int>> inversion_set(const Permutation& pi) {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= pi.n(); ++p)
        for (int q = p + 1; q <= pi.n(); ++q)
            if (pi.of(p) > pi.of(q)) out.emplace_back(p, q);
    return out;
}

inline long long inversion_count(const Permutation& pi) {
    long long c = 0;
    for (int p = 1; p <= pi.n(); ++p)
        for (int q = p + 1; q <= pi.n(); ++q)
            if (pi.of(p) > pi.of(q)) ++c;
    return c;
}

// A word is reduced iff its length equals the inversion count of the
// permutation it represents, i.e. no strand pair crosses twice.
inline bool is_reduced(const Word& w) {
    return w.length() == inversion_count(eval(w));
}

inline bool equivalent(const Word& u, const Word& v) {
    if (u.strand_count() != v.strand_count())
        throw StrandCountMismatch("equivalent: strand counts differ");
    return eval(u) == eval(v);
}

enum class RelationType : std::uint8_t { I, II };

// Type I rewrites the pattern (i, j, i) into (j, i, j) with |i-j| = 1;
// type II rewrites (i, j) into (j, i) with |i-j| >= 2. Stored with the indices
// as they appear at application time, so a kind replays deterministically and
// inverts by swapping i and j.
struct RelationKind {
    RelationType type = RelationType::II;
    int i = 1;
    int j = 3;

    static RelationKind type_i(int i, int j) {
        if (i < 1 || j < 1 || (i - j != 1 && j - i != 1))
            throw Error("type I relation requires |i-j| = 1");
        return RelationKind{RelationType::I, i, j};
    }
    static RelationKind type_ii(int i, int j) {
        if (i < 1 || j < 1 || (i - j < 2 && j - i < 2))
            throw Error("type II relation requires |i-j| >= 2");
        return RelationKind{RelationType::II, i, j};
    }

    int span() const { return type == RelationType::I ? 3 : 2; }
    RelationKind inverted() const { return RelationKind{type, j, i}; }

    friend bool operator==(const RelationKind&, const RelationKind&) = default;
};

// Replace the relation pattern at the (0-based) position by its other side.
inline Word apply_relation(const Word& w, int pos, const RelationKind& kind) {
    int span = kind.span();
    if (pos < 0 || pos + span > w.length())
        throw PatternMismatch("relation pattern does not fit at position " + std::to_string(pos));
    std::vector<int> letters = w.letters();
    auto at = [&](int k) { return letters[static_cast<std::size_t>(pos + k)]; };
    if (kind.type == RelationType::I) {
        if (at(0) != kind.i || at(1) != kind.j || at(2) != kind.i)
            throw PatternMismatch("expected pattern (" + std::to_string(kind.i) + "," + std::to_string(kind.j) +
                                  "," + std::to_string(kind.i) + ") at position " + std::to_string(pos));
        letters[static_cast<std::size_t>(pos)] = kind.j;
        letters[static_cast<std::size_t>(pos + 1)] = kind.i;
        letters[static_cast<std::size_t>(pos + 2)] = kind.j;
    } else {
        if (at(0) != kind.i || at(1) != kind.j)
            throw PatternMismatch("expected pattern (" + std::to_string(kind.i) + "," + std::to_string(kind.j) +
                                  ") at position " + std::to_string(pos));
        std::swap(letters[static_cast<std::size_t>(pos)], letters[static_cast<std::size_t>(pos + 1)]);
    }
    return Word(w.strand_count(), std::move(letters));
}

// Every relation application available on w, as (position, kind) pairs in
//left-to-right scan order.
inline std::vector<std::pair<int, RelationKind>> applicable_relations(const Word& w) {
    std::vector<std::pair<int, RelationKind>> out;
    const auto& letters = w.letters();
    int len = w.length();
    for (int pos = 0; pos + 2 <= len; ++pos) {
        int a = letters[static_cast<std::size_t>(pos)];
        int b = letters[static_cast<std::size_t>(pos + 1)];
        int d = a > b ? a - b : b - a;
        if (d >= 2) out.emplace_back(pos, RelationKind::type_ii(a, b));
        if (d == 1 && pos + 3 <= len && letters[static_cast<std::size_t>(pos + 2)] == a)
            out.emplace_back(pos, RelationKind::type_i(a, b));
    }
    return out;
}

}  // namespace permexpr
