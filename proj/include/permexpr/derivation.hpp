#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "invariants.hpp"
#include "word.hpp"

namespace permexpr {

struct Step {
    int pos = 0;  // 0-based letter position of the pattern
    RelationKind kind;
    friend bool operator==(const Step&, const Step&) = default;
};

// A word together with an ordered list of braid-relation applications; the
// algebraic form of a van Kampen diagram.
struct Derivation {
    Word start;
    std::vector<Step> steps;
    friend bool operator==(const Derivation&, const Derivation&) = default;
};

// All intermediate words, starting with d.start; throws ReplayMismatch with
// the index of the first step that fails to apply.
inline std::vector<Word> replay_trace(const Derivation& d) {
    std::vector<Word> trace;
    trace.reserve(d.steps.size() + 1);
    trace.push_back(d.start);
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
        try {
            trace.push_back(apply_relation(trace.back(), d.steps[k].pos, d.steps[k].kind));
        } catch (const PatternMismatch& e) {
            throw ReplayMismatch(k, "step " + std::to_string(k) + ": " + e.what());
        }
    }
    return trace;
}

inline Word replay(const Derivation& d) {
    Word w = d.start;
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
        try {
            w = apply_relation(w, d.steps[k].pos, d.steps[k].kind);
        } catch (const PatternMismatch& e) {
            throw ReplayMismatch(k, "step " + std::to_string(k) + ": " + e.what());
        }
    }
    return w;
}

// The same derivation walked backwards, from replay(d) to d.start.
inline Derivation reversed(const Derivation& d) {
    Derivation r;
    r.start = replay(d);
    r.steps.reserve(d.steps.size());
    for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it)
        r.steps.push_back(Step{it->pos, it->kind.inverted()});
    return r;
}

inline Derivation concat(const Derivation& a, const Derivation& b) {
    if (!(replay(a) == b.start)) throw Error("derivations do not chain");
    Derivation r = a;
    r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
    return r;
}

// A type I step is named by the initial positions of the three strands it
// moves; a type II step by the disjoint pair of crossing names it swaps.
using StepName = std::variant<Name3, Name22>;

inline std::string step_name_str(const StepName& s) {
    return std::holds_alternative<Name3>(s) ? std::get<Name3>(s).str() : std::get<Name22>(s).str();
}

inline std::vector<StepName> step_names(const Derivation& d) {
    if (!is_reduced(d.start)) throw NotReduced("step_names requires a reduced start word");
    int n = d.start.strand_count();
    std::vector<StepName> names;
    names.reserve(d.steps.size());
    Word w = d.start;
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
        const Step& st = d.steps[k];
        if (st.pos < 0 || st.pos + st.kind.span() > w.length())
            throw ReplayMismatch(k, "step " + std::to_string(k) + " out of range");
        // strand occupancy just before the pattern
        std::vector<int> arr(static_cast<std::size_t>(n));
        std::iota(arr.begin(), arr.end(), 1);
        for (int t = 0; t < st.pos; ++t) {
            int x = w.letter(t);
            std::swap(arr[static_cast<std::size_t>(x - 1)], arr[static_cast<std::size_t>(x)]);
        }
        auto strand = [&](int position) { return arr[static_cast<std::size_t>(position - 1)]; };
        if (st.kind.type == RelationType::I) {
            int m = std::min(st.kind.i, st.kind.j);
            names.emplace_back(Name3(strand(m), strand(m + 1), strand(m + 2)));
        } else {
            names.emplace_back(Name22(Name2(strand(st.kind.i), strand(st.kind.i + 1)),
                                      Name2(strand(st.kind.j), strand(st.kind.j + 1))));
        }
        try {
            w = apply_relation(w, st.pos, st.kind);
        } catch (const PatternMismatch& e) {
            throw ReplayMismatch(k, "step " + std::to_string(k) + ": " + e.what());
        }
    }
    return names;
}

struct Certificate {
    enum class Verdict { CertifiedOptimal, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    std::vector<StepName> witness;     // all step names, in derivation order
    std::vector<StepName> duplicates;  // the repeated names, when inconclusive
    bool optimal() const { return verdict == Verdict::CertifiedOptimal; }
};

// Pairwise distinct step names certify that the derivation realizes the
// combinatorial distance between its endpoints.
inline Certificate certify(const Derivation& d) {
    if (!is_reduced(d.start)) throw NotReduced("certify requires a reduced start word");
    Certificate c;
    c.witness = step_names(d);
    if (!is_reduced(replay(d))) throw NotReduced("certify requires a reduced end word");
    std::vector<StepName> sorted = c.witness;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
        if (sorted[k] == sorted[k + 1] && (c.duplicates.empty() || !(c.duplicates.back() == sorted[k])))
            c.duplicates.push_back(sorted[k]);
    c.verdict = c.duplicates.empty() ? Certificate::Verdict::CertifiedOptimal : Certificate::Verdict::Inconclusive;
    return c;
}

// Crossing counts of separatrix pairs: entry ({p,q},{p',q'}) counts the type I
// steps named by the union when it has three strands, and the type II steps
// named by the pair when disjoint. Absent entries are zero.
inline std::map<std::pair<Name2, Name2>, long long> crossing_matrix(const Derivation& d) {
    std::map<std::pair<Name2, Name2>, long long> m;
    auto key = [](Name2 a, Name2 b) {
        if (b < a) std::swap(a, b);
        return std::make_pair(a, b);
    };
    for (const StepName& s : step_names(d)) {
        if (std::holds_alternative<Name3>(s)) {
            const auto& t = std::get<Name3>(s).v;
            Name2 ab(t[0], t[1]), ac(t[0], t[2]), bc(t[1], t[2]);
            ++m[key(ab, ac)];
            ++m[key(ab, bc)];
            ++m[key(ac, bc)];
        } else {
            const auto& q = std::get<Name22>(s);
            ++m[key(q.a, q.b)];
        }
    }
    return m;
}

inline constexpr std::size_t kDefaultNodeLimit = 1'000'000;

namespace detail {

inline std::string encode(const Word& w) {
    std::string s;
    s.reserve(static_cast<std::size_t>(w.length()));
    for (int x : w.letters()) s.push_back(static_cast<char>(x));
    return s;
}

}  // namespace detail

// Exact combinatorial distance by breadth-first search over single relation
// applications. The reachable set is the set of words of eval(u).
inline long long dist_bfs(const Word& u, const Word& v, std::size_t node_limit = kDefaultNodeLimit) {
    if (u.strand_count() != v.strand_count())
        throw StrandCountMismatch("dist_bfs: strand counts differ");
    if (u.strand_count() > 120) throw Error("dist_bfs: strand count too large");
    if (eval(u) != eval(v)) throw NotEquivalent("dist_bfs requires equivalent words");
    if (u == v) return 0;
    std::string target = detail::encode(v);
    std::unordered_set<std::string> seen;
    std::deque<std::pair<Word, long long>> queue;
    seen.insert(detail::encode(u));
    queue.emplace_back(u, 0);
    while (!queue.empty()) {
        auto [w, depth] = std::move(queue.front());
        queue.pop_front();
        for (const auto& [pos, kind] : applicable_relations(w)) {
            Word next = apply_relation(w, pos, kind);
            std::string code = detail::encode(next);
            if (!seen.insert(code).second) continue;
            if (code == target) return depth + 1;
            if (seen.size() > node_limit) throw StateSpaceExceeded("dist_bfs exceeded node limit");
            queue.emplace_back(std::move(next), depth + 1);
        }
    }
    throw Error("dist_bfs: target unreachable");  // cannot happen for equivalent reduced words
}

}  // namespace permexpr
