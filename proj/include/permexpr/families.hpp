#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grid_diagram.hpp"
#include "invariants.hpp"
#include "normal_form.hpp"
#include "reversing.hpp"
#include "word.hpp"

namespace permexpr {

// Building blocks of the step-count families:
//   a_{i,p} = s_{i+p-1} ... s_i        (descending)
//   b_{i,p} = s_i ... s_{i+p-1}        (ascending)
//   c_{i,p} = a_{i,p} a_{i+1,p}
//   d_{i,p} = b_{i+1,p} b_{i,p}
struct BlockWord {
    char kind = 'a';
    int i = 1;
    int p = 1;
    Word word;
};

inline Word block_a(int i, int p, int n) {
    std::vector<int> letters;
    for (int x = i + p - 1; x >= i; --x) letters.push_back(x);
    return Word(n, std::move(letters));
}

inline Word block_b(int i, int p, int n) {
    std::vector<int> letters;
    for (int x = i; x <= i + p - 1; ++x) letters.push_back(x);
    return Word(n, std::move(letters));
}

inline Word block_c(int i, int p, int n) { return concat(block_a(i, p, n), block_a(i + 1, p, n)); }

inline Word block_d(int i, int p, int n) { return concat(block_b(i + 1, p, n), block_b(i, p, n)); }

inline BlockWord block_word(char kind, int i, int p, int n) {
    if (i < 1 || p < 1) throw Error("block word requires i, p >= 1");
    switch (kind) {
        case 'a': return BlockWord{kind, i, p, block_a(i, p, n)};
        case 'b': return BlockWord{kind, i, p, block_b(i, p, n)};
        case 'c': return BlockWord{kind, i, p, block_c(i, p, n)};
        case 'd': return BlockWord{kind, i, p, block_d(i, p, n)};
        default: throw Error("block word kind must be one of a, b, c, d");
    }
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

// The two canonical expressions of the flip permutation:
//   u_n = s_{2,1} s_{3,1} ... s_{n,1}   and   v_n = s_{n,1} s_{n,2} ... s_{n,n-1}.
inline std::pair<Word, Word> flip_pair(int n) {
    if (n < 2) throw Error("flip_pair requires n >= 2");
    std::vector<int> u_letters, v_letters;
    for (int i = 2; i <= n; ++i)
        for (int x = i - 1; x >= 1; --x) u_letters.push_back(x);
    for (int k = 1; k <= n - 1; ++k)
        for (int x = n - 1; x >= k; --x) v_letters.push_back(x);
    return {Word(n, std::move(u_letters)), Word(n, std::move(v_letters))};
}

// Exact value of lower_bound(flip_pair(n)): C(n,3) + 3 C(n,4).
inline long long flip_lower_bound(int n) { return binomial(n, 3) + 3 * binomial(n, 4); }

// u_l = s_{2l} s_{2l-2} ... s_2 and v_l = s_1 s_3 ... s_{2l-1}, carried with
// strand count 2l+2 so every letter produced during reversing stays in range.
inline std::pair<Word, Word> quartic_pair(int l) {
    if (l < 1) throw Error("quartic_pair requires l >= 1");
    int n = 2 * l + 2;
    std::vector<int> u_letters, v_letters;
    for (int x = 2 * l; x >= 2; x -= 2) u_letters.push_back(x);
    for (int x = 1; x <= 2 * l - 1; x += 2) v_letters.push_back(x);
    return {Word(n, std::move(u_letters)), Word(n, std::move(v_letters))};
}

// Closed form claimed for the number of reversing steps of the quartic pair.
inline long long quartic_total(int l) {
    long long ll = l;
    return (8 * ll * ll * ll * ll - 23 * ll * ll + 9 * ll + 12) / 6;
}

// Validation report for one instance of the step-count relations. The engine
// run is authoritative; the closed form is checked against it and any
// divergence is reported, never corrected.
struct StepCountReport {
    std::string label;
    int p = 1;
    bool terminal_ok = false;
    std::string expected_terminal;
    std::string actual_terminal;
    long long formula = 0;          // claimed number of reversing steps
    long long steps_total = 0;      // engine, including digons
    long long steps_nontrivial = 0; // engine, type I + II only
    TileCounts counts;
    bool ok() const { return terminal_ok && steps_total == formula; }
    std::string summary() const {
        std::string s = label + ": formula=" + std::to_string(formula) +
                        " engine_total=" + std::to_string(steps_total) +
                        " nontrivial=" + std::to_string(steps_nontrivial) +
                        " (I=" + std::to_string(counts.type_i) + " II=" + std::to_string(counts.type_ii) +
                        " III=" + std::to_string(counts.type_iii) + ")" +
                        " terminal=" + (terminal_ok ? "ok" : "MISMATCH");
        if (!terminal_ok) s += " expected " + expected_terminal + " got " + actual_terminal;
        if (steps_total != formula) s += " COUNT MISMATCH";
        return s;
    }
};

// bar(b_{1,p}) a_{2,p} reverses to a_{1,p+1} bar(b_{1,p+1}) in p^2 + p - 1 steps.
inline StepCountReport validate_ba(int p) {
    if (p < 1) throw Error("validate_ba requires p >= 1");
    int n = p + 3;
    Word b = block_b(1, p, n), a = block_a(2, p, n);
    ReversingResult r = reverse(bar_concat(b, a));
    StepCountReport report;
    report.label = "ba p=" + std::to_string(p);
    report.p = p;
    report.formula = static_cast<long long>(p) * p + p - 1;
    report.counts = r.counts;
    report.steps_total = r.counts.total();
    report.steps_nontrivial = r.counts.nontrivial();
    Word expected_v = block_a(1, p + 1, n), expected_u = block_b(1, p + 1, n);
    report.expected_terminal = expected_v.str() + " . bar(" + expected_u.str() + ")";
    report.actual_terminal = r.v_out.str() + " . bar(" + r.u_out.str() + ")";
    report.terminal_ok = r.v_out == expected_v && r.u_out == expected_u;
    return report;
}

// bar(d_{1,p}) c_{3,p} reverses to c_{1,p+2} bar(d_{1,p+2}) in 4p^2 + 8p - 3 steps.
inline StepCountReport validate_dc(int p) {
    if (p < 1) throw Error("validate_dc requires p >= 1");
    int n = p + 5;
    Word d = block_d(1, p, n), c = block_c(3, p, n);
    ReversingResult r = reverse(bar_concat(d, c));
    StepCountReport report;
    report.label = "dc p=" + std::to_string(p);
    report.p = p;
    report.formula = 4LL * p * p + 8LL * p - 3;
    report.counts = r.counts;
    report.steps_total = r.counts.total();
    report.steps_nontrivial = r.counts.nontrivial();
    Word expected_v = block_c(1, p + 2, n), expected_u = block_d(1, p + 2, n);
    report.expected_terminal = expected_v.str() + " . bar(" + expected_u.str() + ")";
    report.actual_terminal = r.v_out.str() + " . bar(" + r.u_out.str() + ")";
    report.terminal_ok = r.v_out == expected_v && r.u_out == expected_u;
    return report;
}

// Engine measurement of the quartic family against the closed form, with the
// phase breakdown of the construction: an opening run of commutations, one
// braid step per adjacent pair, then l(l-1)/2 chained dc-relations.
struct QuarticReport {
    int l = 1;
    long long formula = 0;
    long long engine_nontrivial = 0;  // reversing complexity
    long long engine_total = 0;
    TileCounts counts;
    long long opening_type_ii = 0;        // engine: type II steps before the first type I
    long long claimed_opening_type_ii = 0;  // l(l-2)/2, as stated
    long long dc_applications = 0;        // l(l-1)/2
    bool terminal_ok = false;
    bool digon_free_compacted = false;
    bool ok() const { return terminal_ok && engine_nontrivial == formula; }
    std::string summary() const {
        std::string s = "quartic l=" + std::to_string(l) + ": formula=" + std::to_string(formula) +
                        " compl=" + std::to_string(engine_nontrivial) +
                        " total=" + std::to_string(engine_total) +
                        " (I=" + std::to_string(counts.type_i) + " II=" + std::to_string(counts.type_ii) +
                        " III=" + std::to_string(counts.type_iii) + ")" +
                        " opening_II=" + std::to_string(opening_type_ii) +
                        " claimed_opening_II=" + std::to_string(claimed_opening_type_ii) +
                        " dc_applications=" + std::to_string(dc_applications) +
                        " terminal=" + (terminal_ok ? "ok" : "MISMATCH") +
                        " digon_free_compacted=" + (digon_free_compacted ? "yes" : "no");
        if (engine_nontrivial != formula) s += " COUNT MISMATCH";
        return s;
    }
};

inline QuarticReport validate_quartic(int l, long long step_budget = kDefaultStepBudget) {
    auto [u, v] = quartic_pair(l);
    ReverseOptions opt;
    opt.step_budget = step_budget;
    opt.log_steps = true;
    ReversingResult r = reverse(bar_concat(u, v), opt);

    QuarticReport report;
    report.l = l;
    report.formula = quartic_total(l);
    report.counts = r.counts;
    report.engine_nontrivial = r.counts.nontrivial();
    report.engine_total = r.counts.total();
    report.claimed_opening_type_ii = static_cast<long long>(l) * (l - 2) / 2;
    report.dc_applications = static_cast<long long>(l) * (l - 1) / 2;
    for (const auto& step : r.steps) {
        if (step.type != TileType::II) break;
        ++report.opening_type_ii;
    }

    // expected terminal boundary: v' = c_{1,1} c_{1,3} ... c_{1,2l-1} and
    // u' = d_{2l-1,1} d_{2l-3,3} ... d_{1,2l-1}
    int n = 2 * l + 2;
    Word expected_v(n, {}), expected_u(n, {});
    for (int k = 0; k < l; ++k) expected_v = concat(expected_v, block_c(1, 2 * k + 1, n));
    for (int k = 0; k < l; ++k) expected_u = concat(expected_u, block_d(2 * l - 1 - 2 * k, 2 * k + 1, n));
    report.terminal_ok = r.v_out == expected_v && r.u_out == expected_u;

    GridDiagram diagram = compact(reversing_diagram(bar_concat(u, v), step_budget));
    report.digon_free_compacted = remaining_digons(diagram) == 0;
    return report;
}

}  // namespace permexpr
