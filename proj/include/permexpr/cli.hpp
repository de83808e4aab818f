#pragma once

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "diagram_export.hpp"
#include "experiments.hpp"
#include "json_io.hpp"

namespace permexpr {

namespace cli_detail {

struct Output {
    std::ostream* stream;
    std::string path;  // empty = stdout
    void write(const std::string& payload) {
        if (path.empty()) {
            *stream << payload;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error("cannot open output file: " + path);
        file << payload;
    }
};

inline std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw Error("cannot open input file: " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

inline std::string render_diagram(const GridDiagram& g, const std::string& format) {
    if (format == "json") return to_json(g).dump(2) + "\n";
    if (format == "dot") return to_dot(g);
    if (format == "svg") return to_svg(g);
    if (format == "tikz") return to_tikz(g);
    throw Error("unknown format: " + format);
}

inline std::string certificate_text(const Certificate& c) {
    std::string s = c.optimal() ? "CertifiedOptimal" : "Inconclusive";
    if (!c.duplicates.empty()) {
        s += " duplicates:";
        for (const auto& d : c.duplicates) s += " " + step_name_str(d);
    }
    s += "\n";
    return s;
}

inline std::string counts_text(const TileCounts& c) {
    std::string s = std::to_string(c.nontrivial()) + " (I=" + std::to_string(c.type_i) +
                    " II=" + std::to_string(c.type_ii);
    if (c.i_prime || c.i_double_prime)
        s += " I'=" + std::to_string(c.i_prime) + " I''=" + std::to_string(c.i_double_prime);
    s += " III=" + std::to_string(c.type_iii) + ")";
    return s;
}

}  // namespace cli_detail

// Runs one CLI invocation. Exit status: 0 on success, 1 on domain errors
// (NotReduced, NotEquivalent, count mismatches), 2 on usage errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
    CLI::App app{"reduced expressions of permutations: rewriting, distance bounds, subword reversing"};
    app.require_subcommand(1);

    struct {
        int n = 0;
        int l = 0;
        std::string word1, word2, input, output, format = "text";
        bool json = false;
        long long budget = kDefaultStepBudget;
        std::size_t node_limit = kDefaultNodeLimit;
        int lmax = 5, pmax = 6, samples = 200;
        std::uint64_t seed = 1;
    } opt;

    auto add_n = [&](CLI::App* cmd) { cmd->add_option("--n", opt.n, "strand count")->required(); };
    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", opt.json, "emit JSON"); };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", opt.output, "write output to a file"); };

    CLI::App* nf_cmd = app.add_subcommand("nf", "normal form of a word");
    add_n(nf_cmd);
    add_json(nf_cmd);
    add_out(nf_cmd);
    nf_cmd->add_option("word", opt.word1, "word, e.g. 2.1.2")->required();

    CLI::App* equiv_cmd = app.add_subcommand("equiv", "do two words represent the same permutation");
    add_n(equiv_cmd);
    add_json(equiv_cmd);
    add_out(equiv_cmd);
    equiv_cmd->add_option("u", opt.word1)->required();
    equiv_cmd->add_option("v", opt.word2)->required();

    CLI::App* lower_cmd = app.add_subcommand("lower", "lower bound on the combinatorial distance");
    add_n(lower_cmd);
    add_json(lower_cmd);
    add_out(lower_cmd);
    lower_cmd->add_option("u", opt.word1)->required();
    lower_cmd->add_option("v", opt.word2)->required();

    CLI::App* dist_cmd = app.add_subcommand("dist", "distance bounds and exact distance by search");
    add_n(dist_cmd);
    add_json(dist_cmd);
    add_out(dist_cmd);
    dist_cmd->add_option("--node-limit", opt.node_limit, "search node limit");
    dist_cmd->add_option("u", opt.word1)->required();
    dist_cmd->add_option("v", opt.word2)->required();

    CLI::App* derive_cmd = app.add_subcommand("derive", "derivation between equivalent reduced words (JSON)");
    add_n(derive_cmd);
    add_out(derive_cmd);
    derive_cmd->add_option("u", opt.word1)->required();
    derive_cmd->add_option("v", opt.word2)->required();

    CLI::App* certify_cmd = app.add_subcommand("certify", "optimality certificate for a derivation JSON");
    add_json(certify_cmd);
    add_out(certify_cmd);
    certify_cmd->add_option("input", opt.input, "derivation file, - for stdin")->required();

    CLI::App* reverse_cmd = app.add_subcommand("reverse", "subword reversing of a word pair or extended word");
    add_n(reverse_cmd);
    add_json(reverse_cmd);
    add_out(reverse_cmd);
    reverse_cmd->add_option("--budget", opt.budget, "step budget");
    reverse_cmd->add_option("--format", opt.format, "text|json|dot|svg|tikz");
    reverse_cmd->add_option("w", opt.word1, "extended word, or first word of a pair")->required();
    reverse_cmd->add_option("v", opt.word2, "second word of a pair");

    CLI::App* compl_cmd = app.add_subcommand("compl", "reversing complexity of a word pair");
    add_n(compl_cmd);
    add_json(compl_cmd);
    add_out(compl_cmd);
    compl_cmd->add_option("--budget", opt.budget, "step budget");
    compl_cmd->add_option("u", opt.word1)->required();
    compl_cmd->add_option("v", opt.word2)->required();

    CLI::App* compact_cmd = app.add_subcommand("compact", "compacted reversing diagram and digon certificate");
    add_n(compact_cmd);
    add_json(compact_cmd);
    add_out(compact_cmd);
    compact_cmd->add_option("--budget", opt.budget, "step budget");
    compact_cmd->add_option("--format", opt.format, "text|json|dot|svg|tikz");
    compact_cmd->add_option("u", opt.word1)->required();
    compact_cmd->add_option("v", opt.word2)->required();

    CLI::App* export_cmd = app.add_subcommand("export", "convert a diagram JSON to dot, svg or tikz");
    add_out(export_cmd);
    export_cmd->add_option("--format", opt.format, "json|dot|svg|tikz")->required();
    export_cmd->add_option("--in", opt.input, "diagram file, - for stdin");

    CLI::App* family_cmd = app.add_subcommand("family", "generate a word family instance");
    CLI::App* family_flip = family_cmd->add_subcommand("flip", "the flip pair u_n, v_n");
    family_flip->add_option("--n", opt.n, "strand count")->required();
    add_json(family_flip);
    add_out(family_flip);
    CLI::App* family_quartic = family_cmd->add_subcommand("quartic", "the quartic pair u_l, v_l");
    family_quartic->add_option("--l", opt.l, "length parameter")->required();
    add_json(family_quartic);
    add_out(family_quartic);
    family_cmd->require_subcommand(1);

    CLI::App* exp_cmd = app.add_subcommand("experiment", "measurement runs, CSV to stdout");
    CLI::App* exp_quartic = exp_cmd->add_subcommand("quartic", "quartic family counts vs closed form");
    exp_quartic->add_option("--lmax", opt.lmax, "largest l");
    exp_quartic->add_option("--budget", opt.budget, "step budget");
    add_out(exp_quartic);
    CLI::App* exp_eq8 = exp_cmd->add_subcommand("eq8", "tally lower bound = distance over reduced pairs");
    exp_eq8->add_option("--n", opt.n, "strand count")->required();
    exp_eq8->add_option("--samples", opt.samples, "sampled pairs when not exhaustive");
    exp_eq8->add_option("--seed", opt.seed, "random seed");
    exp_eq8->add_option("--node-limit", opt.node_limit, "search node limit");
    add_out(exp_eq8);
    CLI::App* exp_lemma = exp_cmd->add_subcommand("lemma", "step-count relations vs closed forms");
    exp_lemma->add_option("--pmax", opt.pmax, "largest p");
    add_out(exp_lemma);
    CLI::App* exp_growth = exp_cmd->add_subcommand("growth", "max reversing complexity over random pairs");
    exp_growth->add_option("--lmax", opt.lmax, "largest length");
    exp_growth->add_option("--n", opt.n, "strand count, 0 = 2l");
    exp_growth->add_option("--samples", opt.samples, "pairs per row");
    exp_growth->add_option("--seed", opt.seed, "random seed");
    exp_growth->add_option("--budget", opt.budget, "step budget");
    add_out(exp_growth);
    CLI::App* exp_stab = exp_cmd->add_subcommand("stabilization", "N(n,l) across n for each l");
    exp_stab->add_option("--lmax", opt.lmax, "largest length");
    exp_stab->add_option("--samples", opt.samples, "pairs per cell when sampling");
    exp_stab->add_option("--seed", opt.seed, "random seed");
    add_out(exp_stab);
    exp_cmd->require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("permexpr");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    cli_detail::Output sink{&out, opt.output};
    auto parse_word = [&](const std::string& text) {
        try {
            return Word::parse(opt.n, text);
        } catch (const Error& e) {
            throw CLI::ValidationError("word", e.what());
        }
    };

    try {
        if (*nf_cmd) {
            Word w = parse_word(opt.word1);
            Word result = nf(w);
            sink.write(opt.json ? json{{"n", opt.n}, {"word", w.str()}, {"nf", result.str()}}.dump() + "\n"
                                : result.str() + "\n");
        } else if (*equiv_cmd) {
            bool eq = equivalent(parse_word(opt.word1), parse_word(opt.word2));
            sink.write(opt.json ? json{{"equivalent", eq}}.dump() + "\n" : std::string(eq ? "true" : "false") + "\n");
        } else if (*lower_cmd) {
            Word u = parse_word(opt.word1), v = parse_word(opt.word2);
            LowerBound b = lower_bound(u, v);
            long long inv = inv_count(name_sequence(u), name_sequence(v));
            sink.write(opt.json ? json{{"lower", b.total}, {"i3", b.type_i}, {"i22", b.type_ii}, {"inv", inv}}.dump() + "\n"
                                : std::to_string(b.total) + " (I3=" + std::to_string(b.type_i) +
                                      " I22=" + std::to_string(b.type_ii) + ")\n");
        } else if (*dist_cmd) {
            Word u = parse_word(opt.word1), v = parse_word(opt.word2);
            LowerBound b = lower_bound(u, v);
            long long bfs = dist_bfs(u, v, opt.node_limit);
            long long budget = static_cast<long long>(opt.n) * (opt.n - 1) * u.length() / 2;
            Derivation d = derive(u, v);
            long long emitted = static_cast<long long>(d.steps.size());
            sink.write(opt.json
                           ? json{{"lower", b.total}, {"bfs", bfs}, {"upper", budget}, {"emitted", emitted}}.dump() + "\n"
                           : "lower=" + std::to_string(b.total) + " bfs=" + std::to_string(bfs) + " upper≤" +
                                 std::to_string(budget) + " emitted=" + std::to_string(emitted) + "\n");
        } else if (*derive_cmd) {
            sink.write(to_json(derive(parse_word(opt.word1), parse_word(opt.word2))).dump(2) + "\n");
        } else if (*certify_cmd) {
            json payload = json::parse(cli_detail::read_input(opt.input, in));
            Certificate c = certify(derivation_from_json(payload));
            sink.write(opt.json ? to_json(c).dump(2) + "\n" : cli_detail::certificate_text(c));
        } else if (*reverse_cmd) {
            ExtendedWord w = opt.word2.empty()
                                 ? ExtendedWord::parse(opt.n, opt.word1)
                                 : bar_concat(parse_word(opt.word1), parse_word(opt.word2));
            if (opt.format != "text") {
                sink.write(cli_detail::render_diagram(reversing_diagram(w, opt.budget), opt.format));
            } else {
                ReverseOptions options;
                options.step_budget = opt.budget;
                ReversingResult r = reverse(w, options);
                if (opt.json)
                    sink.write(json{{"terminal", r.terminal.str()},
                                    {"v_out", r.v_out.str()},
                                    {"u_out", r.u_out.str()},
                                    {"counts", to_json(r.counts)}}
                                   .dump() +
                               "\n");
                else
                    sink.write("terminal: " + r.terminal.str() + "\nv' = " + r.v_out.str() +
                               "\nu' = " + r.u_out.str() + "\ntiles: " + cli_detail::counts_text(r.counts) + "\n");
            }
        } else if (*compl_cmd) {
            ReverseOptions options;
            options.step_budget = opt.budget;
            ReversingResult r = reverse(bar_concat(parse_word(opt.word1), parse_word(opt.word2)), options);
            sink.write(opt.json ? json{{"compl", r.counts.nontrivial()}, {"counts", to_json(r.counts)}}.dump() + "\n"
                                : cli_detail::counts_text(r.counts) + "\n");
        } else if (*compact_cmd) {
            GridDiagram g = compact(reversing_diagram(parse_word(opt.word1), parse_word(opt.word2), opt.budget));
            if (opt.format != "text") {
                sink.write(cli_detail::render_diagram(g, opt.format));
            } else {
                std::string verdict;
                try {
                    verdict = cli_detail::certificate_text(certify_digon_free(g));
                } catch (const NotReduced&) {
                    verdict = "not applicable (boundary words not reduced)\n";
                }
                std::string text = "tiles: " + cli_detail::counts_text(g.counts) + "\ndigons remaining: " +
                                   std::to_string(remaining_digons(g)) + "\nverdict: " + verdict;
                if (opt.json) {
                    json j{{"counts", to_json(g.counts)}, {"digons_remaining", remaining_digons(g)}};
                    try {
                        j["certificate"] = to_json(certify_digon_free(g));
                    } catch (const NotReduced&) {
                        j["certificate"] = nullptr;
                    }
                    sink.write(j.dump(2) + "\n");
                } else {
                    sink.write(text);
                }
            }
        } else if (*export_cmd) {
            if (opt.format == "text") throw CLI::ValidationError("--format", "expected json|dot|svg|tikz");
            GridDiagram g = diagram_from_json(json::parse(cli_detail::read_input(opt.input, in)));
            sink.write(cli_detail::render_diagram(g, opt.format));
        } else if (*family_cmd) {
            Word u(1, {}), v(1, {});
            int n = 0;
            if (*family_flip) {
                auto pair = flip_pair(opt.n);
                u = pair.first;
                v = pair.second;
                n = opt.n;
            } else {
                auto pair = quartic_pair(opt.l);
                u = pair.first;
                v = pair.second;
                n = 2 * opt.l + 2;
            }
            sink.write(opt.json ? json{{"n", n}, {"u", u.str()}, {"v", v.str()}}.dump() + "\n"
                                : "n=" + std::to_string(n) + "\nu=" + u.str() + "\nv=" + v.str() + "\n");
        } else if (*exp_cmd) {
            std::ostringstream csv;
            int failed = 0;
            if (*exp_quartic) {
                csv << "l,engine_count,formula_value,typeI,typeII,typeIII,digon_free\n";
                for (const auto& row : experiment_quartic(opt.lmax, opt.budget)) {
                    csv << row.l << "," << row.engine_count << "," << row.formula_value << "," << row.counts.type_i
                        << "," << row.counts.type_ii << "," << row.counts.type_iii << ","
                        << (row.digon_free ? "yes" : "no") << "\n";
                }
            } else if (*exp_eq8) {
                Eq8Report r = experiment_eq8(opt.n, opt.samples, opt.seed, opt.node_limit);
                csv << "n=" << r.n << " mode=" << (r.exhaustive ? "exhaustive" : "sampled") << " pairs=" << r.pairs
                    << " equal=" << r.equal << " counterexamples=" << r.counterexamples << " skipped=" << r.skipped
                    << "\n";
                for (const auto& e : r.examples) csv << e << "\n";
            } else if (*exp_lemma) {
                csv << "kind,p,formula,engine_total,engine_nontrivial,typeI,typeII,typeIII,terminal_ok\n";
                for (int p = 1; p <= opt.pmax; ++p) {
                    for (const StepCountReport& r : {validate_ba(p), validate_dc(p)}) {
                        csv << (r.label[0] == 'b' ? "ba" : "dc") << "," << p << "," << r.formula << ","
                            << r.steps_total << "," << r.steps_nontrivial << "," << r.counts.type_i << ","
                            << r.counts.type_ii << "," << r.counts.type_iii << ","
                            << (r.terminal_ok ? "yes" : "no") << "\n";
                        if (!r.ok()) ++failed;
                    }
                }
            } else if (*exp_growth) {
                csv << "n,l,samples,max_compl,n2l\n";
                for (const auto& row : experiment_growth(opt.lmax, opt.n, opt.samples, opt.seed, opt.budget))
                    csv << row.n << "," << row.l << "," << row.samples << "," << row.max_compl << ","
                        << row.bound_n2l << "\n";
            } else if (*exp_stab) {
                csv << "l,n,pairs,exhaustive,max_compl\n";
                for (const auto& row : experiment_stabilization(opt.lmax, 200000, opt.samples, opt.seed))
                    csv << row.l << "," << row.n << "," << row.pairs << "," << (row.exhaustive ? "yes" : "no") << ","
                        << row.max_compl << "\n";
            }
            sink.write(csv.str());
            if (failed) {
                err << "error: " << failed << " closed-form mismatches reported\n";
                return 1;
            }
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace permexpr
