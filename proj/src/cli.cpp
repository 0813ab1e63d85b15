#include "degseq/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <random>

#include "degseq/criteria.hpp"
#include "degseq/json_io.hpp"
#include "degseq/oracle.hpp"
#include "degseq/realize.hpp"
#include "degseq/seqcore.hpp"
#include "degseq/thresholds.hpp"

namespace degseq {

namespace {

using nlohmann::json;

i64 env_max_nodes(i64 fallback) {
    const char* raw = std::getenv("DEGREESEQ_MAX_NODES");
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const long long parsed = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed < 1)
        fail(Errc::domain_error, "DEGREESEQ_MAX_NODES must be a positive integer");
    return static_cast<i64>(parsed);
}

void print_check_text(const CheckReport& report, std::ostream& out) {
    out << "criterion: " << report.criterion << "\n";
    out << "verdict: " << report.verdict() << "\n";
    if (report.witness_index) {
        out << "witness_index: " << *report.witness_index << "\n";
        for (const auto& [k, s] : report.slack)
            if (k == *report.witness_index) {
                out << "witness_slack: " << s << "\n";
                break;
            }
    } else {
        out << "indices_examined: " << report.slack.size() << "\n";
    }
}

void print_check(const CheckReport& report, bool as_json, std::ostream& out) {
    if (as_json)
        out << to_json(report).dump() << "\n";
    else
        print_check_text(report, out);
}

// Maps a canonical-order realization back to the caller's input order.
BiadjacencyMatrix permute_square(const BiadjacencyMatrix& m, const std::vector<i64>& perm) {
    BiadjacencyMatrix out(m.rows(), m.cols());
    for (i64 r = 0; r < m.rows(); ++r)
        for (i64 c = 0; c < m.cols(); ++c)
            if (m.at(r, c))
                out.set(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(c)], true);
    return out;
}

LoopGraph permute_loop_graph(const LoopGraph& g, const std::vector<i64>& perm) {
    LoopGraph out;
    out.n = g.n;
    for (const auto& [u, v] : g.edges) {
        const i64 pu = perm[static_cast<std::size_t>(u)];
        const i64 pv = perm[static_cast<std::size_t>(v)];
        out.edges.emplace_back(std::min(pu, pv), std::max(pu, pv));
    }
    for (const i64 v : g.loops) out.loops.push_back(perm[static_cast<std::size_t>(v)]);
    std::sort(out.edges.begin(), out.edges.end());
    std::sort(out.loops.begin(), out.loops.end());
    return out;
}

struct BenchSample {
    i64 index = 0;
    i64 n = 0;
    i64 d1 = 0;
    i64 largest_strong = 0;
    FastCheck full;
    FastCheck strong;
    i64 full_us = 0;
    i64 strong_us = 0;
};

template <typename F>
i64 timed_us(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"degree-sequence toolkit: bipartite graphicality checks, sharp "
                 "thresholds, realizations, counterexamples, sweeps and benchmarks"};
    app.require_subcommand(1);

    bool as_json = false;
    bool allow_zeros = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_flag("--allow-zeros", allow_zeros, "strip zero entries from sequence inputs");

    // check
    auto* check_cmd = app.add_subcommand("check", "decide whether a sequence is bipartite graphic");
    std::string check_seq, check_pair;
    std::string check_engine = "full";
    check_cmd->add_option("seq", check_seq, "sequence, e.g. \"4^3,2\"")->required();
    auto* engine_opt = check_cmd->add_option("--engine", check_engine, "full | strong | gale-ryser")
                           ->check(CLI::IsMember({"full", "strong", "gale-ryser"}));
    check_cmd->add_option("--pair", check_pair, "second sequence; checks the pair with gale-ryser");

    // graphic
    auto* graphic_cmd = app.add_subcommand("graphic", "decide whether a sequence is graphic");
    std::string graphic_seq;
    graphic_cmd->add_option("seq", graphic_seq)->required();

    // realize
    auto* realize_cmd = app.add_subcommand("realize", "construct a bipartite realization");
    std::string realize_seq;
    std::string realize_method = "auto";
    realize_cmd->add_option("seq", realize_seq)->required();
    realize_cmd->add_option("--method", realize_method, "auto | gale-ryser | loops")
        ->check(CLI::IsMember({"auto", "gale-ryser", "loops"}));

    // threshold
    auto* threshold_cmd = app.add_subcommand("threshold", "evaluate a closed-form threshold predicate");
    std::string threshold_pred;
    i64 th_a = 0, th_b = 0, th_n = 0;
    std::string threshold_x;
    threshold_cmd->add_option("predicate", threshold_pred, "abk | abk-simple | sharp-bipartite | sharp-graphic")
        ->required()
        ->check(CLI::IsMember({"abk", "abk-simple", "sharp-bipartite", "sharp-graphic"}));
    threshold_cmd->add_option("a", th_a, "maximum element")->required();
    threshold_cmd->add_option("b", th_b, "minimum element")->required();
    threshold_cmd->add_option("n", th_n, "sequence length")->required();
    threshold_cmd->add_option("--x", threshold_x, "rational parameter P/Q (abk only)");

    // two-element
    auto* two_cmd = app.add_subcommand("two-element", "exact test for (a^s, b^(n-s))");
    i64 te_a = 0, te_b = 0, te_n = 0, te_s = 0;
    two_cmd->add_option("a", te_a)->required();
    two_cmd->add_option("b", te_b)->required();
    two_cmd->add_option("n", te_n)->required();
    two_cmd->add_option("s", te_s)->required();

    // counterexample
    auto* cex_cmd = app.add_subcommand("counterexample", "extremal non-realizable sequence for a triple");
    i64 cx_a = 0, cx_b = 0, cx_n = 0;
    cex_cmd->add_option("a", cx_a)->required();
    cex_cmd->add_option("b", cx_b)->required();
    cex_cmd->add_option("n", cx_n)->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "stream verdicts for every sequence up to a size");
    i64 sweep_max_n = 0;
    i64 sweep_max_value = 0;
    bool sweep_oracle = false;
    sweep_cmd->add_option("--max-n", sweep_max_n, "maximum sequence length")->required();
    sweep_cmd->add_option("--max-value", sweep_max_value, "maximum element (default: max-n)");
    sweep_cmd->add_flag("--oracle", sweep_oracle, "cross-check each verdict by exhaustive search");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "compare the full and strong-index engines");
    i64 bench_n = 0, bench_samples = 10, bench_seed = 0, bench_max_value = 0;
    bench_cmd->add_option("--n", bench_n, "sequence length")->required();
    bench_cmd->add_option("--samples", bench_samples, "number of random sequences");
    bench_cmd->add_option("--seed", bench_seed, "random seed");
    bench_cmd->add_option("--max-value", bench_max_value, "value range upper bound (default: n)");

    // Let the global flags (--json, --allow-zeros) appear on either side of
    // the subcommand.
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("degseq");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(check_cmd)) {
            const auto d = parse_sequence(check_seq, allow_zeros);
            CheckReport report;
            if (!check_pair.empty()) {
                if (engine_opt->count() > 0 && check_engine != "gale-ryser") {
                    err << "error: --pair requires the gale-ryser engine\n";
                    return 2;
                }
                report = gale_ryser_pair(d, parse_sequence(check_pair, allow_zeros));
            } else if (check_engine == "full") {
                report = check_full(d);
            } else if (check_engine == "strong") {
                report = check_strong(d);
            } else {
                report = gale_ryser_pair(d, d);
            }
            print_check(report, as_json, out);
            return report.accepted ? 0 : 1;
        }

        if (app.got_subcommand(graphic_cmd)) {
            const auto report = erdos_gallai(parse_sequence(graphic_seq, allow_zeros));
            print_check(report, as_json, out);
            return report.accepted ? 0 : 1;
        }

        if (app.got_subcommand(realize_cmd)) {
            const auto d = parse_sequence(realize_seq, allow_zeros);
            RealizeMethod method = RealizeMethod::automatic;
            if (realize_method == "gale-ryser") method = RealizeMethod::gale_ryser;
            if (realize_method == "loops") method = RealizeMethod::loops;
            Realization r = realize(d, method);

            // Present rows/columns (and vertices) in the caller's input order.
            const auto& perm = d.original_order();
            const BiadjacencyMatrix matrix = permute_square(r.matrix, perm);
            std::optional<LoopGraph> loop_graph;
            if (r.loop_graph) loop_graph = permute_loop_graph(*r.loop_graph, perm);

            if (as_json) {
                json j{{"method", r.method}, {"matrix", to_json(matrix)}};
                if (loop_graph) j["loop_graph"] = to_json(*loop_graph);
                if (r.s_used) j["s_used"] = *r.s_used;
                out << j.dump() << "\n";
            } else {
                err << "method: " << r.method << "\n";
                if (r.s_used) err << "loops_added: " << *r.s_used << "\n";
                out << matrix.to_text();
            }
            return 0;
        }

        if (app.got_subcommand(threshold_cmd)) {
            Predicate pred = Predicate::abk_simple;
            if (threshold_pred == "abk") pred = Predicate::abk;
            if (threshold_pred == "abk-simple") pred = Predicate::abk_simple;
            if (threshold_pred == "sharp-bipartite") pred = Predicate::sharp_bipartite;
            if (threshold_pred == "sharp-graphic") pred = Predicate::sharp_graphic;
            if (pred == Predicate::abk && threshold_x.empty()) {
                err << "error: threshold abk requires --x P/Q\n";
                return 2;
            }
            if (pred != Predicate::abk && !threshold_x.empty()) {
                err << "error: --x only applies to the abk predicate\n";
                return 2;
            }
            std::optional<Rational> x;
            if (!threshold_x.empty()) x = Rational::parse(threshold_x);
            const auto report = evaluate_threshold(pred, Triple(th_a, th_b, th_n), x);
            if (as_json) {
                out << to_json(report).dump() << "\n";
            } else {
                out << "predicate: " << predicate_name(report.predicate) << "\n";
                out << "triple: (" << report.triple.a << ", " << report.triple.b << ", "
                    << report.triple.n << ")\n";
                if (x) out << "x: " << x->str() << "\n";
                out << "holds: " << (report.holds ? "true" : "false") << "\n";
                out << "threshold: " << report.threshold << "\n";
                out << "lhs: " << report.lhs << "\n";
            }
            return report.holds ? 0 : 1;
        }

        if (app.got_subcommand(two_cmd)) {
            const bool holds = two_element_is_bipartite(te_a, te_b, te_n, te_s);
            const auto forms = two_element_forms(te_a, te_b, te_n, te_s);
            const i64 quadratic = te_s * te_s - (te_a + te_b) * te_s + te_n * te_b;
            if (as_json) {
                out << json{{"a", te_a},
                            {"b", te_b},
                            {"n", te_n},
                            {"s", te_s},
                            {"quadratic", quadratic},
                            {"holds", holds},
                            {"forms",
                             json{{"ineq1", json::array({forms.ineq1_lhs, forms.ineq1_rhs})},
                                  {"ineq2", json::array({forms.ineq2_lhs, forms.ineq2_rhs})},
                                  {"ineqf", json::array({forms.ineqf_lhs, forms.ineqf_rhs})}}}}
                           .dump()
                    << "\n";
            } else {
                auto line = [&](const char* name, i64 lhs, i64 rhs) {
                    out << name << ": " << lhs << " <= " << rhs
                        << (lhs <= rhs ? " ok" : " violated") << "\n";
                };
                out << "quadratic: " << quadratic << "\n";
                out << "holds: " << (holds ? "true" : "false") << "\n";
                line("ineq1", forms.ineq1_lhs, forms.ineq1_rhs);
                line("ineq2", forms.ineq2_lhs, forms.ineq2_rhs);
                line("ineqf", forms.ineqf_lhs, forms.ineqf_rhs);
            }
            return holds ? 0 : 1;
        }

        if (app.got_subcommand(cex_cmd)) {
            const auto seq = counterexample(Triple(cx_a, cx_b, cx_n));
            if (as_json)
                out << json{{"seq", seq.render()}}.dump() << "\n";
            else
                out << seq.render() << "\n";
            return 0;
        }

        if (app.got_subcommand(sweep_cmd)) {
            if (sweep_max_n < 1) {
                err << "error: --max-n must be positive\n";
                return 2;
            }
            OracleBudget budget;
            budget.max_nodes = env_max_nodes(budget.max_nodes);
            if (sweep_oracle && sweep_max_n > budget.max_n) {
                err << "error: --oracle supports --max-n up to " << budget.max_n << "\n";
                return 2;
            }
            const i64 max_value = sweep_max_value > 0 ? sweep_max_value : sweep_max_n;
            bool mismatch = false;
            for_each_canonical_sequence(sweep_max_n, max_value, [&](const std::vector<i64>& values) {
                const auto d = DegreeSequence::from_values(values);
                const bool verdict = check_full_fast(d).accepted;
                json line{{"seq", d.render()}, {"bipartite_graphic", verdict}};
                if (sweep_oracle) {
                    const bool ground = oracle_bipartite_pair(d, d, budget);
                    line["oracle"] = ground;
                    if (ground != verdict) {
                        mismatch = true;
                        err << "mismatch on " << d.render() << ": criterion says " << verdict
                            << ", oracle says " << ground << "\n";
                    }
                }
                out << line.dump() << "\n" << std::flush;
            });
            return mismatch ? 1 : 0;
        }

        if (app.got_subcommand(bench_cmd)) {
            if (bench_n < 1 || bench_n > kMaxLength) {
                err << "error: --n out of range\n";
                return 2;
            }
            if (bench_samples < 1) {
                err << "error: --samples must be positive\n";
                return 2;
            }
            const i64 max_value = bench_max_value > 0 ? bench_max_value : bench_n;
            if (max_value > kMaxValue) {
                err << "error: --max-value out of range\n";
                return 2;
            }
            std::mt19937_64 rng(static_cast<std::uint64_t>(bench_seed));
            bool all_agree = true;
            i64 max_full_us = 0, max_strong_us = 0;
            for (i64 sample = 0; sample < bench_samples; ++sample) {
                std::vector<i64> values(static_cast<std::size_t>(bench_n));
                for (auto& v : values)
                    v = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(max_value));
                const auto d = DegreeSequence::from_values(std::move(values));

                BenchSample row;
                row.index = sample;
                row.n = d.n();
                row.d1 = d.max_value();
                row.largest_strong = strong_profile(d).largest_strong;
                row.full_us = timed_us([&] { row.full = check_full_fast(d); });
                row.strong_us = timed_us([&] { row.strong = check_strong_fast(d); });

                all_agree = all_agree && row.full.accepted == row.strong.accepted;
                max_full_us = std::max(max_full_us, row.full_us);
                max_strong_us = std::max(max_strong_us, row.strong_us);

                if (as_json) {
                    out << json{{"sample", row.index},
                                {"n", row.n},
                                {"d1", row.d1},
                                {"K", row.largest_strong},
                                {"verdict", row.full.accepted ? "accepted" : "rejected"},
                                {"agree", row.full.accepted == row.strong.accepted},
                                {"full_inspected", row.full.inspected},
                                {"strong_inspected", row.strong.inspected},
                                {"full_us", row.full_us},
                                {"strong_us", row.strong_us}}
                               .dump()
                        << "\n";
                } else {
                    out << "sample " << row.index << ": n=" << row.n << " d1=" << row.d1
                        << " K=" << row.largest_strong
                        << " verdict=" << (row.full.accepted ? "accepted" : "rejected")
                        << " full_inspected=" << row.full.inspected
                        << " strong_inspected=" << row.strong.inspected
                        << " full_us=" << row.full_us << " strong_us=" << row.strong_us
                        << " agree=" << (row.full.accepted == row.strong.accepted ? "yes" : "NO")
                        << "\n";
                }
            }
            if (!as_json)
                out << "summary: samples=" << bench_samples
                    << " agree=" << (all_agree ? "all" : "MISMATCH")
                    << " max_full_us=" << max_full_us << " max_strong_us=" << max_strong_us << "\n";
            return all_agree ? 0 : 1;
        }

        err << "error: no subcommand selected\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
            case Errc::not_realizable:
            case Errc::not_applicable:
                return 1;
            default:
                return 2;
        }
    }
}

}  // namespace degseq
