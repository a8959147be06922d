// ccip: co-channel interference planning toolkit.
//
// Subcommands cover the pipeline end to end: validate a network document,
// color it into time slots, derive the per-slot power schedule, search the
// allowed-interference ratio, plan extra frequencies, generate random
// networks, and run the seeded benchmark harness.

#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "cci/coloring.hpp"
#include "cci/generator.hpp"
#include "cci/io.hpp"
#include "cci/metrics.hpp"
#include "cci/model.hpp"
#include "cci/planner.hpp"
#include "cci/power.hpp"
#include "cci/radio.hpp"
#include "cci/ratio_search.hpp"
#include "cci/threads.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_invalid = 2;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty())
        std::cout << text;
    else
        cci::save_text(output_path, text);
}

cci::Network load_validated(const std::string& path) {
    cci::Network net = cci::load_network(path);
    const auto violations = cci::validate(net);
    if (!violations.empty()) {
        std::string msg = "input network fails validation:";
        for (const auto& v : violations)
            msg += "\n  " + v.entity + " " + std::to_string(v.id) + ": " + v.rule;
        throw std::runtime_error(msg);
    }
    return net;
}

cci::Network load_single_frequency(const std::string& path) {
    cci::Network net = load_validated(path);
    if (!cci::is_single_frequency(net))
        throw std::runtime_error("this command needs a single-frequency network; "
                                 "split the input per frequency first");
    return net;
}

struct CommonOut {
    std::string output;
    std::string format = "json";
};

void add_output_flags(CLI::App* cmd, CommonOut& out, const std::string& default_format = "json") {
    out.format = default_format;
    cmd->add_option("--output", out.output, "write to this file instead of stdout");
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

} // namespace

int main(int argc, char** argv) {
    cci::apply_thread_env();

    CLI::App app{"co-channel interference planning toolkit"};
    app.require_subcommand(1);

    // --- validate ---------------------------------------------------------
    std::string val_input;
    CommonOut val_out;
    auto* val = app.add_subcommand("validate", "check a network document against the model invariants");
    val->add_option("--input", val_input, "network JSON")->required();
    add_output_flags(val, val_out);

    // --- color ------------------------------------------------------------
    std::string col_input;
    CommonOut col_out;
    auto* col = app.add_subcommand("color", "assign time slots via dependent edge coloring");
    col->add_option("--input", col_input, "network JSON")->required();
    add_output_flags(col, col_out);

    // --- schedule ---------------------------------------------------------
    std::string sch_input;
    double sch_ratio = 100.0;
    CommonOut sch_out;
    auto* sch = app.add_subcommand("schedule", "compute the per-slot transmit power table");
    sch->add_option("--input", sch_input, "network JSON")->required();
    sch->add_option("--ratio", sch_ratio, "allowed-interference ratio x")
        ->check(CLI::PositiveNumber);
    add_output_flags(sch, sch_out);

    // --- optimize-x -------------------------------------------------------
    std::string opt_input;
    cci::RatioSearchConfig opt_cfg;
    CommonOut opt_out;
    auto* opt = app.add_subcommand("optimize-x", "search the capacity-maximizing allowed-interference ratio");
    opt->add_option("--input", opt_input, "network JSON")->required();
    opt->add_option("--k", opt_cfg.k, "samples per refinement level");
    opt->add_option("--x0", opt_cfg.x0, "lower bracket end")->check(CLI::PositiveNumber);
    opt->add_option("--depth", opt_cfg.max_depth, "max refinement depth");
    opt->add_option("--rel-tol", opt_cfg.rel_tol, "relative x_m convergence tolerance");
    add_output_flags(opt, opt_out);

    // --- plan-freqs -------------------------------------------------------
    std::string plan_input;
    double plan_ratio = 100.0;
    double plan_threshold = 0.0;
    int plan_max = 8;
    CommonOut plan_out;
    auto* plan = app.add_subcommand("plan-freqs", "split the network across frequencies while profitable");
    plan->add_option("--input", plan_input, "network JSON")->required();
    plan->add_option("--ratio", plan_ratio, "allowed-interference ratio x")
        ->check(CLI::PositiveNumber);
    plan->add_option("--threshold", plan_threshold, "capacity profit required per added frequency (bit/s)");
    plan->add_option("--max-freqs", plan_max, "frequency budget");
    add_output_flags(plan, plan_out);

    // --- gen --------------------------------------------------------------
    cci::GenConfig gen_cfg;
    double gen_sir = 100.0;
    bool gen_no_reds = false;
    double gen_power_dbm = cci::watts_to_dbm(gen_cfg.radio.max_power_w);
    double gen_noise_dbm = cci::watts_to_dbm(gen_cfg.radio.noise_w);
    CommonOut gen_out;
    auto* gen = app.add_subcommand("gen", "generate a random network");
    gen->add_option("--seed", gen_cfg.seed, "RNG seed");
    gen->add_option("--nodes", gen_cfg.v, "node count")->required();
    gen->add_option("--links", gen_cfg.e, "link count")->required();
    gen->add_option("--degree", gen_cfg.d, "max node degree")->required();
    gen->add_option("--area", gen_cfg.area_m, "square side (m)")->check(CLI::PositiveNumber);
    gen->add_option("--frequency-hz", gen_cfg.radio.frequency_hz, "carrier frequency");
    gen->add_option("--bandwidth-hz", gen_cfg.radio.bandwidth_hz, "channel bandwidth");
    gen->add_option("--max-power-dbm", gen_power_dbm, "transmit power ceiling");
    gen->add_option("--noise-dbm", gen_noise_dbm, "receiver noise floor");
    gen->add_option("--tx-directivity", gen_cfg.radio.tx_directivity, "transmit directivity gain");
    gen->add_option("--rx-directivity", gen_cfg.radio.rx_directivity, "receive directivity gain");
    gen->add_option("--beamwidth", gen_cfg.radio.beamwidth_w, "reception pattern width w (rad)");
    gen->add_option("--sir-threshold", gen_sir, "SIR below which a red edge is derived");
    gen->add_flag("--no-reds", gen_no_reds, "skip interference-edge derivation");
    add_output_flags(gen, gen_out);

    // --- bench ------------------------------------------------------------
    cci::GenConfig bench_cfg{.v = 20, .e = 30, .d = 10};
    std::uint32_t bench_trials = 10;
    double bench_sir = 100.0;
    cci::RatioSearchConfig bench_search;
    CommonOut bench_out;
    auto* bench = app.add_subcommand("bench", "run the seeded experiment harness and report metrics");
    bench->add_option("--seed", bench_cfg.seed, "master seed");
    bench->add_option("--trials", bench_trials, "number of trials");
    bench->add_option("--nodes", bench_cfg.v, "node count per trial");
    bench->add_option("--links", bench_cfg.e, "link count per trial");
    bench->add_option("--degree", bench_cfg.d, "max node degree");
    bench->add_option("--area", bench_cfg.area_m, "square side (m)")->check(CLI::PositiveNumber);
    bench->add_option("--sir-threshold", bench_sir, "red-edge derivation threshold");
    bench->add_option("--k", bench_search.k, "ratio-search samples per level");
    bench->add_option("--depth", bench_search.max_depth, "ratio-search max depth");
    add_output_flags(bench, bench_out, "csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the error message
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*val) {
            const cci::Network net = cci::load_network(val_input);
            const auto violations = cci::validate(net);
            emit(val_out.format == "csv" ? cci::violations_to_csv(violations)
                                         : cci::violations_to_json(violations),
                 val_out.output);
            return violations.empty() ? exit_ok : exit_invalid;
        }

        if (*col) {
            const cci::Network net = load_single_frequency(col_input);
            const cci::QueueSchedule q = cci::dependent_edge_coloring(net);
            emit(col_out.format == "csv" ? cci::schedule_to_csv(net, q)
                                         : cci::schedule_to_json(net, q),
                 col_out.output);
            return exit_ok;
        }

        if (*sch) {
            const cci::Network net = load_single_frequency(sch_input);
            const cci::QueueSchedule q = cci::dependent_edge_coloring(net);
            const cci::InterferenceBudget budget = cci::budget_from_ratio(net, sch_ratio);
            const cci::PowerTable table = cci::build_power_table(net, q, budget);
            emit(sch_out.format == "csv" ? cci::power_table_to_csv(net, q, table)
                                         : cci::power_table_to_json(net, q, table),
                 sch_out.output);
            return exit_ok;
        }

        if (*opt) {
            const cci::Network net = load_single_frequency(opt_input);
            const cci::RatioSearchResult res = cci::optimize_allowed_interference(net, opt_cfg);
            emit(opt_out.format == "csv" ? cci::ratio_result_to_csv(res)
                                         : cci::ratio_result_to_json(res),
                 opt_out.output);
            return exit_ok;
        }

        if (*plan) {
            const cci::Network net = load_single_frequency(plan_input);
            cci::PlannerConfig cfg;
            cfg.ratio_x = plan_ratio;
            const cci::FrequencyPlan result =
                cci::plan_frequencies(net, cfg, plan_threshold, plan_max);
            emit(plan_out.format == "csv" ? cci::plan_to_csv(net, result)
                                          : cci::plan_to_json(net, result),
                 plan_out.output);
            return exit_ok;
        }

        if (*gen) {
            gen_cfg.radio.max_power_w = cci::dbm_to_watts(gen_power_dbm);
            gen_cfg.radio.noise_w = cci::dbm_to_watts(gen_noise_dbm);
            cci::Network net = cci::generate_random_network(gen_cfg);
            if (!gen_no_reds) net = cci::derive_interference_edges(net, gen_sir);
            emit(cci::network_to_json(net), gen_out.output);
            return exit_ok;
        }

        if (*bench) {
            const cci::MetricsReport report =
                cci::run_experiment(bench_cfg, bench_trials, bench_search, bench_sir);
            emit(bench_out.format == "csv" ? cci::report_csv(report)
                                           : cci::report_json(report),
                 bench_out.output);
            return exit_ok;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }

    return exit_internal; // no subcommand dispatched: should be unreachable
}
