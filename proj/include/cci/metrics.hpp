#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cci/generator.hpp"
#include "cci/ratio_search.hpp"

namespace cci {

// One trial's Table-style metrics plus the raw quantities behind them.
struct TrialMetrics {
    std::uint32_t trial = 0;
    double total_capacity_gain_pct = 0.0;
    double best_link_improvement_pct = 0.0;
    double power_used_pct = 100.0;
    double capacity_loss_pct = 0.0;
    // raw values
    double baseline_capacity_bps = 0.0;
    double treated_capacity_bps = 0.0;
    double ratio_x = 0.0;
    std::uint32_t red_edges = 0;
    int num_slots = 1;
};

struct MetricsReport {
    std::vector<TrialMetrics> trials;
    TrialMetrics mean; // aggregate over trials (trial field unused)
};

// Runs `trials` seeded experiments: generate, derive red edges at
// sir_threshold, baseline = all-P_max single slot, treatment = schedule +
// ratio search + dynamic table. Trials may run in parallel; the report is
// identical to sequential execution.
MetricsReport run_experiment(const GenConfig& cfg, std::uint32_t trials,
                             const RatioSearchConfig& x_search,
                             double sir_threshold = 100.0);

// CSV with header trial,total_capacity_gain_pct,best_link_improvement_pct,
// power_used_pct,capacity_loss_pct; one row per trial plus a "mean" row.
std::string report_csv(const MetricsReport& report);

std::string report_json(const MetricsReport& report);

} // namespace cci
