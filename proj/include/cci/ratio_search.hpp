#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cci/coloring.hpp"
#include "cci/model.hpp"

namespace cci {

struct RatioSearchConfig {
    int k = 9;             // samples per level, >= 3
    double x0 = 1e-3;      // lower bracket end, > 0
    int max_depth = 6;     // recursion cap, >= 1
    double rel_tol = 1e-3; // relative movement of x_m considered converged
};

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;

    bool degenerate() const { return !(lo < hi); }
};

// [config.x0, x1] where x1 is the smallest full-power SIR across victim
// links. Degenerate (lo == hi == x0) when the network has no red edges.
Bracket initial_bracket(const Network& net, const RatioSearchConfig& cfg);

struct RatioSample {
    double x = 0.0;
    double y = 0.0;
};

struct RatioSearchResult {
    double x_m = 0.0;
    double y_m = 0.0;                 // max over every true evaluation made
    std::vector<RatioSample> samples; // final level's k grid samples
    int depth_used = 0;
    std::uint64_t evaluations = 0;
};

// The objective f(x): network capacity achieved by the dynamic-power
// pipeline at allowed-interference ratio x (schedule, budget at x, table,
// capacity). The overload reuses a precomputed schedule, which does not
// depend on x.
double capacity_at_ratio(const Network& net, double x);
double capacity_at_ratio(const Network& net, const QueueSchedule& q, double x);

// Sampling + natural-spline interpolation + recursive window refinement of
// max f over the bracket. Exposed with an injectable f for testing.
RatioSearchResult maximize_on_bracket(const std::function<double(double)>& f,
                                      Bracket bracket, const RatioSearchConfig& cfg);

// End-to-end: bracket from the network, then maximize capacity_at_ratio.
// Degenerate bracket (no red edges): single evaluation at x0.
RatioSearchResult optimize_allowed_interference(const Network& net,
                                                const RatioSearchConfig& cfg);

} // namespace cci
