#include "cci/ratio_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cci/power.hpp"
#include "cci/radio.hpp"
#include "cci/spline.hpp"

namespace cci {

namespace {

void check_config(const RatioSearchConfig& cfg) {
    if (cfg.k < 3) throw std::invalid_argument("ratio search: k must be >= 3");
    if (!(cfg.x0 > 0.0)) throw std::invalid_argument("ratio search: x0 must be positive");
    if (cfg.max_depth < 1) throw std::invalid_argument("ratio search: max_depth must be >= 1");
    if (!(cfg.rel_tol > 0.0)) throw std::invalid_argument("ratio search: rel_tol must be positive");
}

} // namespace

Bracket initial_bracket(const Network& net, const RatioSearchConfig& cfg) {
    check_config(cfg);
    if (net.red_edges.empty()) return {cfg.x0, cfg.x0};

    const RedIndex idx = build_red_index(net);
    double x1 = std::numeric_limits<double>::infinity();
    for (const Link& l : net.links) {
        if (idx.by_victim[l.id].empty()) continue;
        const double signal = friis_received_power(l.max_power_w, l.rx_directivity,
                                                   l.tx_directivity, link_distance(net, l),
                                                   l.frequency_hz);
        double interference = 0.0;
        const Antenna& rx = rx_antenna(net, l);
        for (RedEdgeId ri : idx.by_victim[l.id]) {
            const Link& base = net.links[net.red_edges[ri].base];
            interference += interference_power_at(rx, tx_antenna(net, base).position,
                                                  base.max_power_w);
        }
        x1 = std::min(x1, signal / interference);
    }
    return {cfg.x0, x1};
}

double capacity_at_ratio(const Network& net, const QueueSchedule& q, double x) {
    const InterferenceBudget budget = budget_from_ratio(net, x);
    const PowerTable table = build_power_table(net, q, budget);
    return network_capacity(net, q, table);
}

double capacity_at_ratio(const Network& net, double x) {
    return capacity_at_ratio(net, dependent_edge_coloring(net), x);
}

RatioSearchResult maximize_on_bracket(const std::function<double(double)>& f,
                                      Bracket bracket, const RatioSearchConfig& cfg) {
    check_config(cfg);
    RatioSearchResult res;

    auto consider = [&res](double x, double y) {
        if (res.evaluations == 0 || y > res.y_m || (y == res.y_m && x < res.x_m)) {
            res.x_m = x;
            res.y_m = y;
        }
        ++res.evaluations;
    };

    if (bracket.degenerate()) {
        const double y = f(bracket.hi);
        consider(bracket.hi, y);
        res.samples = {{bracket.hi, y}};
        res.depth_used = 1;
        return res;
    }

    double lo = bracket.lo, hi = bracket.hi;
    double prev_xm = std::numeric_limits<double>::quiet_NaN();

    for (int depth = 1; depth <= cfg.max_depth; ++depth) {
        res.depth_used = depth;

        std::vector<double> xs(cfg.k), ys(cfg.k);
        const double step = (hi - lo) / static_cast<double>(cfg.k - 1);
        for (int i = 0; i < cfg.k; ++i) xs[i] = i + 1 == cfg.k ? hi : lo + i * step;
        for (int i = 0; i < cfg.k; ++i) {
            ys[i] = f(xs[i]);
            consider(xs[i], ys[i]);
        }
        res.samples.resize(cfg.k);
        for (int i = 0; i < cfg.k; ++i) res.samples[i] = {xs[i], ys[i]};

        const bool flat = std::all_of(ys.begin(), ys.end(),
                                      [&ys](double y) { return y == ys.front(); });
        if (flat) break; // nothing to refine; lowest-x tie already selected

        // Interpolate, then trust only true evaluations at the predicted maxima.
        const CubicSpline spline(xs, ys);
        for (double xh : spline.interior_maxima()) consider(xh, f(xh));

        if (depth > 1) {
            const double move = std::abs(res.x_m - prev_xm) / std::max(std::abs(prev_xm), 1e-300);
            if (move <= cfg.rel_tol) break;
        }
        prev_xm = res.x_m;

        // Window of 1/(k-1) the current width around x_m, clipped to the
        // original bracket.
        const double half = (hi - lo) / (2.0 * static_cast<double>(cfg.k - 1));
        lo = std::max(bracket.lo, res.x_m - half);
        hi = std::min(bracket.hi, res.x_m + half);
        if (!(lo < hi)) break;
    }

    return res;
}

RatioSearchResult optimize_allowed_interference(const Network& net,
                                                const RatioSearchConfig& cfg) {
    const Bracket bracket = initial_bracket(net, cfg);
    const QueueSchedule q = dependent_edge_coloring(net);
    return maximize_on_bracket([&](double x) { return capacity_at_ratio(net, q, x); },
                               bracket, cfg);
}

} // namespace cci
