#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cci/coloring.hpp"
#include "cci/model.hpp"
#include "cci/power.hpp"
#include "cci/radio.hpp"
#include "cci/reference.hpp"
#include "fixtures.hpp"

using namespace cci;

namespace {

struct Pipeline {
    Network net;
    QueueSchedule q;
    BlockerSet blockers;
    InterferenceBudget budget;
    PowerTable table;
};

Pipeline run_pipeline(Network net, double x) {
    Pipeline p;
    p.net = std::move(net);
    p.q = dependent_edge_coloring(p.net);
    p.blockers = blocker_sets(p.net, p.q);
    p.budget = budget_from_ratio(p.net, x);
    p.table = build_power_table(p.net, p.q, p.budget);
    return p;
}

} // namespace

TEST_SUITE("power") {

TEST_CASE("budget from ratio") {
    const Network net = fx::star_network();
    const auto b = budget_from_ratio(net, 100.0);
    REQUIRE(b.p_min.size() == 5);
    CHECK(b.p_min[0] == doctest::Approx(fx::star::signal_e0_w / 100.0).epsilon(1e-15));
    for (LinkId l = 1; l < 5; ++l)
        CHECK(b.p_min[l] == doctest::Approx(fx::star::signal_far_w / 100.0).epsilon(1e-12));

    // doubling x halves every cap, exactly
    const auto b2 = budget_from_ratio(net, 200.0);
    for (LinkId l = 0; l < 5; ++l) CHECK(b.p_min[l] == 2.0 * b2.p_min[l]);

    CHECK_THROWS_AS(budget_from_ratio(net, 0.0), std::domain_error);
    CHECK_THROWS_AS(budget_from_ratio(net, -3.0), std::domain_error);
}

TEST_CASE("blocker sets on the star") {
    const Network net = fx::star_network();
    const auto q = dependent_edge_coloring(net);
    const auto bs = blocker_sets(net, q);
    CHECK(bs.num_slots == 2);
    CHECK(bs.priority_slot[0] == 0);
    CHECK(bs.members[0] == std::vector<RedEdgeId>{0, 1, 2, 3});
    for (LinkId l = 1; l < 5; ++l) {
        CHECK(bs.priority_slot[l] == 1);
        CHECK(bs.members[l].empty());
        CHECK(bs.by_base[l] == std::vector<RedEdgeId>{l - 1});
    }
    CHECK(bs.blockers(0, 0) == std::vector<RedEdgeId>{0, 1, 2, 3});
    CHECK(bs.blockers(0, 1).empty());
    CHECK(bs.blockers(2, 0).empty());
}

TEST_CASE("reduced power on unit-denominator fixtures") {
    SUBCASE("single blocker gets the whole budget") {
        const Network net = fx::unit_kernel_network(1);
        const auto q = dependent_edge_coloring(net);
        REQUIRE(q.label == std::vector<int>{0, 1});
        const auto bs = blocker_sets(net, q);
        InterferenceBudget budget;
        budget.p_min = {1e-9, 1.0};

        const auto r = reduced_power_detail(net, q, bs, budget, 1, 0);
        CHECK(r.power_w == doctest::Approx(1e-9).epsilon(1e-12));
        CHECK_FALSE(r.clamped);
        CHECK(r.has_priority_victim);
        REQUIRE(r.governing_red.has_value());
        CHECK(*r.governing_red == 0);
        CHECK(r.share_count == 1);

        // inverse direction: the reduced power couples exactly p_min back in
        const Antenna& rx0 = rx_antenna(net, net.links[0]);
        const Vec2 tx1 = tx_antenna(net, net.links[1]).position;
        CHECK(interference_power_at(rx0, tx1, r.power_w) ==
              doctest::Approx(1e-9).epsilon(1e-12));
    }
    SUBCASE("two blockers split the budget") {
        const Network net = fx::unit_kernel_network(2);
        const auto q = dependent_edge_coloring(net);
        REQUIRE(q.label == std::vector<int>{0, 1, 1});
        const auto bs = blocker_sets(net, q);
        InterferenceBudget budget;
        budget.p_min = {1e-9, 1.0, 1.0};

        CHECK(reduced_power(net, q, bs, budget, 1, 0) == doctest::Approx(0.5e-9).epsilon(1e-12));
        CHECK(reduced_power_detail(net, q, bs, budget, 1, 0).share_count == 2);

        // both inflows together meet the budget to within round-off
        const Antenna& rx0 = rx_antenna(net, net.links[0]);
        double total = 0.0;
        for (LinkId b : {LinkId{1}, LinkId{2}}) {
            total += interference_power_at(rx0, tx_antenna(net, net.links[b]).position,
                                           reduced_power(net, q, bs, budget, b, 0));
        }
        CHECK(total == doctest::Approx(1e-9).epsilon(1e-9));
        CHECK(total <= 1e-9 * (1.0 + 1e-9));
    }
    SUBCASE("huge budget clamps to max power") {
        const Network net = fx::unit_kernel_network(1);
        const auto q = dependent_edge_coloring(net);
        const auto bs = blocker_sets(net, q);
        InterferenceBudget budget;
        budget.p_min = {10.0, 1.0};
        const auto r = reduced_power_detail(net, q, bs, budget, 1, 0);
        CHECK(r.power_w == net.links[1].max_power_w);
        CHECK(r.clamped);
        CHECK(r.has_priority_victim);
    }
    SUBCASE("no priority victim in the slot means max power") {
        const Network net = fx::unit_kernel_network(1);
        const auto q = dependent_edge_coloring(net);
        const auto bs = blocker_sets(net, q);
        InterferenceBudget budget;
        budget.p_min = {1e-9, 1.0};
        const auto r = reduced_power_detail(net, q, bs, budget, 1, 1);
        CHECK(r.power_w == net.links[1].max_power_w);
        CHECK_FALSE(r.has_priority_victim);
        CHECK_FALSE(r.governing_red.has_value());
    }
}

TEST_CASE("reduced power takes the strictest victim across a slot") {
    const Network net = fx::lopsided_network();
    const auto q = dependent_edge_coloring(net);
    REQUIRE(q.label == std::vector<int>{0, 1, 1, 0});
    REQUIRE(q.num_slots == 2);
    const auto bs = blocker_sets(net, q);
    const double x = 50.0;
    const auto budget = budget_from_ratio(net, x);

    // caps l0 must respect: victim l1 (sole blocker) and victim l2 (shared
    // with l3), both holding priority in slot 1
    const Antenna& rx1 = rx_antenna(net, net.links[1]);
    const Antenna& rx2 = rx_antenna(net, net.links[2]);
    const Vec2 tx0 = tx_antenna(net, net.links[0]).position;
    const double cap_for_l1 = budget.p_min[1] / interference_power_at(rx1, tx0, 1.0);
    const double cap_for_l2 = budget.p_min[2] / (2.0 * interference_power_at(rx2, tx0, 1.0));

    const auto r = reduced_power_detail(net, q, bs, budget, 0, 1);
    CHECK(r.power_w == doctest::Approx(std::min(cap_for_l1, cap_for_l2)).epsilon(1e-12));
    REQUIRE(r.governing_red.has_value());
    CHECK(*r.governing_red == (cap_for_l1 < cap_for_l2 ? 0u : 1u));

    // victim l2's aggregate inflow from both bases stays within its budget
    const auto table = build_power_table(net, q, budget);
    const double inflow =
        interference_power_at(rx2, tx0, table.at(0, 1)) +
        interference_power_at(rx2, tx_antenna(net, net.links[3]).position, table.at(3, 1));
    CHECK(inflow <= budget.p_min[2] * (1.0 + 1e-9));
}

TEST_CASE("power table on the star at x=100") {
    const auto p = run_pipeline(fx::star_network(), 100.0);
    REQUIRE(p.table.num_slots == 2);

    // priority entries sit exactly at max power
    CHECK(p.table.at(0, 0) == 1.0);
    for (LinkId l = 1; l < 5; ++l) CHECK(p.table.at(l, 1) == 1.0);
    // e0 causes no interference, so its off slot is unconstrained
    CHECK(p.table.at(0, 1) == 1.0);

    for (int i = 0; i < 4; ++i) {
        CHECK(p.table.at(static_cast<LinkId>(i + 1), 0) ==
              doctest::Approx(fx::star::slot0_reduced_w[i]).epsilon(1e-12));
    }

    // aggregate interference at e0 meets its budget almost exactly
    const Antenna& rx0 = rx_antenna(p.net, p.net.links[0]);
    double inflow = 0.0;
    for (LinkId l = 1; l < 5; ++l)
        inflow += interference_power_at(rx0, tx_antenna(p.net, p.net.links[l]).position,
                                        p.table.at(l, 0));
    CHECK(inflow == doctest::Approx(p.budget.p_min[0]).epsilon(1e-9));
    CHECK(inflow <= p.budget.p_min[0] * (1.0 + 1e-9));
}

TEST_CASE("table entries never exceed max power") {
    for (std::uint64_t seed : {3u, 11u, 27u}) {
        const auto p = run_pipeline(fx::random_net(seed, 14, 20, 8), 100.0);
        for (LinkId l = 0; l < p.net.links.size(); ++l) {
            CHECK(p.table.at(l, p.q.label[l]) == p.net.links[l].max_power_w);
            for (int j = 0; j < p.table.num_slots; ++j) {
                CHECK(p.table.at(l, j) <= p.net.links[l].max_power_w);
                CHECK(p.table.at(l, j) >= 0.0);
            }
        }
    }
}

TEST_CASE("parallel table matches the serial reference bitwise") {
    for (std::uint64_t seed : {1u, 9u, 40u}) {
        const Network net = fx::random_net(seed, 16, 24, 8);
        const auto q = dependent_edge_coloring(net);
        const auto budget = budget_from_ratio(net, 75.0);
        const auto par = build_power_table(net, q, budget);
        const auto ser = serial::build_power_table(net, q, budget);
        REQUIRE(par.num_slots == ser.num_slots);
        REQUIRE(par.power.size() == ser.power.size());
        for (std::size_t i = 0; i < par.power.size(); ++i) CHECK(par.power[i] == ser.power[i]);
    }
}

TEST_CASE("uniform max-power table") {
    const Network net = fx::star_network();
    const auto t = uniform_max_power_table(net, 3);
    CHECK(t.num_slots == 3);
    for (LinkId l = 0; l < 5; ++l)
        for (int j = 0; j < 3; ++j) CHECK(t.at(l, j) == 1.0);
}

TEST_CASE("slot SINR") {
    const auto p = run_pipeline(fx::star_network(), 100.0);

    // e0 under its protected slot: signal over noise plus the budgeted inflow
    const double expected0 = fx::star::signal_e0_w /
                             (fx::star::noise_w + fx::star::signal_e0_w / 100.0);
    CHECK(slot_sinr(p.net, p.table, 0, 0) == doctest::Approx(expected0).epsilon(1e-9));

    // interferer links see no interference at all; their slot-1 SINR is the
    // plain SNR
    for (LinkId l = 1; l < 5; ++l) {
        CHECK(slot_sinr(p.net, p.table, l, 1) ==
              doctest::Approx(fx::star::signal_far_w / fx::star::noise_w).epsilon(1e-9));
    }
}

TEST_CASE("network capacity on interference-free networks") {
    const auto p = run_pipeline(fx::row_network(3, {}), 100.0);
    REQUIRE(p.q.num_slots == 1);
    double expected = 0.0;
    for (const Link& l : p.net.links)
        expected += pc_capacity(l, l.max_power_w, link_distance(p.net, l));
    CHECK(network_capacity(p.net, p.q, p.table) == doctest::Approx(expected).epsilon(1e-15));

    // doubling every bandwidth doubles capacity exactly
    Network wide = p.net;
    for (Link& l : wide.links) l.bandwidth_hz *= 2.0;
    CHECK(network_capacity(wide, p.q, p.table) == 2.0 * network_capacity(p.net, p.q, p.table));
}

TEST_CASE("star capacities are frozen") {
    const Network net = fx::star_network();

    QueueSchedule flat;
    flat.label.assign(5, 0);
    flat.num_slots = 1;
    const auto base_table = uniform_max_power_table(net, 1);
    CHECK(network_capacity(net, flat, base_table) ==
          doctest::Approx(fx::star::baseline_capacity_bps).epsilon(1e-12));

    const auto p = run_pipeline(net, 100.0);
    const double treated = network_capacity(p.net, p.q, p.table);
    CHECK(treated == doctest::Approx(fx::star::treated_capacity_bps).epsilon(1e-12));
    CHECK(treated > network_capacity(net, flat, base_table));

    // SNR-only capacity of the full-power table equals the sum of isolated
    // link capacities
    CHECK(snr_only_capacity(net, base_table) ==
          doctest::Approx(fx::star::split_capacity_bps).epsilon(1e-12));
}

TEST_CASE("network capacity agrees with a brute-force re-summation") {
    const auto p = run_pipeline(fx::star_network(), 100.0);
    double manual = 0.0;
    for (int j = 0; j < p.table.num_slots; ++j) {
        for (LinkId l = 0; l < p.net.links.size(); ++l) {
            const Link& lk = p.net.links[l];
            const double sinr = slot_sinr(p.net, p.table, l, j);
            manual += shannon_capacity(lk.bandwidth_hz, sinr * lk.noise_w, lk.noise_w);
        }
    }
    manual /= p.table.num_slots;
    CHECK(network_capacity(p.net, p.q, p.table) == doctest::Approx(manual).epsilon(1e-9));

    const auto ser = serial::network_capacity(p.net, p.q, p.table);
    CHECK(network_capacity(p.net, p.q, p.table) == ser);
}

TEST_CASE("per-link capacity sums to network capacity") {
    const auto p = run_pipeline(fx::star_network(), 100.0);
    const auto per = per_link_capacity(p.net, p.table);
    REQUIRE(per.size() == 5);
    double sum = 0.0;
    for (double c : per) sum += c;
    CHECK(sum == doctest::Approx(network_capacity(p.net, p.q, p.table)).epsilon(1e-12));
    // the protected link carries more than it would at full-power chaos
    const auto flat_per = per_link_capacity(p.net, uniform_max_power_table(p.net, 1));
    CHECK(per[0] > flat_per[0]);
}

TEST_CASE("mean cycle power") {
    const Network net = fx::star_network();
    CHECK(mean_cycle_power(net, uniform_max_power_table(net, 1)) == 5.0);

    const auto p = run_pipeline(net, 100.0);
    double s = 0.0;
    for (double w : fx::star::slot0_reduced_w) s += w;
    CHECK(mean_cycle_power(p.net, p.table) == doctest::Approx((6.0 + s) / 2.0).epsilon(1e-12));
}

TEST_CASE("slot-count mismatch is rejected") {
    const auto p = run_pipeline(fx::star_network(), 100.0);
    QueueSchedule wrong = p.q;
    wrong.num_slots = 3;
    CHECK_THROWS_AS(network_capacity(p.net, wrong, p.table), std::invalid_argument);
}

} // TEST_SUITE
