#pragma once

#include <string>

#include "cci/coloring.hpp"
#include "cci/model.hpp"
#include "cci/planner.hpp"
#include "cci/power.hpp"
#include "cci/ratio_search.hpp"

namespace cci {

// Network JSON document, "schema": 1. Power fields (max_power, noise) are
// dBm on disk and watts in memory. Throws std::runtime_error on malformed
// documents or unsupported schema versions.
Network network_from_json(const std::string& text);
std::string network_to_json(const Network& net);

Network load_network(const std::string& path);
void save_text(const std::string& path, const std::string& text);

std::string schedule_to_json(const Network& net, const QueueSchedule& q);
std::string schedule_to_csv(const Network& net, const QueueSchedule& q);

// Power entries serialized in dBm.
std::string power_table_to_json(const Network& net, const QueueSchedule& q,
                                const PowerTable& table);
std::string power_table_to_csv(const Network& net, const QueueSchedule& q,
                               const PowerTable& table);

std::string ratio_result_to_json(const RatioSearchResult& r);
std::string ratio_result_to_csv(const RatioSearchResult& r);

std::string plan_to_json(const Network& net, const FrequencyPlan& plan);
std::string plan_to_csv(const Network& net, const FrequencyPlan& plan);

std::string violations_to_json(const std::vector<Violation>& v);
std::string violations_to_csv(const std::vector<Violation>& v);

// Locale-independent shortest-round-trip float formatting used by every
// serializer above.
std::string format_double(double v);

} // namespace cci
