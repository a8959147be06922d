#pragma once

// Serial reference implementations of the parallel kernels. These are the
// ground truth the OpenMP paths are tested against and the fallback used by
// the benchmark for speedup comparison. Keep them free of threading concerns.

#include "cci/coloring.hpp"
#include "cci/model.hpp"
#include "cci/power.hpp"

namespace cci::serial {

PowerTable build_power_table(const Network& net, const QueueSchedule& q,
                             const InterferenceBudget& budget);

double network_capacity(const Network& net, const QueueSchedule& q, const PowerTable& table);

std::vector<InterferenceEdge> derive_interference_edges(const Network& net,
                                                        double sir_threshold);

} // namespace cci::serial
