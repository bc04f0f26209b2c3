#pragma once

#include "edgewalk/graph.hpp"
#include "edgewalk/time_vector.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace edgewalk {

/// One moving point: on `edge`, heading to `heading`, arriving at `arrival`.
struct Flight {
    EdgeIndex edge = -1;
    Vertex heading = -1;
    TimeVector departure;
    TimeVector arrival;
};

struct SimulationReport {
    double horizon = 0.0;
    Vertex start = -1;
    std::int64_t total_points = 0;
    std::vector<std::int64_t> births;                 // per vertex, net new points
    std::vector<std::vector<TimeVector>> return_times; // per vertex, ascending, t=0 excluded
    std::int64_t event_count = 0;
};

/// Event-driven run of the splitting dynamics: deg(start) points depart the
/// start vertex at time 0; k simultaneous arrivals at a vertex of degree d
/// trigger d departures and d-k births; leaves reflect.
SimulationReport simulate(const MetricTree& tree, Vertex start, double horizon,
                          const Basis& basis);
SimulationReport simulate(const MetricTree& tree, Vertex start, double horizon,
                          double epsilon = Basis::kDefaultEpsilon);

std::int64_t births_at(const SimulationReport& report, Vertex v);
const std::vector<TimeVector>& return_times_at(const SimulationReport& report, Vertex v);

} // namespace edgewalk
