#include "edgewalk/simulate.hpp"

#include "edgewalk/errors.hpp"

#include <map>

namespace edgewalk {

namespace {

struct EventKey {
    TimeVector time;
    Vertex vertex;
};

// Chronological order; simultaneous events (identical vectors) at different
// vertices are independent, ordered by vertex index for determinism.
struct EventOrder {
    const Basis* basis;
    bool operator()(const EventKey& a, const EventKey& b) const {
        if (a.time == b.time) return a.vertex < b.vertex;
        return tv_compare(a.time, b.time, *basis) == TimeOrder::Less;
    }
};

} // namespace

SimulationReport simulate(const MetricTree& tree, Vertex start, double horizon,
                          const Basis& basis) {
    if (!tree.has_vertex(start)) throw UnknownVertex("simulate: bad start vertex");
    if (horizon < 0.0) throw HorizonNegative("simulate: negative horizon");
    if (basis.size() != tree.edge_count()) throw LengthMismatch("simulate: basis size mismatch");

    SimulationReport report;
    report.horizon = horizon;
    report.start = start;
    report.births.assign(tree.vertex_count(), 0);
    report.return_times.assign(tree.vertex_count(), {});

    std::map<EventKey, std::vector<Flight>, EventOrder> queue{EventOrder{&basis}};
    auto launch = [&](Vertex from, const TimeVector& at) {
        for (EdgeIndex e : tree.incident(from)) {
            Flight f{e, tree.edge(e).other(from), at, at.bump(e, 1)};
            queue[EventKey{f.arrival, f.heading}].push_back(std::move(f));
        }
    };

    launch(start, TimeVector::zero(tree.edge_count()));

    while (!queue.empty()) {
        auto it = queue.begin();
        if (it->first.time.value(basis) > horizon) break;
        const Vertex v = it->first.vertex;
        const TimeVector at = it->first.time;
        const std::int64_t arrivals = static_cast<std::int64_t>(it->second.size());
        queue.erase(it);

        report.return_times[v].push_back(at);
        report.births[v] += tree.degree(v) - arrivals;
        ++report.event_count;
        launch(v, at);
    }

    for (const auto& [key, group] : queue)
        report.total_points += static_cast<std::int64_t>(group.size());
    return report;
}

SimulationReport simulate(const MetricTree& tree, Vertex start, double horizon, double epsilon) {
    return simulate(tree, start, horizon, Basis::from_specs(tree.edge_time_specs(), epsilon));
}

std::int64_t births_at(const SimulationReport& report, Vertex v) {
    if (v < 0 || v >= static_cast<Vertex>(report.births.size()))
        throw UnknownVertex("births_at: vertex not in report");
    return report.births[v];
}

const std::vector<TimeVector>& return_times_at(const SimulationReport& report, Vertex v) {
    if (v < 0 || v >= static_cast<Vertex>(report.return_times.size()))
        throw UnknownVertex("return_times_at: vertex not in report");
    return report.return_times[v];
}

} // namespace edgewalk
