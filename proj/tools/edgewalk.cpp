// edgewalk: batch front-end for the splitting-point dynamics toolkit.
// Subcommands: simulate, formula, game, count, experiment.

#include "edgewalk/asymptotics.hpp"
#include "edgewalk/errors.hpp"
#include "edgewalk/formula.hpp"
#include "edgewalk/graph.hpp"
#include "edgewalk/lattice.hpp"
#include "edgewalk/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::ordered_json;

std::string sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<edgewalk::TimeSpec> parse_times(const std::string& csv) {
    std::vector<edgewalk::TimeSpec> specs;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ','))
        specs.push_back(edgewalk::TimeSpec::parse(item));
    return specs;
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    for (const auto& s : parse_times(csv)) out.push_back(s.value());
    return out;
}

std::vector<double> parse_grid(const std::string& spec) {
    double start = 0, step = 0, stop = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':' || step <= 0)
        throw edgewalk::ParseError("grid must be '<start>:<step>:<stop>' with positive step");
    std::vector<double> grid;
    for (double t = start; t <= stop + 1e-9; t += step) grid.push_back(t);
    if (grid.empty()) throw edgewalk::ParseError("grid spec yields no horizons");
    return grid;
}

double resolve_epsilon(double flag_value, bool flag_set) {
    double eps = edgewalk::Basis::kDefaultEpsilon;
    if (const char* env = std::getenv("EDGEWALK_EPSILON"); env && *env) eps = std::atof(env);
    if (flag_set) eps = flag_value;
    if (!(eps > 0.0 && eps < 1e-3))
        throw edgewalk::PreconditionViolated("epsilon must lie in (0, 1e-3)");
    return eps;
}

edgewalk::MetricTree load_graph(const std::string& source, const std::string& times_csv) {
    if (source == "h-junction") {
        if (times_csv.empty())
            throw edgewalk::ParseError("--graph h-junction requires --times t1,..,t5");
        return edgewalk::make_h_junction(parse_times(times_csv));
    }
    return edgewalk::load_edge_list(source);
}

ordered_json series_json(const edgewalk::ExperimentSeries& series) {
    ordered_json j;
    j["description"] = series.description;
    j["T"] = series.grid;
    j["value"] = series.values;
    return j;
}

ordered_json fit_json(const edgewalk::AsymptoticFit& fit) {
    return ordered_json::parse(edgewalk::fit_to_json(fit));
}

int cmd_simulate(const std::string& graph, const std::string& times, const std::string& start,
                 double horizon, double eps) {
    auto tree = load_graph(graph, times);
    auto report = edgewalk::simulate(tree, tree.vertex(start), horizon, eps);
    ordered_json j;
    j["start"] = start;
    j["horizon"] = sig12(horizon);
    j["total_points"] = report.total_points;
    ordered_json births;
    for (edgewalk::Vertex v = 0; v < tree.vertex_count(); ++v)
        births[tree.label(v)] = report.births[v];
    j["births"] = births;
    j["event_count"] = report.event_count;
    j["initial_departures"] = tree.degree(tree.vertex(start));
    std::cout << j.dump() << '\n';
    return 0;
}

int cmd_formula(const std::string& graph, const std::string& times, const std::string& root,
                const std::string& grid_spec, double eps) {
    auto tree = load_graph(graph, times);
    edgewalk::Vertex r = tree.vertex(root);
    auto terms = edgewalk::birth_terms(tree, r);
    ordered_json j;
    j["root"] = root;
    ordered_json tl = ordered_json::array();
    for (const auto& term : terms) {
        ordered_json t;
        ordered_json edges = ordered_json::array();
        for (int i = 0; i < tree.edge_count(); ++i)
            if (term.subset.contains(i)) edges.push_back(i);
        t["edges"] = edges;
        t["coefficient"] = term.coefficient;
        tl.push_back(t);
    }
    j["terms"] = tl;
    ordered_json counts = ordered_json::array();
    auto edge_times = tree.edge_times();
    for (double T : parse_grid(grid_spec)) {
        ordered_json row;
        row["T"] = sig12(T);
        row["births"] = edgewalk::eval_terms(terms, edge_times, T, eps);
        counts.push_back(row);
    }
    j["counts"] = counts;
    std::cout << j.dump() << '\n';
    return 0;
}

int cmd_game(const std::string& graph, const std::string& times, const std::string& root) {
    auto tree = load_graph(graph, times);
    edgewalk::Vertex r = tree.vertex(root);
    ordered_json labels;
    // label of each vertex in the game rooted at r (its own downward subtree)
    std::vector<int> label(tree.vertex_count(), -1);
    std::function<int(edgewalk::Vertex, edgewalk::EdgeIndex)> rec =
        [&](edgewalk::Vertex v, edgewalk::EdgeIndex in_edge) {
            int product = 1;
            for (edgewalk::EdgeIndex e : tree.incident(v)) {
                if (e == in_edge) continue;
                product *= 1 - rec(tree.edge(e).other(v), e);
            }
            label[v] = product;
            return product;
        };
    rec(r, -1);
    for (edgewalk::Vertex v = 0; v < tree.vertex_count(); ++v) labels[tree.label(v)] = label[v];
    ordered_json j;
    j["root"] = root;
    j["z0"] = labels;
    j["outcome"] = edgewalk::game_outcome(tree, r) == edgewalk::GameOutcome::FirstPlayerWins
                       ? "first-player-wins"
                       : "second-player-wins";
    std::cout << j.dump() << '\n';
    return 0;
}

int cmd_count(const std::string& coeffs_csv, double bound, double eps) {
    auto coeffs = parse_doubles(coeffs_csv);
    ordered_json j;
    ordered_json cs = ordered_json::array();
    for (double c : coeffs) cs.push_back(sig12(c));
    j["coefficients"] = cs;
    j["bound"] = sig12(bound);
    j["weak"] = edgewalk::count_weak(coeffs, bound, eps);
    j["strict"] = edgewalk::count_strict(coeffs, bound, eps);
    j["strict_inclusion_exclusion"] =
        edgewalk::strict_via_inclusion_exclusion(coeffs, bound, eps);
    std::cout << j.dump() << '\n';
    return 0;
}

int cmd_experiment(const std::string& kind, const std::string& times_csv,
                   const std::string& grid_spec, const std::string& engine_name, double tolerance,
                   const std::string& format, double eps) {
    auto t = parse_doubles(times_csv);
    if (t.size() != 5)
        throw edgewalk::ParseError("experiment needs exactly five times");
    auto grid = parse_grid(grid_spec);
    auto engine = engine_name == "simulator" ? edgewalk::SeriesEngine::Simulator
                                             : edgewalk::SeriesEngine::Formula;

    edgewalk::ExperimentSeries series;
    int fit_degree = 0, coeff_degree = 0;
    double predicted = 0.0;
    if (kind == "razn") {
        series = edgewalk::permutation_diff_series(t, grid, engine, eps);
        fit_degree = 3;
        coeff_degree = 3;
        predicted = edgewalk::predicted_diff_coeff(t);
    } else if (kind == "symraz") {
        series = edgewalk::symmetric_diff_series(t, grid, engine, eps);
        fit_degree = 3;
        coeff_degree = 2;
        predicted = edgewalk::predicted_symdiff_coeff(t);
    } else if (kind == "leading") {
        series = edgewalk::h_total_series(t, edgewalk::HVertex::A, grid, engine, eps);
        fit_degree = 4;
        coeff_degree = 4;
        predicted = edgewalk::predicted_leading(t, edgewalk::CountKind::Total);
    } else {
        throw edgewalk::ParseError("experiment kind must be razn, symraz, or leading");
    }

    if (format == "csv") {
        edgewalk::write_series_csv(std::cout, series);
        return 0;
    }

    auto fit = edgewalk::fit_polynomial(series, fit_degree);
    double fitted = fit.coefficients[coeff_degree];
    double denom = std::max(std::abs(predicted), 1e-300);
    double rel_err = std::abs(fitted - predicted) / denom;
    bool pass = predicted == 0.0 ? std::abs(fitted) <= tolerance : rel_err <= tolerance;

    ordered_json j;
    j["kind"] = kind;
    j["engine"] = engine == edgewalk::SeriesEngine::Formula ? "formula" : "simulator";
    j["series"] = series_json(series);
    j["fit"] = fit_json(fit);
    j["predicted_coefficient"] = sig12(predicted);
    j["fitted_coefficient"] = sig12(fitted);
    j["relative_error"] = sig12(rel_err);
    j["tolerance"] = sig12(tolerance);
    j["pass"] = pass;
    std::cout << j.dump() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Splitting-point dynamics on metric trees: simulation, lattice-count "
                 "formulas, and H-junction experiments"};
    app.require_subcommand(1);

    std::string graph = "h-junction", times, start = "A", root = "A";
    std::string grid_spec = "100:50:600", engine = "formula", format = "json";
    std::string coeffs, kind;
    double horizon = 50.0, bound = 0.0, tolerance = 0.15;
    double eps_flag = edgewalk::Basis::kDefaultEpsilon;
    bool eps_set = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", graph, "edge-list file path or 'h-junction'");
        sub->add_option("--times", times, "comma-separated time specs (h-junction edges e1..e5)");
        sub->add_option_function<double>(
               "--epsilon", [&](double v) { eps_flag = v; eps_set = true; },
               "relative separation guard (fallback: EDGEWALK_EPSILON)");
    };

    auto* sim = app.add_subcommand("simulate", "event-driven run: totals and per-vertex births");
    add_common(sim);
    sim->add_option("--start", start, "start vertex label");
    sim->add_option("--horizon", horizon, "time horizon T")->required();

    auto* frm = app.add_subcommand("formula", "birth-count term list and evaluated counts");
    add_common(frm);
    frm->add_option("--root", root, "root vertex label");
    frm->add_option("--grid", grid_spec, "horizons as start:step:stop");

    auto* gam = app.add_subcommand("game", "z0 labels per vertex and game outcome");
    add_common(gam);
    gam->add_option("--root", root, "root vertex label");

    auto* cnt = app.add_subcommand("count", "lattice counts for an explicit system");
    cnt->add_option("--coeffs", coeffs, "comma-separated positive coefficients")->required();
    cnt->add_option("--bound", bound, "inequality bound T")->required();
    cnt->add_option_function<double>(
           "--epsilon", [&](double v) { eps_flag = v; eps_set = true; },
           "relative separation guard");

    auto* exp = app.add_subcommand("experiment", "series + fit + predicted coefficient");
    exp->add_option("kind", kind, "razn | symraz | leading")->required();
    add_common(exp);
    exp->add_option("--grid", grid_spec, "horizons as start:step:stop");
    exp->add_option("--engine", engine, "formula | simulator");
    exp->add_option("--tolerance", tolerance, "relative tolerance for pass/fail");
    exp->add_option("--format", format, "json | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        double eps = resolve_epsilon(eps_flag, eps_set);
        // counting guards default to the (tighter) lattice epsilon; the flag
        // still overrides both
        double count_eps = eps_set ? eps : edgewalk::kBoundaryEpsilon;
        if (times.empty()) times = "1,sqrt(2),sqrt(3),sqrt(5),sqrt(7)";
        if (sim->parsed()) return cmd_simulate(graph, times, start, horizon, eps);
        if (frm->parsed()) return cmd_formula(graph, times, root, grid_spec, count_eps);
        if (gam->parsed()) return cmd_game(graph, times, root);
        if (cnt->parsed()) return cmd_count(coeffs, bound, count_eps);
        if (exp->parsed())
            return cmd_experiment(kind, times, grid_spec, engine, tolerance, format, eps);
    } catch (const edgewalk::BasisCollision& e) {
        std::cerr << "basis collision: " << e.what() << '\n';
        return 3;
    } catch (const edgewalk::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
