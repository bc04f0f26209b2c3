#include "edgewalk/asymptotics.hpp"

#include "edgewalk/errors.hpp"
#include "edgewalk/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace edgewalk {

namespace {

std::string sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void check_grid(const std::vector<double>& grid) {
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw PreconditionViolated("grid must be increasing");
}

std::vector<double> swap15(const std::vector<double>& t) {
    std::vector<double> u = t;
    std::swap(u[0], u[4]);
    return u;
}

std::vector<double> swap14(const std::vector<double>& t) {
    std::vector<double> u = t;
    std::swap(u[0], u[3]);
    return u;
}

// Times as seen from B: leaf edges e4,e5 take the roles of e1,e2 and vice
// versa, the jumper stays in the middle slot.
std::vector<double> from_b(const std::vector<double>& t) {
    return {t[3], t[4], t[2], t[0], t[1]};
}

std::vector<TimeSpec> to_specs(const std::vector<double>& t) {
    std::vector<TimeSpec> specs;
    for (double v : t) specs.push_back(TimeSpec::decimal(v));
    return specs;
}

std::int64_t engine_total(const std::vector<double>& t, HVertex start, double T,
                          SeriesEngine engine, double epsilon) {
    if (engine == SeriesEngine::Formula) return h_total(t, start, T);
    MetricTree tree = make_h_junction(to_specs(t));
    Vertex v = tree.vertex(start == HVertex::A ? "A" : "B");
    return simulate(tree, v, T, epsilon).total_points;
}

// Births at the inner vertex opposite the start (start A -> births at B and
// vice versa).
std::int64_t engine_far_births(const std::vector<double>& t, HVertex start, double T,
                               SeriesEngine engine, double epsilon) {
    if (engine == SeriesEngine::Formula)
        return h_births_B(start == HVertex::A ? t : from_b(t), T);
    MetricTree tree = make_h_junction(to_specs(t));
    Vertex v = tree.vertex(start == HVertex::A ? "A" : "B");
    Vertex w = tree.vertex(start == HVertex::A ? "B" : "A");
    return births_at(simulate(tree, v, T, epsilon), w);
}

} // namespace

AsymptoticFit fit_polynomial(const ExperimentSeries& series, int degree) {
    const int n = static_cast<int>(series.grid.size());
    if (degree < 0) throw PreconditionViolated("fit degree must be >= 0");
    if (n < degree + 3) throw InsufficientSamples("need at least degree+3 samples");
    check_grid(series.grid);

    const double scale = series.grid.back();
    const int m = degree + 1;
    // normal equations over x = T/scale
    std::vector<std::vector<long double>> a(m, std::vector<long double>(m, 0.0L));
    std::vector<long double> rhs(m, 0.0L);
    for (int s = 0; s < n; ++s) {
        long double x = series.grid[s] / scale;
        std::vector<long double> pw(m, 1.0L);
        for (int j = 1; j < m; ++j) pw[j] = pw[j - 1] * x;
        for (int i = 0; i < m; ++i) {
            rhs[i] += pw[i] * static_cast<long double>(series.values[s]);
            for (int j = 0; j < m; ++j) a[i][j] += pw[i] * pw[j];
        }
    }
    // gaussian elimination with partial pivoting
    std::vector<long double> beta(m, 0.0L);
    for (int col = 0; col < m; ++col) {
        int pivot = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(static_cast<double>(a[r][col])) >
                std::abs(static_cast<double>(a[pivot][col])))
                pivot = r;
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        if (std::abs(static_cast<double>(a[col][col])) < 1e-14)
            throw IllConditioned("fit grid too narrow for requested degree");
        for (int r = col + 1; r < m; ++r) {
            long double factor = a[r][col] / a[col][col];
            for (int c = col; c < m; ++c) a[r][c] -= factor * a[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    for (int r = m - 1; r >= 0; --r) {
        long double acc = rhs[r];
        for (int c = r + 1; c < m; ++c) acc -= a[r][c] * beta[c];
        beta[r] = acc / a[r][r];
    }

    AsymptoticFit fit;
    fit.degree = degree;
    fit.grid = series.grid;
    fit.coefficients.resize(m);
    for (int j = 0; j < m; ++j)
        fit.coefficients[j] = static_cast<double>(beta[j]) / std::pow(scale, j);

    double sq = 0.0;
    for (int s = 0; s < n; ++s) {
        double pred = 0.0;
        for (int j = m - 1; j >= 0; --j) pred = pred * series.grid[s] + fit.coefficients[j];
        double r = static_cast<double>(series.values[s]) - pred;
        sq += r * r;
    }
    fit.residual_rms = std::sqrt(sq / n);
    return fit;
}

double predicted_leading(const std::vector<double>& t, CountKind kind) {
    if (t.size() != 5) throw PreconditionViolated("predicted_leading: need five times");
    for (double v : t)
        if (!(v > 0.0)) throw NonPositiveTime("predicted_leading: non-positive time");
    const double pre = 1.0 / (24.0 * 16.0);
    double birthsA = pre * (1.0 / (t[1] * t[2] * t[3] * t[4]) + 1.0 / (t[0] * t[2] * t[3] * t[4]));
    double birthsB = pre * (1.0 / (t[0] * t[1] * t[3] * t[4]) + 1.0 / (t[0] * t[1] * t[2] * t[4]) +
                            1.0 / (t[0] * t[1] * t[2] * t[3]));
    switch (kind) {
    case CountKind::BirthsA: return birthsA;
    case CountKind::BirthsB: return birthsB;
    case CountKind::Total: return birthsA + birthsB;
    }
    return 0.0;
}

double predicted_diff_coeff(const std::vector<double>& t) {
    if (t.size() != 5) throw PreconditionViolated("predicted_diff_coeff: need five times");
    return -1.0 / (96.0 * t[1] * t[3]) * (1.0 / t[4] - 1.0 / t[0]);
}

double predicted_symdiff_coeff(const std::vector<double>& t) {
    if (t.size() != 5) throw PreconditionViolated("predicted_symdiff_coeff: need five times");
    return -0.25 * (1.0 / (t[0] * t[1]) + 1.0 / (t[3] * t[4]) - 1.0 / (t[1] * t[3]) -
                    1.0 / (t[0] * t[4]));
}

ExperimentSeries h_total_series(const std::vector<double>& t, HVertex start,
                                const std::vector<double>& grid, SeriesEngine engine,
                                double epsilon) {
    check_grid(grid);
    ExperimentSeries series;
    series.description = std::string("h_total from ") + (start == HVertex::A ? "A" : "B");
    series.grid = grid;
    for (double T : grid) series.values.push_back(engine_total(t, start, T, engine, epsilon));
    return series;
}

ExperimentSeries permutation_diff_series(const std::vector<double>& t,
                                         const std::vector<double>& grid, SeriesEngine engine,
                                         double epsilon) {
    check_grid(grid);
    const auto u = swap15(t);
    ExperimentSeries series;
    series.description = "total(t) - total(t with e1,e5 swapped), start A";
    series.grid = grid;
    for (double T : grid)
        series.values.push_back(engine_total(t, HVertex::A, T, engine, epsilon) -
                                engine_total(u, HVertex::A, T, engine, epsilon));
    return series;
}

ExperimentSeries symmetric_diff_series(const std::vector<double>& t,
                                       const std::vector<double>& grid, SeriesEngine engine,
                                       double epsilon) {
    check_grid(grid);
    const auto u = swap14(t);
    ExperimentSeries series;
    series.description = "d(A,X)+d(A,Y)+d(B,X)+d(B,Y) for the e1,e4 swap";
    series.grid = grid;
    // d(V,W) compares far-vertex birth ledgers: points issued at the inner
    // vertex opposite the start. Totals cancel the T^2 term identically, so
    // the four-term sum is taken over these one-sided counts; it collapses to
    // twice the difference of the per-graph sums because each d appears with
    // both partners.
    for (double T : grid) {
        std::int64_t a = engine_far_births(t, HVertex::A, T, engine, epsilon);
        std::int64_t b = engine_far_births(t, HVertex::B, T, engine, epsilon);
        std::int64_t x = engine_far_births(u, HVertex::A, T, engine, epsilon);
        std::int64_t y = engine_far_births(u, HVertex::B, T, engine, epsilon);
        series.values.push_back(2 * (a + b) - 2 * (x + y));
    }
    return series;
}

void write_series_csv(std::ostream& out, const ExperimentSeries& series) {
    out << "T,value\n";
    for (std::size_t i = 0; i < series.grid.size(); ++i)
        out << sig12(series.grid[i]) << ',' << series.values[i] << '\n';
}

std::string fit_to_json(const AsymptoticFit& fit) {
    nlohmann::ordered_json j;
    j["degree"] = fit.degree;
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (double c : fit.coefficients) coeffs.push_back(sig12(c));
    j["coefficients"] = coeffs;
    j["residual_rms"] = sig12(fit.residual_rms);
    j["grid"] = fit.grid;
    return j.dump();
}

} // namespace edgewalk
