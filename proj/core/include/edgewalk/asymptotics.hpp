#pragma once

#include "edgewalk/formula.hpp"
#include "edgewalk/time_spec.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace edgewalk {

struct ExperimentSeries {
    std::string description;
    std::vector<double> grid;          // strictly increasing horizons
    std::vector<std::int64_t> values;  // counts or count differences
};

struct AsymptoticFit {
    int degree = 0;
    std::vector<double> coefficients; // index m holds the T^m coefficient
    std::vector<double> grid;
    double residual_rms = 0.0;
};

/// Least-squares polynomial fit of a count series in T.
AsymptoticFit fit_polynomial(const ExperimentSeries& series, int degree);

enum class CountKind { BirthsA, BirthsB, Total };

/// T^4 coefficients of the H-junction counts, in closed form.
double predicted_leading(const std::vector<double>& t, CountKind kind);

/// T^3 coefficient of total(t) - total(t with e1,e5 swapped), from vertex A:
/// -1/(96 t2 t4) * (1/t5 - 1/t1). Independent of the jumper t3.
double predicted_diff_coeff(const std::vector<double>& t);

/// T^2 coefficient of the four-term symmetric difference:
/// -(1/4)(1/(t1 t2) + 1/(t4 t5) - 1/(t2 t4) - 1/(t1 t5)),
/// which factors as -(1/4)(1/t1 - 1/t4)(1/t2 - 1/t5).
double predicted_symdiff_coeff(const std::vector<double>& t);

enum class SeriesEngine { Formula, Simulator };

ExperimentSeries h_total_series(const std::vector<double>& t, HVertex start,
                                const std::vector<double>& grid, SeriesEngine engine,
                                double epsilon = Basis::kDefaultEpsilon);

/// total(Gamma_H) - total(Gamma'_H with t1<->t5), both from the A-position.
ExperimentSeries permutation_diff_series(const std::vector<double>& t,
                                         const std::vector<double>& grid, SeriesEngine engine,
                                         double epsilon = Basis::kDefaultEpsilon);

/// d(A,X)+d(A,Y)+d(B,X)+d(B,Y) with X,Y the inner vertices of the graph
/// recomposed with t1 and t4 exchanged (X in the A position, Y in the B
/// position). d(V,W) is the difference of far-vertex birth counts: points
/// issued at the inner vertex opposite the start. With all-equal composition
/// (t1 == t4) the graphs coincide and the series is identically zero.
ExperimentSeries symmetric_diff_series(const std::vector<double>& t,
                                       const std::vector<double>& grid,
                                       SeriesEngine engine = SeriesEngine::Formula,
                                       double epsilon = Basis::kDefaultEpsilon);

void write_series_csv(std::ostream& out, const ExperimentSeries& series);
std::string fit_to_json(const AsymptoticFit& fit);

} // namespace edgewalk
