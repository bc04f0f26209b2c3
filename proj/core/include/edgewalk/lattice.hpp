#pragma once

#include "edgewalk/time_vector.hpp"

#include <cstdint>
#include <vector>

namespace edgewalk {

/// Relative guard for weak-inequality boundary classification. Sized to the
/// accumulated double rounding of the evaluated forms (~1e-13 relative), not
/// to the basis-collision epsilon: at T ~ 600 a 4-variable irrational form
/// genuinely lands within 1e-9*T of the bound now and then, and those points
/// are classifiable, only points inside the rounding noise are not.
inline constexpr double kBoundaryEpsilon = 1e-12;

/// Number of non-negative integer tuples with sum c_i * n_i <= bound.
/// The empty system counts the empty tuple: 1 when bound >= 0, else 0.
std::int64_t count_weak(const std::vector<double>& coefficients, double bound,
                        double epsilon = kBoundaryEpsilon);

/// Same with every n_i >= 1; equals count_weak(c, bound - sum c).
std::int64_t count_strict(const std::vector<double>& coefficients, double bound,
                          double epsilon = kBoundaryEpsilon);

/// The strict count via the alternating sum over all variable subsets
/// (weak counts only). Must agree with count_strict exactly.
std::int64_t strict_via_inclusion_exclusion(const std::vector<double>& coefficients, double bound,
                                            double epsilon = kBoundaryEpsilon);

/// Leading T^m coefficient of count_weak: 1 / (m! * prod c_i).
double volume_leading_coeff(const std::vector<double>& coefficients);

} // namespace edgewalk
