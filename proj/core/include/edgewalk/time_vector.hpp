#pragma once

#include "edgewalk/time_spec.hpp"

#include <cstdint>
#include <vector>

namespace edgewalk {

/// Evaluated edge-time basis (the t_i) plus the relative separation guard
/// used to flag near-commensurate values instead of mis-ordering events.
struct Basis {
    std::vector<double> values;
    double epsilon = kDefaultEpsilon;

    static constexpr double kDefaultEpsilon = 1e-9;

    static Basis from_specs(const std::vector<TimeSpec>& specs, double eps = kDefaultEpsilon);
    int size() const { return static_cast<int>(values.size()); }
};

enum class TimeOrder { Less, Equal, Greater };

/// Event time as traversal counts per edge: value = sum n_i * t_i. Equality
/// is pure integer comparison, so simultaneity never hinges on float noise.
class TimeVector {
public:
    static TimeVector zero(int edge_count);

    /// Multiplicity at `edge` increased by `count` (> 0).
    TimeVector bump(int edge, std::int64_t count) const;

    std::int64_t multiplicity(int edge) const;
    const std::vector<std::int64_t>& multiplicities() const { return mult_; }
    int size() const { return static_cast<int>(mult_.size()); }

    double value(const Basis& basis) const;

    friend bool operator==(const TimeVector& a, const TimeVector& b) { return a.mult_ == b.mult_; }

private:
    std::vector<std::int64_t> mult_;
};

/// Equal iff multiplicities match; otherwise ordered by evaluated value.
/// Distinct vectors whose values agree to within epsilon raise BasisCollision.
TimeOrder tv_compare(const TimeVector& a, const TimeVector& b, const Basis& basis);

} // namespace edgewalk
