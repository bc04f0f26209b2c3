#include "edgewalk/time_vector.hpp"

#include "edgewalk/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace edgewalk {

Basis Basis::from_specs(const std::vector<TimeSpec>& specs, double eps) {
    Basis b;
    b.epsilon = eps;
    for (const auto& s : specs) {
        if (!(s.value() > 0.0)) throw NonPositiveTime("basis entries must be positive");
        b.values.push_back(s.value());
    }
    return b;
}

TimeVector TimeVector::zero(int edge_count) {
    if (edge_count < 1) throw PreconditionViolated("edge_count must be >= 1");
    TimeVector t;
    t.mult_.assign(edge_count, 0);
    return t;
}

TimeVector TimeVector::bump(int edge, std::int64_t count) const {
    if (edge < 0 || edge >= size()) throw IndexOutOfRange("bump: edge index out of range");
    if (count <= 0) throw PreconditionViolated("bump count must be positive");
    TimeVector t = *this;
    if (t.mult_[edge] > std::numeric_limits<std::int64_t>::max() - count)
        throw OverflowDetected("multiplicity overflow");
    t.mult_[edge] += count;
    return t;
}

std::int64_t TimeVector::multiplicity(int edge) const {
    if (edge < 0 || edge >= size()) throw IndexOutOfRange("multiplicity: edge index out of range");
    return mult_[edge];
}

double TimeVector::value(const Basis& basis) const {
    if (basis.size() != size()) throw LengthMismatch("basis/vector length mismatch");
    double v = 0.0;
    for (int i = 0; i < size(); ++i) v += static_cast<double>(mult_[i]) * basis.values[i];
    return v;
}

TimeOrder tv_compare(const TimeVector& a, const TimeVector& b, const Basis& basis) {
    if (a.size() != b.size()) throw LengthMismatch("tv_compare: length mismatch");
    if (a == b) return TimeOrder::Equal;
    double va = a.value(basis), vb = b.value(basis);
    double scale = std::max({va, vb, 1.0});
    if (std::abs(va - vb) <= basis.epsilon * scale) {
        std::ostringstream msg;
        msg << "distinct multiplicity vectors evaluate within guard: " << va << " vs " << vb;
        throw BasisCollision(msg.str());
    }
    return va < vb ? TimeOrder::Less : TimeOrder::Greater;
}

} // namespace edgewalk
