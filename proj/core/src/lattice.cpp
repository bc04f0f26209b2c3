#include "edgewalk/lattice.hpp"

#include "edgewalk/errors.hpp"

#include <algorithm>
#include <cmath>

namespace edgewalk {

namespace {

void require_positive(const std::vector<double>& coefficients) {
    for (double c : coefficients)
        if (!(c > 0.0)) throw NonPositiveCoefficient("coefficients must be positive");
}

// Weak inequality with an ambiguity guard: a value within eps of the bound
// but not exactly on it cannot be classified reliably.
bool inside(double value, double bound, double eps_abs) {
    double gap = value - bound;
    if (gap != 0.0 && std::abs(gap) <= eps_abs) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "lattice point within epsilon of the bound: value=%.17g bound=%.17g", value,
                      bound);
        throw BoundaryAmbiguity(msg);
    }
    return value <= bound;
}

// Largest n >= 0 with n*c <= bound, or -1 when even n = 0 fails.
std::int64_t max_multiplicity(double c, double bound, double eps_abs) {
    if (!inside(0.0, bound, eps_abs)) return -1;
    auto n = static_cast<std::int64_t>(std::floor(bound / c));
    while (n > 0 && !inside(static_cast<double>(n) * c, bound, eps_abs)) --n;
    while (inside(static_cast<double>(n + 1) * c, bound, eps_abs)) ++n;
    return n;
}

// Coefficients sorted descending; the innermost variable is closed-form.
std::int64_t count_rec(const std::vector<double>& c, std::size_t idx, double bound,
                       double eps_abs) {
    if (idx == c.size()) return inside(0.0, bound, eps_abs) ? 1 : 0;
    std::int64_t top = max_multiplicity(c[idx], bound, eps_abs);
    if (idx + 1 == c.size()) return top + 1;
    std::int64_t total = 0;
    for (std::int64_t n = 0; n <= top; ++n)
        total += count_rec(c, idx + 1, bound - static_cast<double>(n) * c[idx], eps_abs);
    return total;
}

} // namespace

std::int64_t count_weak(const std::vector<double>& coefficients, double bound, double epsilon) {
    require_positive(coefficients);
    std::vector<double> c = coefficients;
    std::sort(c.begin(), c.end(), std::greater<>());
    double eps_abs = epsilon * std::max(std::abs(bound), 1.0);
    return count_rec(c, 0, bound, eps_abs);
}

std::int64_t count_strict(const std::vector<double>& coefficients, double bound, double epsilon) {
    require_positive(coefficients);
    double shift = 0.0;
    for (double c : coefficients) shift += c;
    return count_weak(coefficients, bound - shift, epsilon);
}

std::int64_t strict_via_inclusion_exclusion(const std::vector<double>& coefficients, double bound,
                                            double epsilon) {
    require_positive(coefficients);
    const int k = static_cast<int>(coefficients.size());
    std::int64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<double> sub;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1) sub.push_back(coefficients[i]);
        int s = static_cast<int>(sub.size());
        std::int64_t sign = ((k - s) % 2 == 0) ? 1 : -1;
        total += sign * count_weak(sub, bound, epsilon);
    }
    return total;
}

double volume_leading_coeff(const std::vector<double>& coefficients) {
    if (coefficients.empty()) throw EmptySystem("volume_leading_coeff: empty system");
    require_positive(coefficients);
    double denom = 1.0;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        denom *= static_cast<double>(i + 1) * coefficients[i];
    return 1.0 / denom;
}

} // namespace edgewalk
