#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "ads3/group.hpp"

namespace ads3 {

struct ThresholdInputs {
    double C = 1.0;
    double a = 1.0;
    double eps = 1.0;
    double s = 1.0;  // positive integer, stored as double since s = 3^{k-1} grows fast
};

// ((log 2) s + 2 a eps + log(1 + 2^s C e^{6 a eps})) / log cosh eps.
double m_threshold(const ThresholdInputs& in);
inline double m_threshold(double C, double a, double eps, double s) { return m_threshold({C, a, eps, s}); }

struct MTilde {
    double value = 0.0;
    double argmin = 0.0;
};

// inf over 0 < eps < delta of m_threshold; the reported value is the best
// probe, hence an upper bound on the infimum.
MTilde m_tilde(double C, double a, double delta, double s);

struct MGamma {
    double value = 0.0;  // +inf when no candidate applies
    std::optional<std::size_t> candidate;
    double eps = 0.0;  // minimizer of m for the winning candidate
};

// min over candidates of max{ m_tilde(3^{k-1} A, a, eps_gamma/4, 3^{k-1}) / 2, a }.
MGamma m_gamma(int k, std::span<const GrowthConstants> candidates, double eps_gamma);

// arccosh(1 + 2 (sinh(r/4) sin(pi/n))^2). Throws InvalidClass for n < 2.
double eta(int n, double r);

}  // namespace ads3
