#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "ads3/ads3.hpp"

namespace oracle {

// Independent 2x2 arithmetic on plain arrays, row-major [a, b, c, d].
using Mat = std::array<double, 4>;

inline Mat mul(const Mat& x, const Mat& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}
inline Mat rot(double t) { return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)}; }
inline Mat diag(double t) { return {std::exp(t), 0.0, 0.0, std::exp(-t)}; }
inline Mat inv(const Mat& x) { return {x[3], -x[1], -x[2], x[0]}; }

// arccosh of half the squared Frobenius norm.
inline double frob_norm(const Mat& x) {
    const double s = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    return std::acosh(std::max(1.0, s / 2.0));
}

inline Mat entries(const ads3::GroupElement& g) { return g.entries(); }

inline ads3::GroupElement random_element(std::mt19937_64& rng, double tmax = 3.0) {
    std::uniform_real_distribution<double> th(0.0, 2.0 * M_PI), tt(0.0, tmax);
    const Mat m = mul(mul(rot(th(rng)), diag(tt(rng))), rot(th(rng)));
    return ads3::GroupElement::from_entries(m);
}

// psi_{m,k} through Cartan polar form: tanh^k t cosh^{-2m} t e^{-2i m (t1+t2)} e^{-2ik t2}.
inline std::complex<double> psi_polar(int m, int k, double t1, double t, double t2) {
    const double r = std::pow(std::tanh(t), k) * std::pow(std::cosh(t), -2.0 * m);
    const double phase = -2.0 * m * (t1 + t2) - 2.0 * k * t2;
    return std::polar(r, phase);
}

}  // namespace oracle
