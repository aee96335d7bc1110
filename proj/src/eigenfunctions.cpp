#include "ads3/eigenfunctions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ads3/errors.hpp"

namespace ads3 {

SphericalParams::SphericalParams(int m, int k) : m_(m), k_(k) {
    if (m < 1) throw InvalidArgument("m must be at least 1, got " + std::to_string(m));
    if (k < 0) throw InvalidArgument("k must be nonnegative, got " + std::to_string(k));
    if (static_cast<long long>(k) + 2LL * m > (1LL << 15))
        throw InvalidArgument("k + 2m exceeds 2^15");
}

std::complex<double> ipow(std::complex<double> z, unsigned n) {
    std::complex<double> r(1.0, 0.0);
    while (n) {
        if (n & 1u) r *= z;
        n >>= 1u;
        if (n) z *= z;
    }
    return r;
}

double ipow(double x, unsigned n) {
    double r = 1.0;
    while (n) {
        if (n & 1u) r *= x;
        n >>= 1u;
        if (n) x *= x;
    }
    return r;
}

namespace {

// z1^{-(k+2m)} z2^k written as (z2/z1)^k z1^{-2m}; |z2/z1| < 1 keeps
// intermediate powers bounded.
std::complex<double> harmonic(const SphericalParams& p, std::complex<double> z1, std::complex<double> z2) {
    const std::complex<double> w = 1.0 / z1;
    std::complex<double> v = ipow(w, 2u * static_cast<unsigned>(p.m()));
    if (p.k() > 0) v *= ipow(z2 * w, static_cast<unsigned>(p.k()));
    return v;
}

}  // namespace

std::complex<double> ambient_harmonic(const SphericalParams& p, const FourVector& x) {
    return harmonic(p, {x[0], x[1]}, {x[2], x[3]});
}

std::complex<double> psi(const SphericalParams& p, const AdS3Point& x) {
    const auto [z1, z2] = x.complex_pair();
    return harmonic(p, z1, z2);
}

double log_cosh(double x) {
    x = std::abs(x);
    if (x < 1.0) {
        const double s = std::sinh(0.5 * x);
        return std::log1p(2.0 * s * s);
    }
    return x - std::numbers::ln2 + std::log1p(std::exp(-2.0 * x));
}

double psi_abs(const SphericalParams& p, double norm_x) {
    const double t = 0.5 * norm_x;
    if (p.k() > 0 && t == 0.0) return 0.0;
    double lg = -2.0 * p.m() * log_cosh(t);
    if (p.k() > 0) lg += p.k() * std::log(std::tanh(t));
    return std::exp(lg);
}

double l2_radial_norm_sq(int m, int k) {
    if (m < 1) throw DivergentNorm("radial L2 norm diverges for m < 1");
    if (k < 0) throw InvalidArgument("k must be nonnegative");
    return std::beta(static_cast<double>(k) + 1.0, 2.0 * m - 1.0);
}

}  // namespace ads3
