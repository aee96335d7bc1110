#pragma once

#include <complex>

#include "ads3/psl2.hpp"

namespace ads3 {

// Type (-m, m+k) spherical function, m >= 1, k >= 0, k + 2m <= 2^15.
class SphericalParams {
public:
    SphericalParams(int m, int k);
    int m() const { return m_; }
    int k() const { return k_; }
    double eigenvalue() const { return 4.0 * m_ * (m_ - 1.0); }

private:
    int m_;
    int k_;
};

inline double eigenvalue(const SphericalParams& p) { return p.eigenvalue(); }

// z^n by repeated squaring.
std::complex<double> ipow(std::complex<double> z, unsigned n);
double ipow(double x, unsigned n);

// Ambient harmonic z1^{-(k+2m)} z2^k, homogeneous of degree -2m on Q > 0.
std::complex<double> ambient_harmonic(const SphericalParams& p, const FourVector& x);

// psi_{m,k}(x) = z1^{-(k+2m)} z2^k.
std::complex<double> psi(const SphericalParams& p, const AdS3Point& x);
inline double psi_re(const SphericalParams& p, const AdS3Point& x) { return psi(p, x).real(); }
inline double psi_im(const SphericalParams& p, const AdS3Point& x) { return psi(p, x).imag(); }

// cosh^{-2m}(r/2) tanh^k(r/2), the modulus of psi at a point of norm r.
double psi_abs(const SphericalParams& p, double norm_x);

// log cosh x without overflow or cancellation.
double log_cosh(double x);

// B(k+1, 2m-1) = ∫_0^∞ tanh^{2k} t cosh^{-4m} t sinh 2t dt. Throws DivergentNorm for m < 1.
double l2_radial_norm_sq(int m, int k);
inline double l2_radial_norm_sq(const SphericalParams& p) { return l2_radial_norm_sq(p.m(), p.k()); }

}  // namespace ads3
