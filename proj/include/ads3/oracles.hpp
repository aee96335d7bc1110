#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "ads3/eigenfunctions.hpp"
#include "ads3/psl2.hpp"

namespace ads3 {

struct FDConfig {
    double h = 1e-3;
};

using ScalarField = std::function<double(const FourVector&)>;
using ComplexField = std::function<std::complex<double>(const FourVector&)>;

struct FDLaplacian {
    std::complex<double> value;  // d1^2 F + d2^2 F - d3^2 F - d4^2 F
    double scale = 0.0;          // sum_i |d_i^2 F|
};

// Central second differences. Throws NearCone if Q(x) < 10 h |x|.
double fd_ambient_laplacian(const ScalarField& F, const FourVector& x, const FDConfig& cfg = {});
FDLaplacian fd_ambient_laplacian(const ComplexField& F, const FourVector& x, const FDConfig& cfg = {});

struct EigenResidual {
    double absolute = 0.0;    // |box_H psi - lambda psi|
    double normalized = 0.0;  // absolute / (1 + |psi|)
    double relative = 0.0;    // absolute / second-derivative scale
};

// box_H psi computed from the degree -2m extension F = Q^{-m} psi(x/sqrt Q):
// box_H psi = lambda psi - box_{R^{2,2}} F at Q = 1.
EigenResidual laplacian_eigen_check(const SphericalParams& p, const AdS3Point& x, const FDConfig& cfg = {});

struct CheckResult {
    bool holds = true;
    double min_margin = std::numeric_limits<double>::infinity();
    std::size_t cases = 0;
};

// Tail domination for polynomials of degree <= s with nonnegative coefficients:
//   C sum_{n>=1} e^{4a(n+1)eps} cosh(2 n eps)^{-m} f(tanh 2(n+1)eps) < cosh(eps)^{-m} f(tanh eps).
// Trials are the monomials x^0..x^s and random_trials seeded random polynomials.
// Margin is 1 - LHS/RHS.
CheckResult check_tail_domination(double C, double a, double eps, int s, int m, int random_trials = 16,
                                  std::uint64_t seed = 1);

// a_j cos(N^j theta_{a,N}) > 0 for every a in {±1}^k and j < k. Margin is the minimum of a_j cos(...).
CheckResult check_sign_pattern(int k, int N);

// |cos(3^j theta_{a,3})| >= 3^{-(k-1)} for every a and j < k. Margin is min |cos| 3^{k-1} - 1.
CheckResult check_coefficient_bound(int k);

// sin(pi x / 2) >= x on a uniform grid of [0, 1].
CheckResult check_sine_inequality(std::size_t grid_points);

struct ProgressionEvidence {
    std::size_t progressions = 0;
    std::size_t grid_points = 0;
    std::size_t hits = 0;  // (progression, theta) pairs meeting every sign condition
};

// Grid search for theta with a_j cos(m_j theta) > 0, m_j = m0 + j d, over
// 1 <= m0, d <= max_step. Evidence only: a grid cannot prove nonexistence.
ProgressionEvidence search_arithmetic_progressions(const std::vector<int>& signs, int max_step,
                                                   std::size_t grid_points);

// ‖(g1,g2) x‖ >= |‖g1‖ - ‖g2‖| - ‖x‖ - 1e-9 on random inputs.
CheckResult fuzz_displacement_inequality(std::size_t trials, std::uint64_t seed);

// ‖a(r/8)^{-1} k(j pi/n) a(r/8)‖ >= eta_n for j = 1..n-1. Margin is the minimum slack.
CheckResult check_conjugated_rotation(int n, double r);

// Adaptive Gauss-Kronrod value of ∫_0^∞ tanh^{2k} t cosh^{-4m} t sinh 2t dt.
double radial_norm_quadrature(int m, int k);

}  // namespace ads3
