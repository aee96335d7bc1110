#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ads3/eigenfunctions.hpp"
#include "ads3/group.hpp"

namespace ads3 {

class SignVector {
public:
    explicit SignVector(std::vector<int> signs);
    // a_j = +1 for b_j >= 0, -1 otherwise.
    static SignVector from_coefficients(std::span<const double> b);
    // Row r of the sample set: a_i = -1 iff bit i of r is set.
    static SignVector from_index(std::size_t r, int k);

    std::size_t size() const { return a_.size(); }
    int operator[](std::size_t i) const { return a_[i]; }
    const std::vector<int>& values() const { return a_; }
    friend bool operator==(const SignVector&, const SignVector&) = default;

private:
    std::vector<int> a_;
};

// pi * sum_i (chi(a_i) - chi(a_{i-1})) N^{-i}, a_{-1} = +1. Throws InvalidN.
double theta_sample(const SignVector& a, int N);

// cos(N^j theta_{a,N}) with the integer part of N^j theta / pi reduced exactly.
double cos_scaled_theta(const SignVector& a, int N, int j);

// k(theta/2) a(eps) k(theta/2)^{-1} with theta = theta_{a,3}; its norm is 2 eps.
AdS3Point sample_point(const SignVector& a, double eps);

// sum_j b_j cos(3^j theta_{a,3}) u^{3^j}. Throws SignMismatch unless a is the sign vector of b.
double f_b(std::span<const double> b, const SignVector& a, double u);

template <class T>
struct CertifiedValue {
    T value{};
    double error_radius = 0.0;

    friend CertifiedValue operator+(const CertifiedValue& x, const CertifiedValue& y) {
        return {x.value + y.value, x.error_radius + y.error_radius};
    }
    friend CertifiedValue operator*(double c, const CertifiedValue& x) {
        return {c * x.value, std::abs(c) * x.error_radius};
    }
};

using CertifiedReal = CertifiedValue<double>;
using CertifiedComplex = CertifiedValue<std::complex<double>>;

// Bound on sum over orbit points y with ‖y‖ > R0 of cosh^{-2m}(‖y‖/2),
// given N(x,R) < A e^{aR}. Throws DivergentTail when the shell ratio
// e^{a R0} cosh^{-2m}(R0/2) is >= 1.
double series_tail_bound(int m, double R0, const GrowthConstants& growth);

// Rounding envelope for a sum of n terms each computed with O(k + 2m) flops.
double rounding_allowance(std::size_t n, int k, int m, double abs_sum);

// Sum of psi(p, y) over orbit points y of x with ‖y‖ <= R0, plus the tail bound.
CertifiedComplex truncated_series(const GroupPresentation& gamma, const SphericalParams& p, const AdS3Point& x,
                                  double R0, const GrowthConstants& growth, const EnumerationLimits& limits = {});

struct SeriesOptions {
    double truncation_radius = 0.0;  // 0 selects R0 automatically
    double eps_gamma = std::numeric_limits<double>::quiet_NaN();  // checked when finite
    EnumerationLimits limits{64, 10'000'000};
    int max_k = 12;
    int workers = 1;
};

enum class NonvanishingVerdict { Verified, Inconclusive };

struct NonvanishingResult {
    NonvanishingVerdict verdict = NonvanishingVerdict::Inconclusive;
    double main_term = 0.0;
    double enumerated_tail = 0.0;  // sum of |Re psi_{m,b}| over other orbit points in B(R0)
    double growth_tail = 0.0;      // bound beyond R0
    double rounding = 0.0;
    double tail_bound = 0.0;       // enumerated_tail + growth_tail + rounding
    double shell_bound = 0.0;      // 3^{k-1} A sum_n e^{4 a eps (n+1)} cosh^{-2m}(2 eps n) f_b(tanh 2 eps (n+1))
    double R0 = 0.0;
    std::size_t orbit_points = 0;
    SignVector signs{std::vector<int>{1}};
};

// Decides Re(psi_{m,b})^Gamma(x_{a,eps}) != 0 by comparing the identity term
// with a bound on the rest of the orbit. Throws InvalidEpsilon unless
// 0 < eps < eps_gamma/4.
NonvanishingResult nonvanishing_check(const GroupPresentation& gamma, int m, std::span<const double> b, double eps,
                                      const GrowthConstants& growth, double eps_gamma, const SeriesOptions& opts = {});

enum class CertificateVerdict { Certified, Inconclusive };

struct RankCertificate {
    std::vector<double> column_scales;
    double gram_min_eigenvalue = 0.0;
    double sigma_min = 0.0;    // certified lower bound for the scaled matrix
    double total_error = 0.0;  // sqrt(rows cols) * max scaled radius
    CertificateVerdict verdict = CertificateVerdict::Inconclusive;
};

// values and radii are row-major rows x cols. Columns are scaled to unit
// max-norm first; Certified iff sigma_min > total_error.
RankCertificate certify_rank(const std::vector<std::vector<double>>& values,
                             const std::vector<std::vector<double>>& radii);

struct IndependenceCertificate {
    std::string label;
    int m = 0;
    int k = 0;
    double eps = 0.0;
    double eps_gamma = std::numeric_limits<double>::quiet_NaN();
    GrowthConstants growth;
    double R0 = 0.0;
    std::vector<SignVector> signs;
    std::vector<AdS3Point> sample_points;
    std::vector<std::vector<CertifiedReal>> entries;  // 2^k x k
    std::vector<std::size_t> orbit_points;
    RankCertificate rank;
};

// M[a][j] = truncated (Re psi_{m,3^j})^Gamma(x_{a,eps}) over all 2^k sign vectors.
IndependenceCertificate independence_certificate(const GroupPresentation& gamma, int m, int k, double eps,
                                                 const GrowthConstants& growth, const SeriesOptions& opts = {});

std::string to_string(CertificateVerdict v);
std::string to_string(NonvanishingVerdict v);

}  // namespace ads3
