#include "ads3/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ads3/errors.hpp"

namespace ads3 {

namespace {

constexpr double kPi = std::numbers::pi;

template <class T, class F>
std::array<T, 4> second_differences(const F& f, const FourVector& x, double h) {
    const double q = quadratic_form(x);
    const double ex = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    if (q < 10.0 * h * ex) throw NearCone("point is within 10h of the light cone Q = 0");
    const T f0 = f(x);
    std::array<T, 4> d{};
    for (int i = 0; i < 4; ++i) {
        FourVector p = x, m = x;
        p[i] += h;
        m[i] -= h;
        d[i] = (f(p) - 2.0 * f0 + f(m)) / (h * h);
    }
    return d;
}

double log_sum_exp(double x, double y) {
    if (x == -INFINITY) return y;
    if (y == -INFINITY) return x;
    const double hi = std::max(x, y);
    return hi + std::log1p(std::exp(std::min(x, y) - hi));
}

double lcosh(double x) {
    x = std::abs(x);
    return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2;
}

// log of sum_j c_j u^j for c_j >= 0, u in (0, 1].
double log_poly(const std::vector<double>& c, double u) {
    const double lu = std::log(u);
    double acc = -INFINITY;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] > 0.0) acc = log_sum_exp(acc, std::log(c[j]) + static_cast<double>(j) * lu);
    return acc;
}

// log LHS - log RHS of the tail domination inequality for one polynomial.
double log_ratio(double C, double a, double eps, int m, const std::vector<double>& c) {
    const double lrhs = -m * lcosh(eps) + log_poly(c, std::tanh(eps));
    const double lq = 4.0 * a * eps - m * lcosh(2.0 * eps);
    if (!(lq < 0.0)) return INFINITY;
    const double lc = std::log(C);
    const double lf1 = log_poly(c, 1.0);
    double acc = -INFINITY;
    for (int n = 1; n <= 1'000'000; ++n) {
        const double term = lc + 4.0 * a * (n + 1) * eps - m * lcosh(2.0 * n * eps) +
                            log_poly(c, std::tanh(2.0 * (n + 1) * eps));
        acc = log_sum_exp(acc, term);
        // Terms past n are at most C e^{4 a eps} f(1) q^k (cosh(2 n eps) >= cosh(2 eps)^n).
        const double rest = lc + 4.0 * a * eps + lf1 + (n + 1) * lq - std::log1p(-std::exp(lq));
        if (rest < acc - 45.0) return log_sum_exp(acc, rest) - lrhs;
    }
    return INFINITY;
}

long double theta_ld(const std::vector<int>& a, int N) {
    long double th = 0.0L, scale = 1.0L;
    int prev = 1;
    for (int s : a) {
        th += static_cast<long double>((s < 0) - (prev < 0)) * scale;
        prev = s;
        scale /= N;
    }
    return std::numbers::pi_v<long double> * th;
}

long double cos_power_ld(long double theta, int N, int j) {
    long double x = theta;
    for (int i = 0; i < j; ++i) x = std::fmod(x * N, 2.0L * std::numbers::pi_v<long double>);
    return std::cos(x);
}

GroupElement random_element(std::mt19937_64& rng, double tmax) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi), tt(0.0, tmax);
    const double a = ang(rng), t = tt(rng), b = ang(rng);
    return from_cartan(a, t, b);
}

}  // namespace

double fd_ambient_laplacian(const ScalarField& F, const FourVector& x, const FDConfig& cfg) {
    const auto d = second_differences<double>(F, x, cfg.h);
    return d[0] + d[1] - d[2] - d[3];
}

FDLaplacian fd_ambient_laplacian(const ComplexField& F, const FourVector& x, const FDConfig& cfg) {
    const auto d = second_differences<std::complex<double>>(F, x, cfg.h);
    return {d[0] + d[1] - d[2] - d[3], std::abs(d[0]) + std::abs(d[1]) + std::abs(d[2]) + std::abs(d[3])};
}

EigenResidual laplacian_eigen_check(const SphericalParams& p, const AdS3Point& x, const FDConfig& cfg) {
    const int m = p.m();
    auto extension = [&](const FourVector& v) {
        const double q = quadratic_form(v);
        const double s = 1.0 / std::sqrt(q);
        const FourVector u{v[0] * s, v[1] * s, v[2] * s, v[3] * s};
        return std::pow(q, -m) * psi(p, AdS3Point::from_four_vector(u));
    };
    const FourVector v = x.four_vector();
    const FDLaplacian lap = fd_ambient_laplacian(ComplexField(extension), v, cfg);
    const std::complex<double> psi0 = psi(p, x);
    // At Q = 1: box_H psi = lambda psi - box F, so the eigen-residual is |box F|.
    const std::complex<double> box_h = p.eigenvalue() * psi0 - lap.value;
    EigenResidual r;
    r.absolute = std::abs(box_h - p.eigenvalue() * psi0);
    r.normalized = r.absolute / (1.0 + std::abs(psi0));
    r.relative = lap.scale > 0.0 ? r.absolute / lap.scale : r.absolute;
    return r;
}

CheckResult check_tail_domination(double C, double a, double eps, int s, int m, int random_trials,
                                  std::uint64_t seed) {
    CheckResult res;
    std::vector<std::vector<double>> trials;
    for (int j = 0; j <= s; ++j) {
        std::vector<double> c(static_cast<std::size_t>(s) + 1, 0.0);
        c[j] = 1.0;
        trials.push_back(std::move(c));
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < random_trials; ++t) {
        std::vector<double> c(static_cast<std::size_t>(s) + 1);
        for (auto& v : c) v = u(rng) < 0.3 ? 0.0 : std::pow(10.0, -6.0 * u(rng));
        if (std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; })) c[0] = 1.0;
        trials.push_back(std::move(c));
    }
    for (const auto& c : trials) {
        const double lr = log_ratio(C, a, eps, m, c);
        const double margin = lr == INFINITY ? -INFINITY : -std::expm1(lr);
        res.min_margin = std::min(res.min_margin, margin);
        if (!(lr < 0.0)) res.holds = false;
        ++res.cases;
    }
    return res;
}

CheckResult check_sign_pattern(int k, int N) {
    if (k < 1 || k > 16) throw InvalidArgument("k must lie in [1, 16]");
    if (N < 3 || N % 2 == 0) throw InvalidN("N must be an odd integer >= 3");
    CheckResult res;
    std::vector<int> a(static_cast<std::size_t>(k));
    for (std::size_t r = 0; r < (std::size_t{1} << k); ++r) {
        for (int i = 0; i < k; ++i) a[i] = ((r >> i) & 1u) ? -1 : 1;
        const long double th = theta_ld(a, N);
        for (int j = 0; j < k; ++j) {
            const double v = static_cast<double>(a[j] * cos_power_ld(th, N, j));
            res.min_margin = std::min(res.min_margin, v);
            if (!(v > 0.0)) res.holds = false;
        }
        ++res.cases;
    }
    return res;
}

CheckResult check_coefficient_bound(int k) {
    if (k < 1 || k > 14) throw InvalidArgument("k must lie in [1, 14]");
    CheckResult res;
    const double bound = std::pow(3.0, -(k - 1));
    std::vector<int> a(static_cast<std::size_t>(k));
    for (std::size_t r = 0; r < (std::size_t{1} << k); ++r) {
        for (int i = 0; i < k; ++i) a[i] = ((r >> i) & 1u) ? -1 : 1;
        const long double th = theta_ld(a, 3);
        for (int j = 0; j < k; ++j) {
            const double c = std::abs(static_cast<double>(cos_power_ld(th, 3, j)));
            res.min_margin = std::min(res.min_margin, c / bound - 1.0);
            if (!(c >= bound)) res.holds = false;
        }
        ++res.cases;
    }
    return res;
}

CheckResult check_sine_inequality(std::size_t grid_points) {
    CheckResult res;
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double x = grid_points > 1 ? static_cast<double>(i) / static_cast<double>(grid_points - 1) : 0.0;
        const double d = std::sin(kPi * x / 2.0) - x;
        res.min_margin = std::min(res.min_margin, d);
        if (d < -1e-15) res.holds = false;
        ++res.cases;
    }
    return res;
}

ProgressionEvidence search_arithmetic_progressions(const std::vector<int>& signs, int max_step,
                                                   std::size_t grid_points) {
    ProgressionEvidence ev;
    ev.grid_points = grid_points;
    for (int m0 = 1; m0 <= max_step; ++m0) {
        for (int d = 1; d <= max_step; ++d) {
            ++ev.progressions;
            for (std::size_t i = 0; i < grid_points; ++i) {
                const double th = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(grid_points);
                bool ok = true;
                for (std::size_t j = 0; j < signs.size() && ok; ++j)
                    ok = signs[j] * std::cos((m0 + static_cast<double>(j) * d) * th) > 0.0;
                if (ok) ++ev.hits;
            }
        }
    }
    return ev;
}

CheckResult fuzz_displacement_inequality(std::size_t trials, std::uint64_t seed) {
    CheckResult res;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        const IsometryPair g{random_element(rng, 3.0), random_element(rng, 3.0)};
        const AdS3Point x(random_element(rng, 3.0));
        const double slack = norm(g.act(x)) - (std::abs(norm(g.first) - norm(g.second)) - norm(x));
        res.min_margin = std::min(res.min_margin, slack);
        if (slack < -1e-9) res.holds = false;
        ++res.cases;
    }
    return res;
}

CheckResult check_conjugated_rotation(int n, double r) {
    if (n < 2) throw InvalidClass("n must be at least 2");
    CheckResult res;
    const double s = std::sinh(r / 4.0) * std::sin(kPi / n);
    const double eta_n = std::acosh(1.0 + 2.0 * s * s);
    const double e = std::exp(r / 8.0);
    for (int j = 1; j < n; ++j) {
        const double c = std::cos(j * kPi / n), sn = std::sin(j * kPi / n);
        // a(r/8)^{-1} k a(r/8) = [[c, -sn e^{-2u}], [sn e^{2u}, c]] with e = e^u.
        const double b = -sn / (e * e), cc = sn * e * e;
        const double nv = std::acosh(std::max(1.0, (2.0 * c * c + b * b + cc * cc) / 2.0));
        const double slack = nv - eta_n;
        res.min_margin = std::min(res.min_margin, slack);
        if (slack < -1e-12) res.holds = false;
        ++res.cases;
    }
    return res;
}

double radial_norm_quadrature(int m, int k) {
    auto f = [m, k](double t) {
        if (t > 350.0) return 0.0;
        // tanh^{2k} t cosh^{-4m} t sinh 2t = 2 tanh^{2k+1} t cosh^{2-4m} t
        return 2.0 * std::pow(std::tanh(t), 2 * k + 1) * std::pow(std::cosh(t), 2.0 - 4.0 * m);
    };
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::numeric_limits<double>::infinity(),
                                                                        15, 1e-13, &err);
}

}  // namespace ads3
