#include "ads3/series.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include <Eigen/Dense>

#include "ads3/errors.hpp"

namespace ads3 {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kExplicitShells = 256;

int chi(int s) { return s < 0 ? 1 : 0; }

double log_add(double x, double y) {
    if (x == -INFINITY) return y;
    if (y == -INFINITY) return x;
    const double hi = std::max(x, y), lo = std::min(x, y);
    return hi + std::log1p(std::exp(lo - hi));
}

// log of series_tail_bound, +inf when the shell ratio is >= 1.
double log_tail_bound(int m, double R0, const GrowthConstants& g) {
    const double lq = g.a * R0 - 2.0 * m * log_cosh(R0 / 2.0);
    if (!(lq < 0.0)) return INFINITY;
    const double la = std::log(g.A);
    double acc = -INFINITY;
    for (int n = 1; n <= kExplicitShells; ++n)
        acc = log_add(acc, la + g.a * R0 * (n + 1) - 2.0 * m * log_cosh(R0 * n / 2.0));
    // Beyond the explicit shells cosh(R0 n/2) >= cosh(R0/2)^n gives a geometric series.
    const double rest = la + g.a * R0 + (kExplicitShells + 1) * lq - std::log1p(-std::exp(lq));
    return log_add(acc, rest);
}

double safe_exp(double l) {
    const double v = std::exp(l);
    return l > -INFINITY ? std::max(v, std::numeric_limits<double>::denorm_min()) : 0.0;
}

// Smallest R0 on the ladder 1, 2, ..., 64 whose tail bound is below exp(log_target).
double choose_radius(int m, const GrowthConstants& g, double log_target) {
    double best_r = 0.0, best_l = INFINITY;
    for (int r = 1; r <= 64; ++r) {
        const double l = log_tail_bound(m, r, g);
        if (l <= log_target) return r;
        if (l < best_l) {
            best_l = l;
            best_r = r;
        }
    }
    if (best_l == INFINITY)
        throw DivergentTail("tail bound diverges for every truncation radius up to 64 (m = " + std::to_string(m) + ")");
    return best_r;
}

bool entries_less(const AdS3Point& u, const AdS3Point& v) {
    return u.element().entries() < v.element().entries();
}

// Orbit points gamma x with ‖gamma x‖ <= R0 in a fixed order.
struct SortedOrbit {
    std::vector<AdS3Point> points;
    std::vector<bool> is_identity_term;
    bool complete = false;
};

SortedOrbit sorted_orbit(const GroupPresentation& gamma, const AdS3Point& x, double R0, const EnumerationLimits& lim) {
    const OrbitBall ball = exhaustive_ball(gamma, x, R0, lim);
    std::vector<std::pair<AdS3Point, bool>> pts;
    if (ball.group_exhausted) {
        // A finite group contributes its whole orbit and no tail.
        for (const auto& e : enumerate_elements(gamma, lim.max_word_len, lim.budget))
            pts.emplace_back(e.element.act(x), e.word.empty());
    } else {
        for (const auto& e : ball.elements) pts.emplace_back(e.element.act(x), e.word.empty());
    }
    std::stable_sort(pts.begin(), pts.end(),
                     [](const auto& u, const auto& v) { return entries_less(u.first, v.first); });
    SortedOrbit out;
    out.complete = ball.group_exhausted;
    for (auto& [p, id] : pts) {
        out.points.push_back(p);
        out.is_identity_term.push_back(id);
    }
    return out;
}

template <class F>
void parallel_rows(std::size_t rows, int workers, F&& f) {
    const auto nw = static_cast<std::size_t>(std::max(1, workers));
    if (nw == 1 || rows < 2) {
        for (std::size_t r = 0; r < rows; ++r) f(r);
        return;
    }
    std::vector<std::exception_ptr> errors(nw);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t r = w; r < rows; r += nw) f(r);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace

SignVector::SignVector(std::vector<int> signs) : a_(std::move(signs)) {
    if (a_.empty()) throw InvalidArgument("sign vector must be nonempty");
    for (int s : a_)
        if (s != 1 && s != -1) throw InvalidArgument("sign vector entries must be +1 or -1");
}

SignVector SignVector::from_coefficients(std::span<const double> b) {
    std::vector<int> a;
    for (double x : b) a.push_back(x >= 0.0 ? 1 : -1);
    return SignVector(std::move(a));
}

SignVector SignVector::from_index(std::size_t r, int k) {
    std::vector<int> a(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) a[i] = ((r >> i) & 1u) ? -1 : 1;
    return SignVector(std::move(a));
}

double theta_sample(const SignVector& a, int N) {
    if (N < 3 || N % 2 == 0) throw InvalidN("N must be an odd integer >= 3, got " + std::to_string(N));
    double theta = 0.0, scale = 1.0;
    int prev = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        theta += (chi(a[i]) - chi(prev)) * scale;
        prev = a[i];
        scale /= N;
    }
    return std::numbers::pi * theta;
}

double cos_scaled_theta(const SignVector& a, int N, int j) {
    if (N < 3 || N % 2 == 0) throw InvalidN("N must be an odd integer >= 3, got " + std::to_string(N));
    // N^j theta / pi = P + F with P = sum_{i<=j} d_i N^{j-i} an integer whose
    // parity is that of sum |d_i| (N odd), and |F| < 1/2.
    int parity = 0;
    double frac = 0.0, scale = 1.0 / N;
    int prev = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int d = chi(a[i]) - chi(prev);
        prev = a[i];
        if (static_cast<int>(i) <= j) {
            parity ^= (d != 0);
        } else {
            frac += d * scale;
            scale /= N;
        }
    }
    const double c = std::cos(std::numbers::pi * frac);
    return parity ? -c : c;
}

AdS3Point sample_point(const SignVector& a, double eps) {
    if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
    const double theta = theta_sample(a, 3);
    return AdS3Point::from_complex_pair(std::cosh(eps), std::polar(std::sinh(eps), theta));
}

double f_b(std::span<const double> b, const SignVector& a, double u) {
    if (b.size() != a.size() || !(SignVector::from_coefficients(b) == a))
        throw SignMismatch("sign vector does not match the signs of b");
    double v = 0.0, e = 1.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] != 0.0) v += b[j] * cos_scaled_theta(a, 3, static_cast<int>(j)) * std::pow(u, e);
        e *= 3.0;
    }
    return v;
}

double series_tail_bound(int m, double R0, const GrowthConstants& growth) {
    if (!(R0 > 0.0)) throw InvalidArgument("truncation radius must be positive");
    const double l = log_tail_bound(m, R0, growth);
    if (l == INFINITY)
        throw DivergentTail("shell ratio e^{a R0} cosh^{-2m}(R0/2) >= 1 for m = " + std::to_string(m) +
                            ", a = " + std::to_string(growth.a) + ", R0 = " + std::to_string(R0));
    return safe_exp(l);
}

double rounding_allowance(std::size_t n, int k, int m, double abs_sum) {
    return 10.0 * kEps * (static_cast<double>(n) + k + 2.0 * m) * abs_sum;
}

CertifiedComplex truncated_series(const GroupPresentation& gamma, const SphericalParams& p, const AdS3Point& x,
                                  double R0, const GrowthConstants& growth, const EnumerationLimits& limits) {
    const SortedOrbit orbit = sorted_orbit(gamma, x, R0, limits);
    std::complex<double> sum = 0.0;
    double abs_sum = 0.0;
    for (const auto& y : orbit.points) {
        const auto v = psi(p, y);
        sum += v;
        abs_sum += std::abs(v);
    }
    CertifiedComplex out{sum, rounding_allowance(orbit.points.size(), p.k(), p.m(), abs_sum)};
    if (!orbit.complete) out.error_radius += series_tail_bound(p.m(), R0, growth);
    return out;
}

NonvanishingResult nonvanishing_check(const GroupPresentation& gamma, int m, std::span<const double> b, double eps,
                                      const GrowthConstants& growth, double eps_gamma, const SeriesOptions& opts) {
    if (!(eps > 0.0) || !(eps < eps_gamma / 4.0))
        throw InvalidEpsilon("need 0 < eps < eps_gamma/4 (eps = " + std::to_string(eps) +
                             ", eps_gamma = " + std::to_string(eps_gamma) + ")");
    if (b.empty()) throw InvalidArgument("coefficient vector b must be nonempty");
    const int k = static_cast<int>(b.size());
    std::vector<SphericalParams> params;
    for (int j = 0, e = 1; j < k; ++j, e *= 3) params.emplace_back(m, e);

    NonvanishingResult res;
    res.signs = SignVector::from_coefficients(b);
    const AdS3Point x = sample_point(res.signs, eps);
    res.main_term = std::exp(-2.0 * m * log_cosh(eps)) * f_b(b, res.signs, std::tanh(eps));

    double bsum = 0.0;
    for (double v : b) bsum += std::abs(v);

    // Proof-side bound: 3^{k-1} A sum_n e^{4 a eps (n+1)} cosh^{-2m}(2 eps n) f_b(tanh 2 eps (n+1)).
    {
        const double lq = 4.0 * growth.a * eps - 2.0 * m * log_cosh(2.0 * eps);
        if (lq < 0.0) {
            const double pre = std::log(std::pow(3.0, k - 1) * growth.A);
            double acc = -INFINITY;
            for (int n = 1; n <= kExplicitShells; ++n) {
                const double fv = f_b(b, res.signs, std::tanh(2.0 * eps * (n + 1)));
                if (fv > 0.0)
                    acc = log_add(acc, pre + 4.0 * growth.a * eps * (n + 1) - 2.0 * m * log_cosh(2.0 * eps * n) +
                                           std::log(fv));
            }
            const double f1 = f_b(b, res.signs, 1.0);
            if (f1 > 0.0)
                acc = log_add(acc, pre + 4.0 * growth.a * eps + std::log(f1) + (kExplicitShells + 1) * lq -
                                       std::log1p(-std::exp(lq)));
            res.shell_bound = safe_exp(acc);
        } else {
            res.shell_bound = INFINITY;
        }
    }

    if (!(res.main_term > 0.0)) {
        res.verdict = NonvanishingVerdict::Inconclusive;
        return res;
    }

    res.R0 = opts.truncation_radius > 0.0 ? opts.truncation_radius
                                          : choose_radius(m, growth, std::log(res.main_term) + std::log(1e-3 / bsum));
    const SortedOrbit orbit = sorted_orbit(gamma, x, res.R0, opts.limits);
    res.orbit_points = orbit.points.size();
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < orbit.points.size(); ++i) {
        double re = 0.0;
        for (int j = 0; j < k; ++j) {
            const auto v = psi(params[j], orbit.points[i]);
            re += b[j] * v.real();
            abs_sum += std::abs(b[j]) * std::abs(v);
        }
        if (!orbit.is_identity_term[i]) res.enumerated_tail += std::abs(re);
    }
    res.rounding = rounding_allowance(orbit.points.size() * k, params.back().k(), m, abs_sum);
    res.growth_tail = orbit.complete ? 0.0 : bsum * series_tail_bound(m, res.R0, growth);
    res.tail_bound = res.enumerated_tail + res.growth_tail + res.rounding;
    res.verdict = res.main_term > res.tail_bound ? NonvanishingVerdict::Verified : NonvanishingVerdict::Inconclusive;
    return res;
}

RankCertificate certify_rank(const std::vector<std::vector<double>>& values,
                             const std::vector<std::vector<double>>& radii) {
    const std::size_t rows = values.size();
    if (rows == 0 || radii.size() != rows) throw InvalidCertificateInput("values and radii need the same rows");
    const std::size_t cols = values.front().size();
    if (cols == 0 || cols > rows) throw InvalidCertificateInput("need 1 <= cols <= rows");
    for (std::size_t i = 0; i < rows; ++i) {
        if (values[i].size() != cols || radii[i].size() != cols)
            throw InvalidCertificateInput("ragged matrix at row " + std::to_string(i));
        for (std::size_t j = 0; j < cols; ++j)
            if (!std::isfinite(values[i][j]) || !(radii[i][j] >= 0.0) || !std::isfinite(radii[i][j]))
                throw InvalidCertificateInput("non-finite value or invalid radius at (" + std::to_string(i) + ", " +
                                              std::to_string(j) + ")");
    }

    RankCertificate rc;
    rc.column_scales.assign(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) rc.column_scales[j] = std::max(rc.column_scales[j], std::abs(values[i][j]));

    Eigen::MatrixXd S(rows, cols);
    double max_err = 0.0;
    bool zero_column = false;
    for (std::size_t j = 0; j < cols; ++j) {
        const double d = rc.column_scales[j];
        if (d == 0.0) zero_column = true;
        for (std::size_t i = 0; i < rows; ++i) {
            S(i, j) = d > 0.0 ? values[i][j] / d : 0.0;
            max_err = std::max(max_err, d > 0.0 ? radii[i][j] / d : INFINITY);
        }
    }
    rc.total_error = std::sqrt(static_cast<double>(rows * cols)) * max_err;
    if (zero_column) {
        rc.verdict = CertificateVerdict::Inconclusive;
        return rc;
    }

    const Eigen::MatrixXd G = S.transpose() * S;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
    rc.gram_min_eigenvalue = es.eigenvalues()(0);
    const double allowance = 1e-10 * G.norm();
    rc.sigma_min = std::sqrt(std::max(0.0, rc.gram_min_eigenvalue - allowance));
    rc.verdict = rc.sigma_min > rc.total_error ? CertificateVerdict::Certified : CertificateVerdict::Inconclusive;
    return rc;
}

IndependenceCertificate independence_certificate(const GroupPresentation& gamma, int m, int k, double eps,
                                                 const GrowthConstants& growth, const SeriesOptions& opts) {
    if (k < 1 || k > opts.max_k)
        throw InvalidArgument("k must lie in [1, " + std::to_string(opts.max_k) + "], got " + std::to_string(k));
    if (!(eps > 0.0)) throw InvalidEpsilon("eps must be positive");
    if (std::isfinite(opts.eps_gamma) && !(eps < opts.eps_gamma / 4.0))
        throw InvalidEpsilon("need eps < eps_gamma/4 (eps = " + std::to_string(eps) +
                             ", eps_gamma = " + std::to_string(opts.eps_gamma) + ")");
    std::vector<SphericalParams> params;
    for (int j = 0, e = 1; j < k; ++j, e *= 3) params.emplace_back(m, e);

    IndependenceCertificate cert;
    cert.label = gamma.label();
    cert.m = m;
    cert.k = k;
    cert.eps = eps;
    cert.eps_gamma = opts.eps_gamma;
    cert.growth = growth;

    if (opts.truncation_radius > 0.0) {
        cert.R0 = opts.truncation_radius;
    } else {
        // Aim for a tail far below the smallest identity term of every column,
        // |cos| >= 3^{-(k-1)} tanh^{3^j}(eps) cosh^{-2m}(eps).
        const double lmain = -(k - 1) * std::log(3.0) + std::pow(3.0, k - 1) * std::log(std::tanh(eps)) -
                             2.0 * m * log_cosh(eps);
        cert.R0 = choose_radius(m, growth, lmain + std::log(1e-6));
    }

    const std::size_t rows = std::size_t{1} << k;
    cert.signs.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        cert.signs.push_back(SignVector::from_index(r, k));
        cert.sample_points.push_back(sample_point(cert.signs.back(), eps));
    }
    cert.entries.assign(rows, std::vector<CertifiedReal>(static_cast<std::size_t>(k)));
    cert.orbit_points.assign(rows, 0);

    parallel_rows(rows, opts.workers, [&](std::size_t r) {
        const SortedOrbit orbit = sorted_orbit(gamma, cert.sample_points[r], cert.R0, opts.limits);
        cert.orbit_points[r] = orbit.points.size();
        const double tail = orbit.complete ? 0.0 : series_tail_bound(m, cert.R0, growth);
        for (int j = 0; j < k; ++j) {
            double sum = 0.0, abs_sum = 0.0;
            for (const auto& y : orbit.points) {
                const auto v = psi(params[j], y);
                sum += v.real();
                abs_sum += std::abs(v);
            }
            cert.entries[r][j] = {sum, tail + rounding_allowance(orbit.points.size(), params[j].k(), m, abs_sum)};
        }
    });

    std::vector<std::vector<double>> values(rows, std::vector<double>(k)), radii(rows, std::vector<double>(k));
    for (std::size_t r = 0; r < rows; ++r)
        for (int j = 0; j < k; ++j) {
            values[r][j] = cert.entries[r][j].value;
            radii[r][j] = cert.entries[r][j].error_radius;
        }
    cert.rank = certify_rank(values, radii);
    return cert;
}

std::string to_string(CertificateVerdict v) { return v == CertificateVerdict::Certified ? "Certified" : "Inconclusive"; }
std::string to_string(NonvanishingVerdict v) { return v == NonvanishingVerdict::Verified ? "Verified" : "Inconclusive"; }

}  // namespace ads3
