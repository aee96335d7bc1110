#include "ads3/thresholds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ads3/eigenfunctions.hpp"
#include "ads3/errors.hpp"

namespace ads3 {

namespace {

double softplus(double y) { return y > 0.0 ? y + std::log1p(std::exp(-y)) : std::log1p(std::exp(y)); }

}  // namespace

double m_threshold(const ThresholdInputs& in) {
    if (!(in.C > 0.0) || !(in.a > 0.0) || !(in.eps > 0.0) || !(in.s >= 1.0))
        throw InvalidArgument("threshold inputs need C, a, eps > 0 and s >= 1");
    const double ln2s = in.s * std::numbers::ln2;
    const double num = ln2s + 2.0 * in.a * in.eps + softplus(ln2s + std::log(in.C) + 6.0 * in.a * in.eps);
    return num / log_cosh(in.eps);
}

MTilde m_tilde(double C, double a, double delta, double s) {
    if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
    auto f = [&](double e) { return m_threshold(C, a, e, s); };

    constexpr int kGrid = 241;
    const double lo = delta * 1e-6, hi = delta * (1.0 - 1e-12);
    std::vector<double> xs(kGrid), fs(kGrid);
    int best = 0;
    for (int i = 0; i < kGrid; ++i) {
        xs[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (kGrid - 1));
        fs[i] = f(xs[i]);
        if (fs[i] < fs[best]) best = i;
    }
    MTilde out{fs[best], xs[best]};

    double l = xs[std::max(best - 1, 0)], r = xs[std::min(best + 1, kGrid - 1)];
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = r - g * (r - l), x2 = l + g * (r - l);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && (r - l) > 1e-12 * r; ++it) {
        if (f1 < f2) {
            r = x2;
            x2 = x1;
            f2 = f1;
            x1 = r - g * (r - l);
            f1 = f(x1);
        } else {
            l = x1;
            x1 = x2;
            f1 = f2;
            x2 = l + g * (r - l);
            f2 = f(x2);
        }
        if (f1 < out.value) out = {f1, x1};
        if (f2 < out.value) out = {f2, x2};
    }
    return out;
}

MGamma m_gamma(int k, std::span<const GrowthConstants> candidates, double eps_gamma) {
    if (k < 1) throw InvalidArgument("k must be at least 1");
    MGamma out{std::numeric_limits<double>::infinity(), std::nullopt, 0.0};
    if (!(eps_gamma > 0.0) || !std::isfinite(eps_gamma)) return out;
    const double s = std::pow(3.0, k - 1);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        const MTilde mt = m_tilde(s * c.A, c.a, eps_gamma / 4.0, s);
        const double v = std::max(mt.value / 2.0, c.a);
        if (v < out.value) out = {v, i, mt.argmin};
    }
    return out;
}

double eta(int n, double r) {
    if (n < 2) throw InvalidClass("eta needs n >= 2, got " + std::to_string(n));
    if (!(r > 0.0)) throw InvalidArgument("r must be positive");
    // cosh(eta) - 1 = 2 sinh^2(eta/2) = 2 (sinh(r/4) sin(pi/n))^2
    return 2.0 * std::asinh(std::sinh(r / 4.0) * std::sin(std::numbers::pi / n));
}

}  // namespace ads3
