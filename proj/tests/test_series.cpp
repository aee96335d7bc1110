#include <doctest.h>

#include <cmath>
#include <random>

#include "ads3/ads3.hpp"
#include "oracle_util.hpp"

using namespace ads3;
using doctest::Approx;

namespace {

GroupPresentation cyclic(double s) { return GroupPresentation("cyclic", {{GroupElement::boost(s), GroupElement{}}}); }

// sum over all n of cosh^{-2m}(n s + u), the full orbit sum of psi_{m,0} at a(u).
long double cyclic_reference(double s, int m, double u) {
    long double sum = 0.0L;
    for (int n = -4000; n <= 4000; ++n) sum += std::pow(std::cosh(static_cast<long double>(n * s + u)), -2.0L * m);
    return sum;
}

}  // namespace

TEST_CASE("theta samples") {
    CHECK(theta_sample(SignVector({1, 1, 1}), 3) == 0.0);
    CHECK(theta_sample(SignVector({-1}), 3) == Approx(M_PI));
    CHECK(theta_sample(SignVector({1, -1}), 3) == Approx(M_PI / 3));
    CHECK_THROWS_AS(theta_sample(SignVector({1}), 4), InvalidN);
    CHECK_THROWS_AS(theta_sample(SignVector({1}), 1), InvalidN);
}

TEST_CASE("scaled cosines agree with direct evaluation") {
    for (int k = 1; k <= 6; ++k)
        for (std::size_t r = 0; r < (1u << k); ++r) {
            const auto a = SignVector::from_index(r, k);
            const double th = theta_sample(a, 3);
            for (int j = 0; j < k; ++j)
                CHECK(cos_scaled_theta(a, 3, j) == Approx(std::cos(std::pow(3.0, j) * th)).epsilon(1e-9));
        }
}

TEST_CASE("sign vectors") {
    const std::vector<double> b{0.5, -2.0, 0.0};
    CHECK(SignVector::from_coefficients(b).values() == std::vector<int>{1, -1, 1});
    CHECK(SignVector::from_index(5, 3).values() == std::vector<int>{-1, 1, -1});
    CHECK_THROWS(SignVector({1, 0}));
}

TEST_CASE("f_b examples") {
    const std::vector<double> one{1.0};
    CHECK(f_b(one, SignVector({1}), 0.3) == Approx(0.3));
    const std::vector<double> zero{0.0, 0.0};
    CHECK(f_b(zero, SignVector({1, 1}), 0.3) == Approx(0.0));
    const std::vector<double> b{1.0, -1.0};
    CHECK(f_b(b, SignVector({1, -1}), 0.5) == Approx(0.375));
    CHECK_THROWS_AS(f_b(b, SignVector({1, 1}), 0.5), SignMismatch);
}

TEST_CASE("sample points lie at norm 2 eps and follow the large-term formula") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> ue(0.01, 0.5), ub(-2.0, 2.0);
    for (int i = 0; i < 300; ++i) {
        const int k = 1 + i % 4, m = 1 + i % 7;
        const double eps = ue(rng);
        std::vector<double> b(k);
        for (auto& v : b) v = ub(rng);
        const auto a = SignVector::from_coefficients(b);
        const auto x = sample_point(a, eps);
        CHECK(norm(x) == Approx(2.0 * eps).epsilon(1e-10));
        double direct = 0.0;
        for (int j = 0; j < k; ++j) direct += b[j] * psi_re(SphericalParams(m, static_cast<int>(std::pow(3, j))), x);
        const double formula = std::pow(std::cosh(eps), -2.0 * m) * f_b(b, a, std::tanh(eps));
        CHECK(direct == Approx(formula).epsilon(1e-12).scale(1.0));
        CHECK(formula >= 0.0);
    }
}

TEST_CASE("trivial group series is the point value") {
    const GroupPresentation g("trivial", {});
    const SphericalParams p(3, 2);
    const AdS3Point x(from_cartan(0.2, 0.7, 1.1));
    const auto v = truncated_series(g, p, x, 1.0, GrowthConstants{1.0, 1.0});
    CHECK(norm(x) > 1.0);
    CHECK(v.value == psi(p, x));
    CHECK(v.error_radius <= 1e-13 * std::abs(v.value));
}

TEST_CASE("cyclic tail bound is sound against the closed-form orbit sum") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> us(0.5, 2.0), ur(1.0, 10.0), uu(-0.5, 0.5);
    std::size_t tested = 0;
    for (int i = 0; i < 1000; ++i) {
        const double s = us(rng), R0 = ur(rng), u = uu(rng);
        const int m = 2 + i % 9;
        // N(x, R) <= 2 floor(R / 2s) + 2 <= 2 e^{R / 2s}.
        const GrowthConstants c{2.0 + 1e-9, 1.0 / (2.0 * s)};
        const AdS3Point x(GroupElement::boost(u));
        CertifiedComplex v;
        try {
            v = truncated_series(cyclic(s), SphericalParams(m, 0), x, R0, c, {64});
        } catch (const DivergentTail&) {
            continue;
        }
        ++tested;
        const long double exact = cyclic_reference(s, m, u);
        CHECK(std::abs(static_cast<long double>(v.value.real()) - exact) <= v.error_radius);
        CHECK(v.value.imag() == 0.0);
    }
    CHECK(tested > 500);
}

TEST_CASE("orbit truncation makes values invariant under the group") {
    const auto g = cyclic(1.0);
    const SphericalParams p(6, 1);
    const GrowthConstants c{3.6, 0.14};
    const AdS3Point x(from_cartan(0.3, 0.4, 0.9));
    const auto gx = g.generators()[0].act(x);
    const auto v1 = truncated_series(g, p, x, 6.0, c, {64});
    const auto v2 = truncated_series(g, p, gx, 6.0, c, {64});
    // Same orbit points, reached through different products: equal up to rounding.
    CHECK(std::abs(v1.value - v2.value) <= v1.error_radius);
    CHECK(v1.error_radius == doctest::Approx(v2.error_radius));
}

TEST_CASE("divergent tails are reported") {
    CHECK_THROWS_AS(series_tail_bound(1, 1.0, GrowthConstants{2.0, 5.0}), DivergentTail);
    CHECK(series_tail_bound(50, 2.0, GrowthConstants{2.0, 0.5}) > 0.0);
}

TEST_CASE("nonvanishing examples") {
    const std::vector<double> b{1.0};
    const GroupPresentation trivial("trivial", {});
    const auto t = nonvanishing_check(trivial, 3, b, 0.2, GrowthConstants{1.0, 1.0}, 1.0);
    CHECK(t.verdict == NonvanishingVerdict::Verified);

    const auto g = cyclic(1.0);
    const auto c = fit_growth(g, AdS3Point::origin(), 20.0, 0.5, {64});
    const double eg = epsilon_upper(g, 8);
    const double eps = eg / 4 * 0.9;
    const auto v = nonvanishing_check(g, 30, b, eps, c, eg);
    CHECK(v.verdict == NonvanishingVerdict::Verified);
    CHECK(v.main_term > 100 * v.tail_bound);
    try {
        CHECK(nonvanishing_check(g, 1, b, eps, c, eg).verdict == NonvanishingVerdict::Inconclusive);
    } catch (const DivergentTail&) {
    }
    CHECK_THROWS_AS(nonvanishing_check(g, 30, b, eg / 4, c, eg), InvalidEpsilon);
}

TEST_CASE("rank certificate on known matrices") {
    const std::vector<std::vector<double>> id{{1, 0}, {0, 1}, {1, 1}};
    const std::vector<std::vector<double>> small(3, std::vector<double>(2, 1e-6));
    CHECK(certify_rank(id, small).verdict == CertificateVerdict::Certified);
    const std::vector<std::vector<double>> dep{{1, 2}, {2, 4}, {3, 6}};
    CHECK(certify_rank(dep, small).verdict == CertificateVerdict::Inconclusive);
    const std::vector<std::vector<double>> big(3, std::vector<double>(2, 1.0));
    CHECK(certify_rank(id, big).verdict == CertificateVerdict::Inconclusive);
    CHECK_THROWS_AS(certify_rank({{1, 2, 3}}, {{0, 0, 0}}), InvalidCertificateInput);
}

TEST_CASE("independence certificate on the cyclic group") {
    const auto g = cyclic(1.0);
    const std::vector<AdS3Point> xs{AdS3Point::origin()};
    const auto c = fit_growth(g, std::span<const AdS3Point>(xs), 20.0, 0.5, {64});
    SeriesOptions o;
    o.eps_gamma = 2.0 / 3.0;
    const auto cert = independence_certificate(g, 60, 2, 0.15, c, o);
    CHECK(cert.entries.size() == 4);
    CHECK(cert.rank.verdict == CertificateVerdict::Certified);
    // Larger truncation radii keep the verdict.
    for (double extra : {1.0, 3.0}) {
        o.truncation_radius = cert.R0 + extra;
        const auto more = independence_certificate(g, 60, 2, 0.15, c, o);
        CHECK(more.rank.verdict == CertificateVerdict::Certified);
    }
    o.truncation_radius = 0.0;
    CHECK_THROWS_AS(independence_certificate(g, 60, 2, 0.2, c, o), InvalidEpsilon);
}

TEST_CASE("k = 1 certificate matches nonvanishing") {
    const GroupPresentation trivial("trivial", {});
    const auto cert = independence_certificate(trivial, 2, 1, 0.1, GrowthConstants{1.0, 1.0});
    CHECK(cert.rank.verdict == CertificateVerdict::Certified);
    const std::vector<double> b{1.0};
    CHECK(nonvanishing_check(trivial, 2, b, 0.1, GrowthConstants{1.0, 1.0}, 1.0).verdict ==
          NonvanishingVerdict::Verified);
}
