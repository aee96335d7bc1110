#include <doctest.h>

#include <cmath>

#include "ads3/ads3.hpp"

using namespace ads3;
using doctest::Approx;

namespace {

double direct_threshold(double C, double a, double eps, double s) {
    return (std::log(2.0) * s + 2 * a * eps + std::log(1 + std::pow(2.0, s) * C * std::exp(6 * a * eps))) /
           std::log(std::cosh(eps));
}

}  // namespace

TEST_CASE("m_threshold matches the direct formula") {
    CHECK(m_threshold(1, 1, 1, 1) == Approx(21.641189).epsilon(1e-7));
    for (double C : {0.5, 1.0, 10.0})
        for (double a : {0.5, 1.0, 2.0})
            for (double eps : {0.1, 0.5, 1.0})
                for (double s : {1.0, 3.0, 9.0})
                    CHECK(m_threshold(C, a, eps, s) == Approx(direct_threshold(C, a, eps, s)).epsilon(1e-12));
}

TEST_CASE("m_threshold is monotone in C, a and s") {
    CHECK(m_threshold(2, 1, 0.5, 3) > m_threshold(1, 1, 0.5, 3));
    CHECK(m_threshold(1, 2, 0.5, 3) > m_threshold(1, 1, 0.5, 3));
    CHECK(m_threshold(1, 1, 0.5, 9) > m_threshold(1, 1, 0.5, 3));
    // Large s and tiny eps stay finite.
    CHECK(std::isfinite(m_threshold(1e3, 1, 1e-4, 19683)));
    CHECK_THROWS_AS(m_threshold(1, 1, 0.0, 1), InvalidArgument);
}

TEST_CASE("m_tilde bounds the probe grid and scales like delta^-2") {
    const auto r = m_tilde(1, 1, 1.0, 1);
    CHECK(r.argmin > 0.0);
    CHECK(r.argmin <= 1.0);
    CHECK(r.value == Approx(m_threshold(1, 1, r.argmin, 1)).epsilon(1e-12));
    for (double e = 0.01; e < 1.0; e += 0.01) CHECK(r.value <= m_threshold(1, 1, e, 1) * (1 + 1e-6));
    const double s1 = m_tilde(3, 0.2, 0.01, 3).value * 1e-4;
    const double s2 = m_tilde(3, 0.2, 0.005, 3).value * 0.25e-4;
    CHECK(s1 == Approx(s2).epsilon(0.02));
    CHECK(m_tilde(1, 1, 0.5, 1).value >= r.value);
}

TEST_CASE("m_gamma") {
    CHECK(std::isinf(m_gamma(2, {}, 2.0 / 3.0).value));
    const std::vector<GrowthConstants> c{{3.6, 0.13, GrowthProvenance::Fitted, 0.0}, {100.0, 5.0}};
    const auto g = m_gamma(2, c, 2.0 / 3.0);
    REQUIRE(g.candidate);
    const double expect0 = std::max(m_tilde(3 * 3.6, 0.13, 1.0 / 6.0, 3).value / 2, 0.13);
    const double expect1 = std::max(m_tilde(300.0, 5.0, 1.0 / 6.0, 3).value / 2, 5.0);
    CHECK(g.value == Approx(std::min(expect0, expect1)));
    CHECK(*g.candidate == 0);
    CHECK(m_gamma(3, c, 2.0 / 3.0).value > g.value);
}

TEST_CASE("eta") {
    CHECK(eta(2, 1.0) == Approx(0.5).epsilon(1e-14));
    for (int n = 2; n <= 12; ++n)
        for (double r : {0.1, 0.5, 1.0, 2.0}) {
            const double s = std::sinh(r / 4) * std::sin(M_PI / n);
            CHECK(eta(n, r) == Approx(std::acosh(1 + 2 * s * s)).epsilon(1e-10));
        }
    CHECK_THROWS_AS(eta(1, 1.0), InvalidClass);
}
