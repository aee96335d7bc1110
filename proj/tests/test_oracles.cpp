#include <doctest.h>

#include <cmath>

#include "ads3/ads3.hpp"

using namespace ads3;
using doctest::Approx;

TEST_CASE("finite-difference Laplacian of quadratics") {
    const FourVector x{1.2, 0.3, 0.4, 0.1};
    const ScalarField x1 = [](const FourVector& v) { return v[0] * v[0]; };
    const ScalarField x3 = [](const FourVector& v) { return v[2] * v[2]; };
    const ScalarField q = [](const FourVector& v) { return quadratic_form(v); };
    CHECK(fd_ambient_laplacian(x1, x) == Approx(2.0).epsilon(1e-6));
    CHECK(fd_ambient_laplacian(x3, x) == Approx(-2.0).epsilon(1e-6));
    CHECK(fd_ambient_laplacian(q, x) == Approx(8.0).epsilon(1e-6));
}

TEST_CASE("ambient harmonic functions are harmonic") {
    const FourVector x{1.1, 0.2, 0.3, -0.2};
    for (int m = 1; m <= 4; ++m)
        for (int k = 0; k <= 4; ++k) {
            const SphericalParams p(m, k);
            const ComplexField F = [&](const FourVector& v) { return ambient_harmonic(p, v); };
            const auto lap = fd_ambient_laplacian(F, x);
            CHECK(std::abs(lap.value) < 1e-4 * lap.scale);
        }
    const ComplexField lin = [](const FourVector& v) { return std::complex<double>(v[0]); };
    CHECK_THROWS_AS(fd_ambient_laplacian(lin, FourVector{1.0, 0.0, 1.0, 0.0}), NearCone);
}

TEST_CASE("psi is an eigenfunction") {
    for (auto [m, k] : {std::pair{1, 0}, std::pair{2, 1}, std::pair{3, 2}}) {
        const auto r = laplacian_eigen_check(SphericalParams(m, k), AdS3Point(from_cartan(0.3, 0.5, 1.2)));
        CHECK(r.relative < 1e-4);
        CHECK(r.normalized < 1e-3);
    }
}

TEST_CASE("radial quadrature matches Beta") {
    for (int m = 1; m <= 6; ++m)
        for (int k = 0; k <= 9; k += 3)
            CHECK(radial_norm_quadrature(m, k) == Approx(l2_radial_norm_sq(m, k)).epsilon(1e-8));
}

TEST_CASE("sign pattern and coefficient bound") {
    for (int N : {3, 5, 7})
        for (int k = 1; k <= 8; ++k) {
            const auto r = check_sign_pattern(k, N);
            CHECK(r.holds);
            CHECK(r.min_margin > 0.0);
            CHECK(r.cases == (1u << k));
        }
    for (int k = 1; k <= 8; ++k) CHECK(check_coefficient_bound(k).holds);
    CHECK(check_sine_inequality(10'000).holds);
}

TEST_CASE("tail domination above the threshold") {
    for (double eps : {0.1, 0.5}) {
        const int m = static_cast<int>(std::ceil(m_threshold(1, 1, eps, 3))) + 1;
        const auto r = check_tail_domination(1, 1, eps, 3, m);
        CHECK(r.holds);
        CHECK(r.min_margin > 0.0);
    }
    CHECK_FALSE(check_tail_domination(10, 2, 0.5, 3, 2).holds);
}

TEST_CASE("progression search is evidence") {
    const auto ev = search_arithmetic_progressions({1, 1, 1, -1, 1}, 2, 10'000);
    CHECK(ev.progressions == 4);
    CHECK(ev.grid_points == 10'000);
    // cos theta > 0 > cos 2 theta holds near theta = pi/3.
    CHECK(search_arithmetic_progressions({1, -1}, 1, 1000).hits > 0);
}

TEST_CASE("displacement and conjugated rotation bound") {
    CHECK(fuzz_displacement_inequality(2000, 3).holds);
    for (int n = 2; n <= 6; ++n) CHECK(check_conjugated_rotation(n, 1.0).holds);
}
