#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "ads3/ads3.hpp"
#include "oracle_util.hpp"

using namespace ads3;
using doctest::Approx;

namespace {

GroupPresentation cyclic(double s) { return GroupPresentation("cyclic", {{GroupElement::boost(s), GroupElement{}}}); }

std::vector<GroupElement> schottky_generators() {
    const auto k = GroupElement::rotation(M_PI / 4);
    return {GroupElement::boost(1.5), k * GroupElement::boost(1.5) * k.inverse()};
}

GroupPresentation schottky(ReductionStrategy s) {
    std::vector<IsometryPair> gens;
    for (const auto& g : schottky_generators()) gens.push_back({g, GroupElement{}});
    return GroupPresentation("schottky", gens, s);
}

// Reduced words of length <= depth on plain matrices, counting moved norms <= R.
std::size_t brute_count(const std::vector<oracle::Mat>& gens, int depth, double R) {
    std::vector<oracle::Mat> letters = gens;
    for (const auto& g : gens) letters.push_back(oracle::inv(g));
    const int n = static_cast<int>(gens.size());
    std::size_t hits = 0;
    std::function<void(const oracle::Mat&, int, int)> walk = [&](const oracle::Mat& m, int last, int len) {
        if (oracle::frob_norm(m) <= R + 1e-9) ++hits;
        if (len == depth) return;
        for (int l = 0; l < 2 * n; ++l) {
            if (last >= 0 && l == (last + n) % (2 * n)) continue;
            walk(oracle::mul(m, letters[l]), l, len + 1);
        }
    };
    walk({1, 0, 0, 1}, -1, 0);
    return hits;
}

}  // namespace

TEST_CASE("word printing") {
    CHECK(word_to_string({}, 2) == "e");
    CHECK(word_to_string({0, 1, 2, 3}, 2) == "abAB");
}

TEST_CASE("trivial group has one orbit point") {
    const GroupPresentation g("trivial", {});
    CHECK(count(g, AdS3Point::origin(), 10.0) == 1);
    CHECK(epsilon_upper(g, 4) == std::numeric_limits<double>::infinity());
}

TEST_CASE("identity generator is rejected") {
    CHECK_THROWS_AS(GroupPresentation("bad", {{GroupElement{}, GroupElement{}}}), InvalidArgument);
}

TEST_CASE("cyclic counts follow the closed form") {
    for (double s : {0.5, 1.0, 2.0}) {
        for (double R = 0.0; R <= 20.0; R += 0.25) {
            const auto expect = 2 * static_cast<std::size_t>(std::floor(R / (2 * s) + 1e-12)) + 1;
            CHECK(count(cyclic(s), AdS3Point::origin(), R, {64}) == expect);
        }
    }
}

TEST_CASE("cyclic ball from an off-origin basepoint") {
    const AdS3Point x(GroupElement::boost(0.25));
    // ‖a(1)^n a(0.25)‖ = |2n + 0.5|.
    const auto ball = exhaustive_ball(cyclic(1.0), x, 4.0, {64});
    CHECK(ball.exhaustive);
    CHECK(ball.elements.size() == 4);  // n = -2, -1, 0, 1
    for (const auto& e : ball.elements) CHECK(e.moved_norm <= 4.0 + 1e-9);
}

TEST_CASE("Schottky counts agree with reduced-word brute force") {
    std::vector<oracle::Mat> gens;
    for (const auto& g : schottky_generators()) gens.push_back(g.entries());
    for (double R : {2.0, 4.0, 6.0, 8.0})
        CHECK(count(schottky(ReductionStrategy::FreeGroup), AdS3Point::origin(), R, {64}) == brute_count(gens, 9, R));
}

TEST_CASE("FreeGroup and HashDedup list the same elements") {
    const int depth = 8;
    const auto free = enumerate_elements(schottky(ReductionStrategy::FreeGroup), depth);
    const auto hash = enumerate_elements(schottky(ReductionStrategy::HashDedup), depth);
    REQUIRE(free.size() == hash.size());
    auto key = [](const std::vector<GroupWord>& v) {
        std::vector<std::array<double, 4>> out;
        for (const auto& w : v) out.push_back(w.element.first.entries());
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto a = key(free), b = key(hash);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]) / (1 + std::abs(a[i][j])));
    CHECK(worst < 1e-9);
}

TEST_CASE("finite groups are exhausted") {
    for (int n : {2, 3, 5}) {
        const auto g = standard_class_n({}, n, 1.0);
        const auto ball = exhaustive_ball(g, AdS3Point::origin(), 100.0, {64});
        CHECK(ball.group_exhausted);
        CHECK(ball.elements.size() == static_cast<std::size_t>(n));
        // Independent route: norms of s^{-1} k(j pi / n) s.
        const auto s = oracle::diag(1.0 / 8.0);
        for (double R : {0.05, 0.1, 0.2}) {
            std::size_t expect = 0;
            for (int j = 0; j < n; ++j)
                expect += oracle::frob_norm(oracle::mul(oracle::mul(oracle::inv(s), oracle::rot(j * M_PI / n)), s)) <=
                          R + 1e-9;
            CHECK(count(g, AdS3Point::origin(), R, {64}) == expect);
        }
    }
}

TEST_CASE("class-n kernel has order n") {
    const std::vector<GroupElement> f{GroupElement::boost(1.0)};
    const auto g = standard_class_n(f, 4, 0.5);
    REQUIRE(g.kernel());
    CHECK(g.kernel()->order == 4);
    auto p = IsometryPair{};
    for (int i = 0; i < 4; ++i) p = p * g.kernel()->generator;
    CHECK(p.is_identity(1e-9));
    CHECK_THROWS_AS(standard_class_n(f, 0, 0.5), InvalidClass);
}

TEST_CASE("epsilon bounds") {
    CHECK(epsilon_upper(cyclic(1.0), 6) == Approx(2.0 / 3.0));
    CHECK(epsilon_upper(cyclic(0.5), 6) == Approx(1.0 / 3.0));
    CHECK(epsilon_lower_certified(0.5, 3.0) == Approx(0.5));
    CHECK_THROWS_AS(epsilon_lower_certified(1.0, 3.0), InvalidCertificateInput);
}

TEST_CASE("separating conjugation splits equal norms") {
    const GroupPresentation g("rot", {{GroupElement::rotation(1.0), GroupElement::rotation(1.0)}});
    CHECK(epsilon_upper(g, 2) == Approx(0.0));
    const auto sep = separating_conjugation(g, 2, 64, 1);
    CHECK(sep.trial >= 1);
    CHECK(sep.min_gap > 1e-8);
    CHECK(epsilon_upper(conjugate(g, sep.g), 2) * 3.0 == Approx(sep.min_gap));
}

TEST_CASE("fitted growth dominates observed counts") {
    const auto g = cyclic(1.0);
    const std::vector<AdS3Point> xs{AdS3Point::origin(), AdS3Point(GroupElement::boost(0.3))};
    const auto c = fit_growth(g, std::span<const AdS3Point>(xs), 20.0, 0.5, {64});
    CHECK(c.provenance == GrowthProvenance::Fitted);
    CHECK_FALSE(c.certified());
    for (double R = 0.0; R <= 20.0; R += 0.5)
        for (const auto& x : xs) CHECK(static_cast<double>(count(g, x, R, {64})) < c.A * std::exp(c.a * R));
    std::vector<double> radii;
    for (double R = 0.25; R <= 30.0; R += 0.5) radii.push_back(R);
    CHECK(validate_growth(g, c, xs, radii, {64}).holds);
}

TEST_CASE("fact-derived growth and contraction") {
    const auto g = cyclic(1.0);
    const auto c = fact_growth(g, 0.0, 2.0, 6);
    CHECK(c.A == Approx(2.0));
    CHECK(c.a == Approx(8.0));
    CHECK(c.certified());
    CHECK(alpha_contraction_check(g, 0.1, 6).holds);
    const GroupPresentation swapped("swap", {{GroupElement{}, GroupElement::boost(1.0)}});
    CHECK(alpha_contraction_check(swapped, 0.0, 4).holds);
    const GroupPresentation diagonal("diagonal", {{GroupElement::boost(1.0), GroupElement::boost(1.0)}});
    const auto d = alpha_contraction_check(diagonal, 0.9, 4);
    CHECK_FALSE(d.holds);
    CHECK(d.worst_ratio == Approx(1.0));
}

TEST_CASE("Lipschitz lower bound from translation lengths") {
    const std::vector<GroupElement> j{GroupElement::boost(1.0), GroupElement::rotation(0.7) * GroupElement::boost(1.0)};
    const std::vector<GroupElement> rho{GroupElement::boost(0.5), GroupElement::rotation(0.7) * GroupElement::boost(0.5)};
    const double lip = lipschitz_lower_bound(j, rho, 4);
    CHECK(lip > 0.0);
    CHECK(lip < 1.0);
    CHECK(translation_length(GroupElement::boost(1.0)) == Approx(2.0));
    const std::vector<GroupElement> ell{GroupElement::rotation(0.3)};
    CHECK_THROWS_AS(lipschitz_lower_bound(ell, ell, 3), NoHyperbolicWords);
}

TEST_CASE("enumeration limits") {
    CHECK_THROWS_AS(enumerate_ball(schottky(ReductionStrategy::FreeGroup), AdS3Point::origin(), 200.0, {20, 1000}),
                    BudgetExceeded);
    CHECK_THROWS_AS(count(cyclic(1.0), AdS3Point::origin(), 100.0, {8}), IncompleteEnumeration);
}
