#include "ads3/group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

namespace ads3 {

namespace {

constexpr double kNormSlack = 1e-9;

bool word_less(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
}

double square_sum(const IsometryPair& g) {
    double s = 0.0;
    for (double e : g.first.entries()) s += e * e;
    for (double e : g.second.entries()) s += e * e;
    return s;
}

// Set of isometry pairs keyed by the sign-invariant sum of squared entries.
class ElementIndex {
public:
    bool insert(const IsometryPair& g) {
        const double s = square_sum(g);
        const double w = 1e-8 * std::max(s, 1.0);
        for (auto it = index_.lower_bound(s - w); it != index_.end() && it->first <= s + w; ++it)
            if (approx_equal(it->second, g, 1e-9)) return false;
        index_.emplace(s, g);
        return true;
    }

private:
    std::multimap<double, IsometryPair> index_;
};

struct TraversalStats {
    std::size_t nodes = 0;
    bool closed = false;  // the whole group was visited
};

// Calls visit(word, element) on every word of length <= max_len in
// (length, word) order for HashDedup and depth-first order for FreeGroup.
// visit returns false to skip the subtree below the word.
template <class Visit>
TraversalStats traverse(const GroupPresentation& gamma, int max_len, std::size_t budget, Visit&& visit) {
    TraversalStats stats;
    const auto& letters = gamma.letters();
    const auto nletters = static_cast<std::uint8_t>(letters.size());
    auto tick = [&] {
        if (++stats.nodes > budget)
            throw BudgetExceeded("enumeration of '" + gamma.label() + "' exceeded " + std::to_string(budget) +
                                 " nodes");
    };

    if (gamma.strategy() == ReductionStrategy::FreeGroup) {
        Word word;
        word.reserve(static_cast<std::size_t>(std::max(max_len, 0)));
        auto dfs = [&](auto&& self, const IsometryPair& g) -> void {
            if (!visit(word, g)) return;
            if (static_cast<int>(word.size()) >= max_len) return;
            for (std::uint8_t l = 0; l < nletters; ++l) {
                if (!word.empty() && l == gamma.inverse_letter(word.back())) continue;
                tick();
                word.push_back(l);
                self(self, g * letters[l]);
                word.pop_back();
            }
        };
        tick();
        dfs(dfs, IsometryPair{});
        stats.closed = letters.empty();
        return stats;
    }

    ElementIndex index;
    std::vector<GroupWord> level{{Word{}, IsometryPair{}}};
    index.insert(level.front().element);
    tick();
    bool pruned = false;
    for (int depth = 0; !level.empty(); ++depth) {
        std::vector<GroupWord> next;
        for (const auto& node : level) {
            if (!visit(node.word, node.element)) {
                pruned = true;
                continue;
            }
            if (depth >= max_len) continue;
            for (std::uint8_t l = 0; l < nletters; ++l) {
                if (!node.word.empty() && l == gamma.inverse_letter(node.word.back())) continue;
                IsometryPair child = node.element * letters[l];
                if (!index.insert(child)) continue;
                tick();
                Word w = node.word;
                w.push_back(l);
                next.push_back({std::move(w), std::move(child)});
            }
        }
        if (next.empty() && depth < max_len && !pruned) stats.closed = true;
        level = std::move(next);
    }
    return stats;
}

double max_generator_norm(const GroupPresentation& gamma, bool first) {
    double m = 0.0;
    for (const auto& g : gamma.generators()) m = std::max(m, norm(first ? g.first : g.second));
    return m;
}

}  // namespace

std::string word_to_string(const Word& w, std::size_t rank) {
    if (w.empty()) return "e";
    std::string s;
    s.reserve(w.size());
    for (auto l : w) {
        if (l < rank) s.push_back(static_cast<char>('a' + l));
        else s.push_back(static_cast<char>('A' + (l - rank)));
    }
    return s;
}

GroupPresentation::GroupPresentation(std::string label, std::vector<IsometryPair> generators,
                                     ReductionStrategy strategy)
    : label_(std::move(label)), generators_(std::move(generators)), strategy_(strategy) {
    if (generators_.size() > 26) throw InvalidArgument("at most 26 generators are supported");
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].is_identity())
            throw InvalidArgument("generator " + std::to_string(i) + " is the identity pair");
    letters_ = generators_;
    for (const auto& g : generators_) letters_.push_back(g.inverse());
}

IsometryPair GroupPresentation::evaluate(const Word& w) const {
    IsometryPair g;
    for (auto l : w) g = g * letters_.at(l);
    return g;
}

GroupPresentation conjugate(const GroupPresentation& gamma, const IsometryPair& g) {
    const IsometryPair gi = g.inverse();
    std::vector<IsometryPair> gens;
    for (const auto& h : gamma.generators()) gens.push_back(gi * h * g);
    GroupPresentation out(gamma.label() + "^g", std::move(gens), gamma.strategy());
    if (gamma.kernel()) out.set_kernel({gamma.kernel()->order, gi * gamma.kernel()->generator * g});
    return out;
}

OrbitBall enumerate_ball(const GroupPresentation& gamma, const AdS3Point& x, double R,
                         const EnumerationLimits& limits) {
    if (!(R >= 0.0)) throw InvalidArgument("radius must be nonnegative");
    OrbitBall ball;
    ball.center = x;
    ball.radius = R;
    ball.word_frontier = limits.max_word_len;
    const double xnorm = norm(x);
    const double slope = max_generator_norm(gamma, true) + max_generator_norm(gamma, false);
    const int L = limits.max_word_len;
    const GroupElement& y = x.element();

    auto visit = [&](const Word& w, const IsometryPair& g) {
        const double n1 = norm(g.first), n2 = norm(g.second);
        const double remaining = static_cast<double>(L - static_cast<int>(w.size()));
        if (std::abs(n1 - n2) - xnorm - remaining * slope > R + kNormSlack) return false;
        const double moved = norm(g.first * y * g.second.inverse());
        if (moved <= R + kNormSlack) ball.elements.push_back({w, g, moved});
        return true;
    };
    const auto stats = traverse(gamma, L, limits.budget, visit);
    ball.nodes_visited = stats.nodes;
    ball.group_exhausted = stats.closed;
    std::sort(ball.elements.begin(), ball.elements.end(),
              [](const OrbitElement& u, const OrbitElement& v) { return word_less(u.word, v.word); });
    ball.exhaustive = stats.closed || std::none_of(ball.elements.begin(), ball.elements.end(), [&](const auto& e) {
                          return static_cast<int>(e.word.size()) >= L;
                      });
    return ball;
}

OrbitBall exhaustive_ball(const GroupPresentation& gamma, const AdS3Point& x, double R,
                          const EnumerationLimits& limits) {
    EnumerationLimits lim = limits;
    int L = std::min(8, limits.max_word_len);
    while (true) {
        lim.max_word_len = L;
        OrbitBall ball = enumerate_ball(gamma, x, R, lim);
        if (ball.exhaustive) return ball;
        if (L >= limits.max_word_len)
            throw IncompleteEnumeration("ball of radius " + std::to_string(R) +
                                        " reaches the word-length frontier " + std::to_string(L));
        L = std::min(2 * L, limits.max_word_len);
    }
}

std::size_t count(const GroupPresentation& gamma, const AdS3Point& x, double R, const EnumerationLimits& limits) {
    return exhaustive_ball(gamma, x, R, limits).elements.size();
}

std::vector<GroupWord> enumerate_elements(const GroupPresentation& gamma, int max_word_len, std::size_t budget) {
    std::vector<GroupWord> out;
    traverse(gamma, max_word_len, budget, [&](const Word& w, const IsometryPair& g) {
        out.push_back({w, g});
        return true;
    });
    std::sort(out.begin(), out.end(), [](const GroupWord& u, const GroupWord& v) { return word_less(u.word, v.word); });
    return out;
}

double epsilon_upper(const GroupPresentation& gamma, int max_word_len) {
    if (max_word_len < 1) throw InvalidArgument("max_word_len must be at least 1");
    double eps = std::numeric_limits<double>::infinity();
    for (const auto& e : enumerate_elements(gamma, max_word_len)) {
        if (e.element.is_identity()) continue;
        eps = std::min(eps, std::abs(norm(e.element.first) - norm(e.element.second)) / 3.0);
    }
    return eps;
}

double epsilon_lower_certified(double alpha, double systole) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw InvalidCertificateInput("alpha must lie in [0, 1)");
    if (!(systole > 0.0)) throw InvalidCertificateInput("systole must be positive");
    return systole * (1.0 - alpha) / 3.0;
}

SeparatingConjugation separating_conjugation(const GroupPresentation& gamma, int depth, int trials,
                                             std::uint64_t seed) {
    if (depth < 1) throw InvalidArgument("depth must be at least 1");
    std::vector<IsometryPair> elems;
    for (auto& e : enumerate_elements(gamma, depth))
        if (!e.element.is_identity()) elems.push_back(std::move(e.element));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> boost(0.0, 1.0);
    auto random_element = [&] {
        const double t1 = angle(rng), t = boost(rng), t2 = angle(rng);
        return from_cartan(t1, t, t2);
    };

    SeparatingConjugation best{IsometryPair{}, -1.0, 0};
    for (int trial = 0; trial < trials; ++trial) {
        IsometryPair g;
        if (trial > 0) {
            GroupElement g1 = random_element();
            GroupElement g2 = random_element();
            g = {g1, g2};
        }
        const IsometryPair gi = g.inverse();
        double gap = std::numeric_limits<double>::infinity();
        for (const auto& h : elems) {
            const IsometryPair c = gi * h * g;
            gap = std::min(gap, std::abs(norm(c.first) - norm(c.second)));
        }
        if (gap > best.min_gap) best = {g, gap, trial};
        if (gap > 1e-8) return {g, gap, trial};
    }
    throw SearchFailed("no separating conjugation in " + std::to_string(trials) + " trials", best.g, best.min_gap);
}

std::string to_string(GrowthProvenance p) {
    switch (p) {
        case GrowthProvenance::Fitted: return "fitted";
        case GrowthProvenance::UserSupplied: return "user";
        case GrowthProvenance::FactDerived: return "fact";
    }
    return "unknown";
}

GrowthConstants fit_growth(const GroupPresentation& gamma, std::span<const AdS3Point> xs, double r_max,
                           double grid_step, const EnumerationLimits& limits) {
    if (!(grid_step > 0.0) || !(r_max >= grid_step)) throw InvalidArgument("need 0 < grid_step <= r_max");
    if (xs.empty()) throw InvalidArgument("fit_growth needs at least one basepoint");
    const auto npts = static_cast<std::size_t>(std::floor(r_max / grid_step + 1e-9)) + 1;
    std::vector<double> radii(npts), counts(npts, 0.0);
    for (std::size_t i = 0; i < npts; ++i) radii[i] = static_cast<double>(i) * grid_step;

    for (const auto& x : xs) {
        const OrbitBall ball = exhaustive_ball(gamma, x, radii.back(), limits);
        for (std::size_t i = 0; i < npts; ++i) {
            const auto n = std::count_if(ball.elements.begin(), ball.elements.end(),
                                         [&](const OrbitElement& e) { return e.moved_norm <= radii[i] + kNormSlack; });
            counts[i] = std::max(counts[i], static_cast<double>(n));
        }
    }

    // Least squares for log N = log A + a R over radii with N >= 1.
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
    for (std::size_t i = 0; i < npts; ++i) {
        if (counts[i] < 1.0) continue;
        const double y = std::log(counts[i]);
        sx += radii[i];
        sy += y;
        sxx += radii[i] * radii[i];
        sxy += radii[i] * y;
        n += 1.0;
    }
    double slope = 0.0, intercept = 0.0;
    const double den = n * sxx - sx * sx;
    if (n >= 2.0 && den > 0.0) {
        slope = (n * sxy - sx * sy) / den;
        intercept = (sy - slope * sx) / n;
    } else if (n >= 1.0) {
        intercept = sy / n;
    }
    GrowthConstants c;
    c.provenance = GrowthProvenance::Fitted;
    c.a = std::max(slope, 1e-3);
    // N(R) <= N(R_{i+1}) < A e^{a R_i} < A e^{a R} on (R_i, R_{i+1}].
    double A = std::exp(intercept);
    A = std::max(A, counts[0] * (1.0 + 1e-9));
    for (std::size_t i = 0; i + 1 < npts; ++i) A = std::max(A, counts[i + 1] * std::exp(-c.a * radii[i]) * (1.0 + 1e-9));
    c.A = std::max(A, 1.0 + 1e-9);
    return c;
}

GrowthConstants fit_growth(const GroupPresentation& gamma, const AdS3Point& x, double r_max, double grid_step,
                           const EnumerationLimits& limits) {
    return fit_growth(gamma, std::span<const AdS3Point>(&x, 1), r_max, grid_step, limits);
}

GrowthValidation validate_growth(const GroupPresentation& gamma, const GrowthConstants& c,
                                 std::span<const AdS3Point> xs, std::span<const double> radii,
                                 const EnumerationLimits& limits) {
    GrowthValidation v;
    if (radii.empty()) return v;
    const double rmax = *std::max_element(radii.begin(), radii.end());
    for (const auto& x : xs) {
        const OrbitBall ball = exhaustive_ball(gamma, x, rmax, limits);
        for (double R : radii) {
            const auto n = std::count_if(ball.elements.begin(), ball.elements.end(),
                                         [&](const OrbitElement& e) { return e.moved_norm <= R + kNormSlack; });
            const double ratio = static_cast<double>(n) / (c.A * std::exp(c.a * R));
            if (ratio > v.worst_ratio) {
                v.worst_ratio = ratio;
                v.worst_radius = R;
            }
            if (!(ratio < 1.0)) v.holds = false;
        }
    }
    return v;
}

GrowthConstants fact_growth(const GroupPresentation& gamma, double alpha, double c, int max_word_len) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw InvalidCertificateInput("alpha must lie in [0, 1)");
    if (!(c > 0.0)) throw InvalidCertificateInput("c must be positive");
    std::size_t compact = 0;
    for (const auto& e : enumerate_elements(gamma, max_word_len))
        if (norm(e.element.first) < 1e-9 && norm(e.element.second) < 1e-9) ++compact;
    GrowthConstants g;
    g.A = c * static_cast<double>(compact);
    g.a = 8.0 / (1.0 - alpha);
    g.provenance = GrowthProvenance::FactDerived;
    g.alpha = alpha;
    return g;
}

ContractionReport alpha_contraction_check(const GroupPresentation& gamma, double alpha, int max_word_len) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in [0, 1)");
    ContractionReport rep;
    for (const auto& e : enumerate_elements(gamma, max_word_len)) {
        if (e.element.is_identity()) continue;
        const double n1 = norm(e.element.first), n2 = norm(e.element.second);
        const double hi = std::max(n1, n2), lo = std::min(n1, n2);
        const double ratio = hi < 1e-9 ? 0.0 : lo / hi;
        rep.worst_ratio = std::max(rep.worst_ratio, ratio);
        if (ratio > alpha + 1e-12) rep.holds = false;
    }
    return rep;
}

GroupPresentation standard_class_n(std::span<const GroupElement> fuchsian, int n, double r,
                                   ReductionStrategy strategy) {
    if (n < 1) throw InvalidClass("class index n must be at least 1, got " + std::to_string(n));
    if (!(r > 0.0)) throw InvalidArgument("r must be positive");
    std::vector<IsometryPair> gens;
    for (const auto& g : fuchsian) gens.push_back({g, GroupElement{}});
    TorsionKernel kernel;
    if (n >= 2) {
        const GroupElement s = GroupElement::boost(r / 8.0);
        kernel = {n, {GroupElement{}, s.inverse() * GroupElement::rotation(std::numbers::pi / n) * s}};
        gens.push_back(kernel.generator);
    }
    GroupPresentation out("class-" + std::to_string(n), std::move(gens), strategy);
    out.set_kernel(kernel);
    return out;
}

double translation_length(const GroupElement& g) {
    const double tr = std::abs(g.trace());
    return tr > 2.0 ? 2.0 * std::acosh(tr / 2.0) : 0.0;
}

double lipschitz_lower_bound(std::span<const GroupElement> j, std::span<const GroupElement> rho, int max_word_len) {
    if (j.size() != rho.size()) throw InvalidArgument("j and rho need the same number of generators");
    std::vector<IsometryPair> gens;
    for (std::size_t i = 0; i < j.size(); ++i) gens.push_back({j[i], rho[i]});
    const GroupPresentation gamma("lipschitz", std::move(gens), ReductionStrategy::FreeGroup);
    double best = -1.0;
    for (const auto& e : enumerate_elements(gamma, max_word_len)) {
        if (std::abs(e.element.first.trace()) <= 2.0 + 1e-12) continue;
        best = std::max(best, translation_length(e.element.second) / translation_length(e.element.first));
    }
    if (best < 0.0) throw NoHyperbolicWords("no hyperbolic word of length <= " + std::to_string(max_word_len));
    return best;
}

}  // namespace ads3
