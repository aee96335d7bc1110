#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ads3/errors.hpp"
#include "ads3/psl2.hpp"

namespace ads3 {

enum class ReductionStrategy { FreeGroup, HashDedup };

// Letter i < n is generator i, letter n + i is its inverse.
using Word = std::vector<std::uint8_t>;

// Generators print as a, b, c, ...; inverses as A, B, C, ...; the empty word as "e".
std::string word_to_string(const Word& w, std::size_t rank);

// Finite cyclic kernel of the first projection recorded by standard_class_n.
struct TorsionKernel {
    int order = 1;
    IsometryPair generator;
};

class GroupPresentation {
public:
    GroupPresentation() = default;
    GroupPresentation(std::string label, std::vector<IsometryPair> generators,
                      ReductionStrategy strategy = ReductionStrategy::FreeGroup);

    const std::string& label() const { return label_; }
    ReductionStrategy strategy() const { return strategy_; }
    std::size_t rank() const { return generators_.size(); }
    const std::vector<IsometryPair>& generators() const { return generators_; }
    // Generators followed by their inverses, indexed by letter.
    const std::vector<IsometryPair>& letters() const { return letters_; }
    std::uint8_t inverse_letter(std::uint8_t l) const {
        const auto n = static_cast<std::uint8_t>(rank());
        return l < n ? static_cast<std::uint8_t>(l + n) : static_cast<std::uint8_t>(l - n);
    }
    IsometryPair evaluate(const Word& w) const;

    const std::optional<TorsionKernel>& kernel() const { return kernel_; }
    void set_kernel(TorsionKernel k) { kernel_ = std::move(k); }

private:
    std::string label_;
    std::vector<IsometryPair> generators_;
    std::vector<IsometryPair> letters_;
    ReductionStrategy strategy_ = ReductionStrategy::FreeGroup;
    std::optional<TorsionKernel> kernel_;
};

// The conjugate g^{-1} Gamma g, generator by generator.
GroupPresentation conjugate(const GroupPresentation& gamma, const IsometryPair& g);

struct EnumerationLimits {
    int max_word_len = 24;
    std::size_t budget = 10'000'000;
};

struct OrbitElement {
    Word word;
    IsometryPair element;
    double moved_norm = 0.0;  // ‖element · x‖
};

struct OrbitBall {
    AdS3Point center;
    double radius = 0.0;
    int word_frontier = 0;
    std::vector<OrbitElement> elements;  // sorted by (length, word)
    // No listed element sits on the word-length frontier.
    bool exhaustive = false;
    // Every element of the group was visited (finite group, HashDedup).
    bool group_exhausted = false;
    std::size_t nodes_visited = 0;
};

// Elements gamma with ‖gamma x‖ <= R among words of length <= max_word_len.
// Throws BudgetExceeded when more than limits.budget nodes are generated.
OrbitBall enumerate_ball(const GroupPresentation& gamma, const AdS3Point& x, double R,
                         const EnumerationLimits& limits = {});

// N(x, R), deepening the word frontier up to limits.max_word_len until the
// ball is exhaustive. Throws IncompleteEnumeration otherwise.
std::size_t count(const GroupPresentation& gamma, const AdS3Point& x, double R,
                  const EnumerationLimits& limits = {});

// Same deepening as count(), returning the ball itself.
OrbitBall exhaustive_ball(const GroupPresentation& gamma, const AdS3Point& x, double R,
                          const EnumerationLimits& limits = {});

struct GroupWord {
    Word word;
    IsometryPair element;
};

// All words of length <= max_word_len (reduced, or deduplicated under
// HashDedup), identity first, sorted by (length, word).
std::vector<GroupWord> enumerate_elements(const GroupPresentation& gamma, int max_word_len,
                                          std::size_t budget = 10'000'000);

// min over enumerated nonidentity elements of |‖g1‖ - ‖g2‖|/3; +inf if none.
double epsilon_upper(const GroupPresentation& gamma, int max_word_len);

// systole (1 - alpha) / 3.
double epsilon_lower_certified(double alpha, double systole);

class SearchFailed : public Error {
public:
    SearchFailed(const std::string& what, IsometryPair best, double best_gap)
        : Error(what), best(std::move(best)), best_gap(best_gap) {}
    IsometryPair best;
    double best_gap;
};

struct SeparatingConjugation {
    IsometryPair g;
    double min_gap = 0.0;
    int trial = 0;
};

SeparatingConjugation separating_conjugation(const GroupPresentation& gamma, int depth, int trials,
                                             std::uint64_t seed);

enum class GrowthProvenance { Fitted, UserSupplied, FactDerived };

struct GrowthConstants {
    double A = 1.0;
    double a = 1.0;
    GrowthProvenance provenance = GrowthProvenance::UserSupplied;
    double alpha = 0.0;  // meaningful for FactDerived
    bool certified() const { return provenance != GrowthProvenance::Fitted; }
};

std::string to_string(GrowthProvenance p);

// Least squares of log N on R_i = i * step (i = 0, 1, ...), then A raised so
// that N(R) < A e^{aR} on every probed interval. Not a certificate.
GrowthConstants fit_growth(const GroupPresentation& gamma, const AdS3Point& x, double r_max,
                           double grid_step, const EnumerationLimits& limits = {});
GrowthConstants fit_growth(const GroupPresentation& gamma, std::span<const AdS3Point> xs,
                           double r_max, double grid_step, const EnumerationLimits& limits = {});

struct GrowthValidation {
    bool holds = true;
    double worst_ratio = 0.0;  // max N / (A e^{aR})
    double worst_radius = 0.0;
};

GrowthValidation validate_growth(const GroupPresentation& gamma, const GrowthConstants& c,
                                 std::span<const AdS3Point> xs, std::span<const double> radii,
                                 const EnumerationLimits& limits = {});

// A = c · #(Gamma ∩ K) and a = 8/(1 - alpha), counting elements with both
// norms below 1e-9 among words of length <= max_word_len.
GrowthConstants fact_growth(const GroupPresentation& gamma, double alpha, double c, int max_word_len);

struct ContractionReport {
    bool holds = true;
    double worst_ratio = 0.0;
};

ContractionReport alpha_contraction_check(const GroupPresentation& gamma, double alpha, int max_word_len);

// Generators (g, E) for g in fuchsian, plus (E, a(r/8)^{-1} k(pi/n) a(r/8)) when n >= 2.
GroupPresentation standard_class_n(std::span<const GroupElement> fuchsian, int n, double r,
                                   ReductionStrategy strategy = ReductionStrategy::HashDedup);

// 2 arccosh(|tr g|/2) for hyperbolic g, else 0.
double translation_length(const GroupElement& g);

// sup over hyperbolic words w of l(rho(w)) / l(j(w)).
double lipschitz_lower_bound(std::span<const GroupElement> j, std::span<const GroupElement> rho,
                             int max_word_len);

}  // namespace ads3
