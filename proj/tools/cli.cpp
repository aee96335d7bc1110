#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ads3/ads3.hpp"

namespace ads3::cli {

namespace {

struct Common {
    std::uint64_t seed = 0;
    std::size_t budget = 10'000'000;
    std::string format = "json";
    std::string output;
};

int workers_from_env() {
    const char* v = std::getenv("ADS3_WORKERS");
    if (!v) return 1;
    try {
        return std::max(1, std::stoi(v));
    } catch (...) {
        throw ParseError(std::string("ADS3_WORKERS: expected a positive integer, got '") + v + "'");
    }
}

AdS3Point point_from(const std::vector<double>& x) {
    if (x.empty()) return AdS3Point::origin();
    if (x.size() != 4) throw ParseError("--x: expected 4 comma-separated matrix entries");
    try {
        return AdS3Point(GroupElement::from_entries(x[0], x[1], x[2], x[3]));
    } catch (const CorruptedElement& e) {
        throw ParseError(std::string("--x: ") + e.what());
    }
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.output.empty()) out << text;
    else write_atomic(c.output, text);
}

std::vector<GroupElement> default_fuchsian() {
    const double t = 1.5;
    const GroupElement k = GroupElement::rotation(std::numbers::pi / 4);
    return {GroupElement::boost(t), k * GroupElement::boost(t) * k.inverse()};
}

// ---- verify suites -------------------------------------------------------

Json suite_result(const std::string& name, bool pass, double margin, std::size_t cases) {
    return Json{{"name", name}, {"pass", pass}, {"margin", number(margin)}, {"cases", cases}};
}

std::vector<FourVector> random_positive_points(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi), tt(0.0, 1.2), rr(std::sqrt(0.5), 1.5);
    std::vector<FourVector> pts;
    for (std::size_t i = 0; i < n; ++i) {
        const double t1 = ang(rng), t = tt(rng), t2 = ang(rng), r = rr(rng);
        const FourVector v = AdS3Point(from_cartan(t1, t, t2)).four_vector();
        pts.push_back({r * v[0], r * v[1], r * v[2], r * v[3]});
    }
    return pts;
}

Json suite_harmonicity(std::uint64_t seed) {
    const auto pts = random_positive_points(100, seed);
    // Residual relative to the second-derivative scale, aggregated over the points of each (m, k).
    double worst = 0.0, worst_point = 0.0;
    std::size_t cases = 0;
    for (int m = 1; m <= 4; ++m)
        for (int k = 0; k <= 4; ++k) {
            const SphericalParams p(m, k);
            const ComplexField F = [&](const FourVector& v) { return ambient_harmonic(p, v); };
            double res = 0.0, scale = 0.0;
            for (const auto& x : pts) {
                const FDLaplacian lap = fd_ambient_laplacian(F, x);
                res += std::abs(lap.value);
                scale += lap.scale;
                worst_point = std::max(worst_point, std::abs(lap.value) / lap.scale);
                ++cases;
            }
            worst = std::max(worst, res / scale);
        }
    Json j = suite_result("harmonicity", worst < 1e-4, 1e-4 - worst, cases);
    j["max_pointwise_relative"] = worst_point;
    return j;
}

Json suite_eigen(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi), tt(0.0, 1.2);
    double worst = 0.0;
    std::size_t cases = 0;
    for (auto [m, k] : {std::pair{1, 0}, std::pair{3, 2}}) {
        const SphericalParams p(m, k);
        for (int i = 0; i < 100; ++i) {
            const AdS3Point x(from_cartan(ang(rng), tt(rng), ang(rng)));
            worst = std::max(worst, laplacian_eigen_check(p, x).relative);
            ++cases;
        }
    }
    return suite_result("eigen", worst < 1e-4, 1e-4 - worst, cases);
}

Json suite_radial_norm() {
    double worst = 0.0;
    std::size_t cases = 0;
    for (int m = 1; m <= 6; ++m)
        for (int k = 0; k <= 9; ++k) {
            const double exact = l2_radial_norm_sq(m, k);
            worst = std::max(worst, std::abs(radial_norm_quadrature(m, k) - exact) / exact);
            ++cases;
        }
    return suite_result("radial-norm", worst < 1e-8, 1e-8 - worst, cases);
}

Json suite_sign_pattern() {
    bool ok = true;
    double margin = INFINITY;
    std::size_t cases = 0;
    for (int N : {3, 5, 7})
        for (int k = 1; k <= 12; ++k) {
            const auto r = check_sign_pattern(k, N);
            ok = ok && r.holds;
            margin = std::min(margin, r.min_margin);
            cases += r.cases;
        }
    return suite_result("sign-pattern", ok, margin, cases);
}

Json suite_tail_domination() {
    bool ok = true;
    double margin = INFINITY;
    std::size_t cases = 0;
    for (double C : {0.5, 1.0, 10.0})
        for (double a : {0.5, 1.0, 2.0})
            for (double eps : {0.1, 0.5, 1.0})
                for (int s : {1, 3, 9}) {
                    const int base = static_cast<int>(std::ceil(m_threshold(C, a, eps, s)));
                    for (int extra : {1, 5}) {
                        const auto r = check_tail_domination(C, a, eps, s, base + extra);
                        ok = ok && r.holds;
                        margin = std::min(margin, r.min_margin);
                        cases += r.cases;
                    }
                }
    return suite_result("tail-domination", ok, margin, cases);
}

Json suite_coefficient_bound() {
    bool ok = true;
    double margin = INFINITY;
    std::size_t cases = 0;
    for (int k = 1; k <= 12; ++k) {
        const auto r = check_coefficient_bound(k);
        ok = ok && r.holds;
        margin = std::min(margin, r.min_margin);
        cases += r.cases;
    }
    const auto s = check_sine_inequality(10'000);
    Json j = suite_result("coefficient-bound", ok && s.holds, margin, cases + s.cases);
    j["sine_margin"] = s.min_margin;
    return j;
}

Json suite_progression() {
    const auto ev = search_arithmetic_progressions({1, 1, 1, -1, 1}, 3, 1'000'000);
    Json j = suite_result("progression", ev.hits == 0, ev.hits == 0 ? 0.0 : -1.0, ev.progressions * ev.grid_points);
    j["hits"] = ev.hits;
    j["evidence_only"] = true;
    return j;
}

Json suite_displacement(std::uint64_t seed) {
    const auto r = fuzz_displacement_inequality(100'000, seed);
    return suite_result("displacement", r.holds, r.min_margin, r.cases);
}

Json suite_conjugated_rotation() {
    bool ok = true;
    double margin = INFINITY;
    std::size_t cases = 0;
    for (int n = 2; n <= 12; ++n)
        for (double r : {0.1, 0.5, 1.0, 2.0}) {
            const auto c = check_conjugated_rotation(n, r);
            ok = ok && c.holds;
            margin = std::min(margin, c.min_margin);
            cases += c.cases;
        }
    return suite_result("conjugated-rotation", ok, margin, cases);
}

Json suite_class_n() {
    const auto fuchsian = default_fuchsian();
    bool ok = true;
    double margin = INFINITY;
    std::size_t cases = 0;
    for (int n : {2, 3, 4})
        for (double r : {0.5, 1.0}) {
            const auto g = standard_class_n(fuchsian, n, r);
            const double lower = std::min(eta(n, r) / 3.0, r / 6.0);
            const double up = epsilon_upper(g, 6);
            margin = std::min(margin, up - lower);
            ok = ok && up >= lower - 1e-9;
            ++cases;
        }
    return suite_result("class-n", ok, margin, cases);
}

const std::map<std::string, std::string>& suite_aliases() {
    static const std::map<std::string, std::string> m{
        {"harmonicity", "harmonicity"},
        {"eigen", "eigen"},
        {"radial-norm", "radial-norm"},
        {"sign-pattern", "sign-pattern"},
        {"sekoi", "sign-pattern"},
        {"tail-domination", "tail-domination"},
        {"koukou", "tail-domination"},
        {"coefficient-bound", "coefficient-bound"},
        {"progression", "progression"},
        {"displacement", "displacement"},
        {"conjugated-rotation", "conjugated-rotation"},
        {"class-n", "class-n"},
    };
    return m;
}

Json run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "harmonicity") return suite_harmonicity(seed);
    if (name == "eigen") return suite_eigen(seed);
    if (name == "radial-norm") return suite_radial_norm();
    if (name == "sign-pattern") return suite_sign_pattern();
    if (name == "tail-domination") return suite_tail_domination();
    if (name == "coefficient-bound") return suite_coefficient_bound();
    if (name == "progression") return suite_progression();
    if (name == "displacement") return suite_displacement(seed);
    if (name == "conjugated-rotation") return suite_conjugated_rotation();
    return suite_class_n();
}

// ---- commands ------------------------------------------------------------

struct OrbitArgs {
    std::string group;
    std::vector<double> x;
    std::vector<double> radii;
    double rmax = 0.0;
    double step = 1.0;
    int max_word_len = 64;
    bool elements = false;
};

int cmd_orbit(const Common& c, const OrbitArgs& a, std::ostream& out) {
    const GroupPresentation g = group_from_file(a.group);
    const AdS3Point x = point_from(a.x);
    std::vector<double> radii = a.radii;
    if (radii.empty()) {
        if (!(a.rmax > 0.0) || !(a.step > 0.0)) throw ParseError("orbit: give --radii or a positive --rmax and --step");
        for (int i = 1; i * a.step <= a.rmax + 1e-9; ++i) radii.push_back(i * a.step);
    }
    const EnumerationLimits lim{a.max_word_len, c.budget};

    if (a.elements) {
        const double R = *std::max_element(radii.begin(), radii.end());
        const OrbitBall ball = exhaustive_ball(g, x, R, lim);
        std::ostringstream os;
        if (c.format == "csv") {
            os << "word,movedNorm\n";
            os.precision(17);
            for (const auto& e : ball.elements) os << word_to_string(e.word, g.rank()) << ',' << e.moved_norm << '\n';
        } else {
            Json rows = Json::array();
            for (const auto& e : ball.elements)
                rows.push_back({{"word", word_to_string(e.word, g.rank())}, {"movedNorm", e.moved_norm}});
            os << Json{{"label", g.label()}, {"R", R}, {"elements", rows}, {"seed", c.seed}}.dump(2) << '\n';
        }
        emit(c, os.str(), out);
        return kOk;
    }

    struct Row {
        double R;
        std::size_t count;
        bool exhaustive;
    };
    std::vector<Row> rows;
    for (double R : radii) {
        try {
            rows.push_back({R, count(g, x, R, lim), true});
        } catch (const IncompleteEnumeration&) {
            rows.push_back({R, enumerate_ball(g, x, R, lim).elements.size(), false});
        }
    }
    std::ostringstream os;
    if (c.format == "csv") {
        os << "R,count,exhaustive\n";
        os.precision(17);
        for (const auto& r : rows) os << r.R << ',' << r.count << ',' << (r.exhaustive ? "true" : "false") << '\n';
    } else {
        Json counts = Json::array();
        for (const auto& r : rows) counts.push_back({{"R", r.R}, {"count", r.count}, {"exhaustive", r.exhaustive}});
        os << Json{{"label", g.label()}, {"x", element_to_json(x.element())}, {"counts", counts}, {"seed", c.seed}}.dump(2)
           << '\n';
    }
    emit(c, os.str(), out);
    return kOk;
}

int cmd_eval(const Common& c, int m, int k, const std::vector<double>& xs, std::ostream& out) {
    const SphericalParams p(m, k);
    const AdS3Point x = point_from(xs);
    const auto v = psi(p, x);
    const Json j{{"m", m},          {"k", k},           {"lambda", p.eigenvalue()}, {"x", element_to_json(x.element())},
                 {"norm", norm(x)}, {"re", v.real()},   {"im", v.imag()},           {"abs", std::abs(v)},
                 {"seed", c.seed}};
    emit(c, j.dump(2) + "\n", out);
    return kOk;
}

struct SeriesArgs {
    std::string group;
    int m = 1;
    int k = 0;
    std::vector<double> x;
    double R0 = 4.0;
    double A = 0.0;
    double a = 0.0;
    int max_word_len = 64;
};

int cmd_series(const Common& c, const SeriesArgs& s, std::ostream& out) {
    const GroupPresentation g = group_from_file(s.group);
    const SphericalParams p(s.m, s.k);
    const AdS3Point x = point_from(s.x);
    if (!(s.A > 0.0) || !(s.a > 0.0)) throw ParseError("series: --A and --a must be positive");
    const GrowthConstants gc{s.A, s.a, GrowthProvenance::UserSupplied, 0.0};
    const auto v = truncated_series(g, p, x, s.R0, gc, {s.max_word_len, c.budget});
    const Json j{{"label", g.label()},
                 {"m", s.m},
                 {"k", s.k},
                 {"x", element_to_json(x.element())},
                 {"R0", s.R0},
                 {"growth", growth_to_json(gc)},
                 {"re", v.value.real()},
                 {"im", v.value.imag()},
                 {"error_radius", v.error_radius},
                 {"seed", c.seed}};
    emit(c, j.dump(2) + "\n", out);
    return kOk;
}

struct CertifyArgs {
    std::string group;
    int m = 0;
    int k = 0;
    double eps = 0.0;
    double eps_gamma = 0.0;
    std::string growth = "fitted";
    double A = 0.0;
    double a = 0.0;
    double alpha = 0.0;
    double c = 1.0;
    double fit_rmax = 20.0;
    double fit_step = 1.0;
    double R0 = 0.0;
    int max_word_len = 64;
    int eps_depth = 8;
};

int cmd_certify(const Common& c, const CertifyArgs& s, std::ostream& out) {
    const GroupPresentation g = group_from_file(s.group);
    const EnumerationLimits lim{s.max_word_len, c.budget};
    if (!(s.eps > 0.0)) throw ParseError("certify: --eps must be positive");

    std::string eps_source = "user";
    double eps_gamma = s.eps_gamma;
    if (!(eps_gamma > 0.0)) {
        eps_gamma = epsilon_upper(g, s.eps_depth);
        eps_source = "upper-estimate(depth " + std::to_string(s.eps_depth) + ")";
    }

    std::vector<AdS3Point> probes{AdS3Point::origin()};
    for (std::size_t r = 0; r < (std::size_t{1} << std::min(s.k, 12)); ++r)
        probes.push_back(sample_point(SignVector::from_index(r, s.k), s.eps));

    GrowthConstants gc;
    if (s.growth == "fitted") {
        gc = fit_growth(g, probes, s.fit_rmax, s.fit_step, lim);
    } else if (s.growth == "user") {
        if (!(s.A > 0.0) || !(s.a > 0.0)) throw ParseError("certify: --A and --a must be positive for --growth user");
        gc = {s.A, s.a, GrowthProvenance::UserSupplied, 0.0};
    } else if (s.growth == "fact") {
        gc = fact_growth(g, s.alpha, s.c, s.eps_depth);
    } else {
        throw ParseError("--growth: expected fitted, user or fact");
    }
    std::vector<double> grid;
    for (int i = 0; i * s.fit_step <= s.fit_rmax + 1e-9; ++i) grid.push_back(i * s.fit_step);
    const GrowthValidation val = validate_growth(g, gc, probes, grid, lim);

    SeriesOptions opts;
    opts.truncation_radius = s.R0;
    opts.eps_gamma = eps_gamma;
    opts.limits = lim;
    opts.workers = workers_from_env();
    const IndependenceCertificate cert = independence_certificate(g, s.m, s.k, s.eps, gc, opts);

    Json j = certificate_to_json(cert, c.seed);
    j["inputs"]["eps_gamma_source"] = eps_source;
    j["growth_validation"] = {{"holds", val.holds},
                              {"worst_ratio", val.worst_ratio},
                              {"worst_radius", val.worst_radius},
                              {"probes", probes.size()},
                              {"r_max", s.fit_rmax}};
    emit(c, j.dump(2) + "\n", out);
    return cert.rank.verdict == CertificateVerdict::Certified ? kOk : kInconclusive;
}

struct ThresholdArgs {
    double C = 0.0, a = 0.0, eps = 0.0, delta = 0.0, s = 1.0;
    int k = 1;
    double eps_gamma = 0.0;
    std::vector<double> A;  // candidate A values paired with --a
    int n = 0;
    double r = 0.1;
};

int cmd_thresholds(const Common& c, const ThresholdArgs& t, std::ostream& out) {
    Json j;
    if (t.C > 0.0 && t.a > 0.0 && t.eps > 0.0) j["m_threshold"] = m_threshold(t.C, t.a, t.eps, t.s);
    if (t.C > 0.0 && t.a > 0.0 && t.delta > 0.0) {
        const MTilde mt = m_tilde(t.C, t.a, t.delta, t.s);
        j["m_tilde"] = {{"value", mt.value}, {"argmin", mt.argmin}};
    }
    std::vector<GrowthConstants> cands;
    for (double A : t.A) cands.push_back({A, t.a, GrowthProvenance::UserSupplied, 0.0});
    const MGamma mg = m_gamma(t.k, cands, t.eps_gamma);
    j["m_gamma"] = {{"k", t.k}, {"eps_gamma", t.eps_gamma}, {"value", number(mg.value)}, {"eps", mg.eps}};
    if (t.n >= 2) j["eta"] = {{"n", t.n}, {"r", t.r}, {"value", eta(t.n, t.r)}};
    j["seed"] = c.seed;
    emit(c, j.dump(2) + "\n", out);
    return kOk;
}

int cmd_verify(const Common& c, const std::vector<std::string>& suites, std::ostream& out, std::ostream& err) {
    std::vector<std::string> names;
    if (suites.empty()) {
        for (const char* n : {"harmonicity", "eigen", "radial-norm", "sign-pattern", "tail-domination",
                              "coefficient-bound", "progression", "displacement", "conjugated-rotation", "class-n"})
            names.emplace_back(n);
    } else {
        for (const auto& s : suites) {
            const auto it = suite_aliases().find(s);
            if (it == suite_aliases().end()) {
                err << "verify: unknown suite '" << s << "'\n";
                return kUsage;
            }
            names.push_back(it->second);
        }
    }
    Json results = Json::array();
    bool all = true;
    for (const auto& n : names) {
        Json r = run_suite(n, c.seed);
        all = all && r["pass"].get<bool>();
        results.push_back(std::move(r));
    }
    emit(c, Json{{"suites", results}, {"pass", all}, {"seed", c.seed}}.dump(2) + "\n", out);
    return all ? kOk : kInconclusive;
}

int cmd_class_n(const Common& c, int n, double r, const std::string& gens_file, std::ostream& out) {
    std::vector<GroupElement> fuchsian;
    if (gens_file.empty()) {
        fuchsian = default_fuchsian();
    } else {
        std::ifstream in(gens_file);
        if (!in) throw ParseError("cannot open '" + gens_file + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("malformed JSON: ") + e.what());
        }
        if (!j.is_array()) throw ParseError("fuchsian generators: expected an array of [a,b,c,d]");
        for (std::size_t i = 0; i < j.size(); ++i)
            fuchsian.push_back(element_from_json(j[i], "fuchsian[" + std::to_string(i) + "]"));
    }
    const auto g = standard_class_n(fuchsian, n, r);
    Json j = group_to_json(g);
    if (n >= 2) {
        j["eta"] = eta(n, r);
        j["epsilon_lower"] = std::min(eta(n, r) / 3.0, r / 6.0);
    }
    j["r"] = r;
    emit(c, j.dump(2) + "\n", out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poincare series on AdS3 quotients: orbit counting, evaluation and certificates", "ads3"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--seed", common.seed, "Random seed recorded in every report");
    app.add_option("--budget", common.budget, "Node budget for word enumeration");
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("-o,--output", common.output, "Output file (written atomically); stdout if omitted");

    OrbitArgs oa;
    auto* orbit = app.add_subcommand("orbit", "Count orbit points in pseudo-balls");
    orbit->add_option("--group", oa.group, "Group presentation JSON")->required();
    orbit->add_option("--x", oa.x, "Basepoint matrix a,b,c,d")->delimiter(',')->expected(4);
    orbit->add_option("--radii", oa.radii, "Radii")->delimiter(',');
    orbit->add_option("--rmax", oa.rmax, "Largest radius of a uniform grid");
    orbit->add_option("--step", oa.step, "Grid step");
    orbit->add_option("--max-word-len", oa.max_word_len, "Word-length frontier")->check(CLI::PositiveNumber);
    orbit->add_flag("--elements", oa.elements, "List words and moved norms at the largest radius");

    int em = 1, ek = 0;
    std::vector<double> ex;
    auto* eval = app.add_subcommand("eval", "Evaluate psi_{m,k} at a point");
    eval->add_option("--m", em, "m >= 1")->required();
    eval->add_option("--k", ek, "k >= 0")->required();
    eval->add_option("--x", ex, "Point matrix a,b,c,d")->delimiter(',')->expected(4);

    SeriesArgs sa;
    auto* series = app.add_subcommand("series", "Truncated Poincare series with tail bound");
    series->add_option("--group", sa.group)->required();
    series->add_option("--m", sa.m)->required();
    series->add_option("--k", sa.k)->required();
    series->add_option("--x", sa.x)->delimiter(',')->expected(4);
    series->add_option("--R0", sa.R0, "Truncation radius");
    series->add_option("--A", sa.A)->required();
    series->add_option("--a", sa.a)->required();
    series->add_option("--max-word-len", sa.max_word_len)->check(CLI::PositiveNumber);

    CertifyArgs ca;
    auto* certify = app.add_subcommand("certify", "Linear independence certificate");
    certify->add_option("--group", ca.group)->required();
    certify->add_option("--m", ca.m)->required()->check(CLI::PositiveNumber);
    certify->add_option("--k", ca.k)->required()->check(CLI::Range(1, 12));
    certify->add_option("--eps", ca.eps)->required();
    certify->add_option("--eps-gamma", ca.eps_gamma, "Known lower bound for eps_Gamma");
    certify->add_option("--growth", ca.growth, "fitted, user or fact")->check(CLI::IsMember({"fitted", "user", "fact"}));
    certify->add_option("--A", ca.A);
    certify->add_option("--a", ca.a);
    certify->add_option("--alpha", ca.alpha);
    certify->add_option("--c", ca.c);
    certify->add_option("--fit-rmax", ca.fit_rmax);
    certify->add_option("--fit-step", ca.fit_step);
    certify->add_option("--R0", ca.R0, "Truncation radius (0 = automatic)");
    certify->add_option("--max-word-len", ca.max_word_len)->check(CLI::PositiveNumber);
    certify->add_option("--eps-depth", ca.eps_depth, "Word depth for eps_Gamma and compact-part estimates");

    ThresholdArgs ta;
    auto* thr = app.add_subcommand("thresholds", "m(C,a,eps,s), m_tilde, m_Gamma(k) and eta_n");
    thr->add_option("--C", ta.C);
    thr->add_option("--a", ta.a);
    thr->add_option("--eps", ta.eps);
    thr->add_option("--delta", ta.delta);
    thr->add_option("--s", ta.s);
    thr->add_option("--k", ta.k)->check(CLI::PositiveNumber);
    thr->add_option("--eps-gamma", ta.eps_gamma);
    thr->add_option("--A", ta.A, "Growth candidates A (paired with --a)")->delimiter(',');
    thr->add_option("--n", ta.n);
    thr->add_option("--r", ta.r);

    std::vector<std::string> suites;
    auto* verify = app.add_subcommand("verify", "Run oracle suites");
    verify->add_option("--suite", suites, "Suite name (repeatable); all when omitted");

    int cn = 1;
    double cr = 0.1;
    std::string cgens;
    auto* classn = app.add_subcommand("class-n", "Build a standard class-n presentation");
    classn->add_option("--n", cn)->required();
    classn->add_option("--r", cr, "Systole parameter r (default 0.1)");
    classn->add_option("--fuchsian", cgens, "JSON array of [a,b,c,d] generators");

    std::vector<std::string> argv_store = args;
    if (argv_store.empty()) argv_store.emplace_back("ads3");
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*orbit) return cmd_orbit(common, oa, out);
        if (*eval) return cmd_eval(common, em, ek, ex, out);
        if (*series) return cmd_series(common, sa, out);
        if (*certify) return cmd_certify(common, ca, out);
        if (*thr) return cmd_thresholds(common, ta, out);
        if (*verify) return cmd_verify(common, suites, out, err);
        if (*classn) return cmd_class_n(common, cn, cr, cgens, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidEpsilon& e) {
        err << "invalid epsilon: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidClass& e) {
        err << "invalid class: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidCertificateInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "inconclusive: " << e.what() << '\n';
        return kInconclusive;
    }
    return kUsage;
}

}  // namespace ads3::cli
