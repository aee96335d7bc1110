#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ads3/ads3.hpp"

namespace py = pybind11;
using namespace ads3;

namespace {

GroupElement element_from(const std::vector<double>& e) {
    if (e.size() != 4) throw InvalidArgument("expected 4 matrix entries [a, b, c, d]");
    return GroupElement::from_entries(e[0], e[1], e[2], e[3]);
}

py::dict ball_to_dict(const GroupPresentation& g, const OrbitBall& b) {
    py::list words, norms;
    for (const auto& e : b.elements) {
        words.append(word_to_string(e.word, g.rank()));
        norms.append(e.moved_norm);
    }
    py::dict d;
    d["words"] = words;
    d["moved_norms"] = norms;
    d["exhaustive"] = b.exhaustive;
    d["word_frontier"] = b.word_frontier;
    d["nodes_visited"] = b.nodes_visited;
    return d;
}

py::dict check_to_dict(const CheckResult& r) {
    py::dict d;
    d["holds"] = r.holds;
    d["min_margin"] = r.min_margin;
    d["cases"] = r.cases;
    return d;
}

}  // namespace

PYBIND11_MODULE(_ads3, m) {
    m.doc() = "Poincare series of spherical eigenfunctions on AdS3 quotients";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<CorruptedElement>(m, "CorruptedElement", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<IncompleteEnumeration>(m, "IncompleteEnumeration", base.ptr());
    py::register_exception<InvalidCertificateInput>(m, "InvalidCertificateInput", base.ptr());
    py::register_exception<InvalidClass>(m, "InvalidClass", base.ptr());
    py::register_exception<NoHyperbolicWords>(m, "NoHyperbolicWords", base.ptr());
    py::register_exception<DivergentNorm>(m, "DivergentNorm", base.ptr());
    py::register_exception<DivergentTail>(m, "DivergentTail", base.ptr());
    py::register_exception<InvalidN>(m, "InvalidN", base.ptr());
    py::register_exception<SignMismatch>(m, "SignMismatch", base.ptr());
    py::register_exception<InvalidEpsilon>(m, "InvalidEpsilon", base.ptr());
    py::register_exception<NearCone>(m, "NearCone", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<SearchFailed>(m, "SearchFailed", base.ptr());

    py::class_<GroupElement>(m, "GroupElement")
        .def(py::init<>())
        .def(py::init(&element_from), py::arg("entries"))
        .def_static("rotation", &GroupElement::rotation, py::arg("theta"))
        .def_static("boost", &GroupElement::boost, py::arg("t"))
        .def_static("identity", &GroupElement::identity)
        .def_property_readonly("entries", &GroupElement::entries)
        .def("inverse", &GroupElement::inverse)
        .def("trace", &GroupElement::trace)
        .def("determinant", &GroupElement::determinant)
        .def("norm", [](const GroupElement& g) { return norm(g); })
        .def("__mul__", [](const GroupElement& g, const GroupElement& h) { return g * h; })
        .def("__repr__", [](const GroupElement& g) {
            const auto& e = g.entries();
            return "GroupElement([" + std::to_string(e[0]) + ", " + std::to_string(e[1]) + ", " +
                   std::to_string(e[2]) + ", " + std::to_string(e[3]) + "])";
        });

    m.def("cartan", [](const GroupElement& g) {
        const auto c = cartan(g);
        return py::make_tuple(c.theta1, c.t, c.theta2);
    });
    m.def("from_cartan", py::overload_cast<double, double, double>(&from_cartan), py::arg("theta1"), py::arg("t"),
          py::arg("theta2"));

    py::class_<AdS3Point>(m, "AdS3Point")
        .def(py::init<>())
        .def(py::init<const GroupElement&>())
        .def_static("from_four_vector", &AdS3Point::from_four_vector)
        .def_property_readonly("element", &AdS3Point::element)
        .def("four_vector", &AdS3Point::four_vector)
        .def("complex_pair", &AdS3Point::complex_pair)
        .def("norm", [](const AdS3Point& x) { return norm(x); });

    py::class_<IsometryPair>(m, "IsometryPair")
        .def(py::init<>())
        .def(py::init([](const GroupElement& a, const GroupElement& b) { return IsometryPair{a, b}; }))
        .def_readonly("first", &IsometryPair::first)
        .def_readonly("second", &IsometryPair::second)
        .def("inverse", &IsometryPair::inverse)
        .def("act", &IsometryPair::act)
        .def("mu", &IsometryPair::mu)
        .def("__mul__", [](const IsometryPair& g, const IsometryPair& h) { return g * h; });
    m.def("norm_lower_bound", &norm_lower_bound);

    py::enum_<ReductionStrategy>(m, "ReductionStrategy")
        .value("FreeGroup", ReductionStrategy::FreeGroup)
        .value("HashDedup", ReductionStrategy::HashDedup);

    py::class_<GroupPresentation>(m, "GroupPresentation")
        .def(py::init<std::string, std::vector<IsometryPair>, ReductionStrategy>(), py::arg("label"),
             py::arg("generators"), py::arg("strategy") = ReductionStrategy::FreeGroup)
        .def_property_readonly("label", &GroupPresentation::label)
        .def_property_readonly("rank", &GroupPresentation::rank)
        .def_property_readonly("generators", &GroupPresentation::generators)
        .def_property_readonly("strategy", &GroupPresentation::strategy)
        .def("to_json", [](const GroupPresentation& g) { return group_to_json(g).dump(); });
    m.def("group_from_json", &group_from_string, py::arg("text"));

    py::class_<EnumerationLimits>(m, "EnumerationLimits")
        .def(py::init<>())
        .def(py::init([](int L, std::size_t budget) { return EnumerationLimits{L, budget}; }), py::arg("max_word_len"),
             py::arg("budget") = 10'000'000)
        .def_readwrite("max_word_len", &EnumerationLimits::max_word_len)
        .def_readwrite("budget", &EnumerationLimits::budget);

    m.def("enumerate_ball",
          [](const GroupPresentation& g, const AdS3Point& x, double R, const EnumerationLimits& lim) {
              return ball_to_dict(g, enumerate_ball(g, x, R, lim));
          },
          py::arg("group"), py::arg("x"), py::arg("R"), py::arg("limits") = EnumerationLimits{});
    m.def("count", &count, py::arg("group"), py::arg("x"), py::arg("R"), py::arg("limits") = EnumerationLimits{64});
    m.def("epsilon_upper", &epsilon_upper, py::arg("group"), py::arg("max_word_len"));
    m.def("epsilon_lower_certified", &epsilon_lower_certified, py::arg("alpha"), py::arg("systole"));
    m.def("separating_conjugation",
          [](const GroupPresentation& g, int depth, int trials, std::uint64_t seed) {
              const auto s = separating_conjugation(g, depth, trials, seed);
              return py::make_tuple(s.g, s.min_gap, s.trial);
          },
          py::arg("group"), py::arg("depth"), py::arg("trials"), py::arg("seed"));

    py::enum_<GrowthProvenance>(m, "GrowthProvenance")
        .value("Fitted", GrowthProvenance::Fitted)
        .value("UserSupplied", GrowthProvenance::UserSupplied)
        .value("FactDerived", GrowthProvenance::FactDerived);

    py::class_<GrowthConstants>(m, "GrowthConstants")
        .def(py::init([](double A, double a) { return GrowthConstants{A, a, GrowthProvenance::UserSupplied, 0.0}; }),
             py::arg("A"), py::arg("a"))
        .def_readonly("A", &GrowthConstants::A)
        .def_readonly("a", &GrowthConstants::a)
        .def_readonly("provenance", &GrowthConstants::provenance)
        .def_property_readonly("certified", &GrowthConstants::certified);

    m.def("fit_growth",
          [](const GroupPresentation& g, const std::vector<AdS3Point>& xs, double rmax, double step) {
              return fit_growth(g, xs, rmax, step, EnumerationLimits{64});
          },
          py::arg("group"), py::arg("basepoints"), py::arg("r_max"), py::arg("grid_step"));
    m.def("validate_growth",
          [](const GroupPresentation& g, const GrowthConstants& c, const std::vector<AdS3Point>& xs,
             const std::vector<double>& radii) {
              const auto v = validate_growth(g, c, xs, radii, EnumerationLimits{64});
              return py::make_tuple(v.holds, v.worst_ratio, v.worst_radius);
          },
          py::arg("group"), py::arg("constants"), py::arg("basepoints"), py::arg("radii"));
    m.def("alpha_contraction_check",
          [](const GroupPresentation& g, double alpha, int L) {
              const auto r = alpha_contraction_check(g, alpha, L);
              return py::make_tuple(r.holds, r.worst_ratio);
          },
          py::arg("group"), py::arg("alpha"), py::arg("max_word_len"));
    m.def("standard_class_n",
          [](const std::vector<GroupElement>& gens, int n, double r) { return standard_class_n(gens, n, r); },
          py::arg("fuchsian"), py::arg("n"), py::arg("r"));
    m.def("translation_length", &translation_length);
    m.def("lipschitz_lower_bound",
          [](const std::vector<GroupElement>& j, const std::vector<GroupElement>& rho, int L) {
              return lipschitz_lower_bound(j, rho, L);
          },
          py::arg("j"), py::arg("rho"), py::arg("max_word_len"));

    py::class_<SphericalParams>(m, "SphericalParams")
        .def(py::init<int, int>(), py::arg("m"), py::arg("k"))
        .def_property_readonly("m", &SphericalParams::m)
        .def_property_readonly("k", &SphericalParams::k)
        .def("eigenvalue", &SphericalParams::eigenvalue);
    m.def("psi", &psi, py::arg("params"), py::arg("x"));
    m.def("psi_abs", &psi_abs, py::arg("params"), py::arg("norm_x"));
    m.def("l2_radial_norm_sq", py::overload_cast<int, int>(&l2_radial_norm_sq), py::arg("m"), py::arg("k"));

    m.def("m_threshold", py::overload_cast<double, double, double, double>(&m_threshold), py::arg("C"), py::arg("a"),
          py::arg("eps"), py::arg("s"));
    m.def("m_tilde",
          [](double C, double a, double delta, double s) {
              const auto r = m_tilde(C, a, delta, s);
              return py::make_tuple(r.value, r.argmin);
          },
          py::arg("C"), py::arg("a"), py::arg("delta"), py::arg("s"));
    m.def("m_gamma",
          [](int k, const std::vector<GrowthConstants>& cands, double eps_gamma) {
              const auto r = m_gamma(k, cands, eps_gamma);
              return py::make_tuple(r.value, r.eps);
          },
          py::arg("k"), py::arg("candidates"), py::arg("eps_gamma"));
    m.def("eta", &eta, py::arg("n"), py::arg("r"));

    m.def("theta_sample", [](const std::vector<int>& a, int N) { return theta_sample(SignVector(a), N); },
          py::arg("signs"), py::arg("N"));
    m.def("sample_point", [](const std::vector<int>& a, double eps) { return sample_point(SignVector(a), eps); },
          py::arg("signs"), py::arg("eps"));
    m.def("f_b",
          [](const std::vector<double>& b, const std::vector<int>& a, double u) { return f_b(b, SignVector(a), u); },
          py::arg("b"), py::arg("signs"), py::arg("u"));
    m.def("truncated_series",
          [](const GroupPresentation& g, const SphericalParams& p, const AdS3Point& x, double R0,
             const GrowthConstants& c) {
              const auto v = truncated_series(g, p, x, R0, c, EnumerationLimits{64});
              return py::make_tuple(v.value, v.error_radius);
          },
          py::arg("group"), py::arg("params"), py::arg("x"), py::arg("R0"), py::arg("growth"));
    m.def("nonvanishing_check",
          [](const GroupPresentation& g, int mm, const std::vector<double>& b, double eps, const GrowthConstants& c,
             double eps_gamma) { return nonvanishing_to_json(nonvanishing_check(g, mm, b, eps, c, eps_gamma)).dump(); },
          py::arg("group"), py::arg("m"), py::arg("b"), py::arg("eps"), py::arg("growth"), py::arg("eps_gamma"));
    m.def("independence_certificate",
          [](const GroupPresentation& g, int mm, int k, double eps, const GrowthConstants& c, double eps_gamma,
             double R0, std::uint64_t seed) {
              SeriesOptions o;
              o.eps_gamma = eps_gamma;
              o.truncation_radius = R0;
              return certificate_to_json(independence_certificate(g, mm, k, eps, c, o), seed).dump();
          },
          py::arg("group"), py::arg("m"), py::arg("k"), py::arg("eps"), py::arg("growth"),
          py::arg("eps_gamma") = std::numeric_limits<double>::quiet_NaN(), py::arg("R0") = 0.0, py::arg("seed") = 0);
    m.def("certify_rank",
          [](const std::vector<std::vector<double>>& v, const std::vector<std::vector<double>>& r) {
              const auto c = certify_rank(v, r);
              return py::make_tuple(to_string(c.verdict), c.sigma_min, c.total_error);
          },
          py::arg("values"), py::arg("radii"));

    m.def("check_sign_pattern", [](int k, int N) { return check_to_dict(check_sign_pattern(k, N)); });
    m.def("check_tail_domination",
          [](double C, double a, double eps, int s, int mm) {
              return check_to_dict(check_tail_domination(C, a, eps, s, mm));
          },
          py::arg("C"), py::arg("a"), py::arg("eps"), py::arg("s"), py::arg("m"));
    m.def("check_coefficient_bound", [](int k) { return check_to_dict(check_coefficient_bound(k)); });
    m.def("fuzz_displacement_inequality",
          [](std::size_t trials, std::uint64_t seed) { return check_to_dict(fuzz_displacement_inequality(trials, seed)); },
          py::arg("trials"), py::arg("seed"));
    m.def("check_conjugated_rotation", [](int n, double r) { return check_to_dict(check_conjugated_rotation(n, r)); });
    m.def("radial_norm_quadrature", &radial_norm_quadrature);
}
