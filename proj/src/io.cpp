#include "ads3/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <Eigen/Core>

#include "ads3/errors.hpp"

namespace ads3 {

GroupElement element_from_json(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 4) throw ParseError(field + ": expected an array of 4 numbers");
    std::array<double, 4> e{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!j[i].is_number()) throw ParseError(field + "[" + std::to_string(i) + "]: expected a number");
        e[i] = j[i].get<double>();
    }
    try {
        return GroupElement::from_entries(e);
    } catch (const CorruptedElement& ex) {
        throw ParseError(field + ": " + ex.what());
    }
}

Json element_to_json(const GroupElement& g) {
    return Json::array({g.a(), g.b(), g.c(), g.d()});
}

GroupPresentation group_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("group: expected a JSON object");
    std::string label = "group";
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw ParseError("label: expected a string");
        label = j["label"].get<std::string>();
    }
    ReductionStrategy strategy = ReductionStrategy::FreeGroup;
    if (j.contains("strategy")) {
        if (!j["strategy"].is_string()) throw ParseError("strategy: expected \"free\" or \"hash\"");
        const auto s = j["strategy"].get<std::string>();
        if (s == "free") strategy = ReductionStrategy::FreeGroup;
        else if (s == "hash") strategy = ReductionStrategy::HashDedup;
        else throw ParseError("strategy: expected \"free\" or \"hash\", got \"" + s + "\"");
    }
    if (!j.contains("generators") || !j["generators"].is_array())
        throw ParseError("generators: expected an array");
    std::vector<IsometryPair> gens;
    const auto& arr = j["generators"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "generators[" + std::to_string(i) + "]";
        if (!arr[i].is_object()) throw ParseError(where + ": expected an object");
        if (!arr[i].contains("first")) throw ParseError(where + ".first: missing");
        if (!arr[i].contains("second")) throw ParseError(where + ".second: missing");
        gens.push_back({element_from_json(arr[i]["first"], where + ".first"),
                        element_from_json(arr[i]["second"], where + ".second")});
    }
    try {
        return GroupPresentation(label, std::move(gens), strategy);
    } catch (const InvalidArgument& ex) {
        throw ParseError(std::string("generators: ") + ex.what());
    }
}

GroupPresentation group_from_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("malformed JSON: ") + ex.what());
    }
    return group_from_json(j);
}

GroupPresentation group_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return group_from_string(ss.str());
}

Json group_to_json(const GroupPresentation& g) {
    Json j;
    j["label"] = g.label();
    j["strategy"] = g.strategy() == ReductionStrategy::FreeGroup ? "free" : "hash";
    Json gens = Json::array();
    for (const auto& p : g.generators())
        gens.push_back({{"first", element_to_json(p.first)}, {"second", element_to_json(p.second)}});
    j["generators"] = gens;
    if (g.kernel() && g.kernel()->order > 1) {
        j["kernel"] = {{"order", g.kernel()->order},
                       {"generator",
                        {{"first", element_to_json(g.kernel()->generator.first)},
                         {"second", element_to_json(g.kernel()->generator.second)}}}};
    }
    return j;
}

Json number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    return v;
}

Json growth_to_json(const GrowthConstants& g) {
    Json j{{"A", number(g.A)}, {"a", number(g.a)}, {"provenance", to_string(g.provenance)},
           {"certified", g.certified()}};
    if (g.provenance == GrowthProvenance::FactDerived) j["alpha"] = g.alpha;
    return j;
}

Json certificate_to_json(const IndependenceCertificate& cert, std::uint64_t seed) {
    Json j;
    j["label"] = cert.label;
    j["inputs"] = {{"m", cert.m},
                   {"k", cert.k},
                   {"eps", cert.eps},
                   {"eps_gamma", number(cert.eps_gamma)},
                   {"lambda", 4.0 * cert.m * (cert.m - 1.0)},
                   {"growth", growth_to_json(cert.growth)},
                   {"R0", cert.R0}};
    Json rows = Json::array();
    for (std::size_t r = 0; r < cert.entries.size(); ++r) {
        Json row;
        row["signs"] = cert.signs[r].values();
        row["point"] = element_to_json(cert.sample_points[r].element());
        row["orbit_points"] = cert.orbit_points[r];
        Json vals = Json::array();
        for (const auto& e : cert.entries[r]) vals.push_back({{"value", e.value}, {"error", e.error_radius}});
        row["entries"] = vals;
        rows.push_back(row);
    }
    j["matrix"] = rows;
    j["column_scales"] = cert.rank.column_scales;
    j["gram_min_eigenvalue"] = cert.rank.gram_min_eigenvalue;
    j["sigma_min"] = cert.rank.sigma_min;
    j["total_error"] = number(cert.rank.total_error);
    j["verdict"] = to_string(cert.rank.verdict);
    j["toolchain"] = toolchain();
    j["seed"] = seed;
    return j;
}

Json nonvanishing_to_json(const NonvanishingResult& r) {
    return Json{{"verdict", to_string(r.verdict)},      {"signs", r.signs.values()},
                {"main_term", r.main_term},             {"enumerated_tail", r.enumerated_tail},
                {"growth_tail", r.growth_tail},         {"rounding", r.rounding},
                {"tail_bound", r.tail_bound},           {"shell_bound", number(r.shell_bound)},
                {"R0", r.R0},                           {"orbit_points", r.orbit_points}};
}

std::string toolchain() {
    std::ostringstream os;
#if defined(__clang__)
    os << "clang " << __clang_major__ << "." << __clang_minor__ << "." << __clang_patchlevel__;
#elif defined(__GNUC__)
    os << "gcc " << __GNUC__ << "." << __GNUC_MINOR__ << "." << __GNUC_PATCHLEVEL__;
#else
    os << "unknown compiler";
#endif
    os << "; C++ " << __cplusplus << "; Eigen " << EIGEN_WORLD_VERSION << "." << EIGEN_MAJOR_VERSION << "."
       << EIGEN_MINOR_VERSION << "; nlohmann_json " << NLOHMANN_JSON_VERSION_MAJOR << "."
       << NLOHMANN_JSON_VERSION_MINOR << "." << NLOHMANN_JSON_VERSION_PATCH;
    return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw Error("write to '" + tmp.string() + "' failed");
    }
    fs::rename(tmp, target);
}

}  // namespace ads3
