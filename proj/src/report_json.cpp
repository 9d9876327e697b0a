#include "kulsurf/report_json.hpp"

#include <cstdint>

#include "json.hpp"

namespace kulsurf {

namespace {

using nlohmann::json;

json int_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

json point_json(const ProjPoint& p) { return p.to_string(); }

json int_list_json(const std::vector<Int>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(int_json(v));
    return out;
}

json spec_json(const SurfaceSpec& spec) {
    return {{"d1", spec.d1}, {"m1", spec.m1}, {"d2", spec.d2}, {"m2", spec.m2}};
}

json classification_object(const ClassificationReport& report) {
    return {{"affine", report.affine},
            {"factorial", report.factorial},
            {"determinant", int_json(report.determinant)},
            {"picard_invariants", int_list_json(report.picard_invariants)},
            {"self_intersection_sum", int_json(report.self_intersection_sum)},
            {"spec", spec_json(report.spec)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string tool_version() { return "1.0.0"; }

std::string classification_json(const ClassificationReport& report) {
    return dump(classification_object(report));
}

std::string cycle_json(const IntersectionCycle& cycle) {
    json rational = json::array();
    for (const auto& rp : cycle.rational_points)
        rational.push_back({{"point", point_json(rp.point)}, {"multiplicity", rp.multiplicity}});
    json classes = json::array();
    for (const auto& cls : cycle.conjugate_classes)
        classes.push_back({{"min_poly", int_list_json(cls.min_poly)},
                           {"multiplicity", cls.multiplicity},
                           {"size", cls.size},
                           {"shear", {{"alpha", int_json(cls.shear_alpha)},
                                      {"beta", int_json(cls.shear_beta)}}}});
    return dump({{"rational_points", rational},
                 {"conjugate_classes", classes},
                 {"total_multiplicity", cycle.total_multiplicity},
                 {"distinct_points", cycle.distinct_points},
                 {"shear", {{"alpha", int_json(cycle.shear_alpha)},
                            {"beta", int_json(cycle.shear_beta)}}}});
}

std::string census_json(const CensusReport& report) {
    json samples = json::array();
    for (const auto& s : report.samples) {
        json pattern = json::array();
        for (int m : s.pattern) pattern.push_back(m);
        samples.push_back({{"source", point_json(s.source)},
                           {"target", point_json(s.target)},
                           {"pattern", pattern},
                           {"source_in_fiber", s.source_in_fiber},
                           {"all_simple", s.all_simple},
                           {"branch_consistent", s.branch_consistent}});
    }
    json histogram = json::object();
    for (const auto& [distinct, count] : report.distinct_histogram)
        histogram[std::to_string(distinct)] = count;
    json patterns = json::object();
    for (const auto& [pattern, count] : report.pattern_histogram) patterns[pattern] = count;
    return dump({{"seed", report.seed},
                 {"requested", report.requested},
                 {"samples", samples},
                 {"histogram", histogram},
                 {"pattern_histogram", patterns},
                 {"failures", report.failures}});
}

std::string certificate_json(const KulikovCertificate& certificate, const std::string& command,
                             const std::string& inputs_echo) {
    json checks = json::array();
    for (const auto& c : certificate.checks) {
        json witness = json::object();
        for (const auto& [key, value] : c.details) witness[key] = value;
        checks.push_back(
            {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"witness", witness}});
    }
    return dump({{"tool_version", tool_version()},
                 {"command", command},
                 {"inputs_echo", inputs_echo},
                 {"seed", certificate.seed},
                 {"samples", certificate.n_samples},
                 {"checks", checks},
                 {"classification", classification_object(certificate.classification)},
                 {"passed", certificate.passed}});
}

}  // namespace kulsurf
