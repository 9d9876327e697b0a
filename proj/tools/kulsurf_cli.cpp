#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "kulsurf/blowup_pic.hpp"
#include "kulsurf/intersection.hpp"
#include "kulsurf/kulikov.hpp"
#include "kulsurf/parse.hpp"
#include "kulsurf/plane_curves.hpp"
#include "kulsurf/report_json.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

struct ClassifyArgs {
    int d1 = 0, m1 = 0, d2 = 0, m2 = 0;
    int numeric_flags = 0;  // how many of --d1 --m1 --d2 --m2 were given
    std::string curve1, curve2, point_text;
};

int run_classify(const ClassifyArgs& args) {
    kulsurf::SurfaceSpec spec;
    const bool files_given = !args.curve1.empty() || !args.curve2.empty() ||
                             !args.point_text.empty();
    try {
        if (args.numeric_flags > 0) {
            if (args.numeric_flags != 4)
                return usage_error("--d1, --m1, --d2, --m2 must be given together");
            if (files_given)
                return usage_error("numeric flags and curve files are mutually exclusive");
            spec = {args.d1, args.m1, args.d2, args.m2};
        } else {
            if (args.curve1.empty() || args.curve2.empty() || args.point_text.empty())
                return usage_error(
                    "expected either --d1 --m1 --d2 --m2 or two curve files with --point");
            kulsurf::PlaneCurve c1(kulsurf::read_curve_file(args.curve1));
            kulsurf::PlaneCurve c2(kulsurf::read_curve_file(args.curve2));
            kulsurf::ProjPoint p = kulsurf::parse_point(args.point_text);
            spec = kulsurf::spec_from_curves(c1, c2, p);
        }
        std::cout << kulsurf::classification_json(kulsurf::classify(spec));
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return kExitPass;
}

int run_intersect(const std::string& path1, const std::string& path2) {
    kulsurf::MultiPoly f(3), g(3);
    try {
        f = kulsurf::read_curve_file(path1);
        g = kulsurf::read_curve_file(path2);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    try {
        kulsurf::IntersectionCycle cycle = kulsurf::intersect_forms(f, g, 0);
        std::cout << kulsurf::cycle_json(cycle);
    } catch (const std::domain_error& e) {
        // Shared component: the cycle is not defined.
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return kExitPass;
}

int run_kulikov_verify(const std::string& seed_text, int samples, const std::string& out_path) {
    std::uint64_t seed = 0;
    try {
        seed = kulsurf::parse_seed(seed_text);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    if (samples < 1) return usage_error("--samples must be at least 1");

    std::ofstream out;
    if (!out_path.empty()) {
        out.open(out_path, std::ios::binary);
        if (!out) return usage_error("cannot write file: " + out_path);
    }

    kulsurf::KulikovCertificate cert = kulsurf::verify_all(seed, samples);
    const std::string echo =
        "--seed " + std::to_string(seed) + " --samples " + std::to_string(samples);
    const std::string text = kulsurf::certificate_json(cert, "kulikov-verify", echo);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        out << text;
        out.flush();
        if (!out) return usage_error("cannot write file: " + out_path);
    }
    return cert.passed ? kExitPass : kExitFail;
}

int run_fiber_census(const std::string& seed_text, int samples) {
    std::uint64_t seed = 0;
    try {
        seed = kulsurf::parse_seed(seed_text);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    if (samples < 1) return usage_error("--samples must be at least 1");

    kulsurf::CensusReport report =
        kulsurf::degree_census(kulsurf::standard_net(), samples, seed);
    std::cout << kulsurf::census_json(report);
    return report.failures == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for complements of plane curves on a blown-up plane"};
    app.require_subcommand(1);

    ClassifyArgs classify_args;
    CLI::App* classify = app.add_subcommand(
        "classify", "Numerical classification of a one-blow-up curve complement");
    auto* d1 = classify->add_option("--d1", classify_args.d1, "Degree of the first curve");
    auto* m1 = classify->add_option("--m1", classify_args.m1,
                                    "Multiplicity of the first curve at the blown-up point");
    auto* d2 = classify->add_option("--d2", classify_args.d2, "Degree of the second curve");
    auto* m2 = classify->add_option("--m2", classify_args.m2,
                                    "Multiplicity of the second curve at the blown-up point");
    classify->add_option("curve1", classify_args.curve1, "First curve file");
    classify->add_option("curve2", classify_args.curve2, "Second curve file");
    classify->add_option("--point", classify_args.point_text,
                         "Blown-up point as \"a,b,c\" (integers)");

    std::string intersect_path1, intersect_path2;
    CLI::App* intersect =
        app.add_subcommand("intersect", "Intersection cycle of two plane curves");
    intersect->add_option("curve1", intersect_path1, "First curve file")->required();
    intersect->add_option("curve2", intersect_path2, "Second curve file")->required();

    std::string verify_seed = "0";
    int verify_samples = 50;
    std::string verify_out;
    CLI::App* verify = app.add_subcommand(
        "kulikov-verify", "Run the full verification transcript of the construction");
    verify->add_option("--seed", verify_seed, "Decimal seed, at most 2^63 - 1");
    verify->add_option("--samples", verify_samples, "Number of census samples");
    verify->add_option("--out", verify_out, "Write the certificate to this file");

    std::string census_seed = "0";
    int census_samples = 50;
    CLI::App* census =
        app.add_subcommand("fiber-census", "Sample fibers of the degree-three cover");
    census->add_option("--seed", census_seed, "Decimal seed, at most 2^63 - 1");
    census->add_option("--samples", census_samples, "Number of samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify->parsed()) {
            classify_args.numeric_flags = static_cast<int>(d1->count() + m1->count() +
                                                           d2->count() + m2->count());
            return run_classify(classify_args);
        }
        if (intersect->parsed()) return run_intersect(intersect_path1, intersect_path2);
        if (verify->parsed())
            return run_kulikov_verify(verify_seed, verify_samples, verify_out);
        if (census->parsed()) return run_fiber_census(census_seed, census_samples);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return usage_error("no subcommand given");
}
