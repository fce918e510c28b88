#include "job.hpp"

#include "gk/algebra.hpp"
#include "gk/dmodule.hpp"
#include "gk/errors.hpp"
#include "gk/hypergeometric.hpp"
#include "gk/qhsp.hpp"
#include "gk/serialize.hpp"
#include "gk/toric.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

using namespace gk;
using namespace gk::cli;

namespace {

int emit(const JobResult& result, const std::optional<std::string>& path, const std::string& format, double seconds)
{
    const std::string text = render(result.report, format);
    if (path)
        write_report(*path, text, seconds);
    else
        std::cout << text;
    return result.exit_code;
}

double since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int single_check(const std::string& geometry_ref, const std::string& check, const std::string& order,
                 const std::optional<std::string>& output, const std::string& format)
{
    const auto start = std::chrono::steady_clock::now();
    JobSpec spec;
    if (geometry_ref.starts_with("builtin:"))
        spec.geometry = {{"builtin", geometry_ref.substr(8)}};
    else
        spec.geometry = {{"file", geometry_ref}};
    spec.checks = {check};
    spec.box = order;
    spec.format = format;
    return emit(run_job(spec), output, format, since(start));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gk: twisted I-series of projective bundles, exact checks"};
    app.require_subcommand(1);

    std::string job_path, geometry_ref, order = "3", format = "json";
    std::optional<std::string> output;
    int n = 1, precision = -1;

    auto* run = app.add_subcommand("run", "run a JSON job file");
    run->add_option("jobfile", job_path, "job file")->required();
    run->add_option("--output", output, "report path (overrides the job's output.path)");
    run->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* expand = app.add_subcommand("expand-i", "print the I-series coefficients as JSON");
    expand->add_option("--geometry", geometry_ref, "geometry file or builtin:NAME")->required();
    expand->add_option("--order", order, "box: nu, \"nu,d\" or \"nu;d1,...,dk\"");

    auto* dmod = app.add_subcommand("check-dmodule", "check the quantum differential equation of P^n");
    dmod->add_option("--n", n, "fiber dimension")->check(CLI::Range(0, 6));
    dmod->add_option("--order", order, "highest power of q");
    dmod->add_option("--precision", precision, "lambda-degree kept (default n+1)");

    auto* toric = app.add_subcommand("check-toric", "compare with the toric I-function of the lifted fan");
    toric->add_option("--bundle", geometry_ref, "geometry file or builtin:NAME")->required();
    toric->add_option("--order", order, "box");

    auto* qhsp = app.add_subcommand("check-qhsp", "check the hyperplane-section collapse");
    qhsp->add_option("--bundle", geometry_ref, "geometry file or builtin:NAME")->required();
    qhsp->add_option("--order", order, "box");

    for (auto* sub : {dmod, toric, qhsp}) {
        sub->add_option("--output", output, "report path");
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    }

    auto* validate = app.add_subcommand("validate", "validate a geometry file");
    validate->add_option("geometry", geometry_ref, "geometry file or builtin:NAME")->required();

    app.add_subcommand("list-builtins", "list builtin geometries");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const auto start = std::chrono::steady_clock::now();
            JobSpec spec = load_job(job_path);
            if (run->count("--format"))
                spec.format = format;
            return emit(run_job(spec), output ? output : spec.output_path, spec.format, since(start));
        }
        if (*expand) {
            const Geometry geo = resolve_geometry(geometry_ref);
            const Box box = parse_box(order, geo.base->k());
            enforce_cap(box);
            const BundleSpace b = geo.bundle();
            std::cout << expansion_json(i_series(b, box), b.grading()).dump(2) << "\n";
            return exit_pass;
        }
        if (*dmod) {
            const auto start = std::chrono::steady_clock::now();
            const int k = std::stoi(order);
            if (k < 0)
                throw InputError("--order must be non-negative");
            const DressedSeries s = equivariant_i(n, k, precision);
            Report r = check_annihilation(s);
            const Report limit = check_nonequivariant_limit(s);
            r.absorb(limit);
            r.note({{"part", limit.check}, {"status", to_string(limit.status)}});
            return emit(assemble("P" + std::to_string(n), {{"n", n}, {"order", k}}, {r}), output, format, since(start));
        }
        if (*toric)
            return single_check(geometry_ref, "toric", order, output, format);
        if (*qhsp)
            return single_check(geometry_ref, "qhsp", order, output, format);
        if (*validate) {
            const Geometry geo = resolve_geometry(geometry_ref);
            const BundleSpace b = geo.bundle();
            nlohmann::json out = {{"geometry", geo.name},
                                  {"status", "pass"},
                                  {"base_dim", geo.base->algebra->dim()},
                                  {"picard_rank", geo.base->k()},
                                  {"n", geo.base->n()},
                                  {"bundle_dim", b.algebra()->dim()},
                                  {"toric", geo.toric.has_value()}};
            std::cout << out.dump(2) << "\n";
            return exit_pass;
        }
        for (const auto& name : builtin_names())
            std::cout << name << "\n";
        return exit_pass;
    } catch (const std::invalid_argument&) {
        std::cerr << "gk: expected an integer\n";
        return exit_input_error;
    } catch (const Error& e) {
        std::cerr << "gk: " << e.what() << "\n";
        return exit_input_error;
    }
}
