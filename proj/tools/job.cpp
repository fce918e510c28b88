#include "job.hpp"

#include "gk/dmodule.hpp"
#include "gk/errors.hpp"
#include "gk/hypergeometric.hpp"
#include "gk/qhsp.hpp"
#include "gk/serialize.hpp"
#include "gk/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

namespace gk::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string resolve_path(const std::string& base_dir, const std::string& p)
{
    const fs::path path(p);
    return path.is_absolute() ? p : (fs::path(base_dir) / path).string();
}

Report precondition_report(const std::string& check, const std::string& reason)
{
    Report r;
    r.check = check;
    r.error(reason);
    return r;
}

std::vector<std::vector<int>> default_no_fiber_classes(const BundleSpace& b, const Box& box)
{
    std::vector<std::vector<int>> out;
    const auto& g = b.grading();
    for (const auto& c : box.classes()) {
        if (c.nu != 0 || c.is_zero())
            continue;
        bool ok = b.n() >= 1;
        for (int i = 1; i <= b.n(); ++i)
            ok = ok && g.v(static_cast<std::size_t>(i), c) > 0;
        if (ok)
            out.push_back(c.d);
    }
    return out;
}

Report run_no_fiber(const BundleSpace& b, const Box& box, const std::optional<std::vector<std::vector<int>>>& requested)
{
    const auto classes = requested ? *requested : default_no_fiber_classes(b, box);
    Report r;
    r.check = "no-fiber";
    r.claim = "T_{0,beta} is the finite product prod_i prod_{m=0}^{v_i-1} (z - c1(L_i) - m hbar)";
    r.box = to_json(box);
    if (classes.empty()) {
        r.error("no base class in the box has v_i > 0 for every i >= 1");
        return r;
    }
    for (const auto& beta : classes) {
        if (beta.size() != b.base().k()) {
            r.error("no-fiber class of wrong rank");
            return r;
        }
        r.absorb(extremal_no_fiber(b, beta).report);
    }
    return r;
}

Report run_dmodule(int n, int order)
{
    const DressedSeries s = equivariant_i(n, order);
    Report r = check_annihilation(s);
    const Report limit = check_nonequivariant_limit(s);
    r.absorb(limit);
    r.note({{"part", limit.check}, {"status", to_string(limit.status)}});
    return r;
}

Report run_expand(const BundleSpace& b, const Box& box)
{
    Report r;
    r.check = "expand-i";
    r.claim = "coefficients of the reduced I-series of P(V)";
    r.box = to_json(box);
    for (auto& entry : expansion_json(i_series(b, box), b.grading()))
        r.note(std::move(entry));
    return r;
}

Report run_check(const std::string& name, const Geometry& geo, const BundleSpace& b, const Box& box, const JobSpec& spec)
{
    try {
        if (name == "grading")
            return check_homogeneity(i_series(b, box), b.grading());
        if (name == "asymptotics")
            return check_asymptotics(i_series(b, box), b.grading()).report;
        if (name == "pure-fiber") {
            Report r = pure_fiber_specialization(b, box.nu_max);
            r.box = to_json(box);
            if (b.base().algebra->dim() == 1)
                r.absorb(pure_fiber_identity(b.n(), box.nu_max));
            return r;
        }
        if (name == "no-fiber")
            return run_no_fiber(b, box, spec.no_fiber_classes);
        if (name == "dmodule")
            return run_dmodule(b.n(), box.nu_max);
        if (name == "toric") {
            if (!geo.toric)
                return precondition_report(name, "geometry '" + geo.name + "' has no toric description");
            return check_toric_agreement(b, geo.lifted_fan(), box);
        }
        if (name == "qhsp")
            return check_qhsp(b, box);
        if (name == "expand-i")
            return run_expand(b, box);
    } catch (const Error& e) {
        return precondition_report(name, e.what());
    }
    return precondition_report(name, "unknown check");
}

ToricBaseSpec with_bundles(ToricBaseSpec spec, const json& bundles)
{
    try {
        spec.bundles = bundles.get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw InputError(std::string("geometry.bundles: ") + e.what());
    }
    return spec;
}

} // namespace

const std::vector<std::string>& known_checks()
{
    static const std::vector<std::string> names = {"asymptotics", "dmodule",  "expand-i", "grading",
                                                    "no-fiber",    "pure-fiber", "qhsp",   "toric"};
    return names;
}

JobSpec parse_job(const json& j, const std::string& base_dir)
{
    if (!j.is_object())
        throw InputError("job: expected a JSON object");
    JobSpec spec;
    spec.base_dir = base_dir;
    try {
        spec.version = j.value("version", kJobVersion);
        if (spec.version != kJobVersion)
            throw InputError("job.version: unsupported schema version " + std::to_string(spec.version));
        if (!j.contains("geometry"))
            throw InputError("job: missing field 'geometry'");
        spec.geometry = j.at("geometry");
        if (!j.contains("checks"))
            throw InputError("job: missing field 'checks'");
        spec.checks = j.at("checks").get<std::vector<std::string>>();
        std::set<std::string> seen;
        for (const auto& c : spec.checks) {
            if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
                throw InputError("job.checks: unknown check '" + c + "'");
            if (!seen.insert(c).second)
                throw InputError("job.checks: '" + c + "' listed twice");
        }
        if (!j.contains("box"))
            throw InputError("job: missing field 'box'");
        spec.box = j.at("box");
        if (j.contains("no_fiber"))
            spec.no_fiber_classes = j.at("no_fiber").at("beta").get<std::vector<std::vector<int>>>();
        if (j.contains("output")) {
            const json& out = j.at("output");
            if (out.contains("path"))
                spec.output_path = resolve_path(base_dir, out.at("path").get<std::string>());
            spec.format = out.value("format", "json");
            if (spec.format != "json" && spec.format != "text")
                throw InputError("job.output.format: expected 'json' or 'text'");
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("job: ") + e.what());
    }
    return spec;
}

JobSpec load_job(const std::string& path)
{
    const fs::path p(path);
    return parse_job(read_json_file(path), p.has_parent_path() ? p.parent_path().string() : ".");
}

Box parse_box(const std::string& text, std::size_t k)
{
    auto to_int = [&text](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || v < 0)
            throw InputError("box '" + text + "': expected non-negative integers");
        return v;
    };
    Box box;
    const auto semi = text.find(';');
    const auto comma = text.find(',');
    if (semi != std::string::npos) {
        box.nu_max = to_int(text.substr(0, semi));
        std::stringstream rest(text.substr(semi + 1));
        for (std::string part; std::getline(rest, part, ',');)
            if (!part.empty())
                box.d_max.push_back(to_int(part));
        if (box.d_max.size() != k)
            throw InputError("box '" + text + "': expected " + std::to_string(k) + " base bounds");
    } else if (comma != std::string::npos) {
        box.nu_max = to_int(text.substr(0, comma));
        box.d_max.assign(k, to_int(text.substr(comma + 1)));
    } else {
        box.nu_max = to_int(text);
        box.d_max.assign(k, box.nu_max);
    }
    return box;
}

Box box_from_json(const json& j, std::size_t k)
{
    if (j.is_number_integer())
        return parse_box(std::to_string(j.get<int>()), k);
    if (j.is_string())
        return parse_box(j.get<std::string>(), k);
    if (!j.is_object() || !j.contains("nu"))
        throw InputError("box: expected {\"nu\": int, \"d\": int | [ints]}");
    Box box;
    try {
        box.nu_max = j.at("nu").get<int>();
        const json d = j.value("d", json(box.nu_max));
        if (d.is_number_integer())
            box.d_max.assign(k, d.get<int>());
        else
            box.d_max = d.get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw InputError(std::string("box: ") + e.what());
    }
    if (box.d_max.size() != k)
        throw InputError("box.d: expected " + std::to_string(k) + " bounds");
    if (box.nu_max < 0 || std::any_of(box.d_max.begin(), box.d_max.end(), [](int x) { return x < 0; }))
        throw InputError("box: bounds must be non-negative");
    return box;
}

std::size_t coefficient_cap()
{
    const char* env = std::getenv("GK_COEFF_CAP");
    if (!env || !*env)
        return 100000;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0)
        throw InputError("GK_COEFF_CAP: expected a positive integer");
    return static_cast<std::size_t>(v);
}

void enforce_cap(const Box& box)
{
    const std::size_t cap = coefficient_cap();
    if (box.size() > cap)
        throw InputError("resource bound exceeded: box " + to_string(box) + " retains " + std::to_string(box.size()) +
                         " coefficients, cap is " + std::to_string(cap) + " (GK_COEFF_CAP)");
}

Geometry load_job_geometry(const JobSpec& spec)
{
    const json& g = spec.geometry;
    if (!g.is_object())
        throw InputError("job.geometry: expected an object");
    Geometry geo;
    if (g.contains("builtin"))
        geo = builtin_geometry(g.at("builtin").get<std::string>());
    else if (g.contains("file"))
        geo = load_geometry_file(resolve_path(spec.base_dir, g.at("file").get<std::string>()));
    else if (g.contains("inline"))
        geo = geometry_from_json(g.at("inline"));
    else
        throw InputError("job.geometry: expected 'builtin', 'file' or 'inline'");
    if (g.contains("bundles")) {
        if (!geo.toric)
            throw InputError("job.geometry.bundles: bundle selection needs a toric geometry");
        const std::string name = geo.name;
        geo = make_toric_geometry(with_bundles(*geo.toric, g.at("bundles")));
        geo.name = name + " with bundles " + g.at("bundles").dump();
    }
    return geo;
}

JobResult assemble(const std::string& geometry, const json& box, std::vector<Report> reports)
{
    std::sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) { return a.check < b.check; });
    JobResult out;
    Status overall = Status::pass;
    json checks = json::array();
    for (const auto& r : reports) {
        if (r.status == Status::error)
            overall = Status::error;
        else if (r.status == Status::fail && overall == Status::pass)
            overall = Status::fail;
        checks.push_back(r.to_json());
    }
    out.exit_code = overall == Status::pass ? exit_pass : overall == Status::fail ? exit_check_failure : exit_input_error;
    out.report = {{"version", kJobVersion}, {"geometry", geometry}, {"box", box}, {"status", to_string(overall)},
                  {"checks", std::move(checks)}};
    return out;
}

JobResult run_job(const JobSpec& spec)
{
    const Geometry geo = load_job_geometry(spec);
    const Box box = box_from_json(spec.box, geo.base->k());
    enforce_cap(box);
    BundleSpace b = [&] {
        try {
            return geo.bundle();
        } catch (const Error& e) {
            throw InputError(std::string("geometry '") + geo.name + "': " + e.what());
        }
    }();

    std::vector<std::future<Report>> pending;
    for (const auto& name : spec.checks)
        pending.push_back(std::async(std::launch::async, [&, name] { return run_check(name, geo, b, box, spec); }));
    std::vector<Report> reports;
    for (auto& f : pending)
        reports.push_back(f.get());
    return assemble(geo.name, to_json(box), std::move(reports));
}

std::string render(const json& report, const std::string& format)
{
    if (format == "json")
        return report.dump(2) + "\n";
    std::ostringstream out;
    out << "geometry: " << report.value("geometry", "") << "\n";
    out << "box: " << report.value("box", json()).dump() << "\n";
    for (const auto& c : report.at("checks")) {
        out << c.at("check").get<std::string>() << ": " << c.at("status").get<std::string>() << "\n";
        if (c.at("status") == "pass")
            continue;
        for (const auto& d : c.value("details", json::array()))
            out << "  " << d.dump() << "\n";
    }
    out << "status: " << report.at("status").get<std::string>() << "\n";
    return out.str();
}

void write_report(const std::string& path, const std::string& rendered, double wall_seconds)
{
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw InputError("cannot write '" + path + "'");
        out << rendered;
    }
    std::ofstream meta(path + ".meta.json", std::ios::binary);
    if (!meta)
        throw InputError("cannot write '" + path + ".meta.json'");
    meta << json{{"report", fs::path(path).filename().string()}, {"wall_seconds", wall_seconds}}.dump(2) << "\n";
}

} // namespace gk::cli
