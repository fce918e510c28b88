#include "support.hpp"

#include "gk/errors.hpp"
#include "job.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace gk;
using namespace gk::cli;

namespace {

nlohmann::json check(const nlohmann::json& report, const std::string& name)
{
    for (const auto& c : report.at("checks"))
        if (c.at("check") == name)
            return c;
    return nullptr;
}

} // namespace

TEST_CASE("boxes")
{
    CHECK(parse_box("3", 0) == Box{3, {}});
    CHECK(parse_box("3,2", 2) == Box{3, {2, 2}});
    CHECK(parse_box("3;2,1", 2) == Box{3, {2, 1}});
    CHECK_THROWS_AS(parse_box("3;2", 2), InputError);
    CHECK_THROWS_AS(parse_box("-1", 0), InputError);
    CHECK_THROWS_AS(parse_box("x", 0), InputError);
    CHECK(box_from_json({{"nu", 2}, {"d", {1, 3}}}, 2) == Box{2, {1, 3}});
}

TEST_CASE("coefficient cap")
{
    CHECK(coefficient_cap() == 100000);
    ::setenv("GK_COEFF_CAP", "10", 1);
    CHECK(coefficient_cap() == 10);
    CHECK_THROWS_AS(enforce_cap(Box{3, {3}}), InputError);
    CHECK_NOTHROW(enforce_cap(Box{1, {3}}));
    ::unsetenv("GK_COEFF_CAP");
}

TEST_CASE("job parsing")
{
    const JobSpec spec = load_job(test::data_path("f1_job.json"));
    CHECK(spec.checks.size() == 7);
    CHECK(spec.no_fiber_classes->size() == 3);

    nlohmann::json j = test::load_data("f1_job.json");
    j["checks"].push_back("bogus");
    CHECK_THROWS_WITH_AS(parse_job(j, "."), "job.checks: unknown check 'bogus'", InputError);
    j = test::load_data("f1_job.json");
    j["version"] = 7;
    CHECK_THROWS_AS(parse_job(j, "."), InputError);
    j.erase("box");
    j["version"] = 1;
    CHECK_THROWS_WITH_AS(parse_job(j, "."), "job: missing field 'box'", InputError);
}

TEST_CASE("full job is deterministic and passes")
{
    const JobSpec spec = load_job(test::data_path("f1_job.json"));
    const JobResult a = run_job(spec), b = run_job(spec);
    CHECK(a.exit_code == exit_pass);
    CHECK(render(a.report, "json") == render(b.report, "json"));
    CHECK(render(a.report, "text") == render(b.report, "text"));
    CHECK(a.report.at("status") == "pass");
    std::vector<std::string> names;
    for (const auto& c : a.report.at("checks"))
        names.push_back(c.at("check"));
    CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("exit codes")
{
    CHECK(run_job(load_job(test::data_path("p2_dmodule_job.json"))).exit_code == exit_pass);
    CHECK(run_job(load_job(test::data_path("file_job.json"))).exit_code == exit_pass);
    const JobResult f2 = run_job(load_job(test::data_path("f2_asymptotics_job.json")));
    CHECK(f2.exit_code == exit_check_failure);
    CHECK(check(f2.report, "asymptotics").at("status") == "fail");
    CHECK(check(f2.report, "grading").at("status") == "pass");
    CHECK_THROWS_AS(run_job(load_job(test::data_path("corrupted_job.json"))), InputError);

    // no-fiber on a base with only trivial summands has no admissible class
    nlohmann::json j = test::load_data("f1_job.json");
    j["geometry"] = {{"builtin", "F0"}};
    j["checks"] = {"no-fiber"};
    j.erase("no_fiber");
    const JobResult f0 = run_job(parse_job(j, "."));
    CHECK(f0.exit_code == exit_input_error);
}
