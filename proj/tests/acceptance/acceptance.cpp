// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.
#include "../unit/support.hpp"

#include "gk/dmodule.hpp"
#include "gk/errors.hpp"
#include "gk/geometry.hpp"
#include "gk/hypergeometric.hpp"
#include "gk/qhsp.hpp"
#include "gk/toric.hpp"
#include "job.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace gk;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

Box square_box(const BundleSpace& b, int nu, int d)
{
    return Box{nu, std::vector<int>(b.base().k(), d)};
}

const std::vector<std::string> kSuite{"P1", "P2", "P3", "F0", "F1", "P2_O_O1"};

Outcome ac1()
{
    Outcome o;
    for (int n = 1; n <= 3; ++n)
        o.require(check_annihilation(n, 5).passed(), "annihilation n=" + std::to_string(n));
    return o;
}

Outcome ac2()
{
    Outcome o;
    for (int n = 1; n <= 3; ++n)
        o.require(check_nonequivariant_limit(equivariant_i(n, 5)).passed(), "limit n=" + std::to_string(n));
    for (int n = 1; n <= 3; ++n)
        o.require(pure_fiber_identity(n, 5).passed(), "pure fiber n=" + std::to_string(n));
    return o;
}

Outcome ac3()
{
    Outcome o;
    for (const auto& name : kSuite) {
        const BundleSpace b = builtin_geometry(name).bundle();
        o.require(check_homogeneity(i_series(b, square_box(b, 3, 3)), b.grading()).passed(), name);
    }
    // a perturbed coefficient must be caught
    const BundleSpace f1 = builtin_geometry("F1").bundle();
    NovikovSeries s = i_series(f1, Box{2, {2}});
    s.add(CurveClass{1, {1}}, HLaurent(f1.z(), -1));
    o.require(!check_homogeneity(s, f1.grading()).passed(), "perturbed F1 series accepted");
    return o;
}

Outcome ac4()
{
    Outcome o;
    for (const auto& name : kSuite) {
        const BundleSpace b = builtin_geometry(name).bundle();
        o.require(check_asymptotics(i_series(b, square_box(b, 3, 3)), b.grading()).report.passed(), name);
    }
    const BundleSpace f2 = builtin_geometry("F2").bundle();
    o.require(!check_asymptotics(i_series(f2, Box{2, {2}}), f2.grading()).report.passed(), "F2 accepted");
    return o;
}

Outcome ac5()
{
    Outcome o;
    for (auto [name, nu, d] : {std::tuple{"F0", 3, 3}, {"F1", 3, 3}, {"P2_O_O1", 2, 2}}) {
        const Geometry g = builtin_geometry(name);
        const BundleSpace b = g.bundle();
        o.require(check_toric_agreement(b, g.lifted_fan(), square_box(b, nu, d)).passed(), name);
    }
    return o;
}

Outcome ac6()
{
    Outcome o;
    for (const char* name : {"F1", "P2_O_O1"}) {
        const BundleSpace b = builtin_geometry(name).bundle();
        o.require(check_qhsp(b, square_box(b, 3, 3)).passed(), name);
    }
    const AlgebraPtr q = truncated_polynomial_algebra("H", 0);
    const NovikovSeries e = exponential_series(q, Box{5, {}});
    Rational f = 1;
    for (int d = 0; d <= 5; ++d) {
        if (d > 0)
            f *= d;
        o.require(e.coeff(CurveClass{d, {}}) == HLaurent::monomial(q, 1 / f, -d), "exp coefficient " + std::to_string(d));
    }
    const BundleSpace broken = build_bundle_without_relation(*builtin_geometry("F1").base);
    o.require(!check_collapse(broken, Box{3, {3}}).passed(), "collapse without the relation accepted");
    return o;
}

Outcome ac7()
{
    Outcome o;
    const BundleSpace f1 = builtin_geometry("F1").bundle();
    for (int beta = 1; beta <= 3; ++beta) {
        const auto r = extremal_no_fiber(f1, {beta});
        o.require(r.report.passed(), "F1 beta=" + std::to_string(beta));
        bool recorded = false;
        for (const auto& d : r.report.details)
            if (d.contains("bounds"))
                recorded = d["bounds"][0]["upper_bound_used"] == beta - 1 && d["bounds"][0]["negated_bound"] == -beta - 1;
        o.require(recorded, "bounds not recorded for F1 beta=" + std::to_string(beta));
    }
    const BundleSpace f2 = builtin_geometry("F2").bundle();
    for (int beta = 1; beta <= 2; ++beta)
        o.require(extremal_no_fiber(f2, {beta}).report.passed(), "F2 beta=" + std::to_string(beta));
    const AlgElement x = f1.z() - f1.c1(1);
    o.require(extremal_no_fiber(f1, {2}).value == HLaurent(x) * HLaurent::shifted(x, -1), "F1 beta=2 closed form");
    return o;
}

Outcome ac8()
{
    Outcome o;
    std::mt19937 rng(20261018);
    const AlgebraPtr a = builtin_geometry("P2_O_O1").bundle().algebra();
    std::uniform_int_distribution<int> exps(-3, 3), num(1, 7), count(0, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        HLaurent x = HLaurent::monomial(a, make_rational(num(rng), num(rng)) * (trial % 2 ? 1 : -1), exps(rng));
        for (int k = count(rng); k > 0; --k)
            x += HLaurent(test::random_element(a, rng, 1), exps(rng));
        if (x * hl_invert(x) != HLaurent::one(a)) {
            o.require(false, "hl_invert round trip " + std::to_string(trial));
            break;
        }
    }

    const AlgebraPtr f1 = builtin_geometry("F1").bundle().algebra();
    const Box box{2, {2}};
    std::bernoulli_distribution keep(0.4);
    auto random_series = [&] {
        NovikovSeries s(f1, box);
        for (const auto& c : box.classes())
            if (keep(rng))
                s.set(c, HLaurent(test::random_element(f1, rng, 0), exps(rng)));
        return s;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const NovikovSeries x = random_series(), y = random_series();
        std::map<CurveClass, HLaurent> acc;
        for (const auto& cx : box.classes())
            for (const auto& cy : box.classes())
                if (box.contains(cx + cy))
                    acc.try_emplace(cx + cy, HLaurent::zero(f1)).first->second += x.coeff(cx) * y.coeff(cy);
        NovikovSeries expected(f1, box);
        for (const auto& [c, v] : acc)
            if (!v.is_zero())
                expected.set(c, v);
        if (!(nov_mul(x, y) == expected)) {
            o.require(false, "nov_mul trial " + std::to_string(trial));
            break;
        }
    }

    for (const auto& name : builtin_names()) {
        const Geometry g = builtin_geometry(name);
        o.require(check_algebra(*g.base->algebra).ok && check_algebra(*g.bundle().algebra()).ok, "algebra " + name);
    }
    bool rejected = false;
    try {
        load_geometry_file(test::data_path("p1xp2_corrupted.json"));
    } catch (const InputError& e) {
        rejected = std::string(e.what()).find("associativity failed at (a,b,b)") != std::string::npos;
    }
    o.require(rejected, "corrupted P1xP2 not rejected at (a,b,b)");
    return o;
}

Outcome ac9()
{
    Outcome o;
    const cli::JobSpec spec = cli::load_job(test::data_path("f1_job.json"));
    const cli::JobResult a = cli::run_job(spec), b = cli::run_job(spec);
    o.require(a.exit_code == cli::exit_pass, "F1 job did not pass");
    o.require(cli::render(a.report, "json") == cli::render(b.report, "json"), "json output differs");
    o.require(cli::render(a.report, "text") == cli::render(b.report, "text"), "text output differs");
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"AC1 equivariant I annihilated by the D-module operator, n<=3, order 5", ac1},
        {"AC2 nonequivariant limit equals the closed-form J of P^n", ac2},
        {"AC3 I-series homogeneous of degree zero", ac3},
        {"AC4 asymptotic 1 + O(hbar^-2)", ac4},
        {"AC5 toric I-function agrees through the ring isomorphism", ac5},
        {"AC6 quantum hyperplane section collapse and change of variables", ac6},
        {"AC7 extremal classes without fiber degree", ac7},
        {"AC8 exact arithmetic, Novikov products and algebra validation", ac8},
        {"AC9 byte-identical job output", ac9},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        std::printf("%s %s\n", o.ok ? "PASS" : "FAIL", name);
        for (const auto& n : o.notes)
            std::printf("    %s\n", n.c_str());
        all = all && o.ok;
    }
    return all ? 0 : 1;
}
