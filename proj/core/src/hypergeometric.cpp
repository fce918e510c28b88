#include "gk/hypergeometric.hpp"

#include "gk/base_j.hpp"
#include "gk/errors.hpp"
#include "gk/serialize.hpp"

#include <algorithm>

namespace gk {

HLaurent twisting_factor(const BundleSpace& b, const CurveClass& c)
{
    const auto& g = b.grading();
    HLaurent t = HLaurent::one(b.algebra());
    for (int i = 0; i <= b.n(); ++i)
        t = t * factorial_ratio(b.z() - b.c1(i), c.nu - g.v(static_cast<std::size_t>(i), c));
    return t;
}

ShiftedProduct twisting_ledger(const BundleSpace& b, const CurveClass& c)
{
    const auto& g = b.grading();
    ShiftedProduct p;
    for (int i = 0; i <= b.n(); ++i)
        p = p * ShiftedProduct::ratio(b.z() - b.c1(i), c.nu - g.v(static_cast<std::size_t>(i), c));
    return p;
}

NovikovSeries i_series(const BundleSpace& b, const Box& box)
{
    if (box.d_max.size() != b.base().k())
        throw Error("box rank does not match the base Picard rank");
    NovikovSeries s(b.algebra(), box);
    for (const auto& c : box.classes()) {
        if (!b.base().is_effective(c.d))
            continue;
        const HLaurent j = b.pullback(b.base().base_j.coefficient(c.d));
        s.set(c, twisting_factor(b, c) * j);
    }
    return s;
}

Report check_homogeneity(const NovikovSeries& s, const std::function<int(const CurveClass&)>& expected_total_degree)
{
    Report r;
    r.check = "grading";
    r.claim = "the I-series is homogeneous of degree zero";
    r.box = to_json(s.box());
    std::size_t monomials = 0;
    for (const auto& [c, v] : s.coeffs()) {
        const int expect = expected_total_degree(c);
        for (const auto& [a, alpha] : v.terms()) {
            for (int w : alpha.degrees_present()) {
                ++monomials;
                if (a + w != expect)
                    r.fail({{"class", to_string(c)},
                            {"hbar_exponent", a},
                            {"class_degree", w},
                            {"expected_total", expect},
                            {"monomial", to_string(alpha.homogeneous_part(w))}});
            }
        }
    }
    r.note({{"classes", s.coeffs().size()}, {"homogeneous_pieces", monomials}});
    return r;
}

Report check_homogeneity(const NovikovSeries& s, const GradingData& g)
{
    return check_homogeneity(s, [&g](const CurveClass& c) { return -class_degree(c, g); });
}

AsymptoticsResult check_asymptotics(const NovikovSeries& s, const GradingData& g)
{
    AsymptoticsResult out;
    Report& r = out.report;
    r.check = "asymptotics";
    r.claim = "I = 1 + o(1/hbar): zero-class coefficient 1, all others supported in hbar^{<=-2}";
    r.box = to_json(s.box());

    for (const auto& c : positivity_violations(s.box(), g))
        r.fail({{"class", to_string(c)}, {"hypothesis", "class degree not positive"}, {"degree", class_degree(c, g)}});

    const CurveClass zero{0, std::vector<int>(s.box().d_max.size(), 0)};
    if (s.coeff(zero) != HLaurent::one(s.algebra()))
        r.fail({{"class", to_string(zero)}, {"reason", "coefficient at the zero class is not exactly 1"}});

    for (const auto& c : s.box().classes()) {
        if (c.is_zero())
            continue;
        AsymptoticsEntry e;
        e.cls = c;
        for (int i = 0; i <= g.n; ++i)
            if (c.nu - g.v(static_cast<std::size_t>(i), c) < 0)
                ++e.l;
        const bool beta_zero = std::all_of(c.d.begin(), c.d.end(), [](int x) { return x == 0; });
        e.n_beta = beta_zero ? 0 : std::max(2, -g.kx(c));
        e.n_total = e.l + (g.n + 1) * c.nu - g.c1v(c) + e.n_beta;
        const HLaurent v = s.coeff(c);
        if (!v.is_zero()) {
            e.observed_leading = v.max_exponent();
            e.within_prediction = *e.observed_leading <= -e.n_total;
        }
        nlohmann::json row = {{"class", to_string(c)}, {"l", e.l},           {"n_beta", e.n_beta},
                              {"n_total", e.n_total}, {"within_prediction", e.within_prediction}};
        if (e.observed_leading)
            row["observed_leading"] = *e.observed_leading;
        if (e.n_total < 2)
            r.fail({{"class", to_string(c)}, {"reason", "predicted n_total < 2"}, {"n_total", e.n_total}});
        if (e.observed_leading && (*e.observed_leading > -2 || *e.observed_leading > -std::min(e.n_total, 2)))
            r.fail({{"class", to_string(c)}, {"reason", "hbar exponent above -2"}, {"observed_leading", *e.observed_leading}});
        out.ledger.push_back(std::move(e));
        r.note(std::move(row));
    }
    return out;
}

Report pure_fiber_identity(int n, int nu_max)
{
    Report r;
    r.check = "pure-fiber";
    r.claim = "I-series over a point equals the closed-form J of P^n";
    r.box = {{"nu_max", nu_max}};
    const BundleSpace b = build_bundle(point_base(n));
    const Box box{nu_max, {}};
    const NovikovSeries s = i_series(b, box);
    const BaseJData j = base_j_projective(n, box);
    // Q[H]/(H^{n+1}) -> Q[z]/(z^{n+1}), H^t -> z^t (same index over a point).
    auto lift = [&b](const AlgElement& x) { return AlgElement(b.algebra(), x.coords()); };
    for (int nu = 0; nu <= nu_max; ++nu) {
        const CurveClass c{nu, {}};
        const HLaurent expected = j.coefficient({nu}).map_coeffs(b.algebra(), lift);
        if (s.coeff(c) != expected)
            r.fail({{"nu", nu}, {"i_series", to_string(s.coeff(c))}, {"closed_form", to_string(expected)}});
    }
    return r;
}

NoFiberResult extremal_no_fiber(const BundleSpace& b, const std::vector<int>& beta)
{
    const CurveClass c{0, beta};
    const auto& g = b.grading();
    for (int i = 1; i <= b.n(); ++i)
        if (g.v(static_cast<std::size_t>(i), c) <= 0)
            throw PreconditionError("no-fiber: v_" + std::to_string(i) + " of " + to_string(c) + " is not positive");

    NoFiberResult out{twisting_factor(b, c), Report{}};
    Report& r = out.report;
    r.check = "no-fiber";
    r.claim = "T_{0,beta} is the finite product prod_i prod_{m=0}^{v_i-1} (z - c1(L_i) - m hbar)";
    r.box = {{"beta", beta}};

    HLaurent product = HLaurent::one(b.algebra());
    nlohmann::json bounds = nlohmann::json::array();
    for (int i = 1; i <= b.n(); ++i) {
        const int v = g.v(static_cast<std::size_t>(i), c);
        const AlgElement x = b.z() - b.c1(i);
        for (int m = 0; m <= v - 1; ++m)
            product = product * HLaurent::shifted(x, -m);
        bounds.push_back({{"i", i}, {"upper_bound_used", v - 1}, {"negated_bound", -v - 1}});
    }
    r.note({{"class", to_string(c)}, {"bounds", bounds}, {"value", to_string(out.value)}});
    if (product != out.value)
        r.fail({{"class", to_string(c)}, {"twisting_factor", to_string(out.value)}, {"finite_product", to_string(product)}});
    return out;
}

} // namespace gk
