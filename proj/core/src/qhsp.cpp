#include "gk/qhsp.hpp"

#include "gk/errors.hpp"
#include "gk/hypergeometric.hpp"
#include "gk/serialize.hpp"

#include <array>

namespace gk {

int LefschetzSpec::pairing(std::size_t i, const CurveClass& c) const
{
    const auto& form = pairings.at(i);
    if (form.size() != c.d.size() + 1)
        throw Error("Lefschetz pairing form does not match the class rank");
    int b = form[0] * c.nu;
    for (std::size_t j = 0; j < c.d.size(); ++j)
        b += form[j + 1] * c.d[j];
    return b;
}

LefschetzSpec section_spec(const BundleSpace& b)
{
    LefschetzSpec spec;
    const auto& g = b.grading();
    for (int k = 1; k <= b.n(); ++k) {
        spec.classes.push_back(b.z() - b.c1(k));
        std::vector<int> form{1};
        for (std::size_t j = 0; j < g.k(); ++j)
            form.push_back(-g.v_pairings[static_cast<std::size_t>(k)][j]);
        spec.pairings.push_back(std::move(form));
    }
    return spec;
}

ShiftedProduct lefschetz_ledger(const LefschetzSpec& spec, const CurveClass& c)
{
    ShiftedProduct p;
    for (std::size_t i = 0; i < spec.size(); ++i)
        p = p * ShiftedProduct::ascending(spec.classes[i], spec.pairing(i, c));
    return p;
}

HLaurent lefschetz_factor(const LefschetzSpec& spec, const AlgebraPtr& algebra, const CurveClass& c)
{
    return lefschetz_ledger(spec, c).evaluate(algebra);
}

AlgElement euler_class(const LefschetzSpec& spec, const AlgebraPtr& algebra)
{
    AlgElement e = AlgElement::one(algebra);
    for (const auto& x : spec.classes)
        e = e * x;
    return e;
}

NovikovSeries i_w_series(const BundleSpace& b, const Box& box)
{
    const LefschetzSpec spec = section_spec(b);
    const AlgElement e = euler_class(spec, b.algebra());
    NovikovSeries s(b.algebra(), box);
    // L^W alone can have nilpotent denominators; only the product with T is evaluated.
    for (const auto& c : box.classes()) {
        if (!b.base().is_effective(c.d))
            continue;
        const HLaurent lt = (lefschetz_ledger(spec, c) * twisting_ledger(b, c)).evaluate(b.algebra());
        s.set(c, e * (lt * b.pullback(b.base().base_j.coefficient(c.d))));
    }
    return s;
}

int i_w_total_degree(const BundleSpace& b, const LefschetzSpec& spec, const CurveClass& c)
{
    int sum = 0;
    for (std::size_t i = 0; i < spec.size(); ++i)
        sum += spec.pairing(i, c);
    return static_cast<int>(spec.size()) - class_degree(c, b.grading()) + sum;
}

NovikovSeries exponential_series(const AlgebraPtr& algebra, const Box& box)
{
    // exp(X) = sum_k X^k / k! with X = q1/hbar, multiplied out in the Novikov ring
    NovikovSeries x(algebra, box);
    const CurveClass q1{1, std::vector<int>(box.d_max.size(), 0)};
    if (box.contains(q1))
        x.set(q1, HLaurent::monomial(algebra, 1, -1));
    NovikovSeries out = NovikovSeries::one(algebra, box);
    NovikovSeries power = NovikovSeries::one(algebra, box);
    for (int k = 1; k <= box.nu_max; ++k) {
        power = nov_mul(power, x);
        NovikovSeries term(algebra, box);
        for (const auto& [c, v] : power.coeffs())
            term.set(c, v * (1 / factorial(k)));
        out += term;
    }
    return out;
}

Report check_collapse(const BundleSpace& b, const Box& box)
{
    Report r;
    r.check = "qhsp-collapse";
    r.claim = "e(W) L^W T_{d,beta} pi^*J_beta = e(W) pi^*J_beta / (d! hbar^d)";
    r.box = to_json(box);
    const LefschetzSpec spec = section_spec(b);
    const AlgebraPtr& alg = b.algebra();
    const AlgElement e = euler_class(spec, alg);
    for (const auto& c : box.classes()) {
        if (!b.base().is_effective(c.d))
            continue;
        const int d = c.nu;
        // stage 1: formal telescoping
        const ShiftedProduct product = lefschetz_ledger(spec, c) * twisting_ledger(b, c);
        const ShiftedProduct target = ShiftedProduct::ratio(b.z(), d);
        const HLaurent inv = hl_invert(shifted_product(b.z(), 1, d));
        if (!(product == target)) {
            r.fail({{"class", to_string(c)}, {"stage", 1}, {"reason", "factor ledgers do not cancel"}});
            continue;
        }
        if (product.evaluate(alg) != inv) {
            r.fail({{"class", to_string(c)}, {"stage", 1}, {"reason", "evaluated product differs"}});
            continue;
        }
        // stage 2: the defining relation collapses the z-dependence
        const HLaurent j = b.pullback(b.base().base_j.coefficient(c.d));
        const HLaurent lhs = e * (inv * j);
        const HLaurent rhs = (e * j).times_hbar(-d) * (1 / factorial(d));
        if (lhs != rhs)
            r.fail({{"class", to_string(c)}, {"stage", 2}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
    }
    return r;
}

Report change_of_variables_check(const BundleSpace& b, const Box& box)
{
    Report r;
    r.check = "qhsp-change-of-variables";
    r.claim = "after t0' = t0 + q1 the collapsed series is e(W) exp(q1/hbar) sum_beta q2^beta pi^*J_beta";
    r.box = to_json(box);
    const AlgebraPtr& alg = b.algebra();
    const NovikovSeries exp_series = exponential_series(alg, box);
    for (int d = 0; d <= box.nu_max; ++d) {
        const CurveClass c{d, std::vector<int>(box.d_max.size(), 0)};
        const HLaurent expected = HLaurent::monomial(alg, 1 / factorial(d), -d);
        if (exp_series.coeff(c) != expected)
            r.fail({{"class", to_string(c)}, {"reason", "exponential coefficient is not 1/(d! hbar^d)"}});
    }
    const NovikovSeries collapsed = i_w_series(b, box);
    NovikovSeries base_part(alg, box);
    for (const auto& [c, v] : collapsed.coeffs())
        if (c.nu == 0)
            base_part.set(c, v);
    const NovikovSeries assembled = nov_mul(exp_series, base_part);
    for (const auto& c : box.classes()) {
        const HLaurent got = collapsed.coeff(c);
        const HLaurent want = assembled.coeff(c);
        if (got != want)
            r.fail({{"class", to_string(c)}, {"collapsed", to_string(got)}, {"reassembled", to_string(want)}});
    }
    return r;
}

Report check_qhsp(const BundleSpace& b, const Box& box)
{
    Report r;
    r.check = "qhsp";
    r.claim = "the section X_0 of P(V) satisfies the hyperplane section collapse with t0' = t0 + q1";
    r.box = to_json(box);
    const LefschetzSpec spec = section_spec(b);
    const Report collapse = check_collapse(b, box);
    const Report cov = change_of_variables_check(b, box);
    Report grading = check_homogeneity(i_w_series(b, box), [&](const CurveClass& c) { return i_w_total_degree(b, spec, c); });
    grading.check = "qhsp-grading";
    for (const Report* part : std::array<const Report*, 3>{&collapse, &cov, &grading}) {
        r.absorb(*part);
        r.note({{"part", part->check}, {"status", to_string(part->status)}});
    }
    return r;
}

} // namespace gk
