#include "gk/bundle.hpp"

#include "gk/errors.hpp"
#include "gk/linalg.hpp"

#include <algorithm>

namespace gk {

std::vector<Rational> BaseVariety::nef_coordinates(const AlgElement& divisor) const
{
    if (!same_algebra(divisor.algebra(), algebra))
        throw Error("algebra mismatch");
    const auto& alg = *algebra;
    if (divisor.is_zero())
        return std::vector<Rational>(nef_basis.size());
    if (divisor.homogeneous_degree() != 1)
        throw Error("expected a degree-1 class, got " + to_string(divisor));
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (alg.degree(i) == 1)
            rows.push_back(i);
    linalg::Matrix a(rows.size(), linalg::Vector(nef_basis.size()));
    linalg::Vector b(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t j = 0; j < nef_basis.size(); ++j)
            a[r][j] = nef_basis[j][rows[r]];
        b[r] = divisor[rows[r]];
    }
    auto x = linalg::solve(a, b);
    if (!x)
        throw Error("class " + to_string(divisor) + " is not in the span of the nef basis");
    return *x;
}

bool BaseVariety::is_effective(const std::vector<int>& d) const
{
    return std::find(non_effective.begin(), non_effective.end(), d) == non_effective.end();
}

namespace {

int integral(const Rational& q, const std::string& what)
{
    if (q.get_den() != 1 || !q.get_num().fits_sint_p())
        throw InputError(what + " is not an integer: " + to_string(q));
    return static_cast<int>(q.get_num().get_si());
}

} // namespace

BaseVariety make_base_variety(std::string name, AlgebraPtr algebra, std::vector<AlgElement> nef_basis,
                              AlgElement canonical, std::vector<AlgElement> bundles, BaseJData base_j,
                              std::optional<std::vector<std::vector<int>>> stated_v_pairings)
{
    const auto report = check_algebra(*algebra);
    if (!report.ok)
        throw InputError("base '" + name + "': " + report.failures.front());

    auto require_degree1 = [&](const AlgElement& x, const std::string& what, bool allow_zero) {
        if (!same_algebra(x.algebra(), algebra))
            throw InputError("base '" + name + "': " + what + " lives in another algebra");
        if (x.is_zero() && allow_zero)
            return;
        if (x.homogeneous_degree() != 1)
            throw InputError("base '" + name + "': " + what + " must have degree 1");
    };
    for (std::size_t j = 0; j < nef_basis.size(); ++j)
        require_degree1(nef_basis[j], "nef class " + std::to_string(j + 1), false);
    require_degree1(canonical, "canonical class", true);
    for (std::size_t i = 0; i < bundles.size(); ++i)
        require_degree1(bundles[i], "c1(L" + std::to_string(i + 1) + ")", true);

    std::size_t h2 = 0;
    for (std::size_t i = 0; i < algebra->dim(); ++i)
        h2 += algebra->degree(i) == 1 ? 1 : 0;
    linalg::Matrix m;
    for (const auto& p : nef_basis)
        m.push_back(p.coords());
    if (nef_basis.size() != h2 || linalg::rank(m, algebra->dim()) != h2)
        throw InputError("base '" + name + "': nef classes do not form a basis of H^2");

    if (!same_algebra(base_j.algebra(), algebra) || base_j.rank() != nef_basis.size())
        throw InputError("base '" + name + "': J data does not match the base algebra");

    BaseVariety b{std::move(name), algebra, std::move(nef_basis), std::move(canonical), {}, {}, std::move(base_j), {}};
    b.line_bundles.push_back(AlgElement::zero(algebra));
    for (auto& l : bundles)
        b.line_bundles.push_back(std::move(l));

    b.pairings.n = static_cast<int>(bundles.size());
    for (const auto& q : b.nef_coordinates(b.canonical))
        b.pairings.kx_pairings.push_back(integral(q, "K_X pairing"));
    for (std::size_t i = 0; i < b.line_bundles.size(); ++i) {
        std::vector<int> row;
        for (const auto& q : b.nef_coordinates(b.line_bundles[i]))
            row.push_back(integral(q, "c1(L" + std::to_string(i) + ") pairing"));
        b.pairings.v_pairings.push_back(std::move(row));
    }
    if (stated_v_pairings) {
        if (stated_v_pairings->size() != bundles.size())
            throw InputError("base '" + b.name + "': pairings given for the wrong number of bundles");
        for (std::size_t i = 0; i < bundles.size(); ++i)
            if ((*stated_v_pairings)[i] != b.pairings.v_pairings[i + 1])
                throw InputError("base '" + b.name + "': stated pairings of L" + std::to_string(i + 1) +
                                 " disagree with its class");
    }
    return b;
}

BundleSpace::BundleSpace(std::shared_ptr<const BaseVariety> base, AlgebraPtr algebra, int z_max,
                         bool relation_imposed)
    : base_(std::move(base)), alg_(std::move(algebra)), z_max_(z_max), relation_imposed_(relation_imposed),
      z_(AlgElement::zero(alg_))
{
    if (z_max_ >= 1)
        z_ = AlgElement::basis(alg_, index(base_->algebra->one_index(), 1));
}

std::size_t BundleSpace::index(std::size_t base_index, int z_power) const
{
    return static_cast<std::size_t>(z_power) * base_->algebra->dim() + base_index;
}

AlgElement BundleSpace::pullback(const AlgElement& x) const
{
    if (!same_algebra(x.algebra(), base_->algebra))
        throw Error("algebra mismatch");
    std::vector<Rational> coords(alg_->dim());
    for (std::size_t a = 0; a < x.coords().size(); ++a)
        coords[index(a, 0)] = x[a];
    return AlgElement(alg_, std::move(coords));
}

HLaurent BundleSpace::pullback(const HLaurent& x) const
{
    return x.map_coeffs(alg_, [this](const AlgElement& c) { return pullback(c); });
}

AlgElement BundleSpace::defining_relation() const
{
    AlgElement r = z_;
    for (int i = 1; i <= n(); ++i)
        r = r * (z_ - c1(i));
    return r;
}

namespace {

std::string bundle_label(const std::string& base_label, int t)
{
    if (t == 0)
        return base_label;
    const std::string zt = t == 1 ? "z" : "z^" + std::to_string(t);
    return base_label == "1" ? zt : base_label + "*" + zt;
}

BundleSpace construct(const BaseVariety& base_in, bool impose)
{
    auto base = std::make_shared<const BaseVariety>(base_in);
    const AlgebraPtr& x = base->algebra;
    const std::size_t dx = x->dim();
    const int n = base->n();
    const int z_max = impose ? n : n + 1;

    // e[t] = t-th elementary symmetric function of c1(L_1..L_n)
    std::vector<AlgElement> e(static_cast<std::size_t>(n + 1), AlgElement::zero(x));
    e[0] = AlgElement::one(x);
    for (int i = 1; i <= n; ++i) {
        const AlgElement& c = base->line_bundles[static_cast<std::size_t>(i)];
        for (int t = i; t >= 1; --t)
            e[static_cast<std::size_t>(t)] += c * e[static_cast<std::size_t>(t - 1)];
    }

    // poly[u] is the H*X coefficient of z^u; returns coefficients of z^0..z^z_max.
    auto reduce = [&](std::vector<AlgElement> poly) {
        if (impose) {
            // z^{n+1} = sum_{t=1}^{n} (-1)^{t+1} e_t z^{n+1-t}
            for (int u = static_cast<int>(poly.size()) - 1; u > n; --u) {
                const AlgElement c = poly[static_cast<std::size_t>(u)];
                if (c.is_zero())
                    continue;
                for (int t = 1; t <= n; ++t) {
                    AlgElement term = e[static_cast<std::size_t>(t)] * c;
                    if (t % 2 == 0)
                        term = -term;
                    poly[static_cast<std::size_t>(u - t)] += term;
                }
            }
        }
        poly.resize(static_cast<std::size_t>(z_max + 1), AlgElement::zero(x));
        return poly;
    };

    std::vector<BasisElement> basis;
    for (int t = 0; t <= z_max; ++t)
        for (std::size_t a = 0; a < dx; ++a)
            basis.push_back({bundle_label(x->label(a), t), x->degree(a) + t});
    const std::size_t dim = basis.size();
    auto idx = [dx](std::size_t a, int t) { return static_cast<std::size_t>(t) * dx + a; };

    std::vector<Combination> table(dim * dim);
    for (int s = 0; s <= z_max; ++s) {
        for (int t = 0; t <= z_max; ++t) {
            for (std::size_t a = 0; a < dx; ++a) {
                for (std::size_t b = 0; b < dx; ++b) {
                    std::vector<AlgElement> poly(static_cast<std::size_t>(s + t + 1), AlgElement::zero(x));
                    poly[static_cast<std::size_t>(s + t)] = AlgElement::basis(x, a) * AlgElement::basis(x, b);
                    poly = reduce(std::move(poly));
                    Combination& entry = table[idx(a, s) * dim + idx(b, t)];
                    for (int u = 0; u <= z_max; ++u)
                        for (std::size_t c = 0; c < dx; ++c)
                            if (!is_zero(poly[static_cast<std::size_t>(u)][c]))
                                entry.push_back({idx(c, u), poly[static_cast<std::size_t>(u)][c]});
                }
            }
        }
    }
    const std::string name = impose ? "H*P(V) over " + base->name : "H*X[z]/(z^" + std::to_string(n + 2) + ") over " + base->name;
    auto alg = make_algebra(name, std::move(basis), std::move(table), idx(x->one_index(), 0));
    BundleSpace b(base, alg, z_max, impose);

    if (impose && !b.defining_relation().is_zero())
        throw Error("defining relation does not vanish in the constructed ring");
    for (std::size_t a = 0; a < dx; ++a) {
        for (std::size_t c = 0; c < dx; ++c) {
            const AlgElement xa = AlgElement::basis(x, a), xc = AlgElement::basis(x, c);
            if (b.pullback(xa * xc) != b.pullback(xa) * b.pullback(xc))
                throw Error("pullback is not multiplicative at (" + x->label(a) + "," + x->label(c) + ")");
        }
    }
    return b;
}

} // namespace

BundleSpace build_bundle(const BaseVariety& base)
{
    return construct(base, true);
}

BundleSpace build_bundle_without_relation(const BaseVariety& base)
{
    return construct(base, false);
}

AlgElement canonical_class(const BundleSpace& b)
{
    AlgElement c1v = AlgElement::zero(b.base().algebra);
    for (const auto& l : b.base().line_bundles)
        c1v += l;
    return b.pullback(b.base().canonical) + b.pullback(c1v) - Rational(b.n() + 1) * b.z();
}

Rational pair_class(const BundleSpace& b, const AlgElement& divisor, const CurveClass& c)
{
    if (!same_algebra(divisor.algebra(), b.algebra()))
        throw Error("algebra mismatch");
    if (c.d.size() != b.base().k())
        throw Error("curve class rank does not match the base");
    if (divisor.is_zero())
        return 0;
    if (divisor.homogeneous_degree() != 1)
        throw Error("pair_class requires a degree-1 divisor, got " + to_string(divisor));
    const auto& base = b.base();
    const std::size_t one = base.algebra->one_index();
    Rational result = b.z_max() >= 1 ? divisor[b.index(one, 1)] * c.nu : Rational(0);
    std::vector<Rational> coords(base.algebra->dim());
    for (std::size_t a = 0; a < coords.size(); ++a)
        coords[a] = divisor[b.index(a, 0)];
    const auto nef = base.nef_coordinates(AlgElement(base.algebra, std::move(coords)));
    for (std::size_t j = 0; j < nef.size(); ++j)
        result += nef[j] * c.d[j];
    return result;
}

} // namespace gk

namespace gk {

BaseVariety point_base(int n)
{
    auto q = make_algebra("Q", {{"1", 0}}, {{Term{0, Rational(1)}}}, 0);
    std::vector<AlgElement> bundles(static_cast<std::size_t>(n), AlgElement::zero(q));
    return make_base_variety("point", q, {}, AlgElement::zero(q), std::move(bundles), BaseJData::point(q));
}

} // namespace gk
