#include "gk/dmodule.hpp"

#include "gk/errors.hpp"
#include "gk/hypergeometric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gk {

namespace {

using LambdaPoly = std::map<std::vector<int>, Rational>;

int total(const std::vector<int>& a)
{
    return std::accumulate(a.begin(), a.end(), 0);
}

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> c = a;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b[i];
    return c;
}

void accumulate(LambdaPoly& p, const std::vector<int>& m, const Rational& c, int precision)
{
    if (total(m) > precision || is_zero(c))
        return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second))
            p.erase(it);
    }
}

LambdaPoly multiply(const LambdaPoly& a, const LambdaPoly& b, int precision)
{
    LambdaPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            accumulate(out, add(ma, mb), ca * cb, precision);
    return out;
}

// All exponent vectors of length vars with total degree <= max_degree, by degree then lex.
std::vector<std::vector<int>> monomials_up_to(int vars, int max_degree)
{
    std::vector<std::vector<int>> out;
    for (int deg = 0; deg <= max_degree; ++deg) {
        std::vector<int> m(static_cast<std::size_t>(vars), 0);
        // enumerate compositions of deg into vars parts, lex descending
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == vars - 1) {
                m[static_cast<std::size_t>(pos)] = left;
                out.push_back(m);
                return;
            }
            for (int x = left; x >= 0; --x) {
                m[static_cast<std::size_t>(pos)] = x;
                rec(pos + 1, left - x);
            }
        };
        rec(0, deg);
    }
    return out;
}

std::string monomial_label(const std::vector<int>& m, int h_power)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "l" + std::to_string(i);
        if (m[i] > 1)
            s += "^" + std::to_string(m[i]);
    }
    if (h_power > 0) {
        if (!s.empty())
            s += "*";
        s += h_power == 1 ? "H" : "H^" + std::to_string(h_power);
    }
    return s.empty() ? "1" : s;
}

} // namespace

EquivariantRing::EquivariantRing(int n, int precision) : n_(n), precision_(precision)
{
    if (n < 0 || precision < 0)
        throw InputError("equivariant ring needs n >= 0 and precision >= 0");
    const int vars = n + 1;
    monomials_ = monomials_up_to(vars, precision);
    std::map<std::vector<int>, std::size_t> position;
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        position.emplace(monomials_[i], i);

    // e[t]: elementary symmetric polynomials of the lambdas
    std::vector<LambdaPoly> e(static_cast<std::size_t>(vars + 1));
    e[0][std::vector<int>(static_cast<std::size_t>(vars), 0)] = 1;
    for (int i = 0; i < vars; ++i) {
        std::vector<int> li(static_cast<std::size_t>(vars), 0);
        li[static_cast<std::size_t>(i)] = 1;
        const LambdaPoly lam{{li, Rational(1)}};
        for (int t = i + 1; t >= 1; --t)
            for (const auto& [m, c] : multiply(lam, e[static_cast<std::size_t>(t - 1)], precision))
                accumulate(e[static_cast<std::size_t>(t)], m, c, precision);
    }

    // hpow[u][j]: coefficient of H^j in the normal form of H^u, u <= 2n
    std::vector<std::vector<LambdaPoly>> hpow(static_cast<std::size_t>(2 * n + 1),
                                              std::vector<LambdaPoly>(static_cast<std::size_t>(vars)));
    hpow[0][0] = e[0];
    for (int u = 1; u <= 2 * n; ++u) {
        const auto& prev = hpow[static_cast<std::size_t>(u - 1)];
        auto& cur = hpow[static_cast<std::size_t>(u)];
        for (int j = 0; j < n; ++j)
            cur[static_cast<std::size_t>(j + 1)] = prev[static_cast<std::size_t>(j)];
        // H^{n+1} = sum_{t=1}^{n+1} (-1)^{t+1} e_t H^{n+1-t}
        const LambdaPoly& over = prev[static_cast<std::size_t>(n)];
        for (int t = 1; t <= vars; ++t)
            for (const auto& [m, c] : multiply(e[static_cast<std::size_t>(t)], over, precision))
                accumulate(cur[static_cast<std::size_t>(vars - t)], m, t % 2 ? c : Rational(-c), precision);
    }
    if (n == 0)
        hpow.push_back({});

    const std::size_t nm = monomials_.size();
    std::vector<BasisElement> basis;
    for (int t = 0; t <= n; ++t)
        for (const auto& m : monomials_)
            basis.push_back({monomial_label(m, t), total(m) + t});
    const std::size_t dim = basis.size();
    std::vector<Combination> table(dim * dim);
    for (int s = 0; s <= n; ++s) {
        for (int t = 0; t <= n; ++t) {
            const auto& h = hpow[static_cast<std::size_t>(s + t)];
            for (std::size_t a = 0; a < nm; ++a) {
                for (std::size_t b = 0; b < nm; ++b) {
                    const std::vector<int> ab = add(monomials_[a], monomials_[b]);
                    if (total(ab) > precision)
                        continue;
                    Combination& entry = table[index(a, s) * dim + index(b, t)];
                    for (int j = 0; j <= n; ++j) {
                        for (const auto& [m, c] : h[static_cast<std::size_t>(j)]) {
                            const std::vector<int> full = add(ab, m);
                            if (total(full) > precision)
                                continue;
                            entry.push_back({index(position.at(full), j), c});
                        }
                    }
                }
            }
        }
    }
    // Built from normal forms; validated by tests at small sizes rather than here.
    alg_ = std::make_shared<const StructAlgebra>(
        "Q[l0..l" + std::to_string(n) + "][H]/(prod(H-l_i), deg_l>" + std::to_string(precision) + ")",
        std::move(basis), std::move(table), index(0, 0));
}

AlgElement EquivariantRing::H() const
{
    if (n_ == 0)
        return lambda(0);
    return AlgElement::basis(alg_, index(0, 1));
}

AlgElement EquivariantRing::lambda(int i) const
{
    if (precision_ == 0)
        return AlgElement::zero(alg_);
    std::vector<int> m(static_cast<std::size_t>(n_ + 1), 0);
    m.at(static_cast<std::size_t>(i)) = 1;
    const auto it = std::find(monomials_.begin(), monomials_.end(), m);
    return AlgElement::basis(alg_, index(static_cast<std::size_t>(it - monomials_.begin()), 0));
}

AlgElement EquivariantRing::map(const AlgElement& x, const AlgElement& h, const std::vector<AlgElement>& lambdas) const
{
    if (!same_algebra(x.algebra(), alg_))
        throw Error("algebra mismatch");
    if (lambdas.size() != static_cast<std::size_t>(n_ + 1))
        throw Error("equivariant map needs one image per lambda");
    const AlgebraPtr& target = h.algebra();
    AlgElement rel = AlgElement::one(target);
    for (const auto& l : lambdas)
        rel = rel * (h - l);
    if (!rel.is_zero())
        throw Error("equivariant map: images do not satisfy prod(H - lambda_i) = 0");
    auto image_of = [&](const std::vector<int>& m) {
        AlgElement out = AlgElement::one(target);
        for (std::size_t i = 0; i < m.size(); ++i)
            out = out * pow(lambdas[i], m[i]);
        return out;
    };
    for (const auto& m : monomials_up_to(n_ + 1, precision_ + 1))
        if (total(m) == precision_ + 1 && !image_of(m).is_zero())
            throw Error("equivariant map: lambda-monomials above the precision do not vanish in the target");

    AlgElement out = AlgElement::zero(target);
    for (int t = 0; t <= n_; ++t) {
        const AlgElement ht = pow(h, t);
        for (std::size_t a = 0; a < monomials_.size(); ++a) {
            const Rational& c = x[index(a, t)];
            if (!is_zero(c))
                out += c * (image_of(monomials_[a]) * ht);
        }
    }
    return out;
}

AlgElement EquivariantRing::specialize_zero(const AlgElement& x) const
{
    if (!same_algebra(x.algebra(), alg_))
        throw Error("algebra mismatch");
    const AlgebraPtr target = truncated_polynomial_algebra("H", n_);
    std::vector<Rational> coords(static_cast<std::size_t>(n_ + 1));
    for (int t = 0; t <= n_; ++t)
        coords[static_cast<std::size_t>(t)] = x[index(0, t)];
    return AlgElement(target, std::move(coords));
}

DressedSeries equivariant_i(int n, int order, int precision)
{
    auto ring = std::make_shared<const EquivariantRing>(n, precision < 0 ? n + 1 : precision);
    const AlgebraPtr& alg = ring->algebra();
    DressedSeries s{ring, {HLaurent::one(alg)}};
    HLaurent product = HLaurent::one(alg);
    for (int nu = 1; nu <= order; ++nu) {
        for (int i = 0; i <= n; ++i)
            product = product * HLaurent::shifted(ring->H() - ring->lambda(i), nu);
        s.coeffs.push_back(hl_invert(product));
    }
    return s;
}

std::vector<HLaurent> apply_d(const DressedSeries& s, const Rational& x)
{
    const auto& ring = *s.ring;
    std::vector<HLaurent> out;
    for (std::size_t nu = 0; nu < s.coeffs.size(); ++nu) {
        HLaurent r = s.coeffs[nu];
        for (int i = 0; i <= ring.n(); ++i)
            r = r * HLaurent::shifted(ring.H() - ring.lambda(i), static_cast<long>(nu));
        if (nu > 0)
            r -= s.coeffs[nu - 1] * x;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<HLaurent> apply_d_nonequivariant(int n, const std::vector<HLaurent>& coeffs)
{
    std::vector<HLaurent> out;
    for (std::size_t nu = 0; nu < coeffs.size(); ++nu) {
        const AlgebraPtr& alg = coeffs[nu].algebra();
        const AlgElement h = n >= 1 ? AlgElement::basis(alg, "H") : AlgElement::zero(alg);
        HLaurent r = coeffs[nu] * pow(HLaurent::shifted(h, static_cast<long>(nu)), n + 1);
        if (nu > 0)
            r -= coeffs[nu - 1];
        out.push_back(std::move(r));
    }
    return out;
}

Report check_annihilation(const DressedSeries& s)
{
    Report r;
    r.check = "dmodule";
    r.claim = "the equivariant I-function of P^n is annihilated by prod_i(hbar q d/dq - lambda_i) - q";
    r.box = {{"n", s.ring->n()}, {"order", static_cast<int>(s.coeffs.size()) - 1}, {"lambda_precision", s.ring->precision()}};
    const auto residuals = apply_d(s);
    for (std::size_t nu = 0; nu < residuals.size(); ++nu)
        if (!residuals[nu].is_zero())
            r.fail({{"nu", nu}, {"reason", "nonzero residual"}, {"residual", to_string(residuals[nu])}});
    if (s.coeffs.empty() || s.coeffs[0] != HLaurent::one(s.ring->algebra()))
        r.fail({{"nu", 0}, {"reason", "c_0 is not 1"}});
    for (std::size_t nu = 1; nu < s.coeffs.size(); ++nu)
        if (!s.coeffs[nu].is_zero() && s.coeffs[nu].max_exponent() >= 0)
            r.fail({{"nu", nu}, {"reason", "non-negative hbar exponent"}, {"max_exponent", s.coeffs[nu].max_exponent()}});
    return r;
}

Report check_annihilation(int n, int order, int precision)
{
    return check_annihilation(equivariant_i(n, order, precision));
}

std::vector<HLaurent> nonequivariant_limit(const DressedSeries& s)
{
    const AlgebraPtr target = truncated_polynomial_algebra("H", s.ring->n());
    std::vector<HLaurent> out;
    for (const auto& c : s.coeffs)
        out.push_back(c.map_coeffs(target, [&s](const AlgElement& x) { return s.ring->specialize_zero(x); }));
    return out;
}

Report check_nonequivariant_limit(const DressedSeries& s)
{
    Report r;
    r.check = "dmodule-limit";
    r.claim = "setting lambda = 0 in the equivariant I-function of P^n gives J_{P^n}";
    const int n = s.ring->n();
    r.box = {{"n", n}, {"order", static_cast<int>(s.coeffs.size()) - 1}};
    const auto limit = nonequivariant_limit(s);
    const BaseJData j = BaseJData::projective(n);
    for (std::size_t nu = 0; nu < limit.size(); ++nu) {
        const HLaurent expected = j.coefficient({static_cast<int>(nu)});
        if (limit[nu] != expected)
            r.fail({{"nu", nu}, {"limit", to_string(limit[nu])}, {"closed_form", to_string(expected)}});
    }
    const auto residuals = apply_d_nonequivariant(n, limit);
    for (std::size_t nu = 0; nu < residuals.size(); ++nu)
        if (!residuals[nu].is_zero())
            r.fail({{"nu", nu}, {"reason", "nonequivariant operator leaves a residual"}, {"residual", to_string(residuals[nu])}});
    return r;
}

Report pure_fiber_specialization(const BundleSpace& b, int nu_max)
{
    Report r;
    r.check = "pure-fiber";
    r.claim = "beta = 0 coefficients are the equivariant I-function of P^n with lambda_i -> c1(L_i)";
    r.box = {{"nu_max", nu_max}};
    const int n = b.n();
    const DressedSeries eq = equivariant_i(n, nu_max, b.algebra()->top_degree());
    std::vector<AlgElement> lambdas;
    for (int i = 0; i <= n; ++i)
        lambdas.push_back(b.c1(i));
    const AlgElement h = n == 0 ? AlgElement::zero(b.algebra()) : b.z();
    for (int nu = 0; nu <= nu_max; ++nu) {
        const CurveClass c{nu, std::vector<int>(b.base().k(), 0)};
        const HLaurent expected = eq.coeffs[static_cast<std::size_t>(nu)].map_coeffs(
            b.algebra(), [&](const AlgElement& x) { return eq.ring->map(x, h, lambdas); });
        const HLaurent got = twisting_factor(b, c);
        if (got != expected)
            r.fail({{"nu", nu}, {"twisted", to_string(got)}, {"specialized", to_string(expected)}});
    }
    return r;
}

} // namespace gk
