#include "gk/toric.hpp"

#include "gk/errors.hpp"
#include "gk/factorial.hpp"
#include "gk/hypergeometric.hpp"
#include "gk/linalg.hpp"
#include "gk/serialize.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace gk {

namespace {

using Exponents = std::vector<int>;
using Poly = std::map<Exponents, Rational>;

int total(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            out[e] += ca * cb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
    return out;
}

// Monomials of a given degree in `vars` variables, lexicographically descending.
std::vector<Exponents> monomials_of_degree(std::size_t vars, int degree)
{
    std::vector<Exponents> out;
    if (vars == 0) {
        if (degree == 0)
            out.emplace_back();
        return out;
    }
    Exponents e(vars, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == vars) {
            e[pos] = left;
            out.push_back(e);
            return;
        }
        for (int x = left; x >= 0; --x) {
            e[pos] = x;
            self(self, pos + 1, left - x);
        }
    };
    rec(rec, 0, degree);
    return out;
}

std::string cone_text(const std::vector<std::size_t>& cone)
{
    std::string s = "{";
    for (std::size_t i = 0; i < cone.size(); ++i)
        s += (i ? "," : "") + std::to_string(cone[i]);
    return s + "}";
}

std::vector<std::uint64_t> cone_masks(const FanData& f)
{
    std::vector<std::uint64_t> masks;
    for (const auto& cone : f.max_cones) {
        std::uint64_t m = 0;
        for (auto i : cone)
            m |= std::uint64_t{1} << i;
        masks.push_back(m);
    }
    return masks;
}

linalg::Matrix cone_matrix(const FanData& f, const std::vector<std::size_t>& cone)
{
    // columns are the rays of the cone
    linalg::Matrix m(static_cast<std::size_t>(f.rank), linalg::Vector(cone.size()));
    for (std::size_t a = 0; a < cone.size(); ++a)
        for (int k = 0; k < f.rank; ++k)
            m[static_cast<std::size_t>(k)][a] = f.rays[cone[a]][static_cast<std::size_t>(k)];
    return m;
}

} // namespace

std::string FanData::label(std::size_t ray) const
{
    if (ray < labels.size())
        return labels[ray];
    return "x" + std::to_string(ray + 1);
}

void validate_fan(const FanData& f)
{
    if (f.rank < 0)
        throw InputError("fan: negative lattice rank");
    if (f.rays.size() > 62)
        throw InputError("fan: too many rays");
    if (!f.labels.empty() && f.labels.size() != f.rays.size())
        throw InputError("fan: one label per ray expected");
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const auto& ray = f.rays[i];
        if (ray.size() != static_cast<std::size_t>(f.rank))
            throw InputError("fan: ray " + std::to_string(i) + " has the wrong length");
        if (std::all_of(ray.begin(), ray.end(), [](int x) { return x == 0; }))
            throw InputError("fan: ray " + std::to_string(i) + " is zero");
        if (!seen.insert(ray).second)
            throw InputError("fan: ray " + std::to_string(i) + " is repeated");
    }
    if (f.max_cones.empty())
        throw InputError("fan: no maximal cones");
    std::vector<bool> used(f.rays.size(), false);
    std::map<std::vector<std::size_t>, int> facets;
    for (const auto& cone : f.max_cones) {
        if (cone.size() != static_cast<std::size_t>(f.rank))
            throw InputError("fan: cone " + cone_text(cone) + " is not full-dimensional");
        std::vector<std::size_t> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("fan: cone " + cone_text(cone) + " repeats a ray");
        for (auto i : cone) {
            if (i >= f.rays.size())
                throw InputError("fan: cone " + cone_text(cone) + " references a missing ray");
            used[i] = true;
        }
        const Rational det = linalg::determinant(cone_matrix(f, cone));
        if (det != 1 && det != -1)
            throw InputError("fan: cone " + cone_text(cone) + " is not smooth (determinant " + to_string(det) + ")");
        for (std::size_t drop = 0; drop < sorted.size(); ++drop) {
            std::vector<std::size_t> facet;
            for (std::size_t a = 0; a < sorted.size(); ++a)
                if (a != drop)
                    facet.push_back(sorted[a]);
            ++facets[facet];
        }
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            throw InputError("fan: ray " + std::to_string(i) + " lies in no maximal cone");
    for (const auto& [facet, count] : facets)
        if (count != 2)
            throw InputError("fan: facet " + cone_text(facet) + " lies in " + std::to_string(count) +
                             " maximal cones, so the fan is not complete");
}

bool is_fano(const FanData& f)
{
    if (f.rank == 0)
        return true;
    for (const auto& cone : f.max_cones) {
        // u^T M = (1,...,1)  <=>  M^T u = 1
        const auto mt = linalg::transpose(cone_matrix(f, cone), cone.size());
        const auto u = linalg::solve(mt, linalg::Vector(cone.size(), Rational(1)));
        if (!u)
            return false;
        for (std::size_t rho = 0; rho < f.rays.size(); ++rho) {
            if (std::find(cone.begin(), cone.end(), rho) != cone.end())
                continue;
            Rational pairing = 0;
            for (int k = 0; k < f.rank; ++k)
                pairing += (*u)[static_cast<std::size_t>(k)] * f.rays[rho][static_cast<std::size_t>(k)];
            if (pairing >= 1)
                return false;
        }
    }
    return true;
}

SRCohomology sr_cohomology(const FanData& f)
{
    validate_fan(f);
    const std::size_t r = f.rays.size();
    const auto& cone0 = f.max_cones.front();
    std::vector<std::size_t> free;
    for (std::size_t rho = 0; rho < r; ++rho)
        if (std::find(cone0.begin(), cone0.end(), rho) == cone0.end())
            free.push_back(rho);
    const std::size_t nv = free.size();

    // Each ray class as a linear form in the free variables:
    // x_{cone0} = -M^{-1} sum_{rho free} rho x_rho.
    std::vector<Poly> ray_poly(r);
    for (std::size_t v = 0; v < nv; ++v) {
        Exponents e(nv, 0);
        e[v] = 1;
        ray_poly[free[v]][e] = 1;
    }
    if (!cone0.empty()) {
        const auto inv = linalg::inverse(cone_matrix(f, cone0));
        if (!inv)
            throw Error("sr_cohomology: singular cone");
        for (std::size_t a = 0; a < cone0.size(); ++a) {
            for (std::size_t v = 0; v < nv; ++v) {
                Rational c = 0;
                for (int k = 0; k < f.rank; ++k)
                    c -= (*inv)[a][static_cast<std::size_t>(k)] * f.rays[free[v]][static_cast<std::size_t>(k)];
                if (!is_zero(c)) {
                    Exponents e(nv, 0);
                    e[v] = 1;
                    ray_poly[cone0[a]][e] = c;
                }
            }
        }
    }

    // Stanley-Reisner generators: minimal non-faces.
    const auto masks = cone_masks(f);
    auto is_face = [&](std::uint64_t s) {
        return std::any_of(masks.begin(), masks.end(), [s](std::uint64_t m) { return (s & ~m) == 0; });
    };
    std::vector<Poly> gens;
    std::vector<int> gen_degree;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << r); ++s) {
        if (is_face(s))
            continue;
        bool minimal = true;
        for (std::size_t i = 0; i < r && minimal; ++i)
            if ((s >> i & 1) && !is_face(s & ~(std::uint64_t{1} << i)))
                minimal = false;
        if (!minimal)
            continue;
        Poly g{{Exponents(nv, 0), Rational(1)}};
        for (std::size_t i = 0; i < r; ++i)
            if (s >> i & 1)
                g = poly_mul(g, ray_poly[i]);
        gens.push_back(std::move(g));
        gen_degree.push_back(std::popcount(s));
    }

    // Degree by degree: the ideal's span in the monomial basis, reduced to echelon form.
    struct Slice {
        std::vector<Exponents> monomials;
        std::map<Exponents, std::size_t> column;
        linalg::Echelon echelon;
        std::vector<std::size_t> standard; // non-pivot columns
    };
    std::vector<Slice> slices;
    for (int deg = 0; deg <= f.rank + 1; ++deg) {
        Slice sl;
        sl.monomials = monomials_of_degree(nv, deg);
        for (std::size_t c = 0; c < sl.monomials.size(); ++c)
            sl.column.emplace(sl.monomials[c], c);
        linalg::Matrix rows;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (gen_degree[g] > deg)
                continue;
            for (const auto& mu : monomials_of_degree(nv, deg - gen_degree[g])) {
                linalg::Vector row(sl.monomials.size());
                for (const auto& [e, c] : poly_mul(gens[g], Poly{{mu, Rational(1)}}))
                    row[sl.column.at(e)] += c;
                rows.push_back(std::move(row));
            }
        }
        sl.echelon = linalg::row_reduce(std::move(rows), sl.monomials.size());
        std::set<std::size_t> pivots(sl.echelon.pivots.begin(), sl.echelon.pivots.end());
        for (std::size_t c = 0; c < sl.monomials.size(); ++c)
            if (!pivots.count(c))
                sl.standard.push_back(c);
        slices.push_back(std::move(sl));
    }
    if (!slices.back().standard.empty())
        throw Error("sr_cohomology: ring does not vanish above the top degree");

    std::vector<BasisElement> basis;
    std::vector<std::size_t> offset;
    SRCohomology out;
    for (int deg = 0; deg <= f.rank; ++deg) {
        offset.push_back(basis.size());
        for (auto c : slices[static_cast<std::size_t>(deg)].standard) {
            const Exponents& e = slices[static_cast<std::size_t>(deg)].monomials[c];
            std::string label;
            std::vector<int> full(r, 0);
            for (std::size_t v = 0; v < nv; ++v) {
                full[free[v]] = e[v];
                if (e[v] == 0)
                    continue;
                if (!label.empty())
                    label += "*";
                label += f.label(free[v]);
                if (e[v] > 1)
                    label += "^" + std::to_string(e[v]);
            }
            basis.push_back({label.empty() ? "1" : label, deg});
            out.monomials.push_back(std::move(full));
        }
    }
    if (basis.size() != f.max_cones.size())
        throw Error("sr_cohomology: dimension " + std::to_string(basis.size()) + " differs from the number of maximal cones " +
                    std::to_string(f.max_cones.size()));

    const std::size_t dim = basis.size();
    auto normal_form = [&](const Poly& p, int deg) {
        Combination comb;
        if (deg > f.rank)
            return comb;
        const Slice& sl = slices[static_cast<std::size_t>(deg)];
        linalg::Vector v(sl.monomials.size());
        for (const auto& [e, c] : p)
            v[sl.column.at(e)] += c;
        v = sl.echelon.reduce(std::move(v));
        for (std::size_t s = 0; s < sl.standard.size(); ++s)
            if (!is_zero(v[sl.standard[s]]))
                comb.push_back({offset[static_cast<std::size_t>(deg)] + s, v[sl.standard[s]]});
        return comb;
    };
    auto local = [&](std::size_t i) {
        Exponents e(nv, 0);
        for (std::size_t v = 0; v < nv; ++v)
            e[v] = out.monomials[i][free[v]];
        return e;
    };
    std::vector<Combination> table(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Exponents e = local(i);
            const Exponents ej = local(j);
            for (std::size_t v = 0; v < nv; ++v)
                e[v] += ej[v];
            table[i * dim + j] = normal_form(Poly{{e, Rational(1)}}, total(e));
        }
    }
    out.algebra = make_algebra("SR(" + std::to_string(r) + " rays, rank " + std::to_string(f.rank) + ")", std::move(basis),
                               std::move(table), 0);
    for (std::size_t rho = 0; rho < r; ++rho) {
        std::vector<Rational> coords(dim);
        for (const auto& t : normal_form(ray_poly[rho], 1))
            coords[t.index] = t.coeff;
        out.ray_classes.emplace_back(out.algebra, std::move(coords));
    }
    return out;
}

LiftedFan lift_fan(const FanData& base, const std::vector<std::vector<int>>& bundle_coeffs)
{
    validate_fan(base);
    const std::size_t r = base.rays.size();
    const int n = static_cast<int>(bundle_coeffs.size());
    for (const auto& row : bundle_coeffs)
        if (row.size() != r)
            throw InputError("lift_fan: bundle coefficients need one entry per base ray");
    const int m = base.rank;
    const std::size_t dim = static_cast<std::size_t>(m + n);

    for (int sign : {1, -1}) {
        LiftedFan lf{base, n, bundle_coeffs, sign, {}};
        FanData& f = lf.fan;
        f.rank = m + n;
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<int> ray = base.rays[j];
            for (int i = 0; i < n; ++i)
                ray.push_back(sign * bundle_coeffs[static_cast<std::size_t>(i)][j]);
            f.rays.push_back(std::move(ray));
            f.labels.push_back("B" + std::to_string(j + 1));
        }
        std::vector<int> f0(dim, 0);
        for (int i = 0; i < n; ++i)
            f0[static_cast<std::size_t>(m + i)] = -1;
        f.rays.push_back(f0);
        f.labels.push_back("F0");
        for (int i = 1; i <= n; ++i) {
            std::vector<int> fi(dim, 0);
            fi[static_cast<std::size_t>(m + i - 1)] = 1;
            f.rays.push_back(std::move(fi));
            f.labels.push_back("F" + std::to_string(i));
        }
        for (const auto& cone : base.max_cones) {
            for (int omit = 0; omit <= n; ++omit) {
                std::vector<std::size_t> c = cone;
                for (int i = 0; i <= n; ++i)
                    if (i != omit)
                        c.push_back(lf.f_ray(i));
                f.max_cones.push_back(std::move(c));
            }
        }
        validate_fan(f);

        // class group: Z^rays modulo the rows sum_rho <e_k, rho> e_rho
        linalg::Matrix relations(dim, linalg::Vector(f.rays.size()));
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t rho = 0; rho < f.rays.size(); ++rho)
                relations[k][rho] = f.rays[rho][k];
        const auto ech = linalg::row_reduce(relations, f.rays.size());
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) {
            linalg::Vector v(f.rays.size());
            v[lf.f_ray(i)] += 1;
            v[lf.f_ray(0)] -= 1;
            for (std::size_t j = 0; j < r; ++j)
                v[lf.b_ray(j)] += bundle_coeffs[static_cast<std::size_t>(i - 1)][j];
            ok = ech.contains(v);
        }
        if (ok)
            return lf;
    }
    throw Error("lift_fan: the identity [F_i] = z - c1(L_i) fails in the class group for both sign conventions");
}

HLaurent toric_i_coefficient(const FanData& f, const SRCohomology& ring, const std::vector<int>& degrees)
{
    if (degrees.size() != f.rays.size())
        throw InputError("toric_i_coefficient: one degree per ray expected");
    for (int k = 0; k < f.rank; ++k) {
        long sum = 0;
        for (std::size_t rho = 0; rho < f.rays.size(); ++rho)
            sum += static_cast<long>(f.rays[rho][static_cast<std::size_t>(k)]) * degrees[rho];
        if (sum != 0)
            throw PreconditionError("toric_i_coefficient: ray degrees violate the linear relation for e_" +
                                    std::to_string(k + 1));
    }
    HLaurent out = HLaurent::one(ring.algebra);
    for (std::size_t rho = 0; rho < f.rays.size(); ++rho)
        out = out * factorial_ratio(ring.ray_classes[rho], degrees[rho]);
    return out;
}

HLaurent toric_i_coefficient(const FanData& f, const std::vector<int>& degrees)
{
    return toric_i_coefficient(f, sr_cohomology(f), degrees);
}

ToricIsomorphism::ToricIsomorphism(const BundleSpace& b, const LiftedFan& lf, const SRCohomology& sr)
    : target_(b.algebra())
{
    const auto& bj = b.base().base_j;
    const std::size_t r = lf.base.rays.size();
    if (bj.ray_classes().size() != r)
        throw Error("toric isomorphism: base ray count differs from the bundle's base");
    if (lf.n != b.n())
        throw Error("toric isomorphism: fiber dimensions differ");
    std::vector<AlgElement> ray_image;
    for (std::size_t j = 0; j < r; ++j)
        ray_image.push_back(b.pullback(bj.ray_classes()[j]));
    for (int i = 0; i <= lf.n; ++i)
        ray_image.push_back(b.z() - b.c1(i));

    const AlgebraPtr& src = sr.algebra;
    for (const auto& mono : sr.monomials) {
        AlgElement img = AlgElement::one(target_);
        for (std::size_t rho = 0; rho < mono.size(); ++rho)
            img = img * pow(ray_image[rho], mono[rho]);
        images_.push_back(std::move(img));
    }
    for (std::size_t rho = 0; rho < ray_image.size(); ++rho)
        if ((*this)(sr.ray_classes[rho]) != ray_image[rho])
            throw Error("toric isomorphism: ray " + lf.fan.label(rho) + " does not map to its divisor class");
    for (std::size_t i = 0; i < src->dim(); ++i)
        for (std::size_t j = 0; j < src->dim(); ++j)
            if ((*this)(AlgElement::basis(src, i) * AlgElement::basis(src, j)) != images_[i] * images_[j])
                throw Error("toric isomorphism: not multiplicative at (" + src->label(i) + "," + src->label(j) + ")");
    linalg::Matrix m;
    for (const auto& img : images_)
        m.push_back(img.coords());
    if (src->dim() != target_->dim() || linalg::rank(m, target_->dim()) != target_->dim())
        throw Error("toric isomorphism: map is not bijective");
}

AlgElement ToricIsomorphism::operator()(const AlgElement& x) const
{
    AlgElement out = AlgElement::zero(target_);
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (!is_zero(x[i]))
            out += x[i] * images_[i];
    return out;
}

HLaurent ToricIsomorphism::operator()(const HLaurent& x) const
{
    return x.map_coeffs(target_, [this](const AlgElement& c) { return (*this)(c); });
}

Report check_toric_agreement(const BundleSpace& b, const LiftedFan& lf, const Box& box)
{
    Report rep;
    rep.check = "toric";
    rep.claim = "the toric I-function of the lifted fan equals the twisted I-series of P(V) coefficientwise";
    rep.box = to_json(box);
    const BaseVariety& base = b.base();
    const BaseJData& bj = base.base_j;
    if (bj.kind() != BaseJData::Kind::toric_fano) {
        rep.error("base J data is not the toric closed form");
        return rep;
    }
    if (!is_fano(lf.base)) {
        rep.error("base fan is not Fano");
        return rep;
    }
    if (lf.n != b.n() || lf.base.rays.size() != bj.ray_classes().size()) {
        rep.error("lifted fan was built from a different base or rank");
        return rep;
    }
    for (int i = 1; i <= lf.n; ++i) {
        AlgElement c = AlgElement::zero(base.algebra);
        for (std::size_t j = 0; j < lf.base.rays.size(); ++j)
            c += Rational(lf.bundle_coeffs[static_cast<std::size_t>(i - 1)][j]) * bj.ray_classes()[j];
        if (c != base.line_bundles[static_cast<std::size_t>(i)]) {
            rep.error("lifted fan coefficients do not give c1(L" + std::to_string(i) + ")");
            return rep;
        }
    }
    SRCohomology sr;
    std::optional<ToricIsomorphism> iso;
    try {
        sr = sr_cohomology(lf.fan);
        iso.emplace(b, lf, sr);
    } catch (const Error& e) {
        rep.error(e.what());
        return rep;
    }
    rep.note({{"lifted_rays", lf.fan.rays.size()},
              {"lifted_max_cones", lf.fan.max_cones.size()},
              {"lift_sign", lf.sign},
              {"lifted_fan_fano", is_fano(lf.fan)}});

    const NovikovSeries twisted = i_series(b, box);
    const GradingData& g = b.grading();
    for (const auto& c : box.classes()) {
        if (!base.is_effective(c.d))
            continue;
        std::vector<int> degrees(lf.fan.rays.size());
        const auto ray_deg = bj.ray_degrees(c.d);
        for (std::size_t j = 0; j < ray_deg.size(); ++j)
            degrees[lf.b_ray(j)] = ray_deg[j];
        for (int i = 0; i <= lf.n; ++i) {
            degrees[lf.f_ray(i)] = c.nu - g.v(static_cast<std::size_t>(i), c);
            if (pair_class(b, b.z() - b.c1(i), c) != degrees[lf.f_ray(i)])
                rep.fail({{"class", to_string(c)}, {"reason", "F-divisor degree differs from the intersection number"},
                          {"ray", lf.fan.label(lf.f_ray(i))}});
        }
        const HLaurent toric = (*iso)(toric_i_coefficient(lf.fan, sr, degrees));
        const HLaurent expected = twisted.coeff(c);
        if (toric != expected)
            rep.fail({{"class", to_string(c)}, {"toric", to_string(toric)}, {"twisted", to_string(expected)}});
    }
    return rep;
}

} // namespace gk
