#include "gk/geometry.hpp"

#include "gk/errors.hpp"
#include "gk/serialize.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace gk {

namespace {

using nlohmann::json;

const json& field(const json& j, const std::string& key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(where + ": missing field '" + key + "'");
    return j.at(key);
}

template <typename T>
T get_as(const json& j, const std::string& where)
{
    try {
        return j.get<T>();
    } catch (const json::exception& e) {
        throw InputError(where + ": " + e.what());
    }
}

Rational rational_from_json(const json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw InputError(where + ": expected a rational as integer or string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

// {label: rational} over the given basis
Combination combination_from_json(const json& j, const std::map<std::string, std::size_t>& index, const std::string& where)
{
    if (!j.is_object())
        throw InputError(where + ": expected an object of label -> coefficient");
    Combination c;
    for (const auto& [label, value] : j.items()) {
        auto it = index.find(label);
        if (it == index.end())
            throw InputError(where + ": unknown basis label '" + label + "'");
        c.push_back({it->second, rational_from_json(value, where + "." + label)});
    }
    return normalized(std::move(c));
}

AlgElement element(const AlgebraPtr& alg, const Combination& c)
{
    std::vector<Rational> coords(alg->dim());
    for (const auto& t : c)
        coords[t.index] = t.coeff;
    return AlgElement(alg, std::move(coords));
}

AlgElement ray_combination(const SRCohomology& sr, const std::vector<int>& coeffs, const std::string& what)
{
    if (coeffs.size() != sr.ray_classes.size())
        throw InputError(what + ": expected one coefficient per ray");
    AlgElement x = AlgElement::zero(sr.algebra);
    for (std::size_t rho = 0; rho < coeffs.size(); ++rho)
        x += Rational(coeffs[rho]) * sr.ray_classes[rho];
    return x;
}

FanData fan_from_json(const json& j)
{
    FanData f;
    f.rank = get_as<int>(field(j, "rank", "fan"), "fan.rank");
    f.rays = get_as<std::vector<std::vector<int>>>(field(j, "rays", "fan"), "fan.rays");
    f.max_cones = get_as<std::vector<std::vector<std::size_t>>>(field(j, "max_cones", "fan"), "fan.max_cones");
    if (j.contains("labels"))
        f.labels = get_as<std::vector<std::string>>(j.at("labels"), "fan.labels");
    return f;
}

Geometry toric_from_json(const json& j)
{
    ToricBaseSpec spec;
    spec.name = get_as<std::string>(field(j, "name", "geometry"), "name");
    spec.fan = fan_from_json(field(j, "fan", "geometry"));
    spec.nef = get_as<std::vector<std::vector<int>>>(field(j, "nef", "geometry"), "nef");
    spec.bundles = get_as<std::vector<std::vector<int>>>(field(j, "bundles", "geometry"), "bundles");
    return make_toric_geometry(std::move(spec));
}

BaseJData j_function_from_json(const json& j, const AlgebraPtr& alg, std::size_t rank)
{
    if (j.is_null())
        return BaseJData::explicit_data(alg, rank, {});
    const std::string kind = get_as<std::string>(field(j, "kind", "j_function"), "j_function.kind");
    if (kind == "point")
        return BaseJData::point(alg);
    if (kind == "projective") {
        const int n = get_as<int>(field(j, "n", "j_function"), "j_function.n");
        BaseJData pj = BaseJData::projective(n);
        if (!same_algebra(pj.algebra(), alg))
            throw InputError("j_function: base algebra is not Q[H]/(H^" + std::to_string(n + 1) + ")");
        return pj;
    }
    if (kind == "explicit") {
        std::map<std::vector<int>, HLaurent> values;
        for (const auto& [key, value] : field(j, "values", "j_function").items()) {
            CurveClass c;
            try {
                c = parse_curve_class("(0; " + key + ")");
            } catch (const InputError& e) {
                throw InputError("j_function.values: bad class '" + key + "': " + e.what());
            }
            try {
                values.emplace(c.d, hlaurent_from_json(alg, value));
            } catch (const InputError& e) {
                throw InputError("j_function.values." + key + ": " + e.what());
            }
        }
        return BaseJData::explicit_data(alg, rank, std::move(values));
    }
    throw InputError("j_function.kind: unknown kind '" + kind + "'");
}

Geometry explicit_from_json(const json& j)
{
    const std::string name = get_as<std::string>(field(j, "name", "geometry"), "name");
    std::vector<BasisElement> basis;
    std::map<std::string, std::size_t> index;
    for (const auto& b : get_as<std::vector<json>>(field(j, "basis", "geometry"), "basis")) {
        BasisElement e{get_as<std::string>(field(b, "label", "basis entry"), "basis.label"),
                       get_as<int>(field(b, "degree", "basis entry"), "basis.degree")};
        if (!index.emplace(e.label, basis.size()).second)
            throw InputError("basis: duplicate label '" + e.label + "'");
        basis.push_back(std::move(e));
    }
    if (basis.empty())
        throw InputError("basis: empty");
    std::size_t one = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].degree == 0) {
            one = i;
            break;
        }
    if (one == basis.size())
        throw InputError("basis: no degree-0 element");

    const std::size_t dim = basis.size();
    std::vector<std::optional<Combination>> given(dim * dim);
    std::size_t entry_no = 0;
    for (const auto& m : get_as<std::vector<json>>(field(j, "mult", "geometry"), "mult")) {
        const std::string where = "mult[" + std::to_string(entry_no++) + "]";
        auto lookup = [&](const char* key) {
            const std::string label = get_as<std::string>(field(m, key, where), where + "." + key);
            auto it = index.find(label);
            if (it == index.end())
                throw InputError(where + "." + key + ": unknown basis label '" + label + "'");
            return it->second;
        };
        const std::size_t a = lookup("i"), b = lookup("j");
        given[a * dim + b] = combination_from_json(field(m, "coords", where), index, where + ".coords");
    }
    std::vector<Combination> table(dim * dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            if (given[a * dim + b])
                table[a * dim + b] = *given[a * dim + b];
            else if (given[b * dim + a])
                table[a * dim + b] = *given[b * dim + a];
            else if (a == one)
                table[a * dim + b] = {{b, Rational(1)}};
            else if (b == one)
                table[a * dim + b] = {{a, Rational(1)}};
        }
    }
    const AlgebraPtr alg = make_algebra(name, std::move(basis), std::move(table), one);

    std::vector<AlgElement> nef;
    for (const auto& label : get_as<std::vector<std::string>>(field(j, "nef", "geometry"), "nef")) {
        auto it = index.find(label);
        if (it == index.end())
            throw InputError("nef: unknown basis label '" + label + "'");
        nef.push_back(AlgElement::basis(alg, it->second));
    }
    const AlgElement canonical = element(alg, combination_from_json(field(j, "canonical", "geometry"), index, "canonical"));

    std::vector<AlgElement> bundles;
    std::vector<std::vector<int>> stated;
    bool have_stated = false;
    std::size_t bundle_no = 0;
    for (const auto& b : get_as<std::vector<json>>(field(j, "bundles", "geometry"), "bundles")) {
        const std::string where = "bundles[" + std::to_string(bundle_no++) + "]";
        const AlgElement c = element(alg, combination_from_json(field(b, "coords", where), index, where + ".coords"));
        // an explicit leading zero entry stands for L_0 = O_X
        if (bundle_no == 1 && c.is_zero() && b.value("label", "") == "L0")
            continue;
        bundles.push_back(c);
        if (b.contains("pairings")) {
            have_stated = true;
            stated.push_back(get_as<std::vector<int>>(b.at("pairings"), where + ".pairings"));
        } else {
            stated.emplace_back();
        }
    }
    if (have_stated)
        for (std::size_t i = 0; i < stated.size(); ++i)
            if (stated[i].empty())
                throw InputError("bundles[" + std::to_string(i) + "].pairings: given for some bundles but not this one");

    BaseJData bj = j_function_from_json(j.value("j_function", json()), alg, nef.size());
    BaseVariety base = make_base_variety(name, alg, std::move(nef), canonical, std::move(bundles), std::move(bj),
                                         have_stated ? std::optional(stated) : std::nullopt);
    if (j.contains("effective_hint")) {
        const json& hint = j.at("effective_hint");
        if (hint.contains("non_effective"))
            base.non_effective = get_as<std::vector<std::vector<int>>>(hint.at("non_effective"), "effective_hint.non_effective");
        for (const auto& d : base.non_effective)
            if (d.size() != base.k())
                throw InputError("effective_hint.non_effective: class of wrong rank");
    }
    return Geometry{name, std::make_shared<const BaseVariety>(std::move(base)), std::nullopt};
}

FanData projective_fan(int m)
{
    FanData f;
    f.rank = m;
    for (int i = 0; i < m; ++i) {
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(i)] = 1;
        f.rays.push_back(std::move(e));
    }
    f.rays.emplace_back(static_cast<std::size_t>(m), -1);
    for (int omit = 0; omit <= m; ++omit) {
        std::vector<std::size_t> cone;
        for (int i = 0; i <= m; ++i)
            if (i != omit)
                cone.push_back(static_cast<std::size_t>(i));
        f.max_cones.push_back(std::move(cone));
    }
    f.labels.push_back(m == 1 ? "p" : "H");
    for (int i = 1; i <= m; ++i)
        f.labels.push_back("D" + std::to_string(i));
    return f;
}

FanData p1xp1_fan()
{
    return FanData{2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}}, {"a0", "a", "b0", "b"}};
}

ToricBaseSpec point_spec(int n)
{
    return ToricBaseSpec{"point", FanData{0, {}, {{}}, {}}, {}, std::vector<std::vector<int>>(static_cast<std::size_t>(n))};
}

ToricBaseSpec p1_spec(std::vector<int> a)
{
    std::vector<std::vector<int>> bundles;
    for (int x : a)
        bundles.push_back({x, 0});
    return ToricBaseSpec{"P1", projective_fan(1), {{1, 0}}, std::move(bundles)};
}

ToricBaseSpec p2_spec(std::vector<int> a)
{
    std::vector<std::vector<int>> bundles;
    for (int x : a)
        bundles.push_back({x, 0, 0});
    return ToricBaseSpec{"P2", projective_fan(2), {{1, 0, 0}}, std::move(bundles)};
}

ToricBaseSpec p1xp1_spec(std::vector<std::pair<int, int>> a)
{
    std::vector<std::vector<int>> bundles;
    for (auto [x, y] : a)
        bundles.push_back({x, 0, y, 0});
    return ToricBaseSpec{"P1xP1", p1xp1_fan(), {{1, 0, 0, 0}, {0, 0, 1, 0}}, std::move(bundles)};
}

} // namespace

LiftedFan Geometry::lifted_fan() const
{
    if (!toric)
        throw PreconditionError("geometry '" + name + "' has no toric description");
    return lift_fan(toric->fan, toric->bundles);
}

BaseVariety toric_base(const ToricBaseSpec& spec)
{
    const SRCohomology sr = sr_cohomology(spec.fan);
    const AlgebraPtr& alg = sr.algebra;
    std::vector<AlgElement> nef;
    for (std::size_t k = 0; k < spec.nef.size(); ++k)
        nef.push_back(ray_combination(sr, spec.nef[k], "nef[" + std::to_string(k) + "]"));
    AlgElement canonical = AlgElement::zero(alg);
    for (const auto& d : sr.ray_classes)
        canonical -= d;
    std::vector<AlgElement> bundles;
    for (std::size_t i = 0; i < spec.bundles.size(); ++i)
        bundles.push_back(ray_combination(sr, spec.bundles[i], "bundles[" + std::to_string(i) + "]"));

    // D_rho . beta_j is the j-th nef coordinate of D_rho
    const BaseVariety probe{spec.name, alg, nef, canonical, {}, {}, BaseJData::point(alg), {}};
    std::vector<std::vector<int>> pairings;
    for (std::size_t rho = 0; rho < sr.ray_classes.size(); ++rho) {
        std::vector<int> row;
        for (const auto& q : probe.nef_coordinates(sr.ray_classes[rho])) {
            if (q.get_den() != 1)
                throw InputError(spec.name + ": nef basis does not generate the Picard lattice");
            row.push_back(static_cast<int>(q.get_num().get_si()));
        }
        pairings.push_back(std::move(row));
    }
    BaseJData bj = BaseJData::toric(alg, sr.ray_classes, std::move(pairings));
    return make_base_variety(spec.name, alg, std::move(nef), std::move(canonical), std::move(bundles), std::move(bj));
}

Geometry make_toric_geometry(ToricBaseSpec spec)
{
    auto base = std::make_shared<const BaseVariety>(toric_base(spec));
    const std::string name = spec.name;
    return Geometry{name, std::move(base), std::move(spec)};
}

std::vector<std::string> builtin_names()
{
    return {"point", "P1",         "P2",     "P3",     "P4",      "F0",      "F1",      "F2",
            "P1_O",  "P1_O_O1_O1", "P2_O",   "P2_O_O", "P2_O_O1", "P2_O_O2", "P1xP1_O", "P1xP1_O_O",
            "P1xP1_O_O10", "P1xP1_O_O11"};
}

Geometry builtin_geometry(const std::string& name)
{
    static const std::map<std::string, ToricBaseSpec (*)()> table = {
        {"point", [] { return point_spec(0); }},
        {"P1", [] { return point_spec(1); }},
        {"P2", [] { return point_spec(2); }},
        {"P3", [] { return point_spec(3); }},
        {"P4", [] { return point_spec(4); }},
        {"F0", [] { return p1_spec({0}); }},
        {"F1", [] { return p1_spec({1}); }},
        {"F2", [] { return p1_spec({2}); }},
        {"P1_O", [] { return p1_spec({}); }},
        {"P1_O_O1_O1", [] { return p1_spec({1, 1}); }},
        {"P2_O", [] { return p2_spec({}); }},
        {"P2_O_O", [] { return p2_spec({0}); }},
        {"P2_O_O1", [] { return p2_spec({1}); }},
        {"P2_O_O2", [] { return p2_spec({2}); }},
        {"P1xP1_O", [] { return p1xp1_spec({}); }},
        {"P1xP1_O_O", [] { return p1xp1_spec({{0, 0}}); }},
        {"P1xP1_O_O10", [] { return p1xp1_spec({{1, 0}}); }},
        {"P1xP1_O_O11", [] { return p1xp1_spec({{1, 1}}); }},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw InputError("unknown builtin geometry '" + name + "'");
    Geometry g = make_toric_geometry(it->second());
    g.name = name;
    return g;
}

Geometry geometry_from_json(const json& j)
{
    if (!j.is_object())
        throw InputError("geometry: expected a JSON object");
    if (j.contains("fan"))
        return toric_from_json(j);
    return explicit_from_json(j);
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

Geometry load_geometry_file(const std::string& path)
{
    return geometry_from_json(read_json_file(path));
}

Geometry resolve_geometry(const std::string& ref)
{
    constexpr std::string_view prefix = "builtin:";
    if (ref.starts_with(prefix))
        return builtin_geometry(ref.substr(prefix.size()));
    return load_geometry_file(ref);
}

} // namespace gk
