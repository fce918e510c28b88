#include "gk/serialize.hpp"

#include "gk/errors.hpp"

#include <algorithm>
#include <charconv>

namespace gk {

nlohmann::json to_json(const AlgElement& a)
{
    nlohmann::json j = nlohmann::json::object();
    const auto& alg = *a.algebra();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (!is_zero(a[i]))
            j[alg.label(i)] = to_string(a[i]);
    return j;
}

AlgElement alg_element_from_json(const AlgebraPtr& algebra, const nlohmann::json& j)
{
    if (!j.is_object())
        throw InputError("algebra element must be an object of label -> rational");
    AlgElement a(algebra);
    std::vector<Rational> coords(algebra->dim());
    for (const auto& [label, value] : j.items()) {
        if (!value.is_string() && !value.is_number_integer())
            throw InputError("coefficient of '" + label + "' must be a rational string");
        const std::string text = value.is_string() ? value.get<std::string>() : std::to_string(value.get<long>());
        coords[algebra->index_of(label)] = parse_rational(text);
    }
    return AlgElement(algebra, std::move(coords));
}

nlohmann::json to_json(const HLaurent& x)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : x.terms())
        j[std::to_string(e)] = to_json(c);
    return j;
}

HLaurent hlaurent_from_json(const AlgebraPtr& algebra, const nlohmann::json& j)
{
    if (!j.is_object())
        throw InputError("hbar-Laurent element must be an object of exponent -> element");
    HLaurent x(algebra);
    for (const auto& [key, value] : j.items()) {
        int e = 0;
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
        if (key.empty() || ec != std::errc() || ptr != key.data() + key.size())
            throw InputError("invalid hbar exponent '" + key + "'");
        x.add_term(e, alg_element_from_json(algebra, value));
    }
    return x;
}

nlohmann::json to_json(const NovikovSeries& s)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [c, v] : s.coeffs())
        j[to_string(c)] = to_json(v);
    return j;
}

NovikovSeries novikov_from_json(const AlgebraPtr& algebra, const Box& box, const nlohmann::json& j)
{
    NovikovSeries s(algebra, box);
    for (const auto& [key, value] : j.items())
        s.set(parse_curve_class(key), hlaurent_from_json(algebra, value));
    return s;
}

nlohmann::json to_json(const Box& b)
{
    return {{"nu_max", b.nu_max}, {"d_max", b.d_max}};
}

nlohmann::json expansion_json(const NovikovSeries& s, const GradingData& g)
{
    std::vector<std::pair<int, CurveClass>> order;
    for (const auto& [c, v] : s.coeffs())
        order.emplace_back(class_degree(c, g), c);
    std::sort(order.begin(), order.end());
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [deg, c] : order)
        out.push_back({{"class", to_string(c)}, {"degree", deg}, {"coefficient", to_json(s.coeff(c))}});
    return out;
}

} // namespace gk
