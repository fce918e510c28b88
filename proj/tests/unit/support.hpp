#pragma once

#include "gk/algebra.hpp"
#include "gk/geometry.hpp"
#include "gk/laurent.hpp"
#include "gk/rational.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace gk::test {

inline std::string data_path(const std::string& name)
{
    return std::string(GK_TEST_DATA_DIR) + "/" + name;
}

inline nlohmann::json load_data(const std::string& name)
{
    std::ifstream in(data_path(name));
    return nlohmann::json::parse(in);
}

inline Rational q(const char* s)
{
    return parse_rational(s);
}

/// Rebuilds an oracle series {"e": [[exponents, "c"], ...]} from generator elements.
inline HLaurent from_oracle(const nlohmann::json& j, const std::vector<AlgElement>& gens)
{
    const AlgebraPtr& alg = gens.front().algebra();
    HLaurent out(alg);
    for (const auto& [e, terms] : j.items()) {
        AlgElement c = AlgElement::zero(alg);
        for (const auto& t : terms) {
            AlgElement mono = AlgElement::one(alg);
            const auto exps = t[0].get<std::vector<int>>();
            for (std::size_t i = 0; i < exps.size(); ++i)
                mono = mono * pow(gens[i], exps[i]);
            c += parse_rational(t[1].get<std::string>()) * mono;
        }
        out.add_term(std::stoi(e), c);
    }
    return out;
}

/// Random element of an algebra with small integer-ratio coordinates, restricted to
/// basis elements of degree >= min_degree.
inline AlgElement random_element(const AlgebraPtr& alg, std::mt19937& rng, int min_degree)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    std::vector<Rational> coords(alg->dim());
    for (std::size_t i = 0; i < alg->dim(); ++i)
        if (alg->degree(i) >= min_degree)
            coords[i] = make_rational(num(rng), den(rng));
    return AlgElement(alg, std::move(coords));
}

} // namespace gk::test
