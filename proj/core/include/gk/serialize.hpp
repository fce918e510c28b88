#pragma once

#include "gk/laurent.hpp"
#include "gk/novikov.hpp"

#include <nlohmann/json.hpp>

namespace gk {

/// {label: "p/q"} over nonzero coordinates.
nlohmann::json to_json(const AlgElement& a);
AlgElement alg_element_from_json(const AlgebraPtr& algebra, const nlohmann::json& j);

/// {"<exponent>": AlgElement}
nlohmann::json to_json(const HLaurent& x);
HLaurent hlaurent_from_json(const AlgebraPtr& algebra, const nlohmann::json& j);

/// {"(nu; d1,...)": HLaurent}
nlohmann::json to_json(const NovikovSeries& s);
NovikovSeries novikov_from_json(const AlgebraPtr& algebra, const Box& box, const nlohmann::json& j);

nlohmann::json to_json(const Box& b);

/// [{class, degree, coefficient}] sorted by (class_degree, lexicographic class).
nlohmann::json expansion_json(const NovikovSeries& s, const GradingData& g);

} // namespace gk
