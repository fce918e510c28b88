#pragma once

#include "gk/bundle.hpp"
#include "gk/toric.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gk {

/// Toric base with a nef basis and split bundle, all given as ray combinations.
struct ToricBaseSpec {
    std::string name;
    FanData fan;
    std::vector<std::vector<int>> nef;     ///< p_k = sum_rho nef[k][rho] D_rho
    std::vector<std::vector<int>> bundles; ///< c1(L_i) = sum_rho bundles[i-1][rho] D_rho
};

/// Base variety with its bundle, plus the fan data when the base is toric.
struct Geometry {
    std::string name;
    std::shared_ptr<const BaseVariety> base;
    std::optional<ToricBaseSpec> toric;

    BundleSpace bundle() const { return build_bundle(*base); }
    /// Throws PreconditionError for non-toric geometries.
    LiftedFan lifted_fan() const;
};

/// Stanley-Reisner cohomology with canonical class -sum D_rho and the toric closed-form J.
BaseVariety toric_base(const ToricBaseSpec& spec);

Geometry make_toric_geometry(ToricBaseSpec spec);

/// point, P1..P4 (trivial bundles over a point), F0, F1, F2, P1_O, P1_O_O1_O1,
/// P2_O, P2_O_O, P2_O_O1, P2_O_O2, P1xP1_O, P1xP1_O_O, P1xP1_O_O10, P1xP1_O_O11.
std::vector<std::string> builtin_names();
/// Throws InputError for unknown names.
Geometry builtin_geometry(const std::string& name);

/// Either a toric description {name, fan, nef, bundles} or an explicit base
/// {name, basis, mult, nef, canonical, bundles, effective_hint, j_function}.
/// Throws InputError naming the offending field.
Geometry geometry_from_json(const nlohmann::json& j);
Geometry load_geometry_file(const std::string& path);

/// "builtin:NAME" or a file path.
Geometry resolve_geometry(const std::string& ref);

nlohmann::json read_json_file(const std::string& path);

} // namespace gk
