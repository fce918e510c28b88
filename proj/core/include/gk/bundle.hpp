#pragma once

#include "gk/algebra.hpp"
#include "gk/base_j.hpp"
#include "gk/laurent.hpp"
#include "gk/novikov.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gk {

/// Base X of the projective bundle P(L_0 + ... + L_n), L_0 = O_X.
struct BaseVariety {
    std::string name;
    AlgebraPtr algebra;                     ///< H*X
    std::vector<AlgElement> nef_basis;      ///< p_1..p_k, a basis of H^2
    AlgElement canonical;                   ///< K_X
    std::vector<AlgElement> line_bundles;   ///< c1(L_0)..c1(L_n), c1(L_0) = 0
    GradingData pairings;
    BaseJData base_j;
    std::vector<std::vector<int>> non_effective; ///< base classes to skip in series

    int n() const { return pairings.n; }
    std::size_t k() const { return nef_basis.size(); }
    /// Coordinates of a degree-1 class in the nef basis; throws if it is not in their span.
    std::vector<Rational> nef_coordinates(const AlgElement& divisor) const;
    bool is_effective(const std::vector<int>& d) const;
};

/// Validates the base data and derives the pairings K_X.beta_j and
/// v_i^{beta_j} from nef coordinates. `bundles` lists c1(L_1)..c1(L_n).
/// When `stated_v_pairings` is given (rows for L_1..L_n) it must agree with
/// the derived matrix.
BaseVariety make_base_variety(std::string name, AlgebraPtr algebra, std::vector<AlgElement> nef_basis,
                              AlgElement canonical, std::vector<AlgElement> bundles, BaseJData base_j,
                              std::optional<std::vector<std::vector<int>>> stated_v_pairings = std::nullopt);

/// H*P(V) as the free H*X-module on 1, z, ..., z^n.
class BundleSpace {
public:
    BundleSpace(std::shared_ptr<const BaseVariety> base, AlgebraPtr algebra, int z_max, bool relation_imposed);

    const BaseVariety& base() const { return *base_; }
    const std::shared_ptr<const BaseVariety>& base_ptr() const { return base_; }
    const AlgebraPtr& algebra() const { return alg_; }
    int n() const { return base_->n(); }
    const GradingData& grading() const { return base_->pairings; }
    /// Whether z * prod_{i>=1}(z - c1(L_i)) = 0 was imposed (false only for negative controls).
    bool relation_imposed() const { return relation_imposed_; }
    /// Highest power of z in the basis.
    int z_max() const { return z_max_; }

    std::size_t index(std::size_t base_index, int z_power) const;
    const AlgElement& z() const { return z_; }
    AlgElement pullback(const AlgElement& x) const;
    HLaurent pullback(const HLaurent& x) const;
    /// pi^* c1(L_i)
    AlgElement c1(int i) const { return pullback(base_->line_bundles.at(static_cast<std::size_t>(i))); }
    /// z * prod_{i=1}^{n} (z - c1(L_i)), zero whenever the relation is imposed.
    AlgElement defining_relation() const;

private:
    std::shared_ptr<const BaseVariety> base_;
    AlgebraPtr alg_;
    int z_max_;
    bool relation_imposed_;
    AlgElement z_;
};

/// Reduces z^{n+1} through the signed elementary symmetric functions of
/// c1(L_1)..c1(L_n). Validates the result (algebra axioms, defining relation,
/// pullback is a ring homomorphism).
BundleSpace build_bundle(const BaseVariety& base);

/// H*X[z]/(z^{n+2}): the same generators without the defining relation.
/// Only meaningful as a negative control.
BundleSpace build_bundle_without_relation(const BaseVariety& base);

/// pi^*K_X + pi^*c1(V) - (n+1) z
AlgElement canonical_class(const BundleSpace& b);

/// Intersection of a degree-1 class with nu*[l] + s0_*(beta): z pairs to nu,
/// pi^*p_j pairs to d_j.
Rational pair_class(const BundleSpace& b, const AlgElement& divisor, const CurveClass& c);

} // namespace gk

namespace gk {

/// X = point with n trivial summands: P(V) = P^n.
BaseVariety point_base(int n);

} // namespace gk
