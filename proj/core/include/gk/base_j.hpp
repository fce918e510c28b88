#pragma once

#include "gk/laurent.hpp"
#include "gk/novikov.hpp"

#include <map>
#include <memory>
#include <vector>

namespace gk {

/// Supplier of the base J-function coefficients J_beta, indexed by the
/// dual-nef-basis coordinates of beta. Closed forms are provided for a point,
/// projective space and Fano toric bases; anything else is explicit data.
/// Coefficients are memoized; J_0 = 1 always.
class BaseJData {
public:
    enum class Kind { point, projective_space, toric_fano, explicit_data };

    static BaseJData point(AlgebraPtr algebra);
    /// J_nu = 1 / prod_{m=1}^{nu} (H + m hbar)^{n+1} in Q[H]/(H^{n+1}).
    static BaseJData projective(int n);
    /// J_beta = prod_rho factorial_ratio(D_rho, D_rho . beta).
    /// ray_pairings[rho][j] = D_rho . beta_j.
    static BaseJData toric(AlgebraPtr algebra, std::vector<AlgElement> ray_classes,
                           std::vector<std::vector<int>> ray_pairings);
    static BaseJData explicit_data(AlgebraPtr algebra, std::size_t rank, std::map<std::vector<int>, HLaurent> values);

    Kind kind() const { return kind_; }
    const AlgebraPtr& algebra() const { return alg_; }
    /// Picard rank k of the base.
    std::size_t rank() const { return rank_; }
    int projective_n() const { return projective_n_; }
    const std::vector<AlgElement>& ray_classes() const { return ray_classes_; }
    const std::vector<std::vector<int>>& ray_pairings() const { return ray_pairings_; }
    /// D_rho . beta for every ray (toric kind only).
    std::vector<int> ray_degrees(const std::vector<int>& d) const;

    /// Throws Error naming the class when no data is available.
    HLaurent coefficient(const std::vector<int>& d) const;

private:
    BaseJData(Kind kind, AlgebraPtr algebra, std::size_t rank);
    HLaurent compute(const std::vector<int>& d) const;

    struct Memo;

    Kind kind_;
    AlgebraPtr alg_;
    std::size_t rank_ = 0;
    int projective_n_ = 0;
    std::vector<AlgElement> ray_classes_;
    std::vector<std::vector<int>> ray_pairings_;
    std::shared_ptr<Memo> memo_;
};

/// Closed-form J of P^n with the coefficients of the box prefilled.
BaseJData base_j_projective(int n, const Box& box);

} // namespace gk
