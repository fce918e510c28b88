#pragma once

#include "gk/algebra.hpp"
#include "gk/bundle.hpp"
#include "gk/laurent.hpp"
#include "gk/novikov.hpp"
#include "gk/report.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gk {

/// Simplicial fan in Z^rank given by rays and maximal cones (indices into rays).
struct FanData {
    int rank = 0;
    std::vector<std::vector<int>> rays;
    std::vector<std::vector<std::size_t>> max_cones;
    /// Optional ray names used for ring labels; "x1".."xr" when empty.
    std::vector<std::string> labels;

    std::string label(std::size_t ray) const;
};

/// Throws InputError unless every maximal cone is full-dimensional with
/// determinant +-1 and every facet lies in exactly two maximal cones.
void validate_fan(const FanData& f);

/// Whether the anticanonical support function is strictly convex: for each
/// maximal cone the u with <u, rho> = 1 on its rays has <u, rho'> < 1 off it.
bool is_fano(const FanData& f);

struct SRCohomology {
    AlgebraPtr algebra;
    std::vector<AlgElement> ray_classes; ///< [D_rho] for every ray
    /// Exponent vector over all rays of each basis element.
    std::vector<std::vector<int>> monomials;
};

/// Q[x_rho] / (Stanley-Reisner ideal + linear relations). The rays of the first
/// maximal cone are eliminated through the linear relations; the basis consists
/// of standard monomials in the remaining ray variables, chosen degree by degree
/// with lexicographically larger monomials reduced first.
SRCohomology sr_cohomology(const FanData& f);

/// Fan of P(L_0 + ... + L_n) over a toric base, L_0 trivial.
struct LiftedFan {
    FanData base;
    int n = 0;
    /// bundle_coeffs[i-1][j]: c1(L_i) = sum_j a[i-1][j] [D_j], i = 1..n.
    std::vector<std::vector<int>> bundle_coeffs;
    int sign = 1; ///< B_j = (b_j, sign * a[.][j])
    FanData fan;  ///< rays B_1..B_r, F_0..F_n

    std::size_t b_ray(std::size_t j) const { return j; }
    std::size_t f_ray(int i) const { return base.rays.size() + static_cast<std::size_t>(i); }
};

/// Lifts the base fan. The sign convention for the B_j is the one under which
/// [F_i] - [F_0] = -sum_j a_ij [B_j] holds in the class group of the lifted fan,
/// i.e. [F_i] = z - c1(L_i) with [F_0] = z. Throws Error when neither sign works.
LiftedFan lift_fan(const FanData& base, const std::vector<std::vector<int>>& bundle_coeffs);

/// prod_rho factorial_ratio([D_rho], degrees[rho]). Throws PreconditionError
/// unless sum_rho <u, rho> degrees[rho] = 0 for every u.
HLaurent toric_i_coefficient(const FanData& f, const SRCohomology& ring, const std::vector<int>& degrees);
HLaurent toric_i_coefficient(const FanData& f, const std::vector<int>& degrees);

/// Linear map from the Stanley-Reisner ring of the lifted fan to the bundle ring
/// sending [F_i] -> z - c1(L_i), [B_j] -> pi^*[D_j]. Throws Error unless it is a
/// well-defined ring isomorphism.
class ToricIsomorphism {
public:
    ToricIsomorphism(const BundleSpace& b, const LiftedFan& lf, const SRCohomology& sr);

    AlgElement operator()(const AlgElement& x) const;
    HLaurent operator()(const HLaurent& x) const;

private:
    AlgebraPtr target_;
    std::vector<AlgElement> images_; ///< image of each basis element
};

/// Toric I-coefficient of the lifted fan against twisting_factor * pi^*J_beta on
/// every class of the box.
Report check_toric_agreement(const BundleSpace& b, const LiftedFan& lf, const Box& box);

} // namespace gk
