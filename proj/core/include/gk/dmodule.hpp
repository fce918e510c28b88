#pragma once

#include "gk/bundle.hpp"
#include "gk/laurent.hpp"
#include "gk/novikov.hpp"
#include "gk/report.hpp"

#include <map>
#include <memory>
#include <vector>

namespace gk {

/// Q[lambda_0..lambda_n][H] / (prod_i (H - lambda_i)), with lambda-monomials of
/// total degree above `precision` set to zero.
///
/// With generic lambda, H - lambda_i is not nilpotent and the coefficients of
/// the equivariant I-function are infinite series in 1/hbar. Every coefficient
/// is homogeneous, so truncating 1/hbar-order is the same as truncating
/// lambda-degree; the quotient above is exact through that order, graded
/// connected, and therefore a StructAlgebra in which hl_invert applies.
/// Setting lambda = 0 recovers Q[H]/(H^{n+1}) at every precision.
class EquivariantRing {
public:
    EquivariantRing(int n, int precision);

    int n() const { return n_; }
    int precision() const { return precision_; }
    const AlgebraPtr& algebra() const { return alg_; }

    AlgElement H() const;
    AlgElement lambda(int i) const;

    /// Ring map H -> h, lambda_i -> lambdas[i] into another algebra. Throws
    /// unless prod(h - lambda_i) = 0 and every lambda-monomial above the
    /// precision maps to zero (the conditions making the map well defined).
    AlgElement map(const AlgElement& x, const AlgElement& h, const std::vector<AlgElement>& lambdas) const;

    /// lambda_i -> 0, into truncated_polynomial_algebra("H", n).
    AlgElement specialize_zero(const AlgElement& x) const;

private:
    int n_;
    int precision_;
    std::vector<std::vector<int>> monomials_; ///< lambda exponent vectors, graded order
    AlgebraPtr alg_;

    std::size_t index(std::size_t monomial, int h_power) const { return static_cast<std::size_t>(h_power) * monomials_.size() + monomial; }
};

/// Coefficients c_nu of the equivariant I-function of P^n; the dressing
/// exp((t0 + H ln q)/hbar) is implicit.
struct DressedSeries {
    std::shared_ptr<const EquivariantRing> ring;
    std::vector<HLaurent> coeffs; ///< c_0..c_order
};

/// c_nu = 1 / prod_{i=0}^{n} prod_{m=1}^{nu} (H - lambda_i + m hbar).
/// precision < 0 selects n + 1.
DressedSeries equivariant_i(int n, int order, int precision = -1);

/// Residuals of D = prod_i (hbar q d/dq - lambda_i) - x q acting through the
/// dressing (hbar q d/dq -> H + nu hbar at q^nu):
///   r_nu = prod_i (H - lambda_i + nu hbar) c_nu - x c_{nu-1},  c_{-1} = 0.
std::vector<HLaurent> apply_d(const DressedSeries& s, const Rational& x = 1);

/// The lambda = 0 operator on Q[H]/(H^{n+1}): r_nu = (H + nu hbar)^{n+1} c_nu - c_{nu-1}.
std::vector<HLaurent> apply_d_nonequivariant(int n, const std::vector<HLaurent>& coeffs);

/// apply_d vanishes identically and c_0 = 1, c_nu (nu >= 1) only has negative hbar exponents.
Report check_annihilation(const DressedSeries& s);
Report check_annihilation(int n, int order, int precision = -1);

/// lambda_i -> 0 in every coefficient; results live in Q[H]/(H^{n+1}).
std::vector<HLaurent> nonequivariant_limit(const DressedSeries& s);

/// The lambda = 0 limit equals the closed-form J of P^n coefficientwise and is
/// annihilated by the nonequivariant operator.
Report check_nonequivariant_limit(const DressedSeries& s);

/// Pure-fiber coefficients I_{nu,0} equal c_nu with lambda_i -> c1(L_i), H -> z.
Report pure_fiber_specialization(const BundleSpace& b, int nu_max);

} // namespace gk
