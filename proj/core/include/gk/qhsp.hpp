#pragma once

#include "gk/bundle.hpp"
#include "gk/factorial.hpp"
#include "gk/laurent.hpp"
#include "gk/novikov.hpp"
#include "gk/report.hpp"

#include <vector>

namespace gk {

/// Summands of a split bundle W on the ambient space: their first Chern classes
/// and, for each, the pairing with a curve class as a linear form in (nu, d).
struct LefschetzSpec {
    std::vector<AlgElement> classes;
    /// pairings[i] = {coefficient of nu, coefficient of d_1, ..., of d_k}
    std::vector<std::vector<int>> pairings;

    std::size_t size() const { return classes.size(); }
    int pairing(std::size_t i, const CurveClass& c) const;
};

/// W = sum_{k=1}^{n} O(1) (x) pi^*L_k^{-1}, whose section cuts out the section
/// X_0 of P(V) given by L_0. c1 = z - c1(L_k), pairing nu - v_k^beta.
LefschetzSpec section_spec(const BundleSpace& b);

/// prod_i prod_{m<=b_i}(x_i + m hbar) / prod_{m<=0}(x_i + m hbar).
ShiftedProduct lefschetz_ledger(const LefschetzSpec& spec, const CurveClass& c);
/// Evaluated ledger. Throws Error("non-invertible element") when some b_i < 0
/// and the corresponding class is nilpotent.
HLaurent lefschetz_factor(const LefschetzSpec& spec, const AlgebraPtr& algebra, const CurveClass& c);

/// prod_i c1(W_i), the top Chern class of W.
AlgElement euler_class(const LefschetzSpec& spec, const AlgebraPtr& algebra);

/// Coefficients e(W) * L^W * T * pi^*J_beta over the effective classes of the box,
/// with L^W * T evaluated as one factor ledger.
NovikovSeries i_w_series(const BundleSpace& b, const Box& box);

/// Total degree a + w carried by hbar^a * (degree w class) in the coefficient of c:
/// rank(W) - class_degree(c) + sum_i b_i(c).
int i_w_total_degree(const BundleSpace& b, const LefschetzSpec& spec, const CurveClass& c);

/// sum_d q1^d / (d! hbar^d) on the box, coefficients in `algebra`.
NovikovSeries exponential_series(const AlgebraPtr& algebra, const Box& box);

/// Stage 1: L^W * T reduces formally to 1 / prod_{m=1}^{d}(z + m hbar), with
/// d = nu. Stage 2: multiplied by e(W) pi^*J_beta this equals
/// e(W) pi^*J_beta / (d! hbar^d).
Report check_collapse(const BundleSpace& b, const Box& box);

/// The collapsed series equals exp(q1/hbar) times its q1^0 part, with exp
/// computed as a power series in the Novikov ring.
Report change_of_variables_check(const BundleSpace& b, const Box& box);

/// check_collapse, change_of_variables_check and homogeneity of the I_W series
/// folded into one report named "qhsp".
Report check_qhsp(const BundleSpace& b, const Box& box);

} // namespace gk
