#pragma once

#include "gk/bundle.hpp"
#include "gk/factorial.hpp"
#include "gk/novikov.hpp"
#include "gk/report.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace gk {

/// T_{nu,beta} = prod_{i=0}^{n} factorial_ratio(z - c1(L_i), nu - v_i^beta).
HLaurent twisting_factor(const BundleSpace& b, const CurveClass& c);

/// The same product kept as a formal factor ledger.
ShiftedProduct twisting_ledger(const BundleSpace& b, const CurveClass& c);

/// Reduced I-series: coefficient T_{nu,beta} * pi^*J_beta at every effective
/// class of the box. The exp((tp + t z)/hbar) prefactor is not materialized.
NovikovSeries i_series(const BundleSpace& b, const Box& box);

/// Degree-zero homogeneity: every hbar^a * (degree-w class) in the coefficient of
/// c satisfies a + w = -class_degree(c).
Report check_homogeneity(const NovikovSeries& s, const GradingData& g);

/// Generalized form: a + w must equal expected_total_degree(c).
Report check_homogeneity(const NovikovSeries& s, const std::function<int(const CurveClass&)>& expected_total_degree);

struct AsymptoticsEntry {
    CurveClass cls;
    int l = 0;       ///< #{i : nu - v_i^beta < 0}
    int n_beta = 0;  ///< max(2, -beta.K_X) for beta != 0, 0 for beta = 0
    int n_total = 0; ///< l + (n+1) nu - beta.c1(V) + n_beta
    std::optional<int> observed_leading;
    bool within_prediction = true; ///< observed_leading <= -n_total
};

struct AsymptoticsResult {
    std::vector<AsymptoticsEntry> ledger;
    Report report;
};

/// Coefficient at 0 is exactly 1, every other coefficient is supported in hbar
/// exponents <= -2, predicted n_total >= 2 and observed <= -min(n_total, 2).
/// Also flags retained classes on which the positivity hypotheses fail.
AsymptoticsResult check_asymptotics(const NovikovSeries& s, const GradingData& g);

/// I-series over a point base equals the closed-form J of P^n, nu <= nu_max.
Report pure_fiber_identity(int n, int nu_max);

struct NoFiberResult {
    HLaurent value;
    Report report;
};

/// T_{0,beta} against prod_{i=1}^{n} prod_{m=0}^{v_i - 1} (z - c1(L_i) - m hbar).
/// Throws PreconditionError unless every v_i^beta > 0 for i >= 1.
NoFiberResult extremal_no_fiber(const BundleSpace& b, const std::vector<int>& beta);

} // namespace gk
