#pragma once

#include "gk/laurent.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gk {

/// Curve class nu*[line in fiber] + beta, beta given by its coordinates in the
/// basis dual to the nef basis of the base.
struct CurveClass {
    int nu = 0;
    std::vector<int> d;

    bool is_zero() const;
    /// Componentwise partial order.
    bool leq(const CurveClass& o) const;

    friend CurveClass operator+(const CurveClass& a, const CurveClass& b);
    /// Requires b.leq(a).
    friend CurveClass operator-(const CurveClass& a, const CurveClass& b);
    friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

/// "(nu; d1,d2,...,dk)"; "(nu; )" when k = 0.
std::string to_string(const CurveClass& c);
CurveClass parse_curve_class(std::string_view text);

/// Truncation box: 0 <= nu <= nu_max and 0 <= d_j <= d_max[j].
struct Box {
    int nu_max = 0;
    std::vector<int> d_max;

    bool contains(const CurveClass& c) const;
    std::size_t size() const;
    /// All classes of the box in lexicographic order.
    std::vector<CurveClass> classes() const;
    friend bool operator==(const Box&, const Box&) = default;
};

std::string to_string(const Box& b);

/// Intersection data fixing the grading deg q1 = n+1, deg q2^beta = beta.(-K_X - c1(V)).
struct GradingData {
    int n = 0;                                ///< V has rank n+1
    std::vector<int> kx_pairings;             ///< K_X . beta_j
    std::vector<std::vector<int>> v_pairings; ///< v_pairings[i][j] = beta_j . c1(L_i), i = 0..n

    std::size_t k() const { return kx_pairings.size(); }
    /// v_i^beta for the base part of c.
    int v(std::size_t i, const CurveClass& c) const;
    /// beta . K_X
    int kx(const CurveClass& c) const;
    /// beta . c1(V)
    int c1v(const CurveClass& c) const;
};

/// (n+1)*nu + beta.(-K_X - c1(V)); additive in the class.
int class_degree(const CurveClass& c, const GradingData& g);

/// Nonzero retained classes whose degree is not strictly positive. Empty for
/// inputs satisfying the positivity hypotheses (nef L_i, ample -K_X - c1(V)).
std::vector<CurveClass> positivity_violations(const Box& box, const GradingData& g);

/// Truncated series sum_c q1^nu q2^beta * coeff(c) with coefficients in one algebra.
class NovikovSeries {
public:
    NovikovSeries(AlgebraPtr algebra, Box box);

    const AlgebraPtr& algebra() const { return alg_; }
    const Box& box() const { return box_; }
    const std::map<CurveClass, HLaurent>& coeffs() const { return coeffs_; }

    /// Zero when absent.
    HLaurent coeff(const CurveClass& c) const;
    /// Replaces the coefficient; throws for classes outside the box.
    void set(const CurveClass& c, HLaurent value);
    void add(const CurveClass& c, const HLaurent& value);

    static NovikovSeries one(AlgebraPtr algebra, Box box);

    NovikovSeries& operator+=(const NovikovSeries& o);
    friend NovikovSeries operator+(NovikovSeries a, const NovikovSeries& b) { return a += b; }
    friend bool operator==(const NovikovSeries& a, const NovikovSeries& b);

private:
    void require_compatible(const NovikovSeries& o) const;
    friend NovikovSeries nov_mul(const NovikovSeries& a, const NovikovSeries& b);

    AlgebraPtr alg_;
    Box box_;
    std::map<CurveClass, HLaurent> coeffs_;
};

/// Cauchy product truncated to the common box; exact on every retained class.
NovikovSeries nov_mul(const NovikovSeries& a, const NovikovSeries& b);

} // namespace gk
