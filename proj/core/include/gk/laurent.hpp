#pragma once

#include "gk/algebra.hpp"

#include <map>
#include <string>

namespace gk {

/// Finitely supported Laurent polynomial in hbar with coefficients in a StructAlgebra.
/// hbar has degree 1, so hbar^s * alpha has total degree s + deg(alpha).
/// Zero coefficients are never stored, which makes equality structural.
class HLaurent {
public:
    explicit HLaurent(AlgebraPtr algebra);
    HLaurent(const AlgElement& coeff, int exponent = 0);

    static HLaurent zero(AlgebraPtr algebra) { return HLaurent(std::move(algebra)); }
    static HLaurent one(AlgebraPtr algebra);
    /// c * hbar^e
    static HLaurent monomial(AlgebraPtr algebra, const Rational& c, int e);
    /// x + m*hbar
    static HLaurent shifted(const AlgElement& x, const Rational& m);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<int, AlgElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of hbar^e (zero when absent).
    AlgElement coeff(int e) const;
    /// Largest hbar exponent present; requires a nonzero value.
    int max_exponent() const;
    int min_exponent() const;

    /// Multiplication by hbar^k.
    HLaurent times_hbar(int k) const;

    HLaurent& operator+=(const HLaurent& o);
    HLaurent& operator-=(const HLaurent& o);
    HLaurent& operator*=(const Rational& q);
    HLaurent operator-() const;

    friend HLaurent operator+(HLaurent a, const HLaurent& b) { return a += b; }
    friend HLaurent operator-(HLaurent a, const HLaurent& b) { return a -= b; }
    friend HLaurent operator*(HLaurent a, const Rational& q) { return a *= q; }
    friend HLaurent operator*(const Rational& q, HLaurent a) { return a *= q; }
    friend HLaurent operator*(const HLaurent& a, const HLaurent& b);
    friend HLaurent operator*(const HLaurent& a, const AlgElement& b);
    friend HLaurent operator*(const AlgElement& a, const HLaurent& b) { return b * a; }
    friend bool operator==(const HLaurent& a, const HLaurent& b);
    friend bool operator!=(const HLaurent& a, const HLaurent& b) { return !(a == b); }

    /// Applies a linear map to every coefficient; the result lives in `target`.
    template <typename F>
    HLaurent map_coeffs(AlgebraPtr target, F&& f) const
    {
        HLaurent out(std::move(target));
        for (const auto& [e, c] : terms_)
            out.add_term(e, f(c));
        return out;
    }

    void add_term(int e, const AlgElement& c);

private:
    AlgebraPtr alg_;
    std::map<int, AlgElement> terms_;
};

/// Inverse of x = m*hbar^s*one + r where m != 0 is the unique nonzero scalar
/// (degree-0) component and every coefficient of r has positive degree.
/// Computed as the terminating geometric series
///   hbar^{-s} m^{-1} sum_j (-r / (m hbar^s))^j.
/// Throws Error("non-invertible element") when no such decomposition exists.
HLaurent hl_invert(const HLaurent& x);

HLaurent pow(const HLaurent& x, int k);

/// e.g. "hbar^-2 + (-2*p)*hbar^-3"
std::string to_string(const HLaurent& x);

} // namespace gk
