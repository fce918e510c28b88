#pragma once

#include "gk/laurent.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gk {

/// prod_{m<=0}(x + m hbar) / prod_{m<=s}(x + m hbar), after cancellation:
///   s > 0 : 1 / prod_{m=1}^{s} (x + m hbar)
///   s = 0 : 1
///   s < 0 : prod_{m=s+1}^{0} (x + m hbar)
/// x should have positive degree so that the s > 0 inverse exists.
HLaurent factorial_ratio(const AlgElement& x, int s);

/// prod_{m=a}^{b} (x + m hbar); 1 when a > b.
HLaurent shifted_product(const AlgElement& x, int a, int b);

/// Formal product of linear factors (x_k + m hbar)^e, kept symbolically so that
/// cancellations can be verified independently of any ring relation.
class ShiftedProduct {
public:
    ShiftedProduct() = default;

    /// The factorial_ratio(x, s) orientation.
    static ShiftedProduct ratio(const AlgElement& x, int s);
    /// The reciprocal orientation prod_{m<=s} / prod_{m<=0}.
    static ShiftedProduct ascending(const AlgElement& x, int s);

    void multiply(const AlgElement& x, int m, int exponent);

    /// Class index -> (m -> exponent); zero exponents are never stored.
    const std::vector<AlgElement>& classes() const { return classes_; }
    const std::map<std::pair<std::size_t, int>, int>& exponents() const { return exponents_; }
    bool is_one() const { return exponents_.empty(); }

    friend ShiftedProduct operator*(ShiftedProduct a, const ShiftedProduct& b);
    /// Same multiset of factors, matching classes by value.
    friend bool operator==(const ShiftedProduct& a, const ShiftedProduct& b);

    /// Numerator factors multiplied out, times hl_invert of the denominator.
    /// Throws Error("non-invertible element") when the denominator contains a
    /// nilpotent factor (m = 0).
    HLaurent evaluate(const AlgebraPtr& algebra) const;

private:
    std::size_t class_index(const AlgElement& x);

    std::vector<AlgElement> classes_;
    std::map<std::pair<std::size_t, int>, int> exponents_;
};

} // namespace gk
