#include "gk/factorial.hpp"

#include "gk/errors.hpp"

namespace gk {

HLaurent shifted_product(const AlgElement& x, int a, int b)
{
    HLaurent p = HLaurent::one(x.algebra());
    for (int m = a; m <= b; ++m)
        p = p * HLaurent::shifted(x, m);
    return p;
}

HLaurent factorial_ratio(const AlgElement& x, int s)
{
    if (s > 0)
        return hl_invert(shifted_product(x, 1, s));
    return shifted_product(x, s + 1, 0);
}

ShiftedProduct ShiftedProduct::ratio(const AlgElement& x, int s)
{
    ShiftedProduct p;
    for (int m = 1; m <= s; ++m)
        p.multiply(x, m, -1);
    for (int m = s + 1; m <= 0; ++m)
        p.multiply(x, m, 1);
    return p;
}

ShiftedProduct ShiftedProduct::ascending(const AlgElement& x, int s)
{
    ShiftedProduct p;
    for (int m = 1; m <= s; ++m)
        p.multiply(x, m, 1);
    for (int m = s + 1; m <= 0; ++m)
        p.multiply(x, m, -1);
    return p;
}

std::size_t ShiftedProduct::class_index(const AlgElement& x)
{
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (same_algebra(classes_[i].algebra(), x.algebra()) && classes_[i] == x)
            return i;
    classes_.push_back(x);
    return classes_.size() - 1;
}

void ShiftedProduct::multiply(const AlgElement& x, int m, int exponent)
{
    if (exponent == 0)
        return;
    const auto key = std::make_pair(class_index(x), m);
    const int e = (exponents_[key] += exponent);
    if (e == 0)
        exponents_.erase(key);
}

ShiftedProduct operator*(ShiftedProduct a, const ShiftedProduct& b)
{
    for (const auto& [key, e] : b.exponents_)
        a.multiply(b.classes_[key.first], key.second, e);
    return a;
}

bool operator==(const ShiftedProduct& a, const ShiftedProduct& b)
{
    if (a.exponents_.size() != b.exponents_.size())
        return false;
    for (const auto& [key, e] : a.exponents_) {
        const AlgElement& x = a.classes_[key.first];
        bool found = false;
        for (const auto& [kb, eb] : b.exponents_) {
            const AlgElement& y = b.classes_[kb.first];
            if (kb.second == key.second && eb == e && same_algebra(x.algebra(), y.algebra()) && x == y) {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

HLaurent ShiftedProduct::evaluate(const AlgebraPtr& algebra) const
{
    HLaurent num = HLaurent::one(algebra);
    HLaurent den = HLaurent::one(algebra);
    for (const auto& [key, e] : exponents_) {
        const HLaurent f = HLaurent::shifted(classes_[key.first], key.second);
        HLaurent& target = e > 0 ? num : den;
        for (int i = 0; i < std::abs(e); ++i)
            target = target * f;
    }
    return num * hl_invert(den);
}

} // namespace gk
