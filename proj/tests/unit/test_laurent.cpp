#include "support.hpp"

#include "gk/errors.hpp"
#include "gk/factorial.hpp"
#include "gk/laurent.hpp"

#include <doctest.h>

using namespace gk;
using gk::test::q;

namespace {

AlgElement H(int n)
{
    return AlgElement::basis(truncated_polynomial_algebra("H", n), "H");
}

HLaurent hbar_power(const AlgebraPtr& a, const Rational& c, int e)
{
    return HLaurent::monomial(a, c, e);
}

} // namespace

TEST_CASE("inverse of H + m hbar in Q[H]/(H^2)")
{
    const AlgElement h = H(1);
    const auto& a = h.algebra();
    for (int m : {1, 2, -3}) {
        const HLaurent inv = hl_invert(HLaurent::shifted(h, m));
        const HLaurent expected = hbar_power(a, make_rational(1, m), -1) - HLaurent(h, -2) * make_rational(1, m * m);
        CHECK(inv == expected);
    }
    CHECK(hl_invert(hbar_power(a, 1, 1)) == hbar_power(a, 1, -1));
}

TEST_CASE("inverse of H + hbar in Q[H]/(H^3)")
{
    const AlgElement h = H(2);
    const HLaurent x = HLaurent::shifted(h, 1);
    const HLaurent expected = HLaurent(AlgElement::one(h.algebra()), -1) - HLaurent(h, -2) + HLaurent(h * h, -3);
    CHECK(hl_invert(x) == expected);
    CHECK(hl_invert(x) * x == HLaurent::one(h.algebra()));
}

TEST_CASE("non-invertible elements are rejected")
{
    const AlgElement h = H(2);
    CHECK_THROWS_WITH_AS(hl_invert(HLaurent(h)), "non-invertible element", Error);
    CHECK_THROWS_AS(hl_invert(HLaurent::zero(h.algebra())), Error);
    // two scalar terms: 1 + hbar
    const HLaurent two = HLaurent::one(h.algebra()) + hbar_power(h.algebra(), 1, 1);
    CHECK_THROWS_AS(hl_invert(two), Error);
}

TEST_CASE("hl_invert round trip on random unit-plus-nilpotent elements")
{
    std::mt19937 rng(20261018);
    const AlgebraPtr algebras[] = {truncated_polynomial_algebra("H", 3),
                                   builtin_geometry("F1").bundle().algebra()};
    std::uniform_int_distribution<int> shift(-3, 3), scalar(1, 5), exps(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const AlgebraPtr& a = algebras[trial % 2];
        const int s = shift(rng);
        HLaurent x = hbar_power(a, make_rational(scalar(rng), scalar(rng)), s);
        for (int k = 0; k < 3; ++k)
            x += HLaurent(test::random_element(a, rng, 1), exps(rng));
        CHECK(hl_invert(x) * x == HLaurent::one(a));
    }
}

TEST_CASE("Laurent arithmetic prunes zeros and keeps equality structural")
{
    const AlgElement h = H(2);
    const HLaurent x = HLaurent(h, -1) + hbar_power(h.algebra(), 2, 0);
    CHECK((x - x).is_zero());
    CHECK(x.max_exponent() == 0);
    CHECK(x.min_exponent() == -1);
    CHECK(x.times_hbar(2).coeff(1) == h);
    CHECK(pow(HLaurent::shifted(h, 1), 3) == HLaurent::shifted(h, 1) * HLaurent::shifted(h, 1) * HLaurent::shifted(h, 1));
    CHECK(to_string(HLaurent::zero(h.algebra())) == "0");
}

TEST_CASE("factorial ratio branches")
{
    const AlgElement h = H(2);
    const auto& a = h.algebra();
    CHECK(factorial_ratio(h, 0) == HLaurent::one(a));
    CHECK(factorial_ratio(h, 2) == hl_invert(HLaurent::shifted(h, 1) * HLaurent::shifted(h, 2)));
    // s = -2: leftover numerator factors m = -1, 0
    CHECK(factorial_ratio(h, -2) == HLaurent(h) * HLaurent::shifted(h, -1));
    CHECK(shifted_product(h, 1, 0) == HLaurent::one(a));
    CHECK(shifted_product(h, 1, 2) == HLaurent::shifted(h, 1) * HLaurent::shifted(h, 2));
}

TEST_CASE("factorial ratio properties over random degree-1 classes")
{
    std::mt19937 rng(7);
    const AlgebraPtr a = builtin_geometry("P2_O_O1").bundle().algebra();
    for (int trial = 0; trial < 20; ++trial) {
        AlgElement x = test::random_element(a, rng, 1).homogeneous_part(1);
        if (x.is_zero())
            continue;
        for (int s = -5; s <= 5; ++s) {
            const HLaurent f = factorial_ratio(x, s);
            if (s > 0)
                CHECK(f * shifted_product(x, 1, s) == HLaurent::one(a));
            if (s < 0) {
                // the m = 0 factor is x itself
                CHECK(f.max_exponent() == -s - 1);
                CHECK(f.min_exponent() >= 0);
            }
            // telescoping
            CHECK(f * HLaurent::shifted(x, s) == factorial_ratio(x, s - 1));
        }
    }
}

TEST_CASE("shifted products cancel formally")
{
    const AlgElement h = H(2);
    const auto& a = h.algebra();
    const AlgElement y = h * Rational(2);
    CHECK((ShiftedProduct::ratio(h, 3) * ShiftedProduct::ascending(h, 3)).is_one());
    CHECK((ShiftedProduct::ratio(h, -2) * ShiftedProduct::ascending(h, -2)).is_one());
    CHECK_FALSE((ShiftedProduct::ratio(h, 3) * ShiftedProduct::ascending(y, 3)).is_one());
    CHECK(ShiftedProduct::ratio(h, 3).evaluate(a) == factorial_ratio(h, 3));
    CHECK(ShiftedProduct::ratio(h, -3).evaluate(a) == factorial_ratio(h, -3));
    CHECK(ShiftedProduct::ratio(y, 2) == ShiftedProduct::ratio(h * q("2"), 2));
    // 1/H has a nilpotent denominator
    CHECK_THROWS_AS(ShiftedProduct::ascending(h, -1).evaluate(a), Error);
}
