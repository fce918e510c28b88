#include "support.hpp"

#include "gk/bundle.hpp"
#include "gk/errors.hpp"

#include <doctest.h>

using namespace gk;

TEST_CASE("point base gives Q[z]/(z^{n+1})")
{
    for (int n = 0; n <= 3; ++n) {
        const BundleSpace b = build_bundle(point_base(n));
        CHECK(b.algebra()->dim() == static_cast<std::size_t>(n + 1));
        CHECK(check_algebra(*b.algebra()).ok);
        if (n >= 1) {
            CHECK(pow(b.z(), n).is_zero() == false);
            CHECK(pow(b.z(), n + 1).is_zero());
        }
    }
}

TEST_CASE("F1 ring: p^2 = 0, z^2 = z p")
{
    const BundleSpace b = builtin_geometry("F1").bundle();
    const auto& a = b.algebra();
    CHECK(a->dim() == 4);
    CHECK(check_algebra(*a).ok);
    const AlgElement p = b.pullback(b.base().nef_basis[0]);
    const AlgElement& z = b.z();
    CHECK((p * p).is_zero());
    CHECK(z * z == z * p);
    CHECK(b.defining_relation().is_zero());
    CHECK(z * (z - p) == AlgElement::zero(a));
    // basis {1, p, z, z p}
    std::vector<std::string> labels;
    for (const auto& e : a->basis())
        labels.push_back(e.label);
    CHECK(labels == std::vector<std::string>{"1", "p", "z", "p*z"});
}

TEST_CASE("trivial bundle over P1 is the product ring")
{
    const BundleSpace b = builtin_geometry("F0").bundle();
    const AlgElement p = b.pullback(b.base().nef_basis[0]);
    CHECK((b.z() * b.z()).is_zero());
    CHECK(!(b.z() * p).is_zero());
}

TEST_CASE("ranks and pullback")
{
    for (const char* name : {"F1", "P2_O_O1", "P1_O_O1_O1", "P1xP1_O_O11"}) {
        const Geometry g = builtin_geometry(name);
        const BundleSpace b = g.bundle();
        CHECK(b.algebra()->dim() == static_cast<std::size_t>(b.n() + 1) * g.base->algebra->dim());
        const auto& x = g.base->algebra;
        for (std::size_t i = 0; i < x->dim(); ++i)
            for (std::size_t j = 0; j < x->dim(); ++j) {
                const AlgElement xi = AlgElement::basis(x, i), xj = AlgElement::basis(x, j);
                CHECK(b.pullback(xi * xj) == b.pullback(xi) * b.pullback(xj));
            }
    }
}

TEST_CASE("without the relation the defining product survives")
{
    const BundleSpace b = build_bundle_without_relation(*builtin_geometry("F1").base);
    CHECK_FALSE(b.relation_imposed());
    CHECK_FALSE(b.defining_relation().is_zero());
    CHECK(check_algebra(*b.algebra()).ok);
}

TEST_CASE("canonical class")
{
    {
        const BundleSpace b = build_bundle(point_base(1));
        CHECK(canonical_class(b) == Rational(-2) * b.z());
    }
    {
        const BundleSpace b = builtin_geometry("F1").bundle();
        const AlgElement p = b.pullback(b.base().nef_basis[0]);
        CHECK(canonical_class(b) == -p - Rational(2) * b.z());
    }
    {
        const BundleSpace b = builtin_geometry("F0").bundle();
        const AlgElement p = b.pullback(b.base().nef_basis[0]);
        CHECK(canonical_class(b) == Rational(-2) * p - Rational(2) * b.z());
    }
}

TEST_CASE("intersection with curve classes")
{
    for (const char* name : {"F1", "F2", "P2_O_O1", "P1xP1_O_O11", "P1_O_O1_O1"}) {
        const BundleSpace b = builtin_geometry(name).bundle();
        const Box box{2, std::vector<int>(b.base().k(), 2)};
        for (const auto& c : box.classes()) {
            CHECK(pair_class(b, b.z(), c) == c.nu);
            CHECK(-pair_class(b, canonical_class(b), c) == class_degree(c, b.grading()));
            for (int i = 0; i <= b.n(); ++i)
                CHECK(pair_class(b, b.z() - b.c1(i), c) == c.nu - b.grading().v(static_cast<std::size_t>(i), c));
            for (std::size_t j = 0; j < b.base().k(); ++j)
                CHECK(pair_class(b, b.pullback(b.base().nef_basis[j]), c) == c.d[j]);
        }
        CHECK_THROWS_AS(pair_class(b, b.z() * b.z(), CurveClass{1, std::vector<int>(b.base().k(), 0)}), Error);
    }
}

TEST_CASE("base variety validation")
{
    const AlgebraPtr h = truncated_polynomial_algebra("H", 2);
    const AlgElement H = AlgElement::basis(h, "H");
    const BaseJData j = BaseJData::projective(2);
    const BaseVariety ok = make_base_variety("P2", h, {H}, Rational(-3) * H, {H}, j);
    CHECK(ok.pairings.kx_pairings == std::vector<int>{-3});
    CHECK(ok.pairings.v_pairings == std::vector<std::vector<int>>{{0}, {1}});
    CHECK_THROWS_AS(make_base_variety("P2", h, {H}, Rational(-3) * H, {H * H}, j), InputError);
    CHECK_THROWS_AS(make_base_variety("P2", h, {}, Rational(-3) * H, {H}, j), InputError);
    CHECK_THROWS_AS(make_base_variety("P2", h, {H}, Rational(-3) * H, {H}, j, std::vector<std::vector<int>>{{2}}), InputError);
    CHECK_NOTHROW(make_base_variety("P2", h, {H}, Rational(-3) * H, {H}, j, std::vector<std::vector<int>>{{1}}));
    CHECK_THROWS_AS(make_base_variety("P2", h, {H}, Rational(-3) * H, {Rational(1, 2) * H}, j), InputError);
}
