#include "support.hpp"

#include "gk/errors.hpp"
#include "gk/geometry.hpp"
#include "gk/hypergeometric.hpp"
#include "gk/toric.hpp"

#include <doctest.h>

using namespace gk;

namespace {

FanData p1_fan()
{
    return FanData{1, {{1}, {-1}}, {{0}, {1}}, {}};
}

FanData p2_fan()
{
    return FanData{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}, {}};
}

FanData hirzebruch(int a)
{
    return FanData{2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {}};
}

} // namespace

TEST_CASE("projective line")
{
    const SRCohomology r = sr_cohomology(p1_fan());
    CHECK(r.algebra->dim() == 2);
    CHECK(check_algebra(*r.algebra).ok);
    CHECK(r.ray_classes[0] == r.ray_classes[1]);
    CHECK((r.ray_classes[0] * r.ray_classes[0]).is_zero());
}

TEST_CASE("projective plane and P1 x P1")
{
    const SRCohomology p2 = sr_cohomology(p2_fan());
    CHECK(p2.algebra->dim() == 3);
    const AlgElement h = p2.ray_classes[2];
    CHECK(p2.ray_classes[0] == h);
    CHECK_FALSE((h * h).is_zero());
    CHECK((h * h * h).is_zero());

    const FanData f0{2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}}, {}};
    const SRCohomology r = sr_cohomology(f0);
    CHECK(r.algebra->dim() == 4);
    CHECK(check_algebra(*r.algebra).ok);
    const AlgElement a = r.ray_classes[0], b = r.ray_classes[2];
    CHECK((a * a).is_zero());
    CHECK((b * b).is_zero());
    CHECK_FALSE((a * b).is_zero());
}

TEST_CASE("first Hirzebruch surface by hand")
{
    // D1 = D3 = f, D4 = D2 + f, f^2 = 0, D2 D4 = 0
    const SRCohomology r = sr_cohomology(hirzebruch(1));
    CHECK(r.algebra->dim() == 4);
    const auto& d = r.ray_classes;
    const AlgElement f = d[0];
    CHECK(d[2] == f);
    CHECK(d[3] == d[1] + f);
    CHECK((f * f).is_zero());
    CHECK(d[1] * d[1] == -(d[1] * f));
    CHECK(d[3] * d[3] == d[1] * f);
    CHECK_FALSE((d[1] * f).is_zero());
}

TEST_CASE("fan validation")
{
    CHECK_NOTHROW(validate_fan(p2_fan()));
    CHECK_THROWS_AS(validate_fan(FanData{1, {{2}, {-1}}, {{0}, {1}}, {}}), InputError);
    CHECK_THROWS_AS(validate_fan(FanData{2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {1, 2}}, {}}), InputError);
    CHECK(is_fano(p2_fan()));
    CHECK(is_fano(hirzebruch(1)));
    CHECK_FALSE(is_fano(hirzebruch(2)));
}

TEST_CASE("lifted fans")
{
    const LiftedFan trivial = lift_fan(p1_fan(), {{0, 0}});
    CHECK(trivial.fan.rays.size() == 4);
    CHECK(trivial.fan.max_cones.size() == 4);
    CHECK(sr_cohomology(trivial.fan).algebra->dim() == 4);
    CHECK(trivial.fan.label(trivial.f_ray(0)) == "F0");
    CHECK(trivial.fan.label(trivial.b_ray(1)) == "B2");

    const LiftedFan f1 = lift_fan(p1_fan(), {{1, 0}});
    CHECK(is_fano(f1.fan));
    const SRCohomology r = sr_cohomology(f1.fan);
    // the F_1 divisor is the negative section
    const AlgElement e = r.ray_classes[f1.f_ray(1)];
    CHECK((e * e) == -(e * r.ray_classes[f1.b_ray(0)]));

    const LiftedFan p2 = lift_fan(p2_fan(), {{0, 0, 0}, {1, 0, 0}});
    CHECK(p2.fan.rays.size() == 6);
    CHECK(p2.fan.max_cones.size() == 9);
    const LiftedFan p2_one = lift_fan(p2_fan(), {{1, 0, 0}});
    CHECK(p2_one.fan.rays.size() == 5);
    CHECK(p2_one.fan.max_cones.size() == 6);
    CHECK(sr_cohomology(p2_one.fan).algebra->dim() == 6);
}

TEST_CASE("toric I coefficients")
{
    const FanData f = p1_fan();
    const SRCohomology r = sr_cohomology(f);
    const AlgElement h = r.ray_classes[0];
    CHECK(toric_i_coefficient(f, r, {0, 0}) == HLaurent::one(r.algebra));
    CHECK(toric_i_coefficient(f, r, {1, 1}) == hl_invert(pow(HLaurent::shifted(h, 1), 2)));
    CHECK_THROWS_AS(toric_i_coefficient(f, r, {1, 0}), PreconditionError);
}

TEST_CASE("isomorphism with the bundle ring")
{
    const Geometry g = builtin_geometry("F1");
    const BundleSpace b = g.bundle();
    const LiftedFan lf = g.lifted_fan();
    const SRCohomology sr = sr_cohomology(lf.fan);
    const ToricIsomorphism phi(b, lf, sr);
    CHECK(phi(sr.ray_classes[lf.f_ray(0)]) == b.z());
    CHECK(phi(sr.ray_classes[lf.f_ray(1)]) == b.z() - b.c1(1));
    for (std::size_t i = 0; i < sr.algebra->dim(); ++i)
        for (std::size_t j = 0; j < sr.algebra->dim(); ++j) {
            const AlgElement x = AlgElement::basis(sr.algebra, i), y = AlgElement::basis(sr.algebra, j);
            CHECK(phi(x * y) == phi(x) * phi(y));
        }
}

TEST_CASE("toric agreement")
{
    for (auto [name, box] : {std::pair{"F0", Box{3, {3}}}, {"F1", Box{3, {3}}}, {"P2_O_O1", Box{2, {2}}},
                             {"P1xP1_O_O11", Box{2, {1, 1}}}, {"P3", Box{3, {}}}}) {
        CAPTURE(name);
        const Geometry g = builtin_geometry(name);
        CHECK(check_toric_agreement(g.bundle(), g.lifted_fan(), box).passed());
    }
    const Geometry f2 = builtin_geometry("F2");
    // the base P1 is Fano even though F2 is not
    CHECK(check_toric_agreement(f2.bundle(), f2.lifted_fan(), Box{2, {2}}).passed());
    CHECK_FALSE(is_fano(f2.lifted_fan().fan));
    CHECK(check_toric_agreement(builtin_geometry("F1").bundle(), builtin_geometry("F0").lifted_fan(), Box{1, {1}}).status ==
          Status::error);
    CHECK_THROWS_AS(load_geometry_file(test::data_path("p1_explicit.json")).lifted_fan(), PreconditionError);
}
