#include "support.hpp"

#include "gk/algebra.hpp"
#include "gk/errors.hpp"
#include "gk/linalg.hpp"

#include <doctest.h>

using namespace gk;
using gk::test::q;

TEST_CASE("rationals print and parse canonically")
{
    CHECK(to_string(make_rational(6, 4)) == "3/2");
    CHECK(to_string(make_rational(-4, 2)) == "-2");
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("3x"), InputError);
    CHECK(factorial(5) == 120);
    CHECK(factorial(0) == 1);
}

TEST_CASE("linear algebra over Q")
{
    using namespace gk::linalg;
    const Matrix m{{q("1"), q("2")}, {q("3"), q("4")}};
    CHECK(determinant(m) == -2);
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK((*inv)[0][0] == -2);
    CHECK((*inv)[1][0] == q("3/2"));
    CHECK(rank({{q("1"), q("2")}, {q("2"), q("4")}}, 2) == 1);
    const auto x = solve(m, {q("5"), q("6")});
    REQUIRE(x);
    CHECK((*x)[0] == -4);
    CHECK((*x)[1] == q("9/2"));
    CHECK_FALSE(solve({{q("1"), q("1")}, {q("1"), q("1")}}, {q("1"), q("2")}));
}

TEST_CASE("truncated polynomial algebra")
{
    const AlgebraPtr a = truncated_polynomial_algebra("H", 2);
    CHECK(a->dim() == 3);
    CHECK(a->top_degree() == 2);
    CHECK(a == truncated_polynomial_algebra("H", 2));
    CHECK(check_algebra(*a).ok);
    const AlgElement h = AlgElement::basis(a, "H");
    CHECK(pow(h, 2) == AlgElement::basis(a, "H^2"));
    CHECK(pow(h, 3).is_zero());
    const AlgElement x = AlgElement::one(a) + Rational(2) * h;
    CHECK(to_string(x * x) == "1 + 4*H + 4*H^2");
    CHECK(x.degrees_present() == std::vector<int>{0, 1});
    CHECK_FALSE(x.homogeneous_degree());
    CHECK((Rational(3) * h).homogeneous_degree() == 1);
}

TEST_CASE("elements of different algebras do not mix")
{
    const AlgElement a = AlgElement::basis(truncated_polynomial_algebra("H", 2), "H");
    const AlgElement b = AlgElement::basis(truncated_polynomial_algebra("p", 1), "p");
    CHECK_THROWS_AS(a * b, Error);
    CHECK_THROWS_AS(a + b, Error);
}

namespace {

// Q[a,b]/(a^2, b^3) with one structure constant replaced.
StructAlgebra p1xp2(const Rational& a_times_b2)
{
    std::vector<BasisElement> basis{{"1", 0}, {"a", 1}, {"b", 1}, {"a*b", 2}, {"b^2", 2}, {"a*b^2", 3}};
    const std::vector<std::pair<int, int>> exps{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}};
    const std::size_t dim = basis.size();
    std::vector<Combination> table(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const std::pair<int, int> e{exps[i].first + exps[j].first, exps[i].second + exps[j].second};
            for (std::size_t k = 0; k < dim; ++k)
                if (exps[k] == e)
                    table[i * dim + j] = {{k, Rational(1)}};
        }
    }
    table[1 * dim + 4] = {{5, a_times_b2}};
    table[4 * dim + 1] = {{5, a_times_b2}};
    return StructAlgebra("P1xP2", basis, table, 0);
}

} // namespace

TEST_CASE("check_algebra accepts a valid table and locates a corrupted constant")
{
    CHECK(check_algebra(p1xp2(1)).ok);
    const auto report = check_algebra(p1xp2(2));
    REQUIRE_FALSE(report.ok);
    CHECK(report.failures.front() == "associativity failed at (a,b,b)");
}

TEST_CASE("check_algebra rejects seeded corruptions")
{
    const StructAlgebra good = p1xp2(1);
    const std::size_t dim = good.dim();
    auto corrupt = [&](auto&& edit) {
        std::vector<Combination> table;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                table.push_back(good.product(i, j));
        auto basis = good.basis();
        edit(basis, table);
        return check_algebra(StructAlgebra("corrupt", basis, table, 0)).ok;
    };
    // indices: 1, a, b, a*b, b^2, a*b^2
    CHECK_FALSE(corrupt([&](auto&, auto& t) { t[1 * dim + 2] = {{3, Rational(2)}}; }));
    CHECK_FALSE(corrupt([&](auto&, auto& t) { t[2 * dim + 2] = {{3, Rational(1)}, {4, Rational(1)}}; t[2 * dim + 2] = {{1, Rational(1)}}; }));
    CHECK_FALSE(corrupt([&](auto&, auto& t) { t[0 * dim + 2] = {{2, Rational(2)}}; t[2 * dim + 0] = {{2, Rational(2)}}; }));
    CHECK_FALSE(corrupt([&](auto& b, auto&) { b[1].degree = 0; }));
    CHECK_FALSE(corrupt([&](auto& b, auto&) { b[2].degree = -1; }));
    CHECK(corrupt([](auto&, auto&) {}));
    CHECK_THROWS_AS(make_algebra("bad", {{"1", 0}, {"x", 1}},
                                 {{{0, Rational(1)}}, {{1, Rational(1)}}, {{1, Rational(1)}}, {{0, Rational(1)}}}, 0),
                    InputError);
}

TEST_CASE("structural equality of algebras")
{
    const StructAlgebra a = p1xp2(1);
    const StructAlgebra b = p1xp2(1);
    CHECK(a == b);
    CHECK_FALSE(a == p1xp2(3));
}
