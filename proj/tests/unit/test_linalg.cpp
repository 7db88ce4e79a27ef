#include "support.hpp"

#include "tyurin/linalg.hpp"

#include <doctest.h>

using namespace tyurin;

namespace {

IntMatrix m(const std::vector<std::vector<long>>& rows) { return support::int_matrix(rows); }

} // namespace

TEST_CASE("determinant agrees with cofactor expansion")
{
    std::vector<std::vector<long>> a{{2, -1, 0, 3}, {1, 4, 2, -2}, {0, 5, -3, 1}, {7, 0, 1, 1}};
    CHECK(determinant(m(a)) == oracle::det(a));
    CHECK(determinant(m({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("smith normal form reproduces the input through its transforms")
{
    IntMatrix a = m({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    auto s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    auto f = invariant_factors(a);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == 2);
    CHECK(f[1] == 6);
    CHECK(f[2] == 12);
}

TEST_CASE("integer kernel vectors are annihilated and primitive")
{
    IntMatrix a = m({{1, 2, 3, 4}, {2, 4, 6, 9}});
    auto ker = integer_kernel(a);
    CHECK(ker.size() == 2);
    for (const auto& v : ker) {
        for (std::size_t r = 0; r < a.rows(); ++r)
            CHECK(dot(a.row(r), v) == 0);
        CHECK(content(v) == 1);
    }
}

TEST_CASE("unimodular completion has the vector as first column and determinant one")
{
    LatticeVector c{Integer(3), Integer(5), Integer(7)};
    auto u = unimodular_completion(c);
    CHECK(u.col(0) == c);
    CHECK(abs(determinant(u)) == 1);
}

TEST_CASE("rank and solve")
{
    CHECK(rank(m({{1, 2}, {2, 4}})) == 1);
    RatMatrix a = to_rational(m({{1, 1}, {1, -1}}));
    auto x = solve(a, {Rational(3), Rational(1)});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve(to_rational(m({{1, 1}, {1, 1}})), {Rational(0), Rational(1)}));
}
