#include "support.hpp"

#include "tyurin/error.hpp"
#include "tyurin/polytope.hpp"

#include <doctest.h>

using namespace tyurin;

namespace {

const char* kReflexive[] = {"p1p1p1", "p1113", "quintic", "quartic", "cube"};

} // namespace

TEST_CASE("lattice points agree with the brute-force polar scan")
{
    for (const char* name : kReflexive) {
        CAPTURE(name);
        auto p = support::polytope(name);
        auto verts = support::to_vecs(p.vertices);
        auto lib = support::to_vecs(lattice_points(p));
        std::sort(lib.begin(), lib.end());
        CHECK(lib == oracle::reflexive_points(verts, 6));
        auto dual = support::to_vecs(lattice_points(polar_dual(p)));
        std::sort(dual.begin(), dual.end());
        CHECK(dual == oracle::polar_points(verts, 6));
    }
}

TEST_CASE("polar dual is an involution and boundary plus interior is everything")
{
    for (const char* name : kReflexive) {
        CAPTURE(name);
        auto p = support::polytope(name);
        CHECK(is_reflexive(p));
        CHECK(polar_dual(polar_dual(p)) == p);
        CHECK(count_points(p) == count_points(p, Region::boundary) + count_points(p, Region::interior));
        CHECK(count_points(p, Region::interior) == 1);
    }
}

TEST_CASE("octahedron and cube")
{
    auto oct = support::polytope("p1p1p1");
    CHECK(oct.facets.size() == 8);
    CHECK(count_points(oct) == 7);
    auto cube = polar_dual(oct);
    CHECK(cube == support::polytope("cube"));
    CHECK(count_points(cube) == 27);
    std::vector<std::size_t> f(5, 0);
    for (const auto& face : face_lattice(cube))
        ++f[face.dim + 1];
    CHECK(f == std::vector<std::size_t>{1, 8, 12, 6, 1});
}

TEST_CASE("face duality reverses dimensions")
{
    for (const char* name : kReflexive) {
        CAPTURE(name);
        auto p = support::polytope(name);
        auto q = polar_dual(p);
        for (const auto& f : face_lattice(p)) {
            auto g = dual_face(p, q, f);
            CHECK(f.dim + g.dim == p.dim - 1);
            CHECK(dual_face(q, p, g) == f);
        }
    }
}

TEST_CASE("simplex polar and dilation")
{
    auto s = support::polytope("quartic");
    auto d = polar_dual(s);
    CHECK(count_points(d) == 35);
    CHECK(count_points(dilate(d, 2), Region::interior) == count_points(d));
    CHECK(negate(negate(s)) == s);
}

TEST_CASE("minkowski sum of unit squares is the doubled square")
{
    auto sq = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto sum = minkowski_sum(sq, sq);
    CHECK(sum == dilate(sq, 2));
    CHECK(count_points(sum) == 9);
    CHECK(count_points(sum, Region::interior) == 1);
}

TEST_CASE("lower-dimensional hulls carry equations")
{
    auto seg = hull_any({{0, 0, 0}, {2, 2, 2}});
    CHECK(seg.dim == 1);
    CHECK(seg.equations.size() == 2);
    CHECK(count_points(seg) == 3);
}

TEST_CASE("polytope errors")
{
    auto name_of = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return std::string(e.name());
        }
        return std::string("none");
    };
    CHECK(name_of([] { hull({}); }) == "EmptyInput");
    CHECK(name_of([] { hull({{0, 0}, {1, 1}}); }) == "NotFullDimensional");
    CHECK(name_of([] { hull({{0, 0}, {1, 0, 0}}); }) == "RankMismatch");
    CHECK(name_of([] { polar_dual(hull({{1, 1}, {2, 1}, {1, 2}})); }) == "OriginNotInterior");
    CHECK(name_of([] { polar_dual(support::polytope("not_reflexive")); }) == "NonIntegralDual");
    CHECK(name_of([] { dilate(support::polytope("cube"), 0); }) == "InvalidFactor");
    CHECK_FALSE(is_reflexive(support::polytope("not_reflexive")));
}
