#include "support.hpp"

#include "tyurin/error.hpp"
#include "tyurin/nef.hpp"

#include <doctest.h>

using namespace tyurin;

namespace {

std::string error_name(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.name();
    }
    return "none";
}

std::vector<oracle::Vec> sorted_points(const LatticePolytope& p)
{
    auto v = support::to_vecs(lattice_points(p));
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("dual nef polytopes agree with direct inequality evaluation")
{
    for (const char* name : {"p1p1p1", "p1113", "quintic", "quartic"}) {
        CAPTURE(name);
        auto np = support::partition(name);
        auto du = dual_nef_partition(np);
        auto parts = support::parts_as_vecs(np);
        for (std::size_t i = 0; i < np.k(); ++i) {
            auto expected = oracle::nabla_points(parts, i, 5);
            std::sort(expected.begin(), expected.end());
            CHECK(sorted_points(du.nablas[i]) == expected);
        }
    }
}

TEST_CASE("complement count matches the inclusion-exclusion oracle")
{
    for (const char* name : {"p1p1p1", "p1113", "quintic", "quartic"}) {
        CAPTURE(name);
        auto np = support::partition(name);
        auto du = dual_nef_partition(np);
        auto parts = support::parts_as_vecs(np);
        const long polar = oracle::polar_points(support::to_vecs(np.polytope.vertices), 6).size();
        const long n1 = oracle::nabla_points(parts, 0, 5).size(), n2 = oracle::nabla_points(parts, 1, 5).size();
        CHECK(static_cast<long>(complement_count(du, polar_dual(np.polytope))) == polar - n1 - n2 + 1);
    }
}

TEST_CASE("(P1)^3: nabla_2 = -nabla_1 and twelve points")
{
    auto np = support::partition("p1p1p1");
    auto du = dual_nef_partition(np);
    CHECK(du.nablas[1] == negate(du.nablas[0]));
    auto unit = hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    CHECK((du.nablas[0] == unit || du.nablas[1] == unit));
    CHECK(complement_count(du, polar_dual(np.polytope)) == 12);
    CHECK(curve_invariant(du, polar_dual(np.polytope), 2) == 12);
    auto back = partition_from_dual(du);
    CHECK(back.polytope == du.nabla);
}

TEST_CASE("P(1,1,1,3): the documented vertex lists")
{
    auto du = dual_nef_partition(support::partition("p1113"));
    CHECK(du.nablas[0] == hull({{-1, -1, 0}, {-1, -1, 1}, {-1, 2, 0}, {2, -1, 0}}));
    CHECK(du.nablas[1] == hull({{0, 0, 0}, {0, 0, -1}, {3, 0, -1}, {0, 3, -1}}));
    CHECK(complement_count(du, polar_dual(support::polytope("p1113"))) == 18);
}

TEST_CASE("quintic: the curve genus equals the adjunction genus of a (4,5) curve")
{
    auto np = support::partition("quintic");
    auto du = dual_nef_partition(np);
    auto polar = polar_dual(np.polytope);
    CHECK(static_cast<long>(curve_invariant(du, polar, 3)) == oracle::ci_curve_genus(4, 5));
    CHECK(complement_count(du, polar) == 52);
}

TEST_CASE("interior point identities")
{
    for (const char* name : {"p1p1p1", "p1113", "quintic"}) {
        CAPTURE(name);
        auto np = support::partition(name);
        auto du = dual_nef_partition(np);
        auto polar = polar_dual(np.polytope);
        auto parts = support::parts_as_vecs(np);
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(count_points(minkowski_sum(du.nablas[i], polar), Region::interior) ==
                  oracle::nabla_points(parts, i, 5).size());
        CHECK(count_points(dilate(polar, 2), Region::interior) ==
              oracle::polar_points(support::to_vecs(np.polytope.vertices), 6).size());
    }
}

TEST_CASE("Batyrev Hodge numbers")
{
    auto q = batyrev_hodge(support::polytope("quartic"));
    CHECK(q.h11 == 1);
    CHECK(q.h_dual == 19);
    auto v = batyrev_hodge(support::polytope("quintic"));
    CHECK(v.h11 == 1);
    CHECK(v.h_dual == 101);
    for (const char* name : {"p1p1p1", "p1113", "quintic", "quartic", "cube"}) {
        CAPTURE(name);
        auto p = support::polytope(name);
        auto a = batyrev_hodge(p), b = batyrev_hodge(polar_dual(p));
        CHECK(a.h11 == b.h_dual);
        CHECK(a.h_dual == b.h11);
    }
    auto o = batyrev_hodge(support::polytope("p1p1p1"));
    CHECK(o.h11 == 3);
    CHECK(o.h_dual == 17);
}

TEST_CASE("invalid partitions are rejected by name")
{
    auto j = support::fixture("p1113_not_cartier");
    CHECK(error_name([&] {
              validate_nef_partition(io::polytope_from(j["polytope"], "p"), io::parts_from(j["parts"], "parts"));
          }) == "NotCartier");
    auto h = support::fixture("hexagon_not_nef");
    CHECK(error_name([&] {
              validate_nef_partition(io::polytope_from(h["polytope"], "p"), io::parts_from(h["parts"], "parts"));
          }) == "NotNef");
    auto oct = support::polytope("p1p1p1");
    CHECK(error_name([&] { validate_nef_partition(oct, {{{1, 0, 0}}}); }) == "NotAPartition");
    CHECK(error_name([&] { validate_nef_partition(support::polytope("not_reflexive"), {{{2, 0}}, {{-2, 0}}}); }) ==
          "NotReflexive");
}

TEST_CASE("refinement")
{
    auto fine = support::partition("p1p1p1");
    CHECK(check_refinement(trivial_partition(fine.polytope), fine));
    CHECK(error_name([&] { check_refinement(trivial_partition(support::polytope("cube")), fine); }) ==
          "PolytopeMismatch");
}

TEST_CASE("divisor component counts")
{
    auto p = support::polytope("p1113");
    auto q = polar_dual(p);
    for (const auto& sigma : lattice_points(q, Region::boundary)) {
        auto f = smallest_face_containing(q, sigma);
        auto c = divisor_component_count(sigma, p, q);
        if (f.dim == q.dim - 1)
            CHECK_FALSE(c.has_value());
        else
            CHECK((c && *c >= 1));
    }
}
