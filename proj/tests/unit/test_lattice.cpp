#include "support.hpp"

#include "tyurin/error.hpp"
#include "tyurin/quad_lattice.hpp"

#include <doctest.h>

using namespace tyurin;

namespace {

std::multiset<std::pair<long, long>> lib_values(const DiscriminantData& d)
{
    std::multiset<std::pair<long, long>> out;
    for (const auto& q : d.form_values)
        out.insert({q.get_num().get_si(), q.get_den().get_si()});
    return out;
}

std::string error_name(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.name();
    }
    return "none";
}

} // namespace

TEST_CASE("discriminant forms agree with brute-force dual lattice enumeration")
{
    for (const char* spec : {"<-4>", "<2>", "A1(-1)", "A2", "A2(-1)", "H+<-4>", "A1+A1(-1)"}) {
        CAPTURE(spec);
        auto l = standard_lattice(spec);
        auto d = discriminant(l);
        auto o = oracle::discriminant(support::gram(l));
        Integer order = 1;
        for (const auto& g : d.group)
            order *= g;
        CHECK(order == static_cast<long>(o.order));
        CHECK(lib_values(d) == o.values);
    }
    std::vector<std::vector<long>> g{{0, 2, 2}, {2, 0, 2}, {2, 2, 0}};
    auto l = make_lattice(support::int_matrix({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}));
    CHECK(lib_values(discriminant(l)) == oracle::discriminant(g).values);
}

TEST_CASE("signatures and determinants")
{
    auto e8 = standard_lattice("E8(-1)");
    CHECK(signature(e8).positive == 0);
    CHECK(signature(e8).negative == 8);
    CHECK(determinant(e8) == 1);
    auto k3 = standard_lattice("K3");
    CHECK(k3.rank() == 22);
    CHECK(signature(k3).positive == 3);
    CHECK(signature(k3).negative == 19);
    CHECK(determinant(k3) == -1);
}

TEST_CASE("isotropic search agrees with brute force")
{
    for (auto g : std::vector<std::vector<std::vector<long>>>{
             {{2, 1}, {1, 2}}, {{0, 1}, {1, 0}}, {{2, 0}, {0, -8}}, {{2, 1, 0}, {1, -2, 0}, {0, 0, -4}}}) {
        auto l = make_lattice(support::int_matrix(g));
        auto r = find_isotropic(l, 3);
        CHECK(r.vector.has_value() == oracle::has_isotropic(g, 3));
        if (r.vector)
            CHECK(norm(l, *r.vector) == 0);
    }
    auto a2 = find_isotropic(make_lattice(support::int_matrix({{2, 1}, {1, 2}})), 3);
    CHECK_FALSE(a2.vector.has_value());
    CHECK(a2.conclusive);
    auto h4 = find_isotropic(standard_lattice("H+<-4>"), 3);
    REQUIRE(h4.vector);
    CHECK(*h4.vector == LatticeVector{0, 1, 0});
}

TEST_CASE("Dolgachev-Nikulin mirrors")
{
    struct Case {
        const char* l;
        const char* expected;
    };
    for (auto c : {Case{"H", "H+E8(-1)+E8(-1)"}, Case{"<2>", "H+E8(-1)+E8(-1)+A1(-1)"},
                   Case{"<4>", "H+E8(-1)+E8(-1)+<-4>"}, Case{"M", "H"}, Case{"M2_deg2", "<2>"}}) {
        CAPTURE(c.l);
        auto e = k3_embedding(c.l);
        auto m = dn_mirror(e, default_isotropic_vector());
        CHECK(m.rank() == 20 - e.image_basis.size());
        CHECK(invariants_match(m, standard_lattice(c.expected)).match);
    }
}

TEST_CASE("orthogonal complements")
{
    auto c = orthogonal_complement(k3_embedding("<2>"));
    CHECK(c.image_basis.size() == 21);
    CHECK(is_primitive(k3_embedding("H")));
    CHECK_THROWS_WITH_AS(make_embedding(standard_lattice("K3"), {LatticeVector(22, 0)}),
                         doctest::Contains("NotIndependent"), Error);
}

TEST_CASE("lattice errors")
{
    CHECK(error_name([] { make_lattice(support::int_matrix({{1, 0}, {0, 2}})); }) == "OddDiagonal");
    CHECK(error_name([] { make_lattice(support::int_matrix({{2, 1}, {0, 2}})); }) == "NotSymmetric");
    CHECK(error_name([] { standard_lattice("E9"); }) == "UnknownLattice");
    CHECK(error_name([] { find_isotropic(standard_lattice("H"), 0); }) == "InvalidBound");
    CHECK(error_name([] { find_isotropic(standard_lattice("K3"), 3); }) == "SearchTooLarge");
    CHECK(error_name([] {
              auto k3 = standard_lattice("K3");
              LatticeVector v(22, 0);
              v[0] = 2;
              orthogonal_complement(make_embedding(k3, {v}));
          }) == "NotPrimitive");
    CHECK(error_name([] {
              LatticeVector f(22, 0);
              f[0] = 1;
              dn_mirror(k3_embedding("H"), f);
          }) == "NotInComplement");
}
