#include "support.hpp"

#include "tyurin/error.hpp"
#include "tyurin/fibres.hpp"
#include "tyurin/hodge.hpp"

#include <doctest.h>

using namespace tyurin;

TEST_CASE("Euler numbers of standard diamonds")
{
    CHECK(euler_char(k3_diamond()) == 24);
    CHECK(euler_char(elliptic_curve_diamond()) == 0);
    CHECK(euler_char(cy3_diamond(1, 101)) == -200);
    CHECK(euler_char(fano3_diamond(1, 0)) == 4);
}

TEST_CASE("mirror check")
{
    CHECK(mirror_dual_check(cy3_diamond(1, 101), cy3_diamond(101, 1)).passed());
    auto bad = mirror_dual_check(cy3_diamond(1, 101), cy3_diamond(100, 1));
    CHECK(bad.status() == Status::fail);
    CHECK_THROWS_AS(mirror_dual_check(k3_diamond(), cy3_diamond(1, 1)), Error);
}

TEST_CASE("Lee smoothing and gluing agree on a quartic-family member")
{
    auto t = make_tyurin_data(fano3_diamond(9, 24), fano3_diamond(1, 0), k3_diamond(), 1);
    auto r = lee_smoothing(t);
    CHECK(r.h11 == 8);
    CHECK(r.h21 == 44);
    CHECK_FALSE(r.warning.has_value());
    // blow P^3 up along eight genus-3 curves: 4 + 8 * (2 - 2*3)
    long chi = 4;
    for (int n = 0; n < 8; ++n)
        chi = euler_blowup_curve(chi, 3);
    CHECK(chi == -28);
    CHECK(glued_euler(chi, 4, 24) == 2 * (r.h11 - r.h21));
    CHECK(glue_euler_check(-28, 4, 24, 72, 3, -72).passed());
}

TEST_CASE("relative LG ranks and h2 of W")
{
    auto r = lg_relative_ranks(fano3_diamond(1, 0));
    CHECK(r == std::vector<long>{0, 0, 0, 4, 0, 0, 0});
    CHECK(h2w_formula(lg_relative_ranks(fano3_diamond(9, 24))[2], r[2], 19) == 44);
    CHECK(ell_plus_k_check(19, 1).status == Status::pass);
    CHECK(ell_plus_k_check(18, 1).status == Status::fail);
}

TEST_CASE("LMHS tables")
{
    auto t = lmhs_table(19, 24);
    CHECK(t[0] == std::array<long, 4>{1, 19, 1, 0});
    CHECK(t[1] == std::array<long, 4>{0, 24, 24, 0});
    CHECK(lmhs_mirror_match(t, lmhs_table(19, 24)).status == Status::pass);
    CHECK(lmhs_mirror_match(t, lmhs_table(18, 24)).status == Status::fail);
}

TEST_CASE("fibre catalog component counts")
{
    CHECK(fibre_components(parse_fibre_type("I12")) == 12);
    CHECK(fibre_components(parse_fibre_type("I0")) == 1);
    CHECK(fibre_components(parse_fibre_type("I12*")) == 17);
    CHECK(fibre_components(parse_fibre_type("II*")) == 9);
    CHECK(fibre_components(parse_fibre_type("III*")) == 8);
    CHECK(fibre_components(parse_fibre_type("IV*")) == 7);
    CHECK(fibre_components(parse_fibre_type("II")) == 1);
    CHECK(fibre_components(parse_fibre_type("III")) == 2);
    CHECK(fibre_components(parse_fibre_type("IV")) == 3);
    CHECK_THROWS_AS(parse_fibre_type("V"), Error);
}

TEST_CASE("slicing catalog passes")
{
    for (const char* name : {"slice_H_17_1", "slice_H_9_9", "slice_deg2_17_2", "slice_deg2_11_8", "slice_deg2_18",
                             "slice_deg2_9_2_9"}) {
        CAPTURE(name);
        auto j = support::fixture(name);
        SlicedFibration s{io::fibration_from(j["fibration"], "f"), io::slices_from(j["slices"], "s")};
        auto v = slicing_check(s, io::degeneration_from(j["degeneration"], "d"));
        CHECK(v.passed());
        CHECK(v.checks.back().name == "moduli");
    }
}

TEST_CASE("Picard counts")
{
    auto f = make_fibration({{parse_fibre_type("I18"), 1}, {parse_fibre_type("I1"), 6}}, 1);
    CHECK(picard_from_fibration(f) == 19);
    CHECK(picard_k3_elliptic(f) == 19);
    CHECK_THROWS_AS(make_fibration({}, 0), Error);
}

TEST_CASE("fibre-count report leaves unknowable clauses unverifiable")
{
    auto v = conjecture318_report({2, 2, 12}, 4, 4, 3, 12);
    CHECK(v.passed());
    CHECK(v.checks[3].status == Status::unverifiable);
    auto missing = conjecture318_report({2, 2, 12}, std::nullopt, std::nullopt, std::nullopt, std::nullopt);
    CHECK(missing.checks[0].status == Status::unverifiable);
    CHECK(conjecture318_report({2, 2, 11}, 4, 4, 3, 12).status() == Status::fail);
}
