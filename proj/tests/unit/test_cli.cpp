#include "support.hpp"

#include "tyurin/cli.hpp"

#include <doctest.h>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = tyurin::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

tyurin::io::Json json(const Result& r) { return tyurin::io::Json::parse(r.out); }

const std::string kDir = TYURIN_FIXTURE_DIR;

} // namespace

TEST_CASE("documented invocations")
{
    auto a = run({"nef", "counts", "--polytope", kDir + "/p1p1p1.json", "--partition", kDir + "/p1p1p1_part.json"});
    CHECK(a.code == 0);
    CHECK(json(a)["payload"]["complement_count"] == 12);

    auto b = run({"lattice", "isotropic", "--gram", "[[2,1],[1,2]]"});
    CHECK(b.code == 0);
    CHECK(json(b)["status"] == "PASS");
    CHECK(json(b)["payload"]["exists"] == false);
    CHECK(json(b)["payload"]["conclusive"] == true);

    auto c = run({"family", "quartic", "--i", "3", "--j", "1", "--mu", "2,2"});
    CHECK(c.code == 2);
    CHECK(json(c)["error"]["name"] == "InvalidIndex");
}

TEST_CASE("reports carry provenance and are byte-stable")
{
    auto a = run({"nef", "dual", "--fixture", "p1113"});
    auto b = run({"nef", "dual", "--fixture", "p1113"});
    CHECK(a.out == b.out);
    auto j = json(a);
    CHECK(j["provenance"]["tool"] == tyurin::cli::kToolName);
    CHECK(j["provenance"]["version"] == tyurin::cli::kVersion);
    CHECK(j["provenance"]["command"] == "nef dual");
    CHECK(j["provenance"]["inputs"]["fixture"] == "p1113");
}

TEST_CASE("FAIL reports name a failing check")
{
    for (std::vector<std::string> args : {std::vector<std::string>{"nef", "verify", "--fixture", "hexagon_not_nef"},
                                          {"hodge", "mirror", "--v", "1,101", "--w", "100,1"},
                                          {"polytope", "reflexive", "--fixture", "not_reflexive"}}) {
        auto r = run(args);
        CHECK(r.code == 1);
        auto j = json(r);
        CHECK(j["status"] == "FAIL");
        bool named = false;
        for (const auto& c : j["payload"]["checks"])
            named = named || c["status"] == "FAIL";
        CHECK(named);
    }
}

TEST_CASE("input errors exit 2 with a JSON report")
{
    auto bad = run({"polytope", "dual", "--polytope", "[[1,0],[0"});
    CHECK(bad.code == 2);
    CHECK(json(bad)["error"]["name"] == "InvalidInput");
    CHECK(bad.err.find("field 'polytope'") != std::string::npos);

    auto unknown = run({"polytope", "dual", "--fixture", "p1p1p1", "--nope", "1"});
    CHECK(unknown.code == 2);
    CHECK(json(unknown)["status"] == "ERROR");

    auto fixture = run({"polytope", "dual", "--fixture", "missing"});
    CHECK(json(fixture)["error"]["name"] == "UnknownFixture");

    auto engine = run({"lattice", "invariants", "--gram", "[[1,0],[0,2]]"});
    CHECK(engine.code == 2);
    CHECK(json(engine)["error"]["name"] == "OddDiagonal");

    auto nested = run({"hodge", "picard", "--fibration", R"({"ell": 1, "fibres": [{"type": 5}]})"});
    CHECK(json(nested)["error"]["message"].get<std::string>().find("fibration.fibres[0].type") != std::string::npos);
}

TEST_CASE("pretty output is text")
{
    auto r = run({"lattice", "isotropic", "--gram", "[[2,1],[1,2]]", "--pretty"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("lattice isotropic: PASS", 0) == 0);
}

TEST_CASE("inconclusive searches exit 1")
{
    auto r = run({"lattice", "isotropic", "--gram", "[[2,0],[0,-6]]", "--bound", "2"});
    CHECK(r.code == 1);
    CHECK(json(r)["status"] == "INCONCLUSIVE");
}

TEST_CASE("surface case reports the point count as the curve invariant")
{
    auto r = run({"nef", "counts", "--fixture", "p1p1p1"});
    CHECK(json(r)["payload"]["curve_invariant"] == 12);
}
