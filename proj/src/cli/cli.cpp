#include "tyurin/cli.hpp"

#include "tyurin/error.hpp"
#include "tyurin/json_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#ifndef TYURIN_FIXTURE_DIR
#define TYURIN_FIXTURE_DIR "fixtures"
#endif

namespace tyurin::cli {

namespace {

using io::Json;

// ---------------------------------------------------------------- inputs

enum class Kind { json, integer, int_list, string, merge };

struct Flag {
    const char* name; // without leading dashes
    const char* key;  // field of the input object
    Kind kind;
    const char* help;
};

std::string read_file(const std::string& path, const std::string& what)
{
    std::ifstream in(path);
    if (!in)
        throw Error("InvalidInput", "field '" + what + "': cannot read file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline JSON, a path to a JSON file, or a bare string.
Json json_argument(const std::string& value, const std::string& what)
{
    if (!value.empty() && (value.front() == '{' || value.front() == '[' || value.front() == '"'))
        return io::parse(value, what);
    std::error_code ec;
    if (std::filesystem::is_regular_file(value, ec))
        return io::parse(read_file(value, what), what);
    return Json(value);
}

Json int_argument(const std::string& value, const std::string& what)
{
    Integer x;
    if (value.empty() || x.set_str(value, 10) != 0)
        throw Error("InvalidInput", "field '" + what + "': expected an integer, got '" + value + "'");
    return io::to_json(x);
}

Json int_list_argument(const std::string& value, const std::string& what)
{
    if (!value.empty() && value.front() == '[')
        return io::parse(value, what);
    Json out = Json::array();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(int_argument(item, what));
    return out;
}

struct Context {
    Json input = Json::object();

    bool has(const char* key) const { return input.contains(key) && !input.at(key).is_null(); }

    const Json& need(const char* key) const
    {
        if (!has(key))
            throw Error("InvalidInput", std::string("field '") + key + "': missing");
        return input.at(key);
    }

    long integer(const char* key) const { return io::long_from(need(key), key); }

    long integer_or(const char* key, long fallback) const { return has(key) ? integer(key) : fallback; }

    std::optional<long> optional(const char* key) const
    {
        return has(key) ? std::optional<long>(integer(key)) : std::nullopt;
    }
};

struct Outcome {
    Json payload = Json::object();
    Verdict verdict; // empty verdict means PASS
    std::optional<Status> forced;

    Status status() const { return forced ? *forced : verdict.status(); }
};

// ---------------------------------------------------------------- helpers

std::vector<long> long_list(const Json& j, const std::string& field)
{
    if (!j.is_array())
        throw Error("InvalidInput", "field '" + field + "': expected an array of integers");
    std::vector<long> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(io::long_from(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<long> pair_from_string(const std::string& s, const std::string& field)
{
    return long_list(int_list_argument(s, field), field);
}

// Calabi-Yau threefold diamond from "h11,h21" / [h11,h21], or a full diamond.
HodgeDiamond cy_diamond_from(const Json& j, const std::string& field)
{
    if (j.is_string() || j.is_array()) {
        auto v = j.is_string() ? pair_from_string(j.get<std::string>(), field) : long_list(j, field);
        if (v.size() != 2)
            throw Error("InvalidInput", "field '" + field + "': expected h11,h21");
        return cy3_diamond(v[0], v[1]);
    }
    return io::diamond_from(j, field);
}

// Quasi-Fano threefold diamond from "h2,h21" / [h2,h21], or a full diamond.
HodgeDiamond fano_diamond_from(const Json& j, const std::string& field)
{
    if (j.is_string() || j.is_array()) {
        auto v = j.is_string() ? pair_from_string(j.get<std::string>(), field) : long_list(j, field);
        if (v.size() != 2)
            throw Error("InvalidInput", "field '" + field + "': expected h2,h21");
        return fano3_diamond(v[0], v[1]);
    }
    return io::diamond_from(j, field);
}

LatticePolytope polytope_of(const Context& c) { return io::polytope_from(c.need("polytope"), "polytope"); }

Json signature_json(const QuadLattice& l)
{
    if (determinant(l) == 0)
        return nullptr;
    auto s = signature(l);
    return Json::array({s.positive, s.negative});
}

Json invariants_json(const QuadLattice& l)
{
    Json out{{"rank", l.rank()}, {"det", io::to_json(determinant(l))}, {"signature", signature_json(l)}};
    if (determinant(l) != 0) {
        auto d = discriminant(l);
        Json group = Json::array(), values = Json::array();
        for (const auto& g : d.group)
            group.push_back(io::to_json(g));
        for (const auto& q : d.form_values)
            values.push_back(io::to_json(q));
        out["discriminant"] = {{"group", group}, {"form_values", values}};
    }
    return out;
}

Json face_json(const Face& f) { return Json{{"dim", f.dim}, {"vertices", f.vertex_indices}}; }

NefPartition partition_of(const LatticePolytope& delta, const Json& j, const std::string& field)
{
    if (j.is_string() && j.get<std::string>() == "trivial")
        return trivial_partition(delta);
    auto parts = io::parts_from(j, field);
    if (parts.size() == 1) {
        NefPartition trivial = trivial_partition(delta);
        std::sort(parts[0].begin(), parts[0].end());
        if (parts[0] != trivial.parts[0])
            throw Error("NotAPartition", "a one-part partition must contain every boundary lattice point");
        return trivial;
    }
    return validate_nef_partition(delta, parts);
}

long rho_from(const Json& j, const std::string& field)
{
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0)
            return fibre_components(parse_fibre_type(j.get<std::string>()));
    }
    return io::long_from(j, field);
}

// ---------------------------------------------------------------- polytope

Outcome polytope_dual(const Context& c)
{
    auto p = polytope_of(c);
    Outcome o;
    o.payload = {{"polytope", io::to_json(p)}, {"dual", io::to_json(polar_dual(p))}, {"reflexive", is_reflexive(p)}};
    return o;
}

Outcome polytope_reflexive(const Context& c)
{
    auto p = polytope_of(c);
    Outcome o;
    const bool r = is_reflexive(p);
    o.payload = {{"polytope", io::to_json(p)}, {"reflexive", r}};
    std::string detail;
    for (const auto& f : p.facets)
        if (f.offset != 1)
            detail = "facet " + to_string(f.normal) + " has offset " + f.offset.get_str();
    o.verdict.add("reflexive", r, detail);
    o.payload["checks"] = io::to_json(o.verdict);
    return o;
}

Outcome polytope_points(const Context& c)
{
    auto p = polytope_of(c);
    const std::string region = c.has("region") ? c.need("region").get<std::string>() : "all";
    Region r = Region::all;
    if (region == "boundary")
        r = Region::boundary;
    else if (region == "interior")
        r = Region::interior;
    else if (region != "all")
        throw Error("InvalidInput", "field 'region': expected all, boundary or interior");
    const auto pts = lattice_points(p, r);
    const std::size_t all = count_points(p), bd = count_points(p, Region::boundary),
                      in = count_points(p, Region::interior);
    Outcome o;
    o.verdict.add("l_equals_boundary_plus_interior", all == bd + in,
                  std::to_string(all) + " = " + std::to_string(bd) + " + " + std::to_string(in));
    o.payload = {{"region", region},
                 {"count", pts.size()},
                 {"points", io::to_json(pts)},
                 {"counts", {{"all", all}, {"boundary", bd}, {"interior", in}}},
                 {"checks", io::to_json(o.verdict)}};
    return o;
}

Outcome polytope_faces(const Context& c)
{
    auto p = polytope_of(c);
    const auto faces = face_lattice(p);
    std::vector<std::size_t> fvec(p.dim + 2, 0);
    Json list = Json::array();
    const bool reflexive = is_reflexive(p);
    std::optional<LatticePolytope> polar;
    if (reflexive)
        polar = polar_dual(p);
    bool graded_ok = true;
    std::string witness;
    for (const auto& f : faces) {
        ++fvec[f.dim + 1];
        Json item = face_json(f);
        item["interior_points"] = face_interior_points(p, f).size();
        if (reflexive) {
            Face g = dual_face(p, *polar, f);
            item["dual"] = face_json(g);
            if (f.dim >= 0 && f.dim < p.dim && f.dim + g.dim != p.dim - 1) {
                graded_ok = false;
                witness = "face of dim " + std::to_string(f.dim) + " has dual of dim " + std::to_string(g.dim);
            }
        }
        list.push_back(std::move(item));
    }
    long euler = 0;
    for (int d = 0; d < p.dim; ++d)
        euler += (d % 2 == 0 ? 1 : -1) * static_cast<long>(fvec[d + 1]);
    const long expected = p.dim % 2 == 0 ? 0 : 2;
    Outcome o;
    o.verdict.add("euler_relation", euler == expected,
                  "alternating face count " + std::to_string(euler) + ", expected " + std::to_string(expected));
    if (reflexive)
        o.verdict.add("dual_face_dimensions", graded_ok, witness);
    o.payload = {{"f_vector", fvec}, {"faces", list}, {"reflexive", reflexive}, {"checks", io::to_json(o.verdict)}};
    return o;
}

// ---------------------------------------------------------------- nef

Outcome nef_verify(const Context& c)
{
    auto delta = polytope_of(c);
    auto parts = io::parts_from(c.need("parts"), "parts");
    Outcome o;
    try {
        auto np = validate_nef_partition(delta, parts);
        Json ps = Json::array();
        for (const auto& part : np.parts)
            ps.push_back(io::to_json(part));
        o.verdict.add("nef_partition", true);
        o.payload = {{"valid", true}, {"k", np.k()}, {"parts", ps}};
    } catch (const Error& e) {
        static const std::set<std::string> verdicts{"NotAPartition", "NotCartier", "NotNef", "DualNotReflexive",
                                                    "NotReflexive"};
        if (!verdicts.count(e.name()))
            throw;
        o.verdict.add(e.name(), false, e.detail());
        o.payload = {{"valid", false}};
    }
    o.payload["checks"] = io::to_json(o.verdict);
    return o;
}

Outcome nef_dual(const Context& c)
{
    auto delta = polytope_of(c);
    auto np = validate_nef_partition(delta, io::parts_from(c.need("parts"), "parts"));
    auto du = dual_nef_partition(np);
    Json nablas = Json::array(), counts = Json::array();
    for (const auto& n : du.nablas) {
        nablas.push_back(io::to_json(n));
        counts.push_back(count_points(n));
    }
    Outcome o;
    o.payload = {{"nablas", nablas},
                 {"nabla", io::to_json(du.nabla)},
                 {"lattice_points", {{"nabla_i", counts}, {"nabla", count_points(du.nabla)}}},
                 {"nabla_reflexive", is_reflexive(du.nabla)}};
    if (np.k() == 2)
        o.payload["complement_count"] = complement_count(du, polar_dual(delta));
    return o;
}

Outcome nef_counts(const Context& c)
{
    auto delta = polytope_of(c);
    auto np = validate_nef_partition(delta, io::parts_from(c.need("parts"), "parts"));
    auto du = dual_nef_partition(np);
    const auto delta_dual = polar_dual(delta);
    const int d = static_cast<int>(c.integer_or("dim", static_cast<long>(delta.rank) - 1));

    Outcome o;
    const std::size_t cc = complement_count(du, delta_dual);
    o.payload["complement_count"] = cc;
    try {
        o.payload["curve_invariant"] = curve_invariant(du, delta_dual, d);
    } catch (const Error& e) {
        if (e.name() != "DegenerateConfiguration")
            throw;
        o.payload["curve_invariant"] = nullptr;
        o.payload["curve_note"] = e.what();
    }
    o.payload["dim"] = d;

    const std::size_t l_dual = count_points(delta_dual), l_nabla = count_points(du.nabla);
    Json li = Json::array();
    std::size_t sum = 0;
    for (std::size_t i = 0; i < du.nablas.size(); ++i) {
        const std::size_t l = count_points(du.nablas[i]);
        const std::size_t lhs = count_points(minkowski_sum(du.nablas[i], delta_dual), Region::interior);
        sum += l;
        li.push_back(l);
        o.verdict.add("interior_nabla_" + std::to_string(i + 1),
                      lhs == l, "l*(nabla_i + polar) = " + std::to_string(lhs) + ", l(nabla_i) = " + std::to_string(l));
    }
    const std::size_t l2 = count_points(dilate(delta_dual, 2), Region::interior);
    o.verdict.add("interior_2polar", l2 == l_dual,
                  "l*(2 polar) = " + std::to_string(l2) + ", l(polar) = " + std::to_string(l_dual));
    o.verdict.add("nabla_count_identity", l_nabla + 1 == sum,
                  "l(nabla) = " + std::to_string(l_nabla) + ", sum l(nabla_i) - 1 = " + std::to_string(sum - 1));
    o.payload["lattice_points"] = {{"polar", l_dual}, {"nabla", l_nabla}, {"nabla_i", li}};
    o.payload["checks"] = io::to_json(o.verdict);
    return o;
}

Outcome nef_hodge(const Context& c)
{
    auto delta = polytope_of(c);
    auto h = batyrev_hodge(delta);
    auto hd = batyrev_hodge(polar_dual(delta));
    Outcome o;
    o.verdict.add("mirror_swap", h.h11 == hd.h_dual && h.h_dual == hd.h11,
                  "(" + h.h11.get_str() + "," + h.h_dual.get_str() + ") vs dual (" + hd.h11.get_str() + "," +
                      hd.h_dual.get_str() + ")");
    o.payload = {{"h11", io::to_json(h.h11)},
                 {"h_dual", io::to_json(h.h_dual)},
                 {"polar", {{"h11", io::to_json(hd.h11)}, {"h_dual", io::to_json(hd.h_dual)}}},
                 {"checks", io::to_json(o.verdict)}};
    return o;
}

Outcome nef_refine(const Context& c)
{
    auto delta = polytope_of(c);
    auto coarse = partition_of(delta, c.need("coarse"), "coarse");
    auto fine = partition_of(delta, c.need("fine"), "fine");
    const bool r = check_refinement(coarse, fine);
    Outcome o;
    o.verdict.add("refinement", r,
                  "coarse has " + std::to_string(coarse.k()) + " parts, fine has " + std::to_string(fine.k()));
    o.payload = {{"refines", r}, {"checks", io::to_json(o.verdict)}};
    return o;
}

// ---------------------------------------------------------------- lattice

QuadLattice lattice_of(const Context& c, const char* key) { return io::lattice_from(c.need(key), key); }

Outcome lattice_sum(const Context& c)
{
    std::vector<QuadLattice> parts;
    const Json& j = c.need("lattices");
    if (!j.is_array())
        throw Error("InvalidInput", "field 'lattices': expected an array of lattices");
    for (std::size_t i = 0; i < j.size(); ++i)
        parts.push_back(io::lattice_from(j[i], "lattices[" + std::to_string(i) + "]"));
    auto sum = direct_sum(parts);
    Outcome o;
    o.payload = {{"lattice", io::to_json(sum)}, {"invariants", invariants_json(sum)}};
    return o;
}

Outcome lattice_invariants(const Context& c)
{
    auto l = lattice_of(c, "lattice");
    Outcome o;
    o.payload = {{"lattice", io::to_json(l)}, {"invariants", invariants_json(l)}};
    return o;
}

Outcome lattice_complement(const Context& c)
{
    auto e = io::embedding_from(c.need("embedding"), "embedding");
    auto comp = orthogonal_complement(e);
    auto l = comp.sublattice();
    Outcome o;
    o.payload = {{"sublattice", io::to_json(e.sublattice())},
                 {"complement_basis", io::to_json(comp.image_basis)},
                 {"complement", io::to_json(l)},
                 {"invariants", invariants_json(l)}};
    if (c.has("expect")) {
        auto m = invariants_match(l, lattice_of(c, "expect"));
        o.verdict.add("expected_match", m.match, m.witness);
        o.payload["checks"] = io::to_json(o.verdict);
    }
    return o;
}

Outcome lattice_mirror(const Context& c)
{
    auto e = io::embedding_from(c.need("embedding"), "embedding");
    LatticeVector f = c.has("f") ? io::vector_from(c.need("f"), "f") : default_isotropic_vector();
    auto m = dn_mirror(e, f);
    Outcome o;
    const std::size_t expected_rank = 20 - e.image_basis.size();
    o.verdict.add("rank_law", m.rank() == expected_rank,
                  "rank " + std::to_string(m.rank()) + ", 20 - rank(L) = " + std::to_string(expected_rank));
    if (c.has("expect")) {
        auto r = invariants_match(m, lattice_of(c, "expect"));
        o.verdict.add("expected_match", r.match, r.witness);
    }
    if (c.has("round_trip")) {
        // re-embed the mirror by a canonical name and take the mirror again
        const Json& rt = c.need("round_trip");
        auto e2 = io::embedding_from(rt.at("embedding"), "round_trip.embedding");
        auto back = dn_mirror(e2, rt.contains("f") ? io::vector_from(rt.at("f"), "round_trip.f")
                                                   : default_isotropic_vector());
        auto same_as_mirror = invariants_match(e2.sublattice(), m);
        auto same_as_l = invariants_match(back, e.sublattice());
        o.verdict.add("round_trip_embedding", same_as_mirror.match, same_as_mirror.witness);
        o.verdict.add("round_trip", same_as_l.match, same_as_l.witness);
    }
    o.payload = {{"mirror", io::to_json(m)}, {"invariants", invariants_json(m)}, {"f", io::to_json(f)},
                 {"checks", io::to_json(o.verdict)}};
    return o;
}

Outcome lattice_isotropic(const Context& c)
{
    auto l = lattice_of(c, "lattice");
    auto r = find_isotropic(l, c.integer_or("bound", 3));
    Outcome o;
    o.payload = {{"exists", r.vector.has_value()},
                 {"conclusive", r.conclusive},
                 {"vector", r.vector ? io::to_json(*r.vector) : Json(nullptr)}};
    if (!r.conclusive) {
        o.verdict.add({"search", Status::inconclusive, "no isotropic vector within the bound"});
        o.payload["checks"] = io::to_json(o.verdict);
    }
    return o;
}

Outcome lattice_match(const Context& c)
{
    auto r = invariants_match(lattice_of(c, "lattice"), lattice_of(c, "other"));
    Outcome o;
    o.verdict.add("invariants_match", r.match, r.witness);
    o.payload = {{"match", r.match}, {"witness", r.witness}, {"checks", io::to_json(o.verdict)}};
    return o;
}

// ---------------------------------------------------------------- hodge

Outcome hodge_euler(const Context& c)
{
    Outcome o;
    long chi = 0;
    if (c.has("diamond")) {
        chi = euler_char(io::diamond_from(c.need("diamond"), "diamond"));
    } else {
        chi = c.integer("chi");
    }
    o.payload["chi"] = chi;
    if (c.has("genus"))
        o.payload["chi_blown_up"] = euler_blowup_curve(chi, c.integer("genus"));
    return o;
}

Outcome hodge_mirror(const Context& c)
{
    auto v = cy_diamond_from(c.need("V"), "V");
    auto w = cy_diamond_from(c.need("W"), "W");
    Outcome o;
    o.verdict = mirror_dual_check(v, w);
    o.payload = {{"chi_V", euler_char(v)}, {"chi_W", euler_char(w)}, {"checks", io::to_json(o.verdict)}};
    return o;
}

TyurinData tyurin_of(const Context& c)
{
    HodgeDiamond z = c.has("Z") ? io::diamond_from(c.need("Z"), "Z") : k3_diamond();
    return make_tyurin_data(fano_diamond_from(c.need("X1"), "X1"), fano_diamond_from(c.need("X2"), "X2"), z,
                            c.integer("k"));
}

Outcome hodge_lee(const Context& c)
{
    auto t = tyurin_of(c);
    auto r = lee_smoothing(t);
    Outcome o;
    o.payload = {{"h11", r.h11}, {"h21", r.h21}, {"warning", r.warning ? Json(*r.warning) : Json(nullptr)}};
    if (c.has("expect")) {
        auto e = long_list(c.need("expect"), "expect");
        o.verdict.add("expected", e.size() == 2 && e[0] == r.h11 && e[1] == r.h21);
        o.payload["checks"] = io::to_json(o.verdict);
    }
    return o;
}

Outcome hodge_glue(const Context& c)
{
    const long x1 = c.integer("chi_X1"), x2 = c.integer("chi_X2"), z = c.integer("chi_Z");
    Outcome o;
    o.verdict = glue_euler_check(x1, x2, z, c.integer("chi_W"), static_cast<int>(c.integer_or("dim", 3)),
                                 c.optional("chi_V"));
    o.payload = {{"chi_V", glued_euler(x1, x2, z)}, {"checks", io::to_json(o.verdict)}};
    return o;
}

Outcome hodge_lg_ranks(const Context& c)
{
    Outcome o;
    if (c.has("diamond"))
        o.payload["ranks"] = lg_relative_ranks(io::diamond_from(c.need("diamond"), "diamond"));
    if (c.has("X1") && c.has("X2")) {
        const auto r1 = lg_relative_ranks(fano_diamond_from(c.need("X1"), "X1"));
        const auto r2 = lg_relative_ranks(fano_diamond_from(c.need("X2"), "X2"));
        o.payload["ranks_X1"] = r1;
        o.payload["ranks_X2"] = r2;
        if (c.has("ell"))
            o.payload["h2_W"] = h2w_formula(r1.at(2), r2.at(2), c.integer("ell"));
    }
    if (c.has("ell") && c.has("k")) {
        o.verdict.add(ell_plus_k_check(c.integer("ell"), c.integer("k")));
        o.payload["checks"] = io::to_json(o.verdict);
    }
    if (o.payload.empty())
        throw Error("InvalidInput", "field 'diamond': missing");
    return o;
}

Outcome hodge_picard(const Context& c)
{
    auto f = io::fibration_from(c.need("fibration"), "fibration");
    Outcome o;
    const long p = picard_from_fibration(f);
    o.payload = {{"picard", p}, {"k3_elliptic", picard_k3_elliptic(f)}, {"excess", f.excess()},
                 {"fibration", io::to_json(f)}};
    if (c.has("expect")) {
        const long e = c.integer("expect");
        o.verdict.add("expected", p == e, "computed " + std::to_string(p) + ", expected " + std::to_string(e));
    }
    if (c.has("k"))
        o.verdict.add(ell_plus_k_check(f.ell, c.integer("k")));
    if (!o.verdict.checks.empty())
        o.payload["checks"] = io::to_json(o.verdict);
    return o;
}

Outcome hodge_slice(const Context& c)
{
    const Json& fj = c.need("fibration");
    auto f = io::fibration_from(fj, "fibration");
    const Json& sj = c.has("slices") ? c.need("slices") : (fj.contains("slices") ? fj.at("slices") : c.need("slices"));
    SlicedFibration s{f, io::slices_from(sj, "slices")};
    auto d = io::degeneration_from(c.need("degeneration"), "degeneration");
    Outcome o;
    o.verdict = slicing_check(s, d);
    o.payload = {{"checks", io::to_json(o.verdict)}};
    return o;
}

Outcome hodge_lmhs(const Context& c)
{
    auto uv = long_list(c.need("uv"), "uv");
    if (uv.size() != 2)
        throw Error("InvalidInput", "field 'uv': expected u,v");
    Outcome o;
    const auto tv = lmhs_table(uv[0], uv[1]);
    o.payload["table"] = io::to_json(tv);
    if (c.has("uv_w")) {
        auto w = long_list(c.need("uv_w"), "uv_w");
        if (w.size() != 2)
            throw Error("InvalidInput", "field 'uv_w': expected u,v");
        const auto tw = lmhs_table(w[0], w[1]);
        o.payload["table_W"] = io::to_json(tw);
        o.verdict.add(lmhs_mirror_match(tv, tw));
        o.payload["checks"] = io::to_json(o.verdict);
    }
    return o;
}

Outcome hodge_conj318(const Context& c)
{
    Json rho = c.need("rho");
    if (rho.is_string()) {
        // comma-separated counts or fibre tags
        std::stringstream ss(rho.get<std::string>());
        rho = Json::array();
        for (std::string item; std::getline(ss, item, ',');)
            rho.push_back(item);
    }
    if (!rho.is_array() || rho.size() != 3)
        throw Error("InvalidInput", "field 'rho': expected [rho_[1:0], rho_[1:1], rho_[0:1]]");
    FibreCounts counts{rho_from(rho[0], "rho[0]"), rho_from(rho[1], "rho[1]"), rho_from(rho[2], "rho[2]")};
    Outcome o;
    o.verdict = conjecture318_report(counts, c.optional("h11_X1"), c.optional("h11_X2"), c.optional("h11_ambient"),
                                     c.optional("points"));
    o.payload = {{"rho", {counts.rho_10, counts.rho_11, counts.rho_01}}, {"checks", io::to_json(o.verdict)}};
    return o;
}

// ---------------------------------------------------------------- family

Outcome family_quartic(const Context& c)
{
    std::vector<int> mu;
    for (long x : long_list(c.need("mu"), "mu"))
        mu.push_back(static_cast<int>(x));
    auto p = make_family_params(static_cast<int>(c.integer("i")), static_cast<int>(c.integer("j")), mu);
    auto r = family_consistency_report(p);
    Outcome o;
    o.verdict = r.verdict;
    o.payload = io::to_json(r);
    return o;
}

Outcome family_sweep(const Context&)
{
    Outcome o;
    Json reports = Json::array();
    std::size_t passed = 0;
    const auto all = all_family_params();
    for (const auto& p : all) {
        auto r = family_consistency_report(p);
        if (r.verdict.passed())
            ++passed;
        std::string label = "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ",[";
        for (std::size_t s = 0; s < p.mu.size(); ++s)
            label += (s ? "," : "") + std::to_string(p.mu[s]);
        label += "])";
        o.verdict.add(label, r.verdict.passed());
        reports.push_back(io::to_json(r));
    }
    o.payload = {{"count", all.size()}, {"passed", passed}, {"reports", reports}};
    return o;
}

// ---------------------------------------------------------------- table

struct Command {
    const char* group;
    const char* name;
    const char* help;
    std::function<Outcome(const Context&)> handler;
    std::vector<Flag> flags;
};

const Flag kPolytope{"polytope", "polytope", Kind::json, "polytope JSON (file or inline)"};
const Flag kPartition{"partition", "", Kind::merge, "partition JSON {polytope, parts} (file or inline)"};
const Flag kParts{"parts", "parts", Kind::json, "parts as an array of vector arrays"};
const Flag kLattice{"lattice", "lattice", Kind::json, "lattice name, Gram matrix or lattice JSON"};
const Flag kGram{"gram", "lattice", Kind::json, "Gram matrix"};
const Flag kEmbedding{"embedding", "embedding", Kind::json, "K3 embedding name or embedding JSON"};
const Flag kExpect{"expect", "expect", Kind::json, "expected value for comparison"};

std::vector<Command> commands()
{
    return {
        {"polytope", "dual", "polar dual polytope", polytope_dual, {kPolytope}},
        {"polytope", "reflexive", "reflexivity check", polytope_reflexive, {kPolytope}},
        {"polytope", "points", "lattice points", polytope_points,
         {kPolytope, {"region", "region", Kind::string, "all, boundary or interior"}}},
        {"polytope", "faces", "face lattice", polytope_faces, {kPolytope}},
        {"nef", "verify", "validate a nef partition", nef_verify, {kPartition, kPolytope, kParts}},
        {"nef", "dual", "dual nef partition", nef_dual, {kPartition, kPolytope, kParts}},
        {"nef", "counts", "fibre and genus counts", nef_counts,
         {kPartition, kPolytope, kParts, {"dim", "dim", Kind::integer, "dimension of V"}}},
        {"nef", "hodge", "Batyrev Hodge numbers", nef_hodge, {kPolytope}},
        {"nef", "refine", "refinement check", nef_refine,
         {kPolytope, {"coarse", "coarse", Kind::json, "coarse parts or 'trivial'"},
          {"fine", "fine", Kind::json, "fine parts"}}},
        {"lattice", "sum", "direct sum", lattice_sum,
         {{"lattices", "lattices", Kind::json, "array of lattices"}}},
        {"lattice", "invariants", "rank, signature, discriminant", lattice_invariants, {kLattice, kGram}},
        {"lattice", "complement", "orthogonal complement", lattice_complement, {kEmbedding, kExpect}},
        {"lattice", "mirror", "Dolgachev-Nikulin mirror lattice", lattice_mirror,
         {kEmbedding, {"f", "f", Kind::int_list, "isotropic vector f"}, kExpect,
          {"round-trip", "round_trip", Kind::json, "{embedding, f?} re-embedding the mirror"}}},
        {"lattice", "isotropic", "isotropic vector search", lattice_isotropic,
         {kLattice, kGram, {"bound", "bound", Kind::integer, "max-norm search bound"}}},
        {"lattice", "match", "compare invariants", lattice_match,
         {kLattice, kGram, {"other", "other", Kind::json, "second lattice"}}},
        {"hodge", "euler", "Euler number", hodge_euler,
         {{"diamond", "diamond", Kind::json, "Hodge diamond JSON"}, {"chi", "chi", Kind::integer, "Euler number"},
          {"genus", "genus", Kind::integer, "blow up along a curve of this genus"}}},
        {"hodge", "mirror", "mirror Hodge check", hodge_mirror,
         {{"v", "V", Kind::json, "diamond or h11,h21"}, {"w", "W", Kind::json, "diamond or h11,h21"}}},
        {"hodge", "lee", "Hodge numbers of the smoothing", hodge_lee,
         {{"x1", "X1", Kind::json, "diamond or h2,h21"}, {"x2", "X2", Kind::json, "diamond or h2,h21"},
          {"z", "Z", Kind::json, "diamond of Z (default K3)"}, {"k", "k", Kind::integer, "rank k"},
          {"expect", "expect", Kind::int_list, "expected h11,h21"}}},
        {"hodge", "glue", "Euler gluing check", hodge_glue,
         {{"chi-x1", "chi_X1", Kind::integer, ""}, {"chi-x2", "chi_X2", Kind::integer, ""},
          {"chi-z", "chi_Z", Kind::integer, ""}, {"chi-w", "chi_W", Kind::integer, ""},
          {"chi-v", "chi_V", Kind::integer, ""}, {"dim", "dim", Kind::integer, ""}}},
        {"hodge", "lg-ranks", "relative cohomology ranks of LG models", hodge_lg_ranks,
         {{"diamond", "diamond", Kind::json, "Hodge diamond JSON"}, {"x1", "X1", Kind::json, "diamond or h2,h21"},
          {"x2", "X2", Kind::json, "diamond or h2,h21"}, {"ell", "ell", Kind::integer, ""},
          {"k", "k", Kind::integer, ""}}},
        {"hodge", "picard", "Picard count from fibres", hodge_picard,
         {{"fibration", "fibration", Kind::json, "fibration JSON"}, {"expect", "expect", Kind::integer, ""},
          {"k", "k", Kind::integer, "check ell + k = 20"}}},
        {"hodge", "slice", "slicing and moduli check", hodge_slice,
         {{"fibration", "fibration", Kind::json, "fibration JSON"},
          {"slices", "slices", Kind::json, "slices as index arrays"},
          {"degeneration", "degeneration", Kind::json, "degeneration JSON"}}},
        {"hodge", "lmhs", "limit mixed Hodge structure table", hodge_lmhs,
         {{"uv", "uv", Kind::int_list, "u,v"}, {"uv-w", "uv_w", Kind::int_list, "u,v of the mirror side"}}},
        {"hodge", "conj318", "K3 fibre-count report", hodge_conj318,
         {{"rho", "rho", Kind::json, "[rho_[1:0], rho_[1:1], rho_[0:1]] as counts or fibre types"},
          {"h11-x1", "h11_X1", Kind::integer, ""}, {"h11-x2", "h11_X2", Kind::integer, ""},
          {"h11-ambient", "h11_ambient", Kind::integer, ""}, {"points", "points", Kind::integer, ""}}},
        {"family", "quartic", "quartic mirror family report", family_quartic,
         {{"i", "i", Kind::integer, ""}, {"j", "j", Kind::integer, ""}, {"mu", "mu", Kind::int_list, "partition"}}},
        {"family", "sweep", "all family parameters", family_sweep, {}},
    };
}

Json load_fixture(const std::string& name)
{
    if (name.empty() || name.find('/') != std::string::npos || name.find("..") != std::string::npos)
        throw Error("UnknownFixture", "invalid fixture name '" + name + "'");
    const std::string path = fixture_dir() + "/" + name + ".json";
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec))
        throw Error("UnknownFixture", "no fixture named '" + name + "'");
    Json j = io::parse(read_file(path, "fixture"), "fixture " + name);
    if (!j.is_object())
        throw Error("InvalidInput", "field 'fixture': fixture must be a JSON object");
    return j;
}

void merge(Json& into, const Json& from, const std::string& what)
{
    if (!from.is_object())
        throw Error("InvalidInput", "field '" + what + "': expected a JSON object");
    for (const auto& [k, v] : from.items())
        into[k] = v;
}

std::string pretty_text(const std::string& command, Status status, const Json& payload)
{
    std::string s = command + ": " + to_string(status) + "\n";
    if (payload.contains("checks"))
        for (const auto& chk : payload.at("checks")) {
            s += "  [" + chk.at("status").get<std::string>() + "] " + chk.at("name").get<std::string>();
            if (chk.contains("detail"))
                s += "  " + chk.at("detail").get<std::string>();
            s += "\n";
        }
    Json rest = payload;
    rest.erase("checks");
    s += rest.dump(2) + "\n";
    return s;
}

} // namespace

std::string fixture_dir() { return TYURIN_FIXTURE_DIR; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact invariants for Tyurin degenerations and their mirrors", kToolName};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    bool pretty = false;
    std::string out_path, fixture, input_path;
    std::map<std::string, std::string> raw; // flag name -> value
    const auto table = commands();
    std::map<std::string, CLI::App*> groups;
    std::vector<std::pair<const Command*, CLI::App*>> leaves;

    for (const auto& cmd : table) {
        auto& g = groups[cmd.group];
        if (!g) {
            g = app.add_subcommand(cmd.group, std::string(cmd.group) + " commands");
            g->require_subcommand(1);
        }
        CLI::App* leaf = g->add_subcommand(cmd.name, cmd.help);
        leaf->add_flag("--pretty", pretty, "human-readable output");
        leaf->add_option("--out", out_path, "write the report to this file");
        leaf->add_option("--fixture", fixture, "load inputs from a named fixture");
        leaf->add_option("--input", input_path, "load inputs from a JSON file");
        for (const auto& f : cmd.flags)
            leaf->add_option(std::string("--") + f.name, raw[f.name], f.help);
        leaves.emplace_back(&cmd, leaf);
    }

    std::vector<const char*> argv{kToolName};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        Json report{{"status", "ERROR"},
                    {"error", {{"name", "UsageError"}, {"message", e.what()}}},
                    {"provenance", {{"tool", kToolName}, {"version", kVersion}, {"command", nullptr}, {"inputs", args}}}};
        out << report.dump() << "\n";
        return 2;
    }

    const Command* cmd = nullptr;
    CLI::App* leaf = nullptr;
    for (auto& [c, l] : leaves)
        if (l->parsed()) {
            cmd = c;
            leaf = l;
        }
    const std::string command = std::string(cmd->group) + " " + cmd->name;

    Json report;
    Status status = Status::pass;
    Json inputs = Json::object();
    int code = 0;
    try {
        Context ctx;
        if (!fixture.empty())
            merge(ctx.input, load_fixture(fixture), "fixture");
        if (!input_path.empty())
            merge(ctx.input, io::parse(read_file(input_path, "input"), "input"), "input");
        for (const auto& f : cmd->flags) {
            if (leaf->count(std::string("--") + f.name) == 0)
                continue;
            const std::string& value = raw[f.name];
            switch (f.kind) {
            case Kind::json:
                ctx.input[f.key] = json_argument(value, f.key);
                break;
            case Kind::integer:
                ctx.input[f.key] = int_argument(value, f.key);
                break;
            case Kind::int_list:
                ctx.input[f.key] = int_list_argument(value, f.key);
                break;
            case Kind::string:
                ctx.input[f.key] = value;
                break;
            case Kind::merge:
                merge(ctx.input, json_argument(value, f.name), f.name);
                break;
            }
        }
        inputs = ctx.input;
        if (!fixture.empty())
            inputs["fixture"] = fixture;
        Outcome o = cmd->handler(ctx);
        status = o.status();
        report = Json{{"status", to_string(status)}, {"payload", std::move(o.payload)}};
        code = status == Status::pass ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        report = Json{{"status", "ERROR"}, {"error", {{"name", e.name()}, {"message", e.detail()}}}};
        code = 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: InvalidInput: " << e.what() << "\n";
        report = Json{{"status", "ERROR"}, {"error", {{"name", "InvalidInput"}, {"message", e.what()}}}};
        code = 2;
    }
    report["provenance"] = {{"tool", kToolName}, {"version", kVersion}, {"command", command}, {"inputs", inputs}};

    std::string text;
    if (pretty) {
        if (code == 2)
            text = command + ": ERROR " + report["error"]["name"].get<std::string>() + ": " +
                   report["error"]["message"].get<std::string>() + "\n";
        else
            text = pretty_text(command, status, report["payload"]);
    } else {
        text = report.dump() + "\n";
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            err << "error: InvalidInput: cannot write '" << out_path << "'\n";
            return 2;
        }
        f << text;
    } else {
        out << text;
    }
    return code;
}

} // namespace tyurin::cli
