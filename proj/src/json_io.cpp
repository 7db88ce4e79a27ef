#include "tyurin/json_io.hpp"

#include "tyurin/error.hpp"

namespace tyurin::io {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what)
{
    throw Error("InvalidInput", "field '" + field + "': " + what);
}

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const Json& member(const Json& j, const std::string& field, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        bad(field, std::string("missing key '") + key + "'");
    return j.at(key);
}

} // namespace

Json to_json(const Integer& x)
{
    if (x.fits_slong_p())
        return Json(x.get_si());
    return Json(x.get_str());
}

Json to_json(const Rational& q)
{
    if (q.get_den() == 1)
        return to_json(Integer(q.get_num()));
    return Json(q.get_str());
}

Json to_json(const LatticeVector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

Json to_json(const std::vector<LatticeVector>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs)
        out.push_back(to_json(v));
    return out;
}

Json to_json(const LatticePolytope& p)
{
    Json facets = Json::array();
    for (const auto& f : p.facets) {
        Json row = to_json(f.normal);
        row.push_back(to_json(f.offset));
        facets.push_back(std::move(row));
    }
    Json out{{"rank", p.rank}, {"dim", p.dim}, {"vertices", to_json(p.vertices)}, {"facets", std::move(facets)}};
    if (!p.equations.empty()) {
        Json eqs = Json::array();
        for (const auto& e : p.equations) {
            Json row = to_json(e.normal);
            row.push_back(to_json(e.offset));
            eqs.push_back(std::move(row));
        }
        out["equations"] = std::move(eqs);
    }
    return out;
}

Json to_json(const IntMatrix& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(to_json(m.row(r)));
    return out;
}

Json to_json(const QuadLattice& l)
{
    Json out{{"gram", to_json(l.gram)}};
    if (!l.name.empty())
        out["name"] = l.name;
    return out;
}

Json to_json(const HodgeDiamond& d)
{
    Json h = Json::object();
    for (int p = 0; p <= d.dim; ++p)
        for (int q = 0; q <= d.dim; ++q)
            if (d.at(p, q) != 0)
                h[std::to_string(p) + "," + std::to_string(q)] = d.at(p, q);
    Json flags = Json::array();
    if (d.kaehler)
        flags.push_back("kaehler");
    if (d.quasifano)
        flags.push_back("quasifano");
    return Json{{"dim", d.dim}, {"h", std::move(h)}, {"flags", std::move(flags)}};
}

Json to_json(const FibrationDescriptor& f)
{
    Json fibres = Json::array();
    for (const auto& e : f.fibres)
        fibres.push_back(
            Json{{"type", to_string(e.type)}, {"n", e.multiplicity}, {"components", fibre_components(e.type)}});
    return Json{{"ell", f.ell}, {"fibres", std::move(fibres)}};
}

Json to_json(const Verdict& v)
{
    Json checks = Json::array();
    for (const auto& c : v.checks) {
        Json item{{"name", c.name}, {"status", to_string(c.status)}};
        if (!c.detail.empty())
            item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    return checks;
}

Json to_json(const LmhsTable& t)
{
    Json out = Json::array();
    for (const auto& row : t)
        out.push_back(Json(std::vector<long>(row.begin(), row.end())));
    return out;
}

Json to_json(const FamilyReport& r)
{
    return Json{
        {"i", r.params.i},
        {"j", r.params.j},
        {"mu", r.params.mu},
        {"W_hodge", {{"h11", r.w.first}, {"h21", r.w.second}}},
        {"V_hodge", {{"h11", r.v.first}, {"h21", r.v.second}}},
        {"profile", to_json(r.profile)},
        {"picard", r.picard},
        {"euler",
         {{"chi_X_blown_up", r.chi_blown_up},
          {"chi_X_other", r.chi_other},
          {"chi_V_glued", r.chi_v_glued},
          {"chi_W", r.chi_w}}},
        {"lee", {{"h11", r.lee.h11}, {"h21", r.lee.h21}}},
        {"lmhs", {{"V", to_json(r.lmhs_v)}, {"W", to_json(r.lmhs_w)}}},
        {"checks", to_json(r.verdict)},
    };
}

Integer integer_from(const Json& j, const std::string& field)
{
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_number_unsigned())
        return Integer(j.get<unsigned long>());
    if (j.is_string()) {
        Integer x;
        const auto s = j.get<std::string>();
        if (!s.empty() && x.set_str(s, 10) == 0)
            return x;
    }
    bad(field, "expected an integer");
}

long long_from(const Json& j, const std::string& field)
{
    Integer x = integer_from(j, field);
    if (!x.fits_slong_p())
        bad(field, "integer out of range");
    return x.get_si();
}

LatticeVector vector_from(const Json& j, const std::string& field)
{
    if (!j.is_array())
        bad(field, "expected an array of integers");
    LatticeVector v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(integer_from(j[i], at(field, i)));
    return v;
}

std::vector<LatticeVector> vectors_from(const Json& j, const std::string& field)
{
    if (!j.is_array())
        bad(field, "expected an array of vectors");
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(vector_from(j[i], at(field, i)));
    return out;
}

LatticePolytope polytope_from(const Json& j, const std::string& field)
{
    // a whole fixture object carrying a "polytope" member is accepted too
    if (j.is_object() && !j.contains("vertices") && j.contains("polytope"))
        return polytope_from(j.at("polytope"), field);
    const Json& verts = j.is_array() ? j : member(j, field, "vertices");
    auto pts = vectors_from(verts, field + ".vertices");
    if (j.is_object() && j.contains("rank")) {
        const long r = long_from(j.at("rank"), field + ".rank");
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (static_cast<long>(pts[i].size()) != r)
                bad(at(field + ".vertices", i), "length differs from rank " + std::to_string(r));
    }
    return hull(pts);
}

std::vector<std::vector<LatticeVector>> parts_from(const Json& j, const std::string& field)
{
    if (!j.is_array())
        bad(field, "expected an array of parts");
    std::vector<std::vector<LatticeVector>> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(vectors_from(j[i], at(field, i)));
    return out;
}

IntMatrix matrix_from(const Json& j, const std::string& field)
{
    auto rows = vectors_from(j, field);
    const std::size_t n = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != n)
            bad(at(field, r), "ragged matrix row");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

QuadLattice lattice_from(const Json& j, const std::string& field)
{
    if (j.is_string())
        return standard_lattice(j.get<std::string>());
    if (j.is_array())
        return make_lattice(matrix_from(j, field));
    const Json& g = member(j, field, "gram");
    std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
    return make_lattice(matrix_from(g, field + ".gram"), name);
}

LatticeEmbedding embedding_from(const Json& j, const std::string& field)
{
    if (j.is_string())
        return k3_embedding(j.get<std::string>());
    QuadLattice ambient = standard_lattice("K3");
    if (j.is_object() && j.contains("ambient") && !(j.at("ambient").is_string() && j.at("ambient") == "K3"))
        ambient = lattice_from(j.at("ambient"), field + ".ambient");
    return make_embedding(ambient, vectors_from(member(j, field, "image_basis"), field + ".image_basis"));
}

HodgeDiamond diamond_from(const Json& j, const std::string& field)
{
    const long dim = long_from(member(j, field, "dim"), field + ".dim");
    if (dim < 0 || dim > 8)
        bad(field + ".dim", "dimension out of range");
    std::vector<std::vector<long>> h(dim + 1, std::vector<long>(dim + 1, 0));
    const Json& table = member(j, field, "h");
    if (!table.is_object())
        bad(field + ".h", "expected an object keyed by \"p,q\"");
    for (const auto& [key, value] : table.items()) {
        const auto comma = key.find(',');
        int p = -1, q = -1;
        try {
            if (comma != std::string::npos) {
                std::size_t used = 0;
                p = std::stoi(key.substr(0, comma), &used);
                q = std::stoi(key.substr(comma + 1));
            }
        } catch (const std::exception&) {
            p = -1;
        }
        if (p < 0 || q < 0 || p > dim || q > dim)
            bad(field + ".h", "bad index '" + key + "'");
        h[p][q] = long_from(value, field + ".h." + key);
    }
    bool kaehler = false, quasifano = false;
    if (j.contains("flags")) {
        const Json& flags = j.at("flags");
        if (!flags.is_array())
            bad(field + ".flags", "expected an array");
        for (const auto& f : flags) {
            if (f == "kaehler")
                kaehler = true;
            else if (f == "quasifano")
                quasifano = true;
            else
                bad(field + ".flags", "unknown flag " + f.dump());
        }
    }
    return make_diamond(static_cast<int>(dim), std::move(h), kaehler, quasifano);
}

FibrationDescriptor fibration_from(const Json& j, const std::string& field)
{
    const long ell = long_from(member(j, field, "ell"), field + ".ell");
    const Json& fibres = member(j, field, "fibres");
    if (!fibres.is_array())
        bad(field + ".fibres", "expected an array");
    std::vector<FibreEntry> entries;
    for (std::size_t i = 0; i < fibres.size(); ++i) {
        const std::string f = at(field + ".fibres", i);
        const Json& type = member(fibres[i], f, "type");
        if (!type.is_string())
            bad(f + ".type", "expected a fibre type tag");
        FibreEntry e{parse_fibre_type(type.get<std::string>()), 1};
        if (fibres[i].contains("n"))
            e.multiplicity = long_from(fibres[i].at("n"), f + ".n");
        entries.push_back(e);
    }
    return make_fibration(std::move(entries), ell);
}

std::vector<std::vector<std::size_t>> slices_from(const Json& j, const std::string& field)
{
    if (!j.is_array())
        bad(field, "expected an array of index arrays");
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array())
            bad(at(field, i), "expected an array of indices");
        std::vector<std::size_t> slice;
        for (std::size_t k = 0; k < j[i].size(); ++k) {
            const long idx = long_from(j[i][k], at(at(field, i), k));
            if (idx < 0)
                bad(at(at(field, i), k), "negative index");
            slice.push_back(static_cast<std::size_t>(idx));
        }
        out.push_back(std::move(slice));
    }
    return out;
}

TypeIIDegeneration degeneration_from(const Json& j, const std::string& field)
{
    const Json& comps = member(j, field, "components");
    if (!comps.is_array())
        bad(field + ".components", "expected an array");
    std::vector<long> n;
    for (std::size_t i = 0; i < comps.size(); ++i)
        n.push_back(long_from(comps[i], at(field + ".components", i)));
    const long dc = long_from(member(j, field, "double_curves"), field + ".double_curves");
    const long lr = long_from(member(j, field, "L_rank"), field + ".L_rank");
    return make_degeneration(std::move(n), dc, lr);
}

Json parse(const std::string& text, const std::string& what)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("InvalidInput", "field '" + what + "': malformed JSON (" + std::string(e.what()) + ")");
    }
}

} // namespace tyurin::io
