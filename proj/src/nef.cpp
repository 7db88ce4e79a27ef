#include "tyurin/nef.hpp"

#include "tyurin/error.hpp"
#include "tyurin/linalg.hpp"

#include <algorithm>
#include <set>

namespace tyurin {

namespace {

std::string part_label(std::size_t i) { return "E" + std::to_string(i + 1); }

LatticePolytope cone_over(const std::vector<LatticeVector>& part, std::size_t rank)
{
    std::vector<LatticeVector> pts = part;
    pts.emplace_back(rank, Integer(0));
    return hull_any(pts);
}

// Membership of each boundary point: index of its part.
std::vector<std::size_t> part_index(const std::vector<LatticeVector>& boundary,
                                    const std::vector<std::vector<LatticeVector>>& parts)
{
    std::vector<std::size_t> out(boundary.size());
    for (std::size_t b = 0; b < boundary.size(); ++b)
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (std::binary_search(parts[i].begin(), parts[i].end(), boundary[b]))
                out[b] = i;
    return out;
}

} // namespace

LatticePolytope NefPartition::part_polytope(std::size_t i) const { return cone_over(parts.at(i), polytope.rank); }

NefPartition trivial_partition(const LatticePolytope& delta)
{
    if (!is_reflexive(delta))
        throw Error("NotReflexive", "polytope is not reflexive");
    return NefPartition{delta, {lattice_points(delta, Region::boundary)}};
}

NefPartition validate_nef_partition(const LatticePolytope& delta, const std::vector<std::vector<LatticeVector>>& input)
{
    if (!is_reflexive(delta))
        throw Error("NotReflexive", "polytope is not reflexive");
    const std::size_t d = delta.rank;
    const auto boundary = lattice_points(delta, Region::boundary);

    if (input.size() < 2)
        throw Error("NotAPartition", "a nef partition needs at least two parts");
    std::vector<std::vector<LatticeVector>> parts = input;
    std::set<LatticeVector> seen;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty())
            throw Error("NotAPartition", part_label(i) + " is empty");
        for (const auto& v : parts[i]) {
            if (v.size() != d)
                throw Error("NotAPartition", part_label(i) + " contains " + to_string(v) + " of wrong rank");
            if (!std::binary_search(boundary.begin(), boundary.end(), v))
                throw Error("NotAPartition", to_string(v) + " in " + part_label(i) + " is not a boundary lattice point");
            if (!seen.insert(v).second)
                throw Error("NotAPartition", to_string(v) + " appears in more than one part");
        }
    }

    // complete with omitted boundary points
    std::vector<LatticePolytope> cones;
    for (const auto& part : parts)
        cones.push_back(cone_over(part, d));
    for (const auto& b : boundary) {
        if (seen.count(b))
            continue;
        std::size_t owner = parts.size(), hits = 0;
        for (std::size_t i = 0; i < cones.size(); ++i)
            if (contains(cones[i], b)) {
                owner = i;
                ++hits;
            }
        if (hits != 1)
            throw Error("NotAPartition", "boundary point " + to_string(b) + " is not assigned to any part");
        parts[owner].push_back(b);
    }
    for (auto& part : parts)
        std::sort(part.begin(), part.end());

    const auto owner = part_index(boundary, parts);

    for (const auto& facet : delta.facets) {
        std::vector<std::size_t> on_facet;
        for (std::size_t b = 0; b < boundary.size(); ++b)
            if (dot(facet.normal, boundary[b]) + facet.offset == 0)
                on_facet.push_back(b);
        RatMatrix a(on_facet.size(), d);
        for (std::size_t r = 0; r < on_facet.size(); ++r)
            for (std::size_t c = 0; c < d; ++c)
                a(r, c) = boundary[on_facet[r]][c];

        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::vector<Rational> rhs(on_facet.size());
            for (std::size_t r = 0; r < on_facet.size(); ++r)
                rhs[r] = owner[on_facet[r]] == i ? -1 : 0;
            auto u = solve(a, rhs);
            bool integral = u && std::all_of(u->begin(), u->end(), [](const Rational& q) { return q.get_den() == 1; });
            if (!integral)
                throw Error("NotCartier", "facet " + to_string(facet.normal) + " part " + part_label(i));
            LatticeVector ui(d);
            for (std::size_t c = 0; c < d; ++c)
                ui[c] = (*u)[c].get_num();
            for (std::size_t b = 0; b < boundary.size(); ++b) {
                Integer bound = owner[b] == i ? -1 : 0;
                if (dot(ui, boundary[b]) < bound)
                    throw Error("NotNef", "part " + part_label(i) + " violated at " + to_string(boundary[b]) +
                                              " by the functional " + to_string(ui) + " of facet " +
                                              to_string(facet.normal));
            }
        }
    }

    NefPartition np{delta, std::move(parts)};
    try {
        (void)dual_nef_partition(np);
    } catch (const Error& e) {
        throw Error("DualNotReflexive", "dual check failed (" + std::string(e.what()) + ")");
    }
    return np;
}

DualNefPartition dual_nef_partition(const NefPartition& np)
{
    const std::size_t d = np.polytope.rank;
    DualNefPartition out;
    std::vector<LatticeVector> all_vertices;
    for (std::size_t i = 0; i < np.k(); ++i) {
        std::vector<Facet> halfspaces;
        for (std::size_t j = 0; j < np.k(); ++j)
            for (const auto& v : np.parts[j])
                halfspaces.push_back({v, Integer(i == j ? 1 : 0)});
        std::vector<LatticeVector> verts;
        for (const auto& q : polyhedron_vertices(halfspaces, d)) {
            LatticeVector v(d);
            for (std::size_t c = 0; c < d; ++c) {
                if (q[c].get_den() != 1)
                    throw Error("NonIntegralVertex", "nabla_" + std::to_string(i + 1) + " has a non-integral vertex");
                v[c] = q[c].get_num();
            }
            verts.push_back(std::move(v));
        }
        if (verts.empty())
            throw Error("InvariantViolation", "nabla_" + std::to_string(i + 1) + " is empty");
        all_vertices.insert(all_vertices.end(), verts.begin(), verts.end());
        out.nablas.push_back(hull_any(verts));
    }
    out.nabla = hull_any(all_vertices);

    const LatticeVector origin(d, Integer(0));
    for (std::size_t i = 0; i < out.nablas.size(); ++i)
        if (!contains(out.nablas[i], origin))
            throw Error("InvariantViolation", "nabla_" + std::to_string(i + 1) + " does not contain the origin");
    if (!is_reflexive(out.nabla))
        throw Error("InvariantViolation", "nabla is not reflexive");
    for (const auto& x : lattice_points(out.nabla)) {
        std::size_t hits = 0;
        for (const auto& n : out.nablas)
            hits += contains(n, x) ? 1 : 0;
        if (hits == 0 || (x != origin && hits != 1))
            throw Error("InvariantViolation", "lattice point " + to_string(x) + " of nabla lies in " +
                                                  std::to_string(hits) + " of the nabla_i");
    }
    return out;
}

NefPartition partition_from_dual(const DualNefPartition& dual)
{
    const LatticeVector origin(dual.nabla.rank, Integer(0));
    std::vector<std::vector<LatticeVector>> parts;
    for (const auto& n : dual.nablas) {
        std::vector<LatticeVector> part;
        for (auto& x : lattice_points(n))
            if (x != origin)
                part.push_back(std::move(x));
        parts.push_back(std::move(part));
    }
    return NefPartition{dual.nabla, std::move(parts)};
}

bool check_refinement(const NefPartition& coarse, const NefPartition& fine)
{
    if (!(coarse.polytope == fine.polytope))
        throw Error("PolytopeMismatch", "partitions live on different polytopes");
    const std::size_t k = coarse.k();
    if (k == 0 || fine.k() != k + 1)
        return false;
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (coarse.parts[i] != fine.parts[i])
            return false;
    std::vector<LatticeVector> merged = fine.parts[k - 1];
    merged.insert(merged.end(), fine.parts[k].begin(), fine.parts[k].end());
    std::sort(merged.begin(), merged.end());
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        return false;
    return merged == coarse.parts[k - 1];
}

std::size_t complement_count(const DualNefPartition& dual, const LatticePolytope& delta_dual)
{
    if (dual.nablas.size() != 2)
        throw Error("NotBipartite", "fibre counts need exactly two parts, got " + std::to_string(dual.nablas.size()));
    for (const auto& v : dual.nabla.vertices)
        if (!contains(delta_dual, v))
            throw Error("NablaNotContained", "vertex " + to_string(v) + " of nabla is outside the polar polytope");
    return count_points(delta_dual) - count_points(dual.nabla);
}

std::size_t curve_invariant(const DualNefPartition& dual, const LatticePolytope& delta_dual, int d)
{
    if (d < 2)
        throw Error("InvalidDimension", "dimension must be at least 2");
    const std::size_t c = complement_count(dual, delta_dual);
    if (c == 0)
        throw Error("DegenerateConfiguration", "nabla equals the polar polytope; no curve is visible");
    return d == 2 ? c : c - 1;
}

std::optional<Integer> divisor_component_count(const LatticeVector& sigma, const LatticePolytope& delta,
                                               const LatticePolytope& delta_dual)
{
    const auto boundary = lattice_points(delta_dual, Region::boundary);
    if (!std::binary_search(boundary.begin(), boundary.end(), sigma))
        throw Error("NotBoundaryPoint", to_string(sigma) + " is not a boundary lattice point");
    const Face gamma = smallest_face_containing(delta_dual, sigma);
    const int codim = static_cast<int>(delta_dual.rank) - gamma.dim;
    if (codim == 1)
        return std::nullopt;
    if (codim >= 3)
        return Integer(1);
    const Face dual = dual_face(delta_dual, delta, gamma);
    Integer a = face_interior_points(delta_dual, gamma).size();
    Integer b = face_interior_points(delta, dual).size();
    return Integer(1 + a * b);
}

Integer batyrev_h11(const LatticePolytope& p)
{
    const LatticePolytope polar = polar_dual(p);
    const int d = static_cast<int>(p.rank);
    Integer h = Integer(count_points(p)) - d - 1;
    for (const auto& f : face_lattice(p)) {
        if (f.dim == d - 1)
            h -= face_interior_points(p, f).size();
        else if (f.dim == d - 2)
            h += Integer(face_interior_points(p, f).size()) *
                 face_interior_points(polar, dual_face(p, polar, f)).size();
    }
    return h;
}

BatyrevHodge batyrev_hodge(const LatticePolytope& delta)
{
    if (!is_reflexive(delta))
        throw Error("NotReflexive", "polytope is not reflexive");
    if (delta.rank != 3 && delta.rank != 4)
        throw Error("UnsupportedRank", "rank must be 3 or 4");
    return {batyrev_h11(delta), batyrev_h11(polar_dual(delta))};
}

} // namespace tyurin
