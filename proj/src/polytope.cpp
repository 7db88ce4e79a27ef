#include "tyurin/polytope.hpp"

#include "tyurin/cone.hpp"
#include "tyurin/error.hpp"
#include "tyurin/linalg.hpp"

#include <algorithm>
#include <set>

namespace tyurin {

namespace {

Integer evaluate(const Facet& f, const LatticeVector& x) { return dot(f.normal, x) + f.offset; }

std::size_t check_rank(const std::vector<LatticeVector>& points)
{
    if (points.empty())
        throw Error("EmptyInput", "no points given");
    const std::size_t d = points.front().size();
    if (d == 0)
        throw Error("RankMismatch", "points of rank 0");
    for (const auto& p : points)
        if (p.size() != d)
            throw Error("RankMismatch", "points " + to_string(points.front()) + " and " + to_string(p) +
                                            " have different lengths");
    return d;
}

int affine_dimension(const std::vector<LatticeVector>& pts)
{
    if (pts.empty())
        return -1;
    const std::size_t d = pts.front().size();
    RatMatrix m(pts.size(), d + 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        m(i, 0) = 1;
        for (std::size_t c = 0; c < d; ++c)
            m(i, c + 1) = pts[i][c];
    }
    return static_cast<int>(rank(m)) - 1;
}

} // namespace

LatticePolytope hull_any(const std::vector<LatticeVector>& input)
{
    const std::size_t d = check_rank(input);
    std::vector<LatticeVector> pts = input;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    RatMatrix hom(pts.size(), d + 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        hom(i, 0) = 1;
        for (std::size_t c = 0; c < d; ++c)
            hom(i, c + 1) = pts[i][c];
    }

    LatticePolytope p;
    p.rank = d;

    for (const auto& y : nullspace(hom)) {
        LatticeVector v = primitive_integer(y);
        p.equations.push_back({LatticeVector(v.begin() + 1, v.end()), v[0]});
    }
    std::sort(p.equations.begin(), p.equations.end());

    RatMatrix reduced = hom;
    const std::vector<std::size_t> support = rref(reduced); // column 0 is always a pivot
    const std::size_t k = support.size() - 1;
    p.dim = static_cast<int>(k);

    if (k == 0) {
        p.vertices = pts;
        return p;
    }

    // Facets of the projection onto the pivot coordinates, lifted back.
    std::vector<LatticeVector> rows(pts.size(), LatticeVector(k + 1));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t t = 0; t < support.size(); ++t)
            rows[i][t] = hom(i, support[t]).get_num();
    const auto rays = detail::extreme_rays(rows, k + 1);

    std::vector<LatticeVector> projected_facets;
    for (const auto& y : rays) {
        LatticeVector lifted(d + 1, Integer(0));
        for (std::size_t t = 0; t < support.size(); ++t)
            lifted[support[t]] = y[t];
        Facet f{LatticeVector(lifted.begin() + 1, lifted.end()), lifted[0]};
        Integer g = content(f.normal);
        for (auto& x : f.normal)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        if (!mpz_divisible_p(f.offset.get_mpz_t(), g.get_mpz_t()))
            throw Error("InternalError", "facet offset not integral after normalisation");
        mpz_divexact(f.offset.get_mpz_t(), f.offset.get_mpz_t(), g.get_mpz_t());
        p.facets.push_back(std::move(f));
        projected_facets.push_back(y);
    }

    // A point is a vertex iff its tight facets have full rank k.
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<std::vector<Rational>> tight;
        for (std::size_t j = 0; j < p.facets.size(); ++j)
            if (evaluate(p.facets[j], pts[i]) == 0)
                tight.emplace_back(projected_facets[j].begin(), projected_facets[j].end());
        if (tight.size() >= k && rank(RatMatrix::from_rows(tight, k + 1)) == k)
            p.vertices.push_back(pts[i]);
    }

    std::sort(p.facets.begin(), p.facets.end());
    return p;
}

LatticePolytope hull(const std::vector<LatticeVector>& points)
{
    LatticePolytope p = hull_any(points);
    if (!p.full_dimensional())
        throw Error("NotFullDimensional", "affine span has dimension " + std::to_string(p.dim) + " < " +
                                              std::to_string(p.rank));
    return p;
}

std::vector<std::vector<Rational>> polyhedron_vertices(const std::vector<Facet>& halfspaces, std::size_t rank)
{
    std::vector<LatticeVector> rows;
    LatticeVector t(rank + 1, Integer(0));
    t[0] = 1;
    rows.push_back(t);
    for (const auto& h : halfspaces) {
        LatticeVector r;
        r.reserve(rank + 1);
        r.push_back(h.offset);
        r.insert(r.end(), h.normal.begin(), h.normal.end());
        rows.push_back(std::move(r));
    }
    std::vector<LatticeVector> rays;
    try {
        rays = detail::extreme_rays(rows, rank + 1);
    } catch (const Error&) {
        throw Error("Unbounded", "half-spaces do not bound a polytope");
    }
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rays) {
        if (r[0] == 0)
            throw Error("Unbounded", "half-spaces do not bound a polytope");
        std::vector<Rational> v(rank);
        for (std::size_t c = 0; c < rank; ++c) {
            v[c] = Rational(r[c + 1], r[0]);
            v[c].canonicalize();
        }
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool contains(const LatticePolytope& p, const LatticeVector& x)
{
    if (x.size() != p.rank)
        return false;
    for (const auto& e : p.equations)
        if (dot(e.normal, x) + e.offset != 0)
            return false;
    if (p.dim == 0)
        return x == p.vertices.front();
    for (const auto& f : p.facets)
        if (evaluate(f, x) < 0)
            return false;
    return true;
}

LatticePolytope polar_dual(const LatticePolytope& p)
{
    if (!p.full_dimensional())
        throw Error("NotFullDimensional", "polar dual needs a full-dimensional polytope");
    for (const auto& f : p.facets)
        if (f.offset <= 0)
            throw Error("OriginNotInterior", "origin is not interior (facet normal " + to_string(f.normal) + ")");
    std::vector<LatticeVector> verts;
    for (const auto& f : p.facets) {
        LatticeVector v = f.normal;
        for (auto& x : v) {
            if (!mpz_divisible_p(x.get_mpz_t(), f.offset.get_mpz_t()))
                throw Error("NonIntegralDual", "polar vertex " + to_string(f.normal) + "/" + f.offset.get_str() +
                                                   " is not a lattice point");
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), f.offset.get_mpz_t());
        }
        verts.push_back(std::move(v));
    }
    return hull(verts);
}

bool is_reflexive(const LatticePolytope& p)
{
    if (!p.full_dimensional())
        return false;
    return std::all_of(p.facets.begin(), p.facets.end(), [](const Facet& f) { return f.offset == 1; });
}

std::vector<LatticeVector> lattice_points(const LatticePolytope& p, Region region)
{
    const std::size_t d = p.rank;
    LatticeVector lo = p.vertices.front(), hi = p.vertices.front();
    for (const auto& v : p.vertices)
        for (std::size_t c = 0; c < d; ++c) {
            lo[c] = std::min(lo[c], v[c]);
            hi[c] = std::max(hi[c], v[c]);
        }

    std::vector<LatticeVector> out;
    LatticeVector x = lo;
    for (;;) {
        if (contains(p, x)) {
            bool on_boundary = std::any_of(p.facets.begin(), p.facets.end(),
                                           [&](const Facet& f) { return evaluate(f, x) == 0; });
            if (region == Region::all || (region == Region::boundary) == on_boundary)
                out.push_back(x);
        }
        std::size_t c = d;
        while (c > 0) {
            --c;
            if (x[c] < hi[c]) {
                ++x[c];
                break;
            }
            x[c] = lo[c];
            if (c == 0)
                return out;
        }
    }
}

std::size_t count_points(const LatticePolytope& p, Region region) { return lattice_points(p, region).size(); }

Face make_face(const LatticePolytope& p, std::vector<std::size_t> idx)
{
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    std::vector<LatticeVector> pts;
    for (auto i : idx)
        pts.push_back(p.vertices.at(i));
    return Face{affine_dimension(pts), std::move(idx)};
}

std::vector<Face> face_lattice(const LatticePolytope& p)
{
    std::vector<std::vector<std::size_t>> facet_sets;
    for (const auto& f : p.facets) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < p.vertices.size(); ++i)
            if (evaluate(f, p.vertices[i]) == 0)
                s.push_back(i);
        facet_sets.push_back(std::move(s));
    }

    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> queue;
    std::vector<std::size_t> all(p.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    seen.insert(all);
    seen.insert({});
    for (const auto& s : facet_sets)
        if (seen.insert(s).second)
            queue.push_back(s);
    while (!queue.empty()) {
        auto cur = std::move(queue.back());
        queue.pop_back();
        for (const auto& s : facet_sets) {
            std::vector<std::size_t> meet;
            std::set_intersection(cur.begin(), cur.end(), s.begin(), s.end(), std::back_inserter(meet));
            if (seen.insert(meet).second)
                queue.push_back(std::move(meet));
        }
    }

    std::vector<Face> faces;
    for (const auto& s : seen)
        faces.push_back(make_face(p, s));
    std::sort(faces.begin(), faces.end());
    return faces;
}

std::vector<std::size_t> facets_containing(const LatticePolytope& p, const Face& f)
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < p.facets.size(); ++j) {
        bool all_tight = std::all_of(f.vertex_indices.begin(), f.vertex_indices.end(),
                                     [&](std::size_t i) { return evaluate(p.facets[j], p.vertices[i]) == 0; });
        if (all_tight)
            out.push_back(j);
    }
    return out;
}

std::vector<LatticeVector> face_interior_points(const LatticePolytope& p, const Face& f)
{
    if (f.vertex_indices.empty())
        return {};
    std::vector<bool> on_face(p.facets.size(), false);
    for (auto j : facets_containing(p, f))
        on_face[j] = true;
    std::vector<LatticeVector> out;
    for (auto& x : lattice_points(p)) {
        bool ok = true;
        for (std::size_t j = 0; j < p.facets.size() && ok; ++j)
            ok = (evaluate(p.facets[j], x) == 0) == on_face[j];
        if (ok)
            out.push_back(std::move(x));
    }
    return out;
}

Face dual_face(const LatticePolytope& p, const LatticePolytope& polar, const Face& f)
{
    if (!is_reflexive(p))
        throw Error("NotReflexive", "dual faces need a reflexive polytope");
    std::vector<std::size_t> idx;
    for (std::size_t w = 0; w < polar.vertices.size(); ++w) {
        bool ok = std::all_of(f.vertex_indices.begin(), f.vertex_indices.end(),
                              [&](std::size_t i) { return dot(polar.vertices[w], p.vertices[i]) == -1; });
        if (ok)
            idx.push_back(w);
    }
    return make_face(polar, std::move(idx));
}

Face smallest_face_containing(const LatticePolytope& p, const LatticeVector& x)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        bool ok = true;
        for (const auto& f : p.facets)
            if (evaluate(f, x) == 0 && evaluate(f, p.vertices[i]) != 0) {
                ok = false;
                break;
            }
        if (ok)
            idx.push_back(i);
    }
    return make_face(p, std::move(idx));
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q)
{
    if (p.rank != q.rank)
        throw Error("RankMismatch", "ranks " + std::to_string(p.rank) + " and " + std::to_string(q.rank));
    std::vector<LatticeVector> sums;
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices) {
            LatticeVector s(p.rank);
            for (std::size_t c = 0; c < p.rank; ++c)
                s[c] = a[c] + b[c];
            sums.push_back(std::move(s));
        }
    return hull_any(sums);
}

LatticePolytope dilate(const LatticePolytope& p, long n)
{
    if (n < 1)
        throw Error("InvalidFactor", "dilation factor must be positive");
    std::vector<LatticeVector> pts = p.vertices;
    for (auto& v : pts)
        for (auto& x : v)
            x *= n;
    return hull_any(pts);
}

LatticePolytope negate(const LatticePolytope& p)
{
    std::vector<LatticeVector> pts = p.vertices;
    for (auto& v : pts)
        for (auto& x : v)
            x = -x;
    return hull_any(pts);
}

} // namespace tyurin
