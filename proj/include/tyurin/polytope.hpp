#pragma once

#include "tyurin/integer.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace tyurin {

/// The half-space <normal, x> >= -offset.
struct Facet {
    LatticeVector normal;
    Integer offset;

    friend bool operator==(const Facet& a, const Facet& b) { return a.normal == b.normal && a.offset == b.offset; }
    friend bool operator<(const Facet& a, const Facet& b) { return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset); }
};

/// The hyperplane <normal, x> + offset = 0 (used for lower-dimensional
/// polytopes only).
struct Equation {
    LatticeVector normal;
    Integer offset;

    friend bool operator==(const Equation& a, const Equation& b) { return a.normal == b.normal && a.offset == b.offset; }
    friend bool operator<(const Equation& a, const Equation& b) { return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset); }
};

/// A lattice polytope in Z^rank. Vertices are sorted lexicographically and
/// facet normals are primitive. For a polytope of dimension below its rank,
/// facets are taken relative to the affine hull described by `equations`.
struct LatticePolytope {
    std::size_t rank = 0;
    int dim = -1;
    std::vector<LatticeVector> vertices;
    std::vector<Facet> facets;
    std::vector<Equation> equations;

    bool full_dimensional() const { return dim == static_cast<int>(rank); }

    /// Polytope equality is equality of vertex sets.
    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b)
    {
        return a.rank == b.rank && a.vertices == b.vertices;
    }
};

/// A face, given by the indices of the parent's vertices lying on it.
struct Face {
    int dim = -1;
    std::vector<std::size_t> vertex_indices;

    friend auto operator<=>(const Face&, const Face&) = default;
};

enum class Region { all, boundary, interior };

/// Convex hull of a full-dimensional point set. Errors: EmptyInput,
/// NotFullDimensional, RankMismatch (points of differing length).
LatticePolytope hull(const std::vector<LatticeVector>& points);

/// Convex hull without the full-dimensionality requirement.
LatticePolytope hull_any(const std::vector<LatticeVector>& points);

/// Vertices of the bounded polyhedron cut out by the given half-spaces, as
/// rational points in lexicographic order. Error Unbounded if the region
/// is not bounded.
std::vector<std::vector<Rational>> polyhedron_vertices(const std::vector<Facet>& halfspaces, std::size_t rank);

bool contains(const LatticePolytope& p, const LatticeVector& x);

/// Errors: NotFullDimensional, OriginNotInterior, NonIntegralDual.
LatticePolytope polar_dual(const LatticePolytope& p);

bool is_reflexive(const LatticePolytope& p);

/// Lattice points in lexicographic order (box scan filtered by the
/// inequality description).
std::vector<LatticeVector> lattice_points(const LatticePolytope& p, Region region = Region::all);

std::size_t count_points(const LatticePolytope& p, Region region = Region::all);

/// All faces from the empty face (dim -1) up to p itself, ordered by
/// dimension and then by vertex indices.
std::vector<Face> face_lattice(const LatticePolytope& p);

/// The face of `p` carried by the given subset of vertex indices.
Face make_face(const LatticePolytope& p, std::vector<std::size_t> vertex_indices);

/// Indices of the facets of `p` containing face `f`.
std::vector<std::size_t> facets_containing(const LatticePolytope& p, const Face& f);

/// Lattice points of the relative interior of a face.
std::vector<LatticeVector> face_interior_points(const LatticePolytope& p, const Face& f);

/// For a face `f` of reflexive `p`, the face of `polar` (= polar_dual(p))
/// where <u, v> = -1 for all vertices v of f. Error NotReflexive.
Face dual_face(const LatticePolytope& p, const LatticePolytope& polar, const Face& f);

/// Smallest face of `p` containing the point x (x must lie in p).
Face smallest_face_containing(const LatticePolytope& p, const LatticeVector& x);

/// Error RankMismatch.
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// Error InvalidFactor for n < 1.
LatticePolytope dilate(const LatticePolytope& p, long n);

LatticePolytope negate(const LatticePolytope& p);

} // namespace tyurin
