#pragma once

#include "tyurin/polytope.hpp"

#include <optional>
#include <vector>

namespace tyurin {

/// A partition E_1, ..., E_k of the boundary lattice points of a reflexive
/// polytope. Each part is sorted; the order of the parts is significant.
struct NefPartition {
    LatticePolytope polytope;
    std::vector<std::vector<LatticeVector>> parts;

    std::size_t k() const { return parts.size(); }
    /// Delta_i = Conv(E_i u {0}).
    LatticePolytope part_polytope(std::size_t i) const;
};

struct DualNefPartition {
    std::vector<LatticePolytope> nablas;
    LatticePolytope nabla;
};

/// The one-part partition {boundary points of delta}. Only meaningful as the
/// coarse side of check_refinement.
NefPartition trivial_partition(const LatticePolytope& delta);

/// Checks the partition (completing it with omitted boundary points that lie
/// in exactly one Conv(E_i u {0})), the Cartier and nef conditions facet by
/// facet, and that the dual is reflexive.
/// Errors: NotReflexive, NotAPartition, NotCartier, NotNef, DualNotReflexive.
NefPartition validate_nef_partition(const LatticePolytope& delta, const std::vector<std::vector<LatticeVector>>& parts);

/// nabla_i = {u : <u,v> >= -1 on E_i, >= 0 on E_j for j != i}.
/// Errors: NonIntegralVertex, InvariantViolation.
DualNefPartition dual_nef_partition(const NefPartition& np);

/// The nef partition of nabla whose parts are the nonzero lattice points of
/// each nabla_i.
NefPartition partition_from_dual(const DualNefPartition& dual);

/// Error PolytopeMismatch.
bool check_refinement(const NefPartition& coarse, const NefPartition& fine);

/// #((delta_dual \ nabla) n N). Errors: NotBipartite, NablaNotContained.
std::size_t complement_count(const DualNefPartition& dual, const LatticePolytope& delta_dual);

/// complement_count for d == 2, complement_count - 1 for d >= 3.
/// Errors: InvalidDimension, DegenerateConfiguration, plus those of
/// complement_count.
std::size_t curve_invariant(const DualNefPartition& dual, const LatticePolytope& delta_dual, int d);

/// Number of components of D_sigma n W; nullopt when the intersection is
/// empty (sigma interior to a facet). Error NotBoundaryPoint.
std::optional<Integer> divisor_component_count(const LatticeVector& sigma, const LatticePolytope& delta,
                                               const LatticePolytope& delta_dual);

struct BatyrevHodge {
    Integer h11;     // h11(delta)
    Integer h_dual;  // h11(delta_dual) = h^{d-2,1} of the hypersurface
};

/// Errors: NotReflexive, UnsupportedRank (rank outside {3,4}).
BatyrevHodge batyrev_hodge(const LatticePolytope& delta);

/// The Batyrev count for a single reflexive polytope.
Integer batyrev_h11(const LatticePolytope& p);

} // namespace tyurin
