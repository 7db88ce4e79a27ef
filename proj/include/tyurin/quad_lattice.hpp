#pragma once

#include "tyurin/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tyurin {

/// An even integral lattice given by its Gram matrix.
struct QuadLattice {
    IntMatrix gram;
    std::string name;

    std::size_t rank() const { return gram.rows(); }
};

/// Errors: NotSquare, NotSymmetric, OddDiagonal.
QuadLattice make_lattice(IntMatrix gram, std::string name = {});

/// Named lattices: "H", "E8", "E8(-1)", "A1", "A1(-1)", "A2", "A2(-1)",
/// "<n>" for even n, "K3", "M" (= H + E8(-1)^2), "M2_deg2", "M2_quartic",
/// and '+'-separated sums of these. Errors: UnknownLattice, OddDiagonal.
QuadLattice standard_lattice(const std::string& spec);

QuadLattice direct_sum(const std::vector<QuadLattice>& parts);

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Error Degenerate.
Signature signature(const QuadLattice& l);
Integer determinant(const QuadLattice& l);

struct DiscriminantData {
    std::vector<Integer> group;         // invariant factors > 1
    std::vector<Rational> form_values;  // q over all of L*/L, in [0,2), sorted
};

/// Errors: Degenerate, TooLarge (group order above 10^6).
DiscriminantData discriminant(const QuadLattice& l);

/// A sublattice given by integer coordinates in an ambient lattice.
struct LatticeEmbedding {
    QuadLattice ambient;
    std::vector<LatticeVector> image_basis;

    /// The Gram matrix induced on the image basis.
    QuadLattice sublattice() const;
};

/// Errors: RankMismatch, NotIndependent.
LatticeEmbedding make_embedding(QuadLattice ambient, std::vector<LatticeVector> image_basis);

bool is_primitive(const LatticeEmbedding& e);

/// Error NotPrimitive.
LatticeEmbedding orthogonal_complement(const LatticeEmbedding& e);

/// (Zf)^perp inside L^perp, modulo Zf.
/// Errors: NotPrimitive, NotInComplement, NotIsotropic, NotPrimitiveVector.
QuadLattice dn_mirror(const LatticeEmbedding& e, const LatticeVector& f);

struct IsotropicResult {
    std::optional<LatticeVector> vector;
    bool conclusive = false;
};

/// Shell-by-shell search by max-norm up to `bound`; lexicographic inside a
/// shell with the first nonzero coordinate positive. Definite lattices
/// answer "none" conclusively; degenerate ones return a kernel vector.
/// Errors: InvalidBound, SearchTooLarge.
IsotropicResult find_isotropic(const QuadLattice& l, long bound);

struct MatchResult {
    bool match = false;
    std::string witness; // first differing invariant, empty on a match
};

/// Compares rank, signature, |det|, discriminant group and form values.
MatchResult invariants_match(const QuadLattice& a, const QuadLattice& b);

/// Canonical primitive embeddings into the K3 lattice
/// H + H + H + E8(-1) + E8(-1) (coordinates 0-1, 2-3, 4-5, 6-13, 14-21):
/// "<2n>" -> e1 + n f1, "H" -> first H, "M" -> first H and both E8 blocks,
/// "M2_deg2" -> M plus e3 - f3, "M2_quartic" -> M plus e3 - 2 f3.
/// Error UnknownLattice.
LatticeEmbedding k3_embedding(const std::string& name);

/// e2, the isotropic generator of the second H block.
LatticeVector default_isotropic_vector();

Integer norm(const QuadLattice& l, const LatticeVector& x);

} // namespace tyurin
