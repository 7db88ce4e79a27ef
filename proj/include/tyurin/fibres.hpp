#pragma once

#include "tyurin/verdict.hpp"

#include <string>
#include <vector>

namespace tyurin {

/// Kodaira fibre types of elliptic surfaces and the singular fibre types of
/// the K3-fibred threefolds.
struct FibreType {
    enum class Kind { I, I_star, II, III, IV, II_star, III_star, IV_star, I_odp, I_delta, II_3f, IV_3f };
    Kind kind = Kind::I;
    long n = 0; // used by I_n, I_n*, I_n^Delta

    friend bool operator==(const FibreType&, const FibreType&) = default;
};

/// Tags: "I<n>", "I<n>*", "II", "III", "IV", "II*", "III*", "IV*", "I_odp",
/// "I<n>^Delta", "II_3f", "IV_3f". Error UnknownType.
FibreType parse_fibre_type(const std::string& tag);
std::string to_string(const FibreType& t);

long fibre_components(const FibreType& t);

/// `multiplicity` identical fibres of one type.
struct FibreEntry {
    FibreType type;
    long multiplicity = 1;
};

struct FibrationDescriptor {
    std::vector<FibreEntry> fibres;
    long ell = 1;

    /// sum of multiplicity * (rho - 1)
    long excess() const;
};

/// Error InvalidDescriptor (ell outside [1,20], multiplicity < 1).
FibrationDescriptor make_fibration(std::vector<FibreEntry> fibres, long ell);

/// sum (rho_p - 1) + ell + 1
long picard_from_fibration(const FibrationDescriptor& f);

/// Elliptic K3 count: sum (rho_p - 1) + 2 (section and fibre classes).
long picard_k3_elliptic(const FibrationDescriptor& f);

struct TypeIIDegeneration {
    std::vector<long> components; // n_i
    long double_curves = 0;
    long l_rank = 1;
};

/// Error InvalidDegeneration (empty chain, double_curves != c - 1).
TypeIIDegeneration make_degeneration(std::vector<long> components, long double_curves, long l_rank);

struct SlicedFibration {
    FibrationDescriptor descriptor;
    std::vector<std::vector<std::size_t>> slices; // indices into descriptor.fibres
};

/// Per slice n_i - 1 = sum_{p in S_i} (rho_p - 1), and
/// sum n_i - double_curves = 19 - rank(L). Error ShapeMismatch.
Verdict slicing_check(const SlicedFibration& s, const TypeIIDegeneration& d);

} // namespace tyurin
