#pragma once

#include "tyurin/fibres.hpp"
#include "tyurin/hodge.hpp"

#include <utility>
#include <vector>

namespace tyurin {

/// Indices i, j in {1,2,4} and a partition mu of i+j (stored descending).
struct FamilyParams {
    int i = 1;
    int j = 1;
    std::vector<int> mu;
};

/// Errors: InvalidIndex, InvalidPartition.
FamilyParams make_family_params(int i, int j, std::vector<int> mu);

/// h^{2,1} of the base quasi-Fano X_i: 30, 10, 0 for i = 1, 2, 4.
long base_h21(int index);
/// The constants c_1 = 30, c_2 = 10, c_4 = 0 of the W-side count.
long c_constant(int index);
/// Euler number of X_i from its diamond.
long base_euler(int index);

using HodgePair = std::pair<long, long>; // (h11, h21)

HodgePair w_hodge(const FamilyParams& p);
HodgePair v_hodge(const FamilyParams& p);

/// genus 2 x^2 + 1 of the curve blown up for a part x of mu
long blowup_genus(int x);

FibrationDescriptor singular_fibre_profile(const FamilyParams& p);

struct FamilyReport {
    FamilyParams params;
    HodgePair w;
    HodgePair v;
    FibrationDescriptor profile;
    long picard = 0;          // sum (rho - 1) + ell + 1
    long chi_blown_up = 0;    // chi of X_i blown up along all curves
    long chi_other = 0;       // chi of X_j
    long chi_v_glued = 0;
    long chi_w = 0;
    LeeResult lee;
    LmhsTable lmhs_v{};
    LmhsTable lmhs_w{};
    Verdict verdict;
};

FamilyReport family_consistency_report(const FamilyParams& p);

/// Every (i, j) in {1,2,4}^2 and every partition of i + j, in a fixed order.
std::vector<FamilyParams> all_family_params();

} // namespace tyurin
