#pragma once

#include "tyurin/verdict.hpp"

#include <array>
#include <optional>
#include <vector>

namespace tyurin {

/// Table of h^{p,q}, 0 <= p,q <= dim.
struct HodgeDiamond {
    int dim = 0;
    std::vector<std::vector<long>> h;
    bool kaehler = false;   // enforce Serre duality h^{p,q} = h^{d-p,d-q}
    bool quasifano = false; // Hodge symmetry only

    long at(int p, int q) const { return h.at(p).at(q); }
    /// h^k = sum_{p+q=k} h^{p,q}
    long betti(int k) const;
};

/// Validates shape, h^{0,0} = 1, non-negativity, Hodge symmetry, and Serre
/// duality when flagged kaehler. Error InvalidDiamond.
HodgeDiamond make_diamond(int dim, std::vector<std::vector<long>> h, bool kaehler, bool quasifano);

HodgeDiamond k3_diamond();
HodgeDiamond elliptic_curve_diamond();
/// Calabi-Yau threefold with the given h^{1,1}, h^{2,1}.
HodgeDiamond cy3_diamond(long h11, long h21);
/// Quasi-Fano threefold with h^{p,p} = h11 for p = 1,2 and h^{2,1} = h21.
HodgeDiamond fano3_diamond(long h11, long h21);

long euler_char(const HodgeDiamond& d);

/// h^{p,q}(V) = h^{d-p,q}(W) for all p,q, and chi(V) = (-1)^d chi(W).
/// Error DimensionMismatch.
Verdict mirror_dual_check(const HodgeDiamond& v, const HodgeDiamond& w);

struct TyurinData {
    HodgeDiamond x1;
    HodgeDiamond x2;
    HodgeDiamond z;
    long k = 1;
};

/// Error InvalidTyurinData (k outside [1,20] or shapes wrong).
TyurinData make_tyurin_data(HodgeDiamond x1, HodgeDiamond x2, HodgeDiamond z, long k);

struct LeeResult {
    long h11 = 0;
    long h21 = 0;
    std::optional<std::string> warning;
};

LeeResult lee_smoothing(const TyurinData& t);

long glued_euler(long chi_x1, long chi_x2, long chi_z);

/// chi(V) = chi(X1) + chi(X2) - 2 chi(Z) against chi(W) = (-1)^d chi(V); if
/// chi_v_known is supplied it is compared with the glued value as well.
Verdict glue_euler_check(long chi_x1, long chi_x2, long chi_z, long chi_w, int d,
                         std::optional<long> chi_v_known = std::nullopt);
Verdict glue_euler_check(const TyurinData& t, long chi_w, int d);

/// Euler number of a threefold blown up along a smooth curve of genus g.
long euler_blowup_curve(long chi_x, long genus);

/// h^i(Y, w^{-1}(t)) = sum_j h^{d-i+j, j}(X) for i = 0..2d.
std::vector<long> lg_relative_ranks(const HodgeDiamond& x);

long h2w_formula(long h2_rel_1, long h2_rel_2, long ell);
Check ell_plus_k_check(long ell, long k);

/// The 3x4 table of ranks with rows (1,u,1,0), (0,v,v,0), (0,1,u,1).
using LmhsTable = std::array<std::array<long, 4>, 3>;
LmhsTable lmhs_table(long u, long v);
Check lmhs_mirror_match(const LmhsTable& v_side, const LmhsTable& w_side);

struct FibreCounts {
    long rho_10 = 0; // fibre over [1:0]
    long rho_11 = 0; // fibre over [1:1]
    long rho_01 = 0; // fibre over [0:1]
};

/// Numeric clauses are PASS/FAIL; clauses whose inputs are missing, and the
/// semistability / irreducibility clauses, are UNVERIFIABLE.
Verdict conjecture318_report(const FibreCounts& counts, std::optional<long> h11_x1, std::optional<long> h11_x2,
                             std::optional<long> h11_ambient, std::optional<long> points);

} // namespace tyurin
