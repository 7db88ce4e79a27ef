#include "tyurin/hodge.hpp"

#include "tyurin/error.hpp"

#include <string>

namespace tyurin {

namespace {

std::string hpq(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

std::vector<std::vector<long>> zero_table(int dim) { return std::vector<std::vector<long>>(dim + 1, std::vector<long>(dim + 1, 0)); }

} // namespace

long HodgeDiamond::betti(int k) const
{
    long s = 0;
    for (int p = 0; p <= dim; ++p) {
        int q = k - p;
        if (q >= 0 && q <= dim)
            s += at(p, q);
    }
    return s;
}

HodgeDiamond make_diamond(int dim, std::vector<std::vector<long>> h, bool kaehler, bool quasifano)
{
    if (dim < 0 || h.size() != static_cast<std::size_t>(dim + 1))
        throw Error("InvalidDiamond", "table must have dim+1 rows");
    for (const auto& row : h)
        if (row.size() != h.size())
            throw Error("InvalidDiamond", "table must be square");
    if (h[0][0] != 1)
        throw Error("InvalidDiamond", "h^{0,0} must be 1");
    for (int p = 0; p <= dim; ++p)
        for (int q = 0; q <= dim; ++q) {
            if (h[p][q] < 0)
                throw Error("InvalidDiamond", "negative entry at " + hpq(p, q));
            if ((kaehler || quasifano) && h[p][q] != h[q][p])
                throw Error("InvalidDiamond", "Hodge symmetry fails at " + hpq(p, q));
            if (kaehler && h[p][q] != h[dim - p][dim - q])
                throw Error("InvalidDiamond", "Serre duality fails at " + hpq(p, q));
        }
    return HodgeDiamond{dim, std::move(h), kaehler, quasifano};
}

HodgeDiamond k3_diamond() { return make_diamond(2, {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}, true, false); }

HodgeDiamond elliptic_curve_diamond() { return make_diamond(1, {{1, 1}, {1, 1}}, true, false); }

HodgeDiamond cy3_diamond(long h11, long h21)
{
    auto h = zero_table(3);
    h[0][0] = h[3][3] = h[3][0] = h[0][3] = 1;
    h[1][1] = h[2][2] = h11;
    h[2][1] = h[1][2] = h21;
    return make_diamond(3, std::move(h), true, false);
}

HodgeDiamond fano3_diamond(long h11, long h21)
{
    auto h = zero_table(3);
    h[0][0] = h[3][3] = 1;
    h[1][1] = h[2][2] = h11;
    h[2][1] = h[1][2] = h21;
    return make_diamond(3, std::move(h), false, true);
}

long euler_char(const HodgeDiamond& d)
{
    long chi = 0;
    for (int p = 0; p <= d.dim; ++p)
        for (int q = 0; q <= d.dim; ++q)
            chi += ((p + q) % 2 == 0 ? 1 : -1) * d.at(p, q);
    return chi;
}

Verdict mirror_dual_check(const HodgeDiamond& v, const HodgeDiamond& w)
{
    if (v.dim != w.dim)
        throw Error("DimensionMismatch", "dimensions " + std::to_string(v.dim) + " and " + std::to_string(w.dim));
    const int d = v.dim;
    std::string witnesses;
    for (int p = 0; p <= d; ++p)
        for (int q = 0; q <= d; ++q)
            if (v.at(p, q) != w.at(d - p, q)) {
                if (!witnesses.empty())
                    witnesses += "; ";
                witnesses += "V" + hpq(p, q) + "=" + std::to_string(v.at(p, q)) + " vs W" + hpq(d - p, q) + "=" +
                             std::to_string(w.at(d - p, q));
            }
    Verdict out;
    out.add("hodge_transposition", witnesses.empty(), witnesses);
    const long cv = euler_char(v), cw = euler_char(w);
    const long sign = d % 2 == 0 ? 1 : -1;
    out.add("euler_sign", cv == sign * cw,
            "chi(V)=" + std::to_string(cv) + ", (-1)^d chi(W)=" + std::to_string(sign * cw));
    return out;
}

TyurinData make_tyurin_data(HodgeDiamond x1, HodgeDiamond x2, HodgeDiamond z, long k)
{
    if (k < 1 || k > 20)
        throw Error("InvalidTyurinData", "k must lie in [1,20]");
    if (x1.dim != 3 || x2.dim != 3 || z.dim != 2)
        throw Error("InvalidTyurinData", "X1, X2 must be threefolds and Z a surface");
    return TyurinData{std::move(x1), std::move(x2), std::move(z), k};
}

LeeResult lee_smoothing(const TyurinData& t)
{
    LeeResult r;
    r.h11 = t.x1.betti(2) + t.x2.betti(2) - t.k - 1;
    r.h21 = 21 + t.x1.at(2, 1) + t.x2.at(2, 1) - t.k;
    if (r.h11 < 1)
        r.warning = "NonKaehlerOrInvalid: h11 = " + std::to_string(r.h11) + " < 1";
    return r;
}

long glued_euler(long chi_x1, long chi_x2, long chi_z) { return chi_x1 + chi_x2 - 2 * chi_z; }

Verdict glue_euler_check(long chi_x1, long chi_x2, long chi_z, long chi_w, int d, std::optional<long> chi_v_known)
{
    const long chi_v = glued_euler(chi_x1, chi_x2, chi_z);
    const long sign = d % 2 == 0 ? 1 : -1;
    Verdict out;
    out.add("euler_mirror", chi_w == sign * chi_v,
            "chi(V)=" + std::to_string(chi_v) + ", (-1)^d chi(W)=" + std::to_string(sign * chi_w));
    if (chi_v_known)
        out.add("euler_glue", *chi_v_known == chi_v,
                "glued chi(V)=" + std::to_string(chi_v) + ", supplied chi(V)=" + std::to_string(*chi_v_known));
    return out;
}

Verdict glue_euler_check(const TyurinData& t, long chi_w, int d)
{
    return glue_euler_check(euler_char(t.x1), euler_char(t.x2), euler_char(t.z), chi_w, d);
}

long euler_blowup_curve(long chi_x, long genus) { return chi_x + 2 - 2 * genus; }

std::vector<long> lg_relative_ranks(const HodgeDiamond& x)
{
    const int d = x.dim;
    std::vector<long> out(2 * d + 1, 0);
    for (int i = 0; i <= 2 * d; ++i)
        for (int j = 0; j <= d; ++j) {
            int p = d - i + j;
            if (p >= 0 && p <= d)
                out[i] += x.at(p, j);
        }
    return out;
}

long h2w_formula(long h2_rel_1, long h2_rel_2, long ell) { return 1 + h2_rel_1 + h2_rel_2 + ell; }

Check ell_plus_k_check(long ell, long k)
{
    return {"ell_plus_k", ell + k == 20 ? Status::pass : Status::fail,
            std::to_string(ell) + " + " + std::to_string(k) + " = " + std::to_string(ell + k) + " (expected 20)"};
}

LmhsTable lmhs_table(long u, long v)
{
    return {{{1, u, 1, 0}, {0, v, v, 0}, {0, 1, u, 1}}};
}

Check lmhs_mirror_match(const LmhsTable& v_side, const LmhsTable& w_side)
{
    std::string diff;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c)
            if (v_side[r][c] != w_side[r][c]) {
                if (!diff.empty())
                    diff += "; ";
                diff += "entry " + hpq(r, c) + ": " + std::to_string(v_side[r][c]) + " vs " +
                        std::to_string(w_side[r][c]);
            }
    return {"lmhs_match", diff.empty() ? Status::pass : Status::fail, diff};
}

Verdict conjecture318_report(const FibreCounts& counts, std::optional<long> h11_x1, std::optional<long> h11_x2,
                             std::optional<long> h11_ambient, std::optional<long> points)
{
    Verdict out;
    auto numeric = [&](const std::string& name, long rho, std::optional<long> h11) {
        if (!h11 || !h11_ambient) {
            out.add({name, Status::unverifiable, "h11 inputs not supplied"});
            return;
        }
        const long expected = *h11 - *h11_ambient + 1;
        out.add(name, rho == expected, "rho=" + std::to_string(rho) + ", expected " + std::to_string(expected));
    };
    numeric("rho_[1:0]", counts.rho_10, h11_x1);
    numeric("rho_[1:1]", counts.rho_11, h11_x2);
    if (points)
        out.add("rho_[0:1]", counts.rho_01 == *points,
                "rho=" + std::to_string(counts.rho_01) + ", points=" + std::to_string(*points));
    else
        out.add({"rho_[0:1]", Status::unverifiable, "point count not supplied"});
    out.add({"semistable_[0:1]", Status::unverifiable, "fibre semistability is not computable from counts"});
    out.add({"other_fibres_irreducible", Status::unverifiable, "requires the full fibration"});
    return out;
}

} // namespace tyurin
