#include "tyurin/quartic_family.hpp"

#include "tyurin/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tyurin {

namespace {

constexpr long kEll = 19;
constexpr long kChiZ = 24;

bool valid_index(int i) { return i == 1 || i == 2 || i == 4; }

FibreType base_fibre(int index)
{
    switch (index) {
    case 1:
        return {FibreType::Kind::IV_3f, 0};
    case 2:
        return {FibreType::Kind::II_3f, 0};
    default:
        return {FibreType::Kind::I, 0};
    }
}

long sum_genera(const FamilyParams& p)
{
    long s = 0;
    for (int x : p.mu)
        s += blowup_genus(x);
    return s;
}

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int x = std::min(n, max_part); x >= 1; --x) {
        cur.push_back(x);
        partitions(n - x, x, cur, out);
        cur.pop_back();
    }
}

} // namespace

FamilyParams make_family_params(int i, int j, std::vector<int> mu)
{
    if (!valid_index(i) || !valid_index(j))
        throw Error("InvalidIndex", "i and j must lie in {1,2,4}, got " + std::to_string(i) + "," + std::to_string(j));
    if (mu.empty())
        throw Error("InvalidPartition", "mu is empty");
    for (int x : mu)
        if (x < 1)
            throw Error("InvalidPartition", "parts of mu must be positive");
    if (std::accumulate(mu.begin(), mu.end(), 0) != i + j)
        throw Error("InvalidPartition", "mu must sum to i + j = " + std::to_string(i + j));
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return FamilyParams{i, j, std::move(mu)};
}

long base_h21(int index)
{
    switch (index) {
    case 1:
        return 30;
    case 2:
        return 10;
    case 4:
        return 0;
    }
    throw Error("InvalidIndex", "index must lie in {1,2,4}");
}

long base_euler(int index) { return euler_char(fano3_diamond(1, base_h21(index))); }

long blowup_genus(int x) { return 2L * x * x + 1; }

long c_constant(int index)
{
    static constexpr long c[] = {0, 30, 10, 0, 0};
    if (!valid_index(index))
        throw Error("InvalidIndex", "index must lie in {1,2,4}");
    return c[index];
}

HodgePair w_hodge(const FamilyParams& p)
{
    return {20 + sum_genera(p) + c_constant(p.i) + c_constant(p.j), static_cast<long>(p.mu.size())};
}

HodgePair v_hodge(const FamilyParams& p)
{
    return {static_cast<long>(p.mu.size()), 20 + sum_genera(p) + base_h21(p.i) + base_h21(p.j)};
}

FibrationDescriptor singular_fibre_profile(const FamilyParams& p)
{
    std::vector<FibreEntry> fibres;
    fibres.push_back({base_fibre(p.i), 1});
    fibres.push_back({base_fibre(p.j), 1});
    for (int x : p.mu)
        fibres.push_back({{FibreType::Kind::I_delta, x}, 1});
    fibres.push_back({{FibreType::Kind::I_odp, 0}, p.i + p.j});
    return make_fibration(std::move(fibres), kEll);
}

FamilyReport family_consistency_report(const FamilyParams& p)
{
    FamilyReport r;
    r.params = p;
    r.w = w_hodge(p);
    r.v = v_hodge(p);
    r.profile = singular_fibre_profile(p);
    const long k = static_cast<long>(p.mu.size());

    // (1) Hodge numbers are mirror dual
    r.verdict.append(mirror_dual_check(cy3_diamond(r.v.first, r.v.second), cy3_diamond(r.w.first, r.w.second)));

    // (2) Picard count from the singular fibres
    r.picard = picard_from_fibration(r.profile);
    r.verdict.add("picard", r.picard == r.w.first,
                  "sum(rho-1)+ell+1=" + std::to_string(r.picard) + ", h11(W)=" + std::to_string(r.w.first));

    // (3) Euler chain: blow X_i up along curves of genus 2x^2+1, glue along the K3
    r.chi_blown_up = base_euler(p.i);
    for (int x : p.mu)
        r.chi_blown_up = euler_blowup_curve(r.chi_blown_up, blowup_genus(x));
    r.chi_other = base_euler(p.j);
    r.chi_v_glued = glued_euler(r.chi_blown_up, r.chi_other, kChiZ);
    r.chi_w = euler_char(cy3_diamond(r.w.first, r.w.second));

    // (4) Lee's formula on the degeneration X~_i u_Z X_j
    const TyurinData t = make_tyurin_data(fano3_diamond(1 + k, base_h21(p.i) + sum_genera(p)),
                                          fano3_diamond(1, base_h21(p.j)), k3_diamond(), 1);
    r.lee = lee_smoothing(t);
    const long chi_lee = 2 * (r.lee.h11 - r.lee.h21);
    r.verdict.append(glue_euler_check(r.chi_blown_up, r.chi_other, kChiZ, r.chi_w, 3, chi_lee));
    r.verdict.add("lee", r.lee.h11 == r.v.first && r.lee.h21 == r.v.second,
                  "Lee (" + std::to_string(r.lee.h11) + "," + std::to_string(r.lee.h21) + "), V (" +
                      std::to_string(r.v.first) + "," + std::to_string(r.v.second) + ")");

    // (5) ell + k = 20 for the quartic polarisation
    r.verdict.add(ell_plus_k_check(kEll, t.k));

    // limiting mixed Hodge structure ranks on both sides
    r.lmhs_v = lmhs_table(20 - t.k, t.x1.at(2, 1) + t.x2.at(2, 1));
    r.lmhs_w = lmhs_table(kEll, r.w.first - kEll - 1);
    r.verdict.add(lmhs_mirror_match(r.lmhs_v, r.lmhs_w));
    return r;
}

std::vector<FamilyParams> all_family_params()
{
    std::vector<FamilyParams> out;
    for (int i : {1, 2, 4})
        for (int j : {1, 2, 4}) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            partitions(i + j, i + j, cur, parts);
            for (auto& mu : parts)
                out.push_back(make_family_params(i, j, mu));
        }
    return out;
}

} // namespace tyurin
