#pragma once

// Brute-force reference computations used by the tests. Everything here
// works on plain machine integers and deliberately avoids the library's
// hull, lattice and linear-algebra code.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<long>;

inline long dot(const Vec& a, const Vec& b)
{
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// Calls f on every integer vector in [-r, r]^n.
inline void scan_box(std::size_t n, long r, const std::function<void(const Vec&)>& f)
{
    Vec x(n, -r);
    for (;;) {
        f(x);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (x[i] < r) {
                ++x[i];
                break;
            }
            x[i] = -r;
            if (i == 0)
                return;
        }
        if (n == 0)
            return;
    }
}

// {u : <u, v> >= -1 for every v}: the polar of conv(vs), by direct evaluation.
inline std::vector<Vec> polar_points(const std::vector<Vec>& vs, long box)
{
    std::vector<Vec> out;
    scan_box(vs.front().size(), box, [&](const Vec& u) {
        for (const auto& v : vs)
            if (dot(u, v) < -1)
                return;
        out.push_back(u);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Lattice points of a reflexive polytope given by vertices: x lies in it iff
// <x, u> >= -1 for every lattice point u of its (lattice) polar.
inline std::vector<Vec> reflexive_points(const std::vector<Vec>& vs, long box)
{
    const auto dual = polar_points(vs, box);
    return polar_points(dual, box);
}

// nabla_i = {u : <u,v> >= -1 on E_i, <u,v> >= 0 on the other parts}.
inline std::vector<Vec> nabla_points(const std::vector<std::vector<Vec>>& parts, std::size_t i, long box)
{
    std::vector<Vec> out;
    scan_box(parts.front().front().size(), box, [&](const Vec& u) {
        for (std::size_t j = 0; j < parts.size(); ++j)
            for (const auto& v : parts[j])
                if (dot(u, v) < (j == i ? -1 : 0))
                    return;
        out.push_back(u);
    });
    return out;
}

inline long det(const std::vector<Vec>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    long s = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Vec> minor;
        for (std::size_t r = 1; r < n; ++r) {
            Vec row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        s += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
    }
    return s;
}

inline std::vector<Vec> adjugate(const std::vector<Vec>& m)
{
    const std::size_t n = m.size();
    std::vector<Vec> adj(n, Vec(n, 0));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<Vec> minor;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r)
                    continue;
                Vec row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != c)
                        row.push_back(m[i][k]);
                minor.push_back(row);
            }
            adj[c][r] = ((r + c) % 2 ? -1 : 1) * det(minor);
        }
    return adj;
}

// Discriminant group order and the multiset of q(x) mod 2 on L*/L, found by
// enumerating y in [0,|det|)^n, x = G^{-1} y. q-values are returned as
// numerators over 2|det|^2... normalised to the pair (num, den) reduced.
struct Disc {
    std::size_t order;
    std::multiset<std::pair<long, long>> values; // reduced fractions in [0,2)
};

inline Disc discriminant(const std::vector<Vec>& g)
{
    const std::size_t n = g.size();
    const long d = det(g), ad = std::labs(d);
    const auto adj = adjugate(g);
    std::set<Vec> classes; // x * |det| mod |det|
    Disc out{0, {}};
    Vec y(n, 0);
    for (;;) {
        Vec x(n, 0); // |d| * G^{-1} y
        for (std::size_t r = 0; r < n; ++r) {
            long s = 0;
            for (std::size_t c = 0; c < n; ++c)
                s += adj[r][c] * y[c];
            x[r] = ((d < 0 ? -s : s) % ad + ad) % ad;
        }
        if (classes.insert(x).second) {
            // q = x^T G x / d^2, reduced mod 2
            long num = 0;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    num += x[r] * g[r][c] * x[c];
            long den = ad * ad;
            num = ((num % (2 * den)) + 2 * den) % (2 * den);
            const long h = std::gcd(num, den);
            out.values.insert({num / h, den / h});
        }
        std::size_t i = n;
        bool done = true;
        while (i > 0) {
            --i;
            if (++y[i] < ad) {
                done = false;
                break;
            }
            y[i] = 0;
        }
        if (done)
            break;
    }
    out.order = classes.size();
    return out;
}

inline bool has_isotropic(const std::vector<Vec>& g, long bound)
{
    bool found = false;
    scan_box(g.size(), bound, [&](const Vec& x) {
        if (found || std::all_of(x.begin(), x.end(), [](long c) { return c == 0; }))
            return;
        long q = 0;
        for (std::size_t r = 0; r < g.size(); ++r)
            for (std::size_t c = 0; c < g.size(); ++c)
                q += x[r] * g[r][c] * x[c];
        found = q == 0;
    });
    return found;
}

// Genus of a smooth complete intersection curve of degrees (a, b) in P^3.
inline long ci_curve_genus(long a, long b) { return a * b * (a + b - 4) / 2 + 1; }

} // namespace oracle
