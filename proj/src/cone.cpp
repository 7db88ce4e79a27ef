// Double description method (Motzkin) with the combinatorial adjacency test.

#include "tyurin/cone.hpp"

#include "tyurin/error.hpp"
#include "tyurin/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tyurin::detail {

namespace {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    Bits operator&(const Bits& o) const
    {
        Bits r = *this;
        for (std::size_t w = 0; w < words_.size(); ++w)
            r.words_[w] &= o.words_[w];
        return r;
    }

    bool subset_of(const Bits& o) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w])
                return false;
        return true;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    LatticeVector v;
    Bits zeros; // processed rows vanishing on v
};

} // namespace

std::vector<LatticeVector> extreme_rays(const std::vector<LatticeVector>& rows, std::size_t dim)
{
    const std::size_t m = rows.size();

    // greedy choice of dim independent rows
    std::vector<std::size_t> basis;
    {
        RatMatrix acc(0, dim);
        std::vector<std::vector<Rational>> chosen;
        for (std::size_t i = 0; i < m && basis.size() < dim; ++i) {
            std::vector<Rational> r(rows[i].begin(), rows[i].end());
            chosen.push_back(r);
            if (rank(RatMatrix::from_rows(chosen, dim)) == chosen.size())
                basis.push_back(i);
            else
                chosen.pop_back();
        }
    }
    if (basis.size() < dim)
        throw Error("NotPointed", "constraint rows do not span the ambient space");

    RatMatrix b(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            b(r, c) = rows[basis[r]][c];
    auto inv = inverse(b);

    Bits processed(m);
    for (auto i : basis)
        processed.set(i);

    auto zero_set = [&](const LatticeVector& v) {
        Bits z(m);
        for (std::size_t i = 0; i < m; ++i)
            if (processed.test(i) && dot(rows[i], v) == 0)
                z.set(i);
        return z;
    };

    std::vector<Ray> rays;
    for (std::size_t c = 0; c < dim; ++c) {
        LatticeVector v = primitive_integer(inv->col(c));
        rays.push_back({std::move(v), Bits(m)});
    }
    for (auto& r : rays)
        r.zeros = zero_set(r.v);

    for (std::size_t i = 0; i < m; ++i) {
        if (processed.test(i))
            continue;
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            val[k] = dot(rows[i], rays[k].v);
            if (val[k] > 0)
                pos.push_back(k);
            else if (val[k] < 0)
                neg.push_back(k);
        }
        processed.set(i);
        if (neg.empty()) {
            for (std::size_t k = 0; k < rays.size(); ++k)
                if (val[k] == 0)
                    rays[k].zeros.set(i);
            continue;
        }

        std::vector<Ray> next;
        for (std::size_t k = 0; k < rays.size(); ++k)
            if (val[k] >= 0) {
                Ray r = rays[k];
                if (val[k] == 0)
                    r.zeros.set(i);
                next.push_back(std::move(r));
            }
        for (auto p : pos)
            for (auto n : neg) {
                Bits common = rays[p].zeros & rays[n].zeros;
                if (common.count() + 2 < dim)
                    continue;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
                    if (k != p && k != n && common.subset_of(rays[k].zeros))
                        adjacent = false;
                if (!adjacent)
                    continue;
                LatticeVector w(dim);
                for (std::size_t c = 0; c < dim; ++c)
                    w[c] = val[p] * rays[n].v[c] - val[n] * rays[p].v[c];
                make_primitive(w);
                Ray r{std::move(w), Bits(m)};
                r.zeros = zero_set(r.v);
                next.push_back(std::move(r));
            }
        rays = std::move(next);
    }

    std::vector<LatticeVector> out;
    out.reserve(rays.size());
    for (auto& r : rays)
        out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace tyurin::detail
