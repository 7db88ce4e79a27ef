#include "tyurin/linalg.hpp"

#include <cstdlib>

namespace tyurin {

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = Rational(m(r, c));
    return out;
}

std::vector<std::size_t> rref(RatMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(row, p);
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            Rational k = -m(r, col);
            m.add_row(r, row, k);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& m)
{
    RatMatrix copy = m;
    return rref(copy).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b)
{
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    std::vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug(i, a.cols());
    return x;
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& a)
{
    RatMatrix m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(a.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& a)
{
    const std::size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = a(r, c);
        aug(r, n + r) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = aug(r, n + c);
    return inv;
}

Integer determinant(const IntMatrix& a)
{
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Column operations bringing row entries right of `pivot` to zero; the same
// operations are applied to `u`. Returns true if a nonzero pivot remains.
bool clear_row_right(IntMatrix& a, IntMatrix& u, std::size_t row, std::size_t pivot)
{
    for (;;) {
        std::size_t best = a.cols();
        for (std::size_t j = pivot; j < a.cols(); ++j)
            if (a(row, j) != 0 && (best == a.cols() || abs(a(row, j)) < abs(a(row, best))))
                best = j;
        if (best == a.cols())
            return false;
        a.swap_cols(pivot, best);
        u.swap_cols(pivot, best);
        bool clean = true;
        for (std::size_t j = pivot + 1; j < a.cols(); ++j) {
            if (a(row, j) == 0)
                continue;
            Integer q = floor_div(a(row, j), a(row, pivot));
            a.add_col(j, pivot, -q);
            u.add_col(j, pivot, -q);
            if (a(row, j) != 0)
                clean = false;
        }
        if (clean)
            return true;
    }
}

} // namespace

std::vector<LatticeVector> integer_kernel(const IntMatrix& a)
{
    IntMatrix m = a;
    IntMatrix u = IntMatrix::identity(a.cols());
    std::size_t pivot = 0;
    for (std::size_t r = 0; r < m.rows() && pivot < m.cols(); ++r)
        if (clear_row_right(m, u, r, pivot))
            ++pivot;
    std::vector<LatticeVector> basis;
    for (std::size_t c = pivot; c < m.cols(); ++c)
        basis.push_back(u.col(c));
    return basis;
}

SmithForm smith_normal_form(const IntMatrix& a)
{
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    const std::size_t n = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < n; ++t) {
        // smallest nonzero entry of the trailing block goes to (t,t)
        std::size_t bi = d.rows(), bj = d.cols();
        for (std::size_t i = t; i < d.rows(); ++i)
            for (std::size_t j = t; j < d.cols(); ++j)
                if (d(i, j) != 0 && (bi == d.rows() || abs(d(i, j)) < abs(d(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == d.rows())
            break;
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0)
                    continue;
                Integer q = floor_div(d(i, t), d(t, t));
                d.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0)
                    continue;
                Integer q = floor_div(d(t, j), d(t, t));
                d.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                // move the smallest remainder in row/column t into the pivot
                std::size_t bi2 = t, bj2 = t;
                for (std::size_t i = t + 1; i < d.rows(); ++i)
                    if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi2, bj2))) {
                        bi2 = i;
                        bj2 = t;
                    }
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi2, bj2))) {
                        bi2 = t;
                        bj2 = j;
                    }
                d.swap_rows(t, bi2);
                u.swap_rows(t, bi2);
                d.swap_cols(t, bj2);
                v.swap_cols(t, bj2);
                continue;
            }
            // divisibility condition on the trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row(t, i, Integer(1));
                        u.add_row(t, i, Integer(1));
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < d.cols(); ++j)
                d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < u.cols(); ++j)
                u(t, j) = -u(t, j);
        }
    }
    return {std::move(u), std::move(d), std::move(v)};
}

std::vector<Integer> invariant_factors(const IntMatrix& a)
{
    auto snf = smith_normal_form(a);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        if (snf.d(i, i) != 0)
            out.push_back(snf.d(i, i));
    return out;
}

IntMatrix unimodular_completion(const LatticeVector& c)
{
    const std::size_t m = c.size();
    IntMatrix row(1, m);
    for (std::size_t j = 0; j < m; ++j)
        row(0, j) = c[j];
    IntMatrix u = IntMatrix::identity(m);
    clear_row_right(row, u, 0, 0);
    // c * u = (g, 0, ..., 0) with g = +-1
    auto inv = inverse(to_rational(u));
    assert(inv);
    IntMatrix q(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k < m; ++k)
            q(r, k) = (*inv)(k, r).get_num(); // transpose; entries are integral
    if (row(0, 0) < 0)
        for (std::size_t r = 0; r < m; ++r)
            q(r, 0) = -q(r, 0);
    return q;
}

LatticeVector primitive_integer(const std::vector<Rational>& v)
{
    Integer lcm = 1;
    for (const auto& x : v)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    LatticeVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * lcm;
        out[i] = scaled.get_num();
    }
    make_primitive(out);
    return out;
}

} // namespace tyurin
