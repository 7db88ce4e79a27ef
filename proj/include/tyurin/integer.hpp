#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tyurin {

using Integer = mpz_class;
using Rational = mpq_class;

/// An element of M or N: an exact integer tuple.
using LatticeVector = std::vector<Integer>;

inline LatticeVector make_vector(std::initializer_list<long> coords)
{
    LatticeVector v;
    v.reserve(coords.size());
    for (long c : coords)
        v.emplace_back(c);
    return v;
}

inline Integer dot(std::span<const Integer> a, std::span<const Integer> b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

/// gcd of the absolute values; 0 for the zero vector.
inline Integer content(std::span<const Integer> v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

/// Divides by the content in place. Returns false for the zero vector.
inline bool make_primitive(std::vector<Integer>& v)
{
    Integer g = content(v);
    if (g == 0)
        return false;
    if (g != 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return true;
}

inline bool fits_int64(const Integer& x) { return x.fits_slong_p(); }

inline std::string to_string(const LatticeVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace tyurin
