#include "tyurin/quad_lattice.hpp"

#include "tyurin/error.hpp"

#include <algorithm>
#include <cmath>

namespace tyurin {

namespace {

IntMatrix cartan(const std::vector<std::pair<int, int>>& edges, int n, int sign)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 2 * sign;
    for (auto [a, b] : edges) {
        m(a, b) = -sign;
        m(b, a) = -sign;
    }
    return m;
}

IntMatrix e8(int sign)
{
    // Bourbaki labelling 1-3-4-5-6-7-8 with 2 attached to 4, zero-based
    return cartan({{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}}, 8, sign);
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

QuadLattice atom(const std::string& spec)
{
    if (spec == "H" || spec == "U")
        return make_lattice(IntMatrix::from_rows({{0, 1}, {1, 0}}, 2), "H");
    if (spec == "E8")
        return make_lattice(e8(1), "E8");
    if (spec == "E8(-1)")
        return make_lattice(e8(-1), "E8(-1)");
    if (spec == "A1")
        return make_lattice(cartan({}, 1, 1), "A1");
    if (spec == "A1(-1)")
        return make_lattice(cartan({}, 1, -1), "A1(-1)");
    if (spec == "A2")
        return make_lattice(cartan({{0, 1}}, 2, 1), "A2");
    if (spec == "A2(-1)")
        return make_lattice(cartan({{0, 1}}, 2, -1), "A2(-1)");
    if (spec == "K3")
        return standard_lattice("H+H+H+E8(-1)+E8(-1)");
    if (spec == "M")
        return standard_lattice("H+E8(-1)+E8(-1)");
    if (spec == "M2_deg2")
        return standard_lattice("H+E8(-1)+E8(-1)+A1(-1)");
    if (spec == "M2_quartic")
        return standard_lattice("H+E8(-1)+E8(-1)+<-4>");
    if (spec.size() >= 3 && spec.front() == '<' && spec.back() == '>') {
        const std::string body = spec.substr(1, spec.size() - 2);
        Integer n;
        if (body.empty() || n.set_str(body, 10) != 0)
            throw Error("UnknownLattice", "cannot parse '" + spec + "'");
        IntMatrix g(1, 1);
        g(0, 0) = n;
        return make_lattice(g, spec);
    }
    throw Error("UnknownLattice", "unknown lattice '" + spec + "'");
}

} // namespace

QuadLattice make_lattice(IntMatrix gram, std::string name)
{
    if (gram.rows() != gram.cols())
        throw Error("NotSquare", "Gram matrix is not square");
    for (std::size_t i = 0; i < gram.rows(); ++i) {
        if (gram(i, i) % 2 != 0)
            throw Error("OddDiagonal", "diagonal entry " + std::to_string(i) + " is odd");
        for (std::size_t j = 0; j < i; ++j)
            if (gram(i, j) != gram(j, i))
                throw Error("NotSymmetric", "Gram matrix is not symmetric");
    }
    return QuadLattice{std::move(gram), std::move(name)};
}

QuadLattice standard_lattice(const std::string& spec)
{
    std::vector<QuadLattice> parts;
    std::size_t start = 0;
    for (;;) {
        auto plus = spec.find('+', start);
        std::string piece = trim(spec.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
        if (piece.empty())
            throw Error("UnknownLattice", "empty summand in '" + spec + "'");
        parts.push_back(atom(piece));
        if (plus == std::string::npos)
            break;
        start = plus + 1;
    }
    if (parts.size() == 1)
        return parts.front();
    QuadLattice sum = direct_sum(parts);
    sum.name = spec;
    return sum;
}

QuadLattice direct_sum(const std::vector<QuadLattice>& parts)
{
    std::size_t n = 0;
    for (const auto& p : parts)
        n += p.rank();
    IntMatrix g(n, n);
    std::size_t off = 0;
    std::string name;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rank(); ++i)
            for (std::size_t j = 0; j < p.rank(); ++j)
                g(off + i, off + j) = p.gram(i, j);
        off += p.rank();
        if (!name.empty())
            name += "+";
        name += p.name.empty() ? "?" : p.name;
    }
    return QuadLattice{std::move(g), std::move(name)};
}

Integer determinant(const QuadLattice& l) { return determinant(l.gram); }

Signature signature(const QuadLattice& l)
{
    if (determinant(l) == 0)
        throw Error("Degenerate", "Gram matrix is singular");
    RatMatrix a = to_rational(l.gram);
    const std::size_t n = a.rows();
    Signature s;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && a(j, j) == 0)
                ++j;
            if (j < n) {
                a.swap_rows(k, j);
                a.swap_cols(k, j);
            } else {
                j = k + 1;
                while (j < n && a(k, j) == 0)
                    ++j;
                // nondegenerate, so some off-diagonal entry is nonzero;
                // x_k -> x_k + x_j makes the pivot 2 a(k,j)
                a.add_row(k, j, Rational(1));
                a.add_col(k, j, Rational(1));
            }
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0)
                continue;
            Rational t = -a(i, k) / a(k, k);
            a.add_row(i, k, t);
            a.add_col(i, k, t);
        }
        if (a(k, k) > 0)
            ++s.positive;
        else
            ++s.negative;
    }
    return s;
}

DiscriminantData discriminant(const QuadLattice& l)
{
    const Integer det = determinant(l);
    if (det == 0)
        throw Error("Degenerate", "Gram matrix is singular");
    if (abs(det) > 1000000)
        throw Error("TooLarge", "discriminant group of order " + Integer(abs(det)).get_str());
    const std::size_t n = l.rank();
    const SmithForm snf = smith_normal_form(l.gram);

    DiscriminantData out;
    std::vector<std::vector<Rational>> gens;
    for (std::size_t i = 0; i < n; ++i) {
        const Integer& d = snf.d(i, i);
        if (d == 1)
            continue;
        out.group.push_back(d);
        std::vector<Rational> w(n);
        for (std::size_t r = 0; r < n; ++r) {
            w[r] = Rational(snf.v(r, i), d);
            w[r].canonicalize();
        }
        gens.push_back(std::move(w));
    }

    const RatMatrix g = to_rational(l.gram);
    std::vector<Integer> coeff(gens.size(), Integer(0));
    for (;;) {
        std::vector<Rational> x(n, Rational(0));
        for (std::size_t k = 0; k < gens.size(); ++k)
            for (std::size_t r = 0; r < n; ++r)
                x[r] += coeff[k] * gens[k][r];
        Rational q = 0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                q += x[r] * g(r, c) * x[c];
        // reduce into [0, 2)
        Rational half = q / 2;
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
        q -= 2 * fl;
        q.canonicalize();
        out.form_values.push_back(q);

        std::size_t k = 0;
        while (k < coeff.size()) {
            if (++coeff[k] < out.group[k])
                break;
            coeff[k] = 0;
            ++k;
        }
        if (k == coeff.size())
            break;
    }
    std::sort(out.form_values.begin(), out.form_values.end());
    return out;
}

Integer norm(const QuadLattice& l, const LatticeVector& x)
{
    Integer s = 0;
    for (std::size_t r = 0; r < l.rank(); ++r) {
        if (x[r] == 0)
            continue;
        for (std::size_t c = 0; c < l.rank(); ++c)
            s += x[r] * l.gram(r, c) * x[c];
    }
    return s;
}

namespace {

Integer pairing(const IntMatrix& g, const LatticeVector& a, const LatticeVector& b)
{
    Integer s = 0;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        if (a[r] == 0)
            continue;
        for (std::size_t c = 0; c < g.cols(); ++c)
            s += a[r] * g(r, c) * b[c];
    }
    return s;
}

QuadLattice gram_of(const IntMatrix& ambient, const std::vector<LatticeVector>& basis, std::string name)
{
    IntMatrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            g(i, j) = pairing(ambient, basis[i], basis[j]);
    return QuadLattice{std::move(g), std::move(name)};
}

IntMatrix rows_of(const std::vector<LatticeVector>& vs, std::size_t n)
{
    IntMatrix m(vs.size(), n);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = vs[i][j];
    return m;
}

// Coordinates of x in terms of the given (saturated) basis, if integral.
std::optional<LatticeVector> coordinates(const std::vector<LatticeVector>& basis, const LatticeVector& x)
{
    const std::size_t n = x.size();
    RatMatrix a(n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t r = 0; r < n; ++r)
            a(r, j) = basis[j][r];
    auto sol = solve(a, std::vector<Rational>(x.begin(), x.end()));
    if (!sol)
        return std::nullopt;
    LatticeVector out(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if ((*sol)[j].get_den() != 1)
            return std::nullopt;
        out[j] = (*sol)[j].get_num();
    }
    return out;
}

} // namespace

QuadLattice LatticeEmbedding::sublattice() const { return gram_of(ambient.gram, image_basis, {}); }

LatticeEmbedding make_embedding(QuadLattice ambient, std::vector<LatticeVector> image_basis)
{
    for (const auto& v : image_basis)
        if (v.size() != ambient.rank())
            throw Error("RankMismatch", "image vector " + to_string(v) + " has the wrong length");
    if (rank(rows_of(image_basis, ambient.rank())) != image_basis.size())
        throw Error("NotIndependent", "image vectors are linearly dependent");
    return LatticeEmbedding{std::move(ambient), std::move(image_basis)};
}

bool is_primitive(const LatticeEmbedding& e)
{
    const auto f = invariant_factors(rows_of(e.image_basis, e.ambient.rank()));
    return f.size() == e.image_basis.size() &&
           std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
}

LatticeEmbedding orthogonal_complement(const LatticeEmbedding& e)
{
    if (!is_primitive(e))
        throw Error("NotPrimitive", "embedding is not primitive");
    const IntMatrix bg = rows_of(e.image_basis, e.ambient.rank()) * e.ambient.gram;
    return LatticeEmbedding{e.ambient, integer_kernel(bg)};
}

QuadLattice dn_mirror(const LatticeEmbedding& e, const LatticeVector& f)
{
    const LatticeEmbedding perp = orthogonal_complement(e);
    if (f.size() != e.ambient.rank())
        throw Error("NotInComplement", "f has the wrong length");
    for (const auto& b : e.image_basis)
        if (pairing(e.ambient.gram, b, f) != 0)
            throw Error("NotInComplement", "f = " + to_string(f) + " is not orthogonal to L");
    if (norm(e.ambient, f) != 0)
        throw Error("NotIsotropic", "f = " + to_string(f) + " has norm " + norm(e.ambient, f).get_str());
    if (content(f) != 1)
        throw Error("NotPrimitiveVector", "f = " + to_string(f) + " is not primitive");

    // (Zf)^perp inside L^perp, in L^perp coordinates
    const QuadLattice lp = perp.sublattice();
    auto fc = coordinates(perp.image_basis, f);
    if (!fc)
        throw Error("NotInComplement", "f is not in the orthogonal complement");
    IntMatrix row(1, lp.rank());
    for (std::size_t j = 0; j < lp.rank(); ++j)
        for (std::size_t k = 0; k < lp.rank(); ++k)
            row(0, j) += (*fc)[k] * lp.gram(k, j);
    const auto kernel = integer_kernel(row);

    // basis of the kernel starting with f, then drop f
    auto fk = coordinates(kernel, *fc);
    if (!fk || content(*fk) != 1)
        throw Error("NotPrimitiveVector", "f is not primitive in its orthogonal complement");
    const IntMatrix q = unimodular_completion(*fk);
    std::vector<LatticeVector> rest;
    for (std::size_t c = 1; c < kernel.size(); ++c) {
        LatticeVector v(lp.rank(), Integer(0));
        for (std::size_t t = 0; t < kernel.size(); ++t)
            for (std::size_t r = 0; r < lp.rank(); ++r)
                v[r] += q(t, c) * kernel[t][r];
        rest.push_back(std::move(v));
    }
    QuadLattice mirror = gram_of(lp.gram, rest, "mirror");
    if (!rest.empty() && determinant(mirror) == 0)
        throw Error("NotPrimitiveVector", "quotient form is degenerate");
    return mirror;
}

IsotropicResult find_isotropic(const QuadLattice& l, long bound)
{
    if (bound < 1)
        throw Error("InvalidBound", "bound must be positive");
    const std::size_t n = l.rank();
    if (n == 0)
        return {std::nullopt, true};
    if (determinant(l) == 0) {
        auto ker = integer_kernel(l.gram);
        LatticeVector v = ker.front();
        auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
        if (*first < 0)
            for (auto& x : v)
                x = -x;
        return {v, true};
    }
    const Signature s = signature(l);
    if (s.positive == 0 || s.negative == 0)
        return {std::nullopt, true};

    if (std::pow(2.0 * static_cast<double>(bound) + 1.0, static_cast<double>(n)) > 5e7)
        throw Error("SearchTooLarge", "search space (2*bound+1)^rank is too large");

    for (long shell = 1; shell <= bound; ++shell) {
        LatticeVector x(n, Integer(-shell));
        for (;;) {
            bool on_shell = false;
            const Integer* first = nullptr;
            for (const auto& c : x) {
                if (abs(c) == shell)
                    on_shell = true;
                if (!first && c != 0)
                    first = &c;
            }
            if (on_shell && first && *first > 0 && norm(l, x) == 0 && content(x) == 1)
                return {x, true};
            std::size_t c = n;
            bool done = false;
            while (c > 0) {
                --c;
                if (x[c] < shell) {
                    ++x[c];
                    break;
                }
                x[c] = -shell;
                if (c == 0)
                    done = true;
            }
            if (done)
                break;
        }
    }
    return {std::nullopt, false};
}

MatchResult invariants_match(const QuadLattice& a, const QuadLattice& b)
{
    if (a.rank() != b.rank())
        return {false, "rank " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank())};
    const Integer da = determinant(a), db = determinant(b);
    if (abs(da) != abs(db))
        return {false, "|det| " + Integer(abs(da)).get_str() + " vs " + Integer(abs(db)).get_str()};
    if (da == 0)
        return {true, {}};
    const Signature sa = signature(a), sb = signature(b);
    if (!(sa == sb))
        return {false, "signature (" + std::to_string(sa.positive) + "," + std::to_string(sa.negative) + ") vs (" +
                           std::to_string(sb.positive) + "," + std::to_string(sb.negative) + ")"};
    const DiscriminantData qa = discriminant(a), qb = discriminant(b);
    if (qa.group != qb.group)
        return {false, "discriminant group differs"};
    if (qa.form_values != qb.form_values)
        return {false, "discriminant form values differ"};
    return {true, {}};
}

LatticeEmbedding k3_embedding(const std::string& name)
{
    const QuadLattice k3 = standard_lattice("K3");
    auto unit = [](std::initializer_list<std::pair<int, int>> entries) {
        LatticeVector v(22, Integer(0));
        for (auto [i, x] : entries)
            v[i] = x;
        return v;
    };
    auto m_block = [&] {
        std::vector<LatticeVector> b{unit({{0, 1}}), unit({{1, 1}})};
        for (int i = 6; i < 22; ++i)
            b.push_back(unit({{i, 1}}));
        return b;
    };
    if (name == "H")
        return make_embedding(k3, {unit({{0, 1}}), unit({{1, 1}})});
    if (name == "M")
        return make_embedding(k3, m_block());
    if (name == "M2_deg2") {
        auto b = m_block();
        b.push_back(unit({{4, 1}, {5, -1}}));
        return make_embedding(k3, b);
    }
    if (name == "M2_quartic") {
        auto b = m_block();
        b.push_back(unit({{4, 1}, {5, -2}}));
        return make_embedding(k3, b);
    }
    if (name.size() >= 3 && name.front() == '<' && name.back() == '>') {
        Integer n;
        if (n.set_str(name.substr(1, name.size() - 2), 10) == 0 && n > 0 && n % 2 == 0) {
            Integer half = n / 2;
            return make_embedding(k3, {unit({{0, 1}, {1, static_cast<int>(half.get_si())}})});
        }
    }
    throw Error("UnknownLattice", "no canonical K3 embedding for '" + name + "'");
}

LatticeVector default_isotropic_vector()
{
    LatticeVector v(22, Integer(0));
    v[2] = 1;
    return v;
}

} // namespace tyurin
