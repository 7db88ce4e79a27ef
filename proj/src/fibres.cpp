#include "tyurin/fibres.hpp"

#include "tyurin/error.hpp"

#include <charconv>

namespace tyurin {

namespace {

bool parse_count(std::string_view s, long& out)
{
    if (s.empty())
        return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && out >= 0;
}

} // namespace

FibreType parse_fibre_type(const std::string& tag)
{
    using K = FibreType::Kind;
    if (tag == "II")
        return {K::II, 0};
    if (tag == "III")
        return {K::III, 0};
    if (tag == "IV")
        return {K::IV, 0};
    if (tag == "II*")
        return {K::II_star, 0};
    if (tag == "III*")
        return {K::III_star, 0};
    if (tag == "IV*")
        return {K::IV_star, 0};
    if (tag == "I_odp")
        return {K::I_odp, 0};
    if (tag == "II_3f")
        return {K::II_3f, 0};
    if (tag == "IV_3f")
        return {K::IV_3f, 0};
    if (tag.size() >= 2 && tag[0] == 'I') {
        std::string_view rest(tag);
        rest.remove_prefix(1);
        long n = 0;
        constexpr std::string_view delta = "^Delta";
        if (rest.size() > delta.size() && rest.ends_with(delta)) {
            rest.remove_suffix(delta.size());
            if (parse_count(rest, n) && n >= 1)
                return {K::I_delta, n};
        } else if (rest.ends_with("*")) {
            rest.remove_suffix(1);
            if (parse_count(rest, n))
                return {K::I_star, n};
        } else if (parse_count(rest, n)) {
            return {K::I, n};
        }
    }
    throw Error("UnknownType", "unknown fibre type '" + tag + "'");
}

std::string to_string(const FibreType& t)
{
    using K = FibreType::Kind;
    switch (t.kind) {
    case K::I:
        return "I" + std::to_string(t.n);
    case K::I_star:
        return "I" + std::to_string(t.n) + "*";
    case K::II:
        return "II";
    case K::III:
        return "III";
    case K::IV:
        return "IV";
    case K::II_star:
        return "II*";
    case K::III_star:
        return "III*";
    case K::IV_star:
        return "IV*";
    case K::I_odp:
        return "I_odp";
    case K::I_delta:
        return "I" + std::to_string(t.n) + "^Delta";
    case K::II_3f:
        return "II_3f";
    case K::IV_3f:
        return "IV_3f";
    }
    return "?";
}

long fibre_components(const FibreType& t)
{
    using K = FibreType::Kind;
    switch (t.kind) {
    case K::I:
        return t.n == 0 ? 1 : t.n;
    case K::I_star:
        return t.n + 5;
    case K::II:
        return 1;
    case K::III:
        return 2;
    case K::IV:
        return 3;
    case K::IV_star:
        return 7;
    case K::III_star:
        return 8;
    case K::II_star:
        return 9;
    case K::I_odp:
        return 1;
    case K::I_delta:
        return 2 * t.n * t.n + 2;
    case K::II_3f:
        return 11;
    case K::IV_3f:
        return 31;
    }
    throw Error("UnknownType", "unknown fibre kind");
}

long FibrationDescriptor::excess() const
{
    long s = 0;
    for (const auto& f : fibres)
        s += f.multiplicity * (fibre_components(f.type) - 1);
    return s;
}

FibrationDescriptor make_fibration(std::vector<FibreEntry> fibres, long ell)
{
    if (ell < 1 || ell > 20)
        throw Error("InvalidDescriptor", "ell must lie in [1,20]");
    for (const auto& f : fibres)
        if (f.multiplicity < 1)
            throw Error("InvalidDescriptor", "fibre multiplicity must be positive");
    return FibrationDescriptor{std::move(fibres), ell};
}

long picard_from_fibration(const FibrationDescriptor& f) { return f.excess() + f.ell + 1; }

long picard_k3_elliptic(const FibrationDescriptor& f) { return f.excess() + 2; }

TypeIIDegeneration make_degeneration(std::vector<long> components, long double_curves, long l_rank)
{
    if (components.empty())
        throw Error("InvalidDegeneration", "no components");
    if (double_curves != static_cast<long>(components.size()) - 1)
        throw Error("InvalidDegeneration", "a chain of " + std::to_string(components.size()) + " components has " +
                                               std::to_string(components.size() - 1) + " double curves");
    return TypeIIDegeneration{std::move(components), double_curves, l_rank};
}

Verdict slicing_check(const SlicedFibration& s, const TypeIIDegeneration& d)
{
    if (s.slices.size() != d.components.size())
        throw Error("ShapeMismatch", std::to_string(s.slices.size()) + " slices for " +
                                         std::to_string(d.components.size()) + " components");
    std::vector<int> used(s.descriptor.fibres.size(), 0);
    for (const auto& slice : s.slices)
        for (auto idx : slice) {
            if (idx >= used.size())
                throw Error("ShapeMismatch", "slice refers to fibre entry " + std::to_string(idx));
            ++used[idx];
        }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i] != 1)
            throw Error("ShapeMismatch", "fibre entry " + std::to_string(i) + " is used " + std::to_string(used[i]) +
                                             " times");

    Verdict out;
    long total = 0;
    for (std::size_t i = 0; i < s.slices.size(); ++i) {
        long excess = 0;
        for (auto idx : s.slices[i]) {
            const auto& f = s.descriptor.fibres[idx];
            excess += f.multiplicity * (fibre_components(f.type) - 1);
        }
        const long lhs = d.components[i] - 1;
        out.add("slice_" + std::to_string(i + 1), lhs == excess,
                "n-1=" + std::to_string(lhs) + ", sum(rho-1)=" + std::to_string(excess));
        total += d.components[i];
    }
    const long moduli = total - d.double_curves;
    out.add("moduli", moduli == 19 - d.l_rank,
            "sum n - double curves=" + std::to_string(moduli) + ", 19 - rank(L)=" + std::to_string(19 - d.l_rank));
    return out;
}

} // namespace tyurin
