#pragma once

#include "oracles.hpp"

#include "tyurin/json_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#ifndef TYURIN_FIXTURE_DIR
#define TYURIN_FIXTURE_DIR "fixtures"
#endif

namespace support {

inline tyurin::io::Json fixture(const std::string& name)
{
    std::ifstream in(std::string(TYURIN_FIXTURE_DIR) + "/" + name + ".json");
    std::stringstream ss;
    ss << in.rdbuf();
    return tyurin::io::Json::parse(ss.str());
}

inline oracle::Vec to_vec(const tyurin::LatticeVector& v)
{
    oracle::Vec out;
    for (const auto& x : v)
        out.push_back(x.get_si());
    return out;
}

inline std::vector<oracle::Vec> to_vecs(const std::vector<tyurin::LatticeVector>& vs)
{
    std::vector<oracle::Vec> out;
    for (const auto& v : vs)
        out.push_back(to_vec(v));
    return out;
}

inline std::vector<oracle::Vec> raw_vecs(const tyurin::io::Json& j)
{
    std::vector<oracle::Vec> out;
    for (const auto& row : j)
        out.push_back(row.get<oracle::Vec>());
    return out;
}

inline tyurin::LatticePolytope polytope(const std::string& name)
{
    return tyurin::io::polytope_from(fixture(name).at("polytope"), "polytope");
}

inline tyurin::NefPartition partition(const std::string& name)
{
    auto j = fixture(name);
    return tyurin::validate_nef_partition(tyurin::io::polytope_from(j.at("polytope"), "polytope"),
                                          tyurin::io::parts_from(j.at("parts"), "parts"));
}

inline std::vector<std::vector<oracle::Vec>> parts_as_vecs(const tyurin::NefPartition& np)
{
    std::vector<std::vector<oracle::Vec>> out;
    for (const auto& p : np.parts)
        out.push_back(to_vecs(p));
    return out;
}

inline tyurin::IntMatrix int_matrix(const std::vector<oracle::Vec>& rows)
{
    std::vector<tyurin::LatticeVector> vs;
    for (const auto& r : rows)
        vs.emplace_back(r.begin(), r.end());
    return tyurin::IntMatrix::from_rows(vs, rows.empty() ? 0 : rows.front().size());
}

inline std::vector<oracle::Vec> gram(const tyurin::QuadLattice& l)
{
    std::vector<oracle::Vec> out;
    for (std::size_t r = 0; r < l.rank(); ++r)
        out.push_back(to_vec(l.gram.row(r)));
    return out;
}

} // namespace support
