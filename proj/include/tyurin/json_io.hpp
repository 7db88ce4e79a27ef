#pragma once

// JSON conversions for the engine types. Integers are written as JSON
// numbers when they fit in 64 bits and as decimal strings otherwise; both
// forms are accepted on input. Parse failures throw Error("InvalidInput")
// naming the offending field.

#include "tyurin/fibres.hpp"
#include "tyurin/hodge.hpp"
#include "tyurin/nef.hpp"
#include "tyurin/quad_lattice.hpp"
#include "tyurin/quartic_family.hpp"

#include <json.hpp>

#include <string>

namespace tyurin::io {

using Json = nlohmann::json;

Json to_json(const Integer& x);
Json to_json(const Rational& q); // string "a/b" or integer
Json to_json(const LatticeVector& v);
Json to_json(const std::vector<LatticeVector>& vs);
Json to_json(const LatticePolytope& p);
Json to_json(const IntMatrix& m);
Json to_json(const QuadLattice& l);
Json to_json(const HodgeDiamond& d);
Json to_json(const FibrationDescriptor& f);
Json to_json(const Verdict& v);
Json to_json(const LmhsTable& t);
Json to_json(const FamilyReport& r);

Integer integer_from(const Json& j, const std::string& field);
long long_from(const Json& j, const std::string& field);
LatticeVector vector_from(const Json& j, const std::string& field);
std::vector<LatticeVector> vectors_from(const Json& j, const std::string& field);
LatticePolytope polytope_from(const Json& j, const std::string& field);
std::vector<std::vector<LatticeVector>> parts_from(const Json& j, const std::string& field);
IntMatrix matrix_from(const Json& j, const std::string& field);
/// Either {"gram": ..., "name": ...}, a bare Gram matrix, or a name string
/// understood by standard_lattice.
QuadLattice lattice_from(const Json& j, const std::string& field);
/// Either a K3 embedding name or {"ambient": "K3"|<lattice>, "image_basis": ...}.
LatticeEmbedding embedding_from(const Json& j, const std::string& field);
HodgeDiamond diamond_from(const Json& j, const std::string& field);
FibrationDescriptor fibration_from(const Json& j, const std::string& field);
std::vector<std::vector<std::size_t>> slices_from(const Json& j, const std::string& field);
TypeIIDegeneration degeneration_from(const Json& j, const std::string& field);

/// Parses text as JSON; Error InvalidInput on syntax errors.
Json parse(const std::string& text, const std::string& what);

} // namespace tyurin::io
