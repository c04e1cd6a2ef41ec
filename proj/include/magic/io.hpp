#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "magic/algebra.hpp"
#include "magic/ehrhart.hpp"
#include "magic/graphs.hpp"
#include "magic/hilbert.hpp"
#include "magic/models.hpp"
#include "magic/symmetry.hpp"

namespace magic {

using Json = nlohmann::json;

// Integers are written as JSON numbers when they fit in 64 bits and as decimal strings otherwise.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json to_json(const ConeSystem& sys);
ConeSystem system_from_json(const Json& j);
Json to_json(const LatticePoint& p);
LatticePoint lattice_point_from_json(const Json& j);
Json to_json(const HilbertBasis& hb);
HilbertBasis basis_from_json(const Json& j);
Json to_json(const Binomial& b);
Binomial binomial_from_json(const Json& j);
Json to_json(const RationalGenFn& g);
RationalGenFn series_from_json(const Json& j);
Json to_json(const QuasiPolynomial& qp);
QuasiPolynomial quasi_polynomial_from_json(const Json& j);
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json to_json(const FaceDescriptor& f);
// A preset name, or {"name":..., "generators":[[...],...]}.
Json to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);
Json samples_to_json(const std::map<std::int64_t, Integer>& samples);
std::map<std::int64_t, Integer> samples_from_json(const Json& j);

// Flat integer vector; nested arrays (squares, cubes) are flattened row-major.
Point point_from_json(const Json& j);
Square square_from_json(const Json& j);

Json parse_json(const std::string& text, const std::string& what);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace magic
