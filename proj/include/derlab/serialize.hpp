#pragma once

// JSON encodings. Complex numbers are [re, im] pairs; doubles are written
// with round-trip precision, so decode(encode(x)) is bit-exact.

#include <string>

#include "json.hpp"

#include "derlab/localtools.hpp"
#include "derlab/twolocal.hpp"

namespace derlab {

using Json = nlohmann::json;

Json to_json(Complex c);
Json to_json(const CVector& v);
Json to_json(const AlgebraElement& a);
Json to_json(const ModuleSpec& spec);
Json to_json(const ModuleElement& x);
Json to_json(const Operator& a);
Json to_json(const LambdaMatrix& l);
/// Map file: {"dim": D, "matrix": [[[re, im], ...], ...]} row-major.
Json to_json(const LinearMapOnAlgebra& d);
/// [{"at": coords, "value": coords}, ...]
Json to_json(const PointMap& p);
Json to_json(const LocalReport& r);
Json to_json(const TwoLocalReport& r);

// Decoders throw ParseError on malformed input.
Complex complex_from_json(const Json& j);
CVector vector_from_json(const Json& j);
AlgebraElement algebra_element_from_json(const Json& j);
ModuleSpec module_spec_from_json(const Json& j);
ModuleElement module_element_from_json(const Json& j);
Operator operator_from_json(const Json& j);
LinearMapOnAlgebra map_from_json(const Json& j);
PointMap point_map_from_json(const Json& j);

/// Parses text, mapping library exceptions to ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace derlab
