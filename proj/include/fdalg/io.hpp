#pragma once

#include <filesystem>
#include <json.hpp>

#include "fdalg/algebra.hpp"

namespace fdalg::io {

using Json = nlohmann::ordered_json;

/// {"kind": "Q" | "Fp" | "FpT", "p": p}
Json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

/// Scalars are written as literal strings; integers are also accepted on input.
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const FieldSpec& field, std::size_t n);

/// {"field", "dim", "labels", "table"}, plus "matrix_side" and "complement"
/// when the algebra carries those tags. A "matrix_side" on input must match
/// the standard matrix-unit table.
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

/// {"columns": [...]}, column j the image of basis vector j.
Json map_to_json(const LinMap& m);
LinMap map_from_json(const Json& j, const Algebra& a);

/// {"coords": [...]}
Json element_to_json(const Element& x);
Element element_from_json(const Json& j, const Algebra& a);

/// {"basis": [...]}
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, const Algebra& a);

/// MALFORMED_INPUT when the file cannot be read or parsed.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace fdalg::io
