#pragma once

#include <string>

#include <json.hpp>

#include "liesurf/exact.hpp"
#include "liesurf/types.hpp"

namespace liesurf {

using Json = nlohmann::ordered_json;

/// Rows of reals, or rows of [re, im] pairs when `real` is false.
Json matrix_to_json(const CMatrix& M, bool real);
Json matrix_to_json(const RMatrix& M);
Json vector_to_json(const RVector& v);
/// Accepts rows of numbers or of [re, im] pairs. Throws ParameterError.
CMatrix matrix_from_json(const Json& j);

/// Exact rational strings, e.g. ["3/2", "0"].
Json rational_vector_to_json(const QVector& v);
QVector rational_vector_from_json(const Json& j);

/// Deterministic serialization: two-space indent, doubles as %.17g with -0
/// written as 0, non-finite doubles as the strings "inf", "-inf", "nan".
std::string dump_json(const Json& j);

/// Throws ParameterError with the path on read or parse failure.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& what);

}  // namespace liesurf
