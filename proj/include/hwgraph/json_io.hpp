#pragma once

#include <string>

#include "json.hpp"

#include "hwgraph/graph.hpp"
#include "hwgraph/matrix.hpp"
#include "hwgraph/report.hpp"

namespace hwg {

using Json = nlohmann::ordered_json;

/// {"dim": d, "entries": [[re, im], ...]} row-major.
Json to_json(const Matrix& m);
/// A vector as a column: {"rows": d, "cols": 1, "entries": [[re, im], ...]}.
Json to_json(const Vector& v);
Json to_json(const CheckResult& c);
Json to_json(const VerificationReport& r);
Json to_json(const AnticliqueReport& r);

Matrix matrix_from_json(const Json& j);
Vector vector_from_json(const Json& j);

/// Serializes with every floating-point value printed as %.17g, so that equal
/// doubles always produce equal text. Non-finite values become null.
std::string dump(const Json& j, int indent = 2);

}  // namespace hwg
