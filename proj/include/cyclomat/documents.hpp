#pragma once

#include <string>

#include <json.hpp>

#include "cyclomat/types.hpp"
#include "cyclomat/verify.hpp"

// Machine-readable output documents for the CLI. Documents are ordered JSON
// with a schema version and a command echo; all orderings (representatives,
// characters, object keys) are fixed, so identical invocations render
// byte-identical output. Exact coefficient tables are serialized as integer
// numerators over a common denominator, never as floats.

namespace cyclomat::documents {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json build_document(long n, MatrixKind kind);
Json invert_document(long n, MatrixKind kind, bool symbolic);
Json eigen_document(long n, MatrixKind kind);
Json verify_document(long n_min, long n_max,
                     const verify::SweepOptions& options);

bool all_passed(const Json& verify_doc);

std::string render_json(const Json& doc);
std::string render_table(const Json& doc);
// CSV rendering of a verify document's report list.
std::string render_csv(const Json& doc);

} // namespace cyclomat::documents
