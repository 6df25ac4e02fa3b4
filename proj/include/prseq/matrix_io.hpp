#pragma once

#include <string>

#include <json.hpp>

#include "prseq/matrix.hpp"

namespace prseq {

/// Matrix wire format: {"n": int, "entries": [[int|"p/q", ...], ...]}.
/// Integer entries may be plain JSON integers; anything else is an exact
/// fraction string. The reader rejects asymmetric or malformed input.
nlohmann::json matrix_to_json(const SymMatrix& b);
SymMatrix matrix_from_json(const nlohmann::json& j);

SymMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const SymMatrix& b);

}  // namespace prseq
