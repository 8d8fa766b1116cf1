#pragma once

// JSON forms of the value types. Matrices are {"n": int, "rows": [[int]]};
// fans list members sorted by bit string.

#include "json.hpp"
#include "lamdet/asm.hpp"
#include "lamdet/engine.hpp"
#include "lamdet/interlacing.hpp"

namespace lamdet {

nlohmann::json grid_to_json(const IntGrid& g);
IntGrid grid_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AsmMatrix& b);
/// Validates; throws ParseError for malformed JSON and the ASM codes otherwise.
AsmMatrix asm_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CumulantMatrix& c);
nlohmann::json to_json(const OperatorFan& fan);
nlohmann::json to_json(const ClosedForm& cf, bool with_terms);
nlohmann::json to_json(const Pyramid& p);

}  // namespace lamdet
