#pragma once

// Readings of the mu-coefficient conventions. The recurrence indexes its
// mu coefficient as mu_{i, n-k-j+delta}; the closed form weighs each ASM by
// a mu-exponent matrix G and shifts the A-side weight by `mu_shift`. Each
// registry entry fixes one combination so the equivalence harness can test
// it against the recurrence.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace lamdet {

enum class MuReading {
  PrintedProduct,           // max(i-j+1,0) - B̲_{i,k+1-j}
  MatrixDifference,         // (I̲ - B̲)_{i,j}
  MatrixDifferenceFlipped,  // (I̲ - B̲)_{i,k+1-j}
  ReflectedLeft,            // min(i,j) - B̲_{i,k+1-j}, the lambda weight of B·J
};

/// Where the A-side mu weight lands: T sends (i,j) to (i+1,j-1), S to (i+1,j+1).
enum class MuShift { T, S };

std::string_view to_string(MuReading r);
MuReading parse_mu_reading(std::string_view text);
std::string_view to_string(MuShift s);
MuShift parse_mu_shift(std::string_view text);

struct ConventionVariant {
  std::string id;
  MuReading reading = MuReading::PrintedProduct;
  int recurrence_mu_col = 0;  // delta in mu_{i, n-k-j+delta}
  MuShift mu_shift = MuShift::T;
  std::string notes;

  bool operator==(const ConventionVariant&) const = default;
};

/// The shipped registry, in report order.
std::vector<ConventionVariant> default_registry();

/// The variant that validated symbolically against the recurrence; used
/// whenever a caller does not name one.
const ConventionVariant& default_variant();

/// Throws InvalidArgument for an unknown id.
const ConventionVariant& find_variant(const std::vector<ConventionVariant>& registry, std::string_view id);

/// Parses a comma-separated id list, or "all".
std::vector<ConventionVariant> select_variants(const std::vector<ConventionVariant>& registry,
                                               std::string_view spec);

nlohmann::json to_json(const ConventionVariant& v);
ConventionVariant variant_from_json(const nlohmann::json& j);
/// {"variants": [...]}; ids must be unique.
std::vector<ConventionVariant> registry_from_json(const nlohmann::json& j);

}  // namespace lamdet
