#include "lamdet/convention.hpp"

#include <set>

#include "lamdet/error.hpp"

namespace lamdet {

std::string_view to_string(MuReading r) {
  switch (r) {
    case MuReading::PrintedProduct: return "printed-product";
    case MuReading::MatrixDifference: return "matrix-difference";
    case MuReading::MatrixDifferenceFlipped: return "matrix-difference-flipped";
    case MuReading::ReflectedLeft: return "reflected-left";
  }
  return "?";
}

MuReading parse_mu_reading(std::string_view text) {
  for (auto r : {MuReading::PrintedProduct, MuReading::MatrixDifference, MuReading::MatrixDifferenceFlipped,
                 MuReading::ReflectedLeft})
    if (to_string(r) == text) return r;
  throw Error(ErrorCode::ParseError, "unknown mu reading '" + std::string(text) + "'");
}

std::string_view to_string(MuShift s) { return s == MuShift::T ? "t" : "s"; }

MuShift parse_mu_shift(std::string_view text) {
  if (text == "t") return MuShift::T;
  if (text == "s") return MuShift::S;
  throw Error(ErrorCode::ParseError, "unknown mu shift '" + std::string(text) + "'");
}

std::vector<ConventionVariant> default_registry() {
  using R = MuReading;
  return {
      {"pp-d0", R::PrintedProduct, 0, MuShift::T, "printed product max(i-j+1,0) - B̲_{i,k+1-j}, recurrence mu_{i,n-k-j}"},
      {"pp-d1", R::PrintedProduct, 1, MuShift::T, "printed product, recurrence mu_{i,n-k-j+1}"},
      {"md-d0", R::MatrixDifference, 0, MuShift::T, "mu^(I̲-B̲) read entrywise, recurrence mu_{i,n-k-j}"},
      {"md-d1", R::MatrixDifference, 1, MuShift::T, "mu^(I̲-B̲) read entrywise, recurrence mu_{i,n-k-j+1}"},
      {"mdf-d0", R::MatrixDifferenceFlipped, 0, MuShift::T, "(I̲-B̲)_{i,k+1-j}, recurrence mu_{i,n-k-j}"},
      {"mdf-d1", R::MatrixDifferenceFlipped, 1, MuShift::T, "(I̲-B̲)_{i,k+1-j}, recurrence mu_{i,n-k-j+1}"},
      {"reflected-s-d1", R::ReflectedLeft, 1, MuShift::S,
       "mu weight = lambda weight of B·J, A side shifted by s, recurrence mu_{i,n-k-j+1}"},
  };
}

const ConventionVariant& default_variant() {
  static const ConventionVariant v = default_registry().back();
  return v;
}

const ConventionVariant& find_variant(const std::vector<ConventionVariant>& registry, std::string_view id) {
  for (const auto& v : registry)
    if (v.id == id) return v;
  throw Error(ErrorCode::InvalidArgument, "unknown convention variant '" + std::string(id) + "'");
}

std::vector<ConventionVariant> select_variants(const std::vector<ConventionVariant>& registry,
                                               std::string_view spec) {
  if (spec == "all") return registry;
  std::vector<ConventionVariant> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto comma = spec.find(',', pos);
    const auto id = spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (id.empty()) throw Error(ErrorCode::InvalidArgument, "empty variant id in '" + std::string(spec) + "'");
    out.push_back(find_variant(registry, id));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

nlohmann::json to_json(const ConventionVariant& v) {
  return {{"id", v.id},
          {"mu_exponent_reading", std::string(to_string(v.reading))},
          {"recurrence_mu_col", v.recurrence_mu_col},
          {"mu_shift", std::string(to_string(v.mu_shift))},
          {"notes", v.notes}};
}

ConventionVariant variant_from_json(const nlohmann::json& j) {
  try {
    ConventionVariant v;
    v.id = j.at("id").get<std::string>();
    v.reading = parse_mu_reading(j.at("mu_exponent_reading").get<std::string>());
    v.recurrence_mu_col = j.value("recurrence_mu_col", 0);
    v.mu_shift = parse_mu_shift(j.value("mu_shift", std::string("t")));
    v.notes = j.value("notes", std::string());
    if (v.id.empty()) throw Error(ErrorCode::ParseError, "variant id must be non-empty");
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad variant: ") + e.what());
  }
}

std::vector<ConventionVariant> registry_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variants") || !j["variants"].is_array())
    throw Error(ErrorCode::ParseError, "registry must be an object with a 'variants' array");
  std::vector<ConventionVariant> out;
  std::set<std::string> ids;
  for (const auto& item : j["variants"]) {
    out.push_back(variant_from_json(item));
    if (!ids.insert(out.back().id).second)
      throw Error(ErrorCode::ParseError, "duplicate variant id '" + out.back().id + "'");
  }
  return out;
}

}  // namespace lamdet
