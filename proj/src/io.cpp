#include "lamdet/io.hpp"

namespace lamdet {

nlohmann::json grid_to_json(const IntGrid& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < g.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < g.cols(); ++j) row.push_back(g(i, j));
    rows.push_back(std::move(row));
  }
  return {{"n", g.rows()}, {"rows", rows}};
}

IntGrid grid_from_json(const nlohmann::json& j) {
  try {
    const auto& rows = j.at("rows");
    if (!rows.is_array()) throw Error(ErrorCode::ParseError, "'rows' must be an array");
    std::vector<std::vector<int>> data;
    for (const auto& r : rows) data.push_back(r.get<std::vector<int>>());
    IntGrid g = make_grid(data);
    if (j.contains("n") && j.at("n").get<int>() != g.rows())
      throw Error(ErrorCode::ParseError, "'n' does not match the number of rows");
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad matrix JSON: ") + e.what());
  }
}

nlohmann::json to_json(const AsmMatrix& b) { return grid_to_json(b.entries()); }

AsmMatrix asm_from_json(const nlohmann::json& j) { return validate_asm(grid_from_json(j)); }

nlohmann::json to_json(const CumulantMatrix& c) {
  auto j = grid_to_json(c.entries());
  j["side"] = c.side() == CumulantSide::Left ? "left" : "right";
  return j;
}

nlohmann::json to_json(const OperatorFan& fan) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& [bits, m] : fan.members) members.push_back({{"bits", bits.str()}, {"matrix", to_json(m)}});
  nlohmann::json sites = nlohmann::json::array();
  for (const auto& s : fan.sites) sites.push_back({s.row + 1, s.col + 1});
  return {{"kind", std::string(to_string(fan.kind))},
          {"source", to_json(fan.source)},
          {"sites", sites},
          {"members", members}};
}

nlohmann::json to_json(const ClosedForm& cf, bool with_terms) {
  nlohmann::json j = {{"poly", to_json(cf.poly)}, {"term_count", cf.terms.size()}};
  if (with_terms) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : cf.terms) {
      terms.push_back({{"B", to_json(t.b)},
                       {"A", to_json(t.a)},
                       {"bits", t.bits.str()},
                       {"monomial", to_string(t.monomial)}});
    }
    j["terms"] = std::move(terms);
  }
  return j;
}

nlohmann::json to_json(const Pyramid& p) {
  nlohmann::json layers = nlohmann::json::array();
  for (std::size_t k = 0; k < p.layers.size(); ++k) {
    const auto& g = p.layers[k];
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < g.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < g.cols(); ++j) row.push_back(to_text(g(i, j)));
      rows.push_back(std::move(row));
    }
    layers.push_back({{"k", k}, {"size", g.rows()}, {"cells", rows}});
  }
  nlohmann::json apex = p.layer_filled(p.n) ? to_json(p.apex()) : nlohmann::json(nullptr);
  return {{"n", p.n}, {"init", std::string(to_string(p.init_mode))}, {"apex", apex}, {"layers", layers}};
}

}  // namespace lamdet
