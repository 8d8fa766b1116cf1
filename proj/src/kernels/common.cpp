#include "common.hpp"

#include <algorithm>

namespace lamdet::kernels::detail {

Row asm_row(const Row& prev, const Row& cur) {
  const int n = static_cast<int>(cur.size());
  Row b(n);
  for (int j = 0; j < n; ++j) {
    const int left = j > 0 ? cur[j - 1] : 0;
    const int diag = j > 0 ? prev[j - 1] : 0;
    b[j] = cur[j] - left - prev[j] + diag;
  }
  return b;
}

std::vector<Row> next_cumulant_rows(const Row& prev, int i, int n) {
  std::vector<Row> rows;
  Row cur(n);
  // Each entry steps by 0 or 1 from its left and upper neighbours; the row
  // must end at i+1.
  auto extend = [&](auto&& self, int j) -> void {
    if (j == n) {
      if (cur[n - 1] == i + 1) rows.push_back(cur);
      return;
    }
    const int left = j > 0 ? cur[j - 1] : 0;
    for (int v = prev[j]; v <= prev[j] + 1; ++v) {
      if (v - left < 0 || v - left > 1) continue;
      // Remaining columns can add at most one each.
      if (v + (n - 1 - j) < i + 1) continue;
      cur[j] = v;
      self(self, j + 1);
    }
  };
  extend(extend, 0);

  std::vector<std::pair<Row, Row>> keyed;
  keyed.reserve(rows.size());
  for (auto& r : rows) keyed.emplace_back(asm_row(prev, r), std::move(r));
  std::sort(keyed.begin(), keyed.end());
  rows.clear();
  for (auto& [key, r] : keyed) rows.push_back(std::move(r));
  return rows;
}

void complete_asms(std::vector<Row>& rows, int n, std::vector<AsmMatrix>& out) {
  const int i = static_cast<int>(rows.size());
  if (i == n) {
    IntGrid g(n, n);
    Row zero(n, 0);
    for (int r = 0; r < n; ++r) {
      const Row b = asm_row(r > 0 ? rows[r - 1] : zero, rows[r]);
      for (int c = 0; c < n; ++c) g(r, c) = b[c];
    }
    out.push_back(validate_asm(g));
    return;
  }
  const Row prev = i > 0 ? rows.back() : Row(n, 0);
  for (auto& next : next_cumulant_rows(prev, i, n)) {
    rows.push_back(std::move(next));
    complete_asms(rows, n, out);
    rows.pop_back();
  }
}

void condense_cell(const LayerInputs& in, int i, int j, LaurentPoly& numerator, LaurentPoly& value) {
  const auto& x = in.current;
  numerator = in.mu(i, j) * x(i, j) * x(i + 1, j + 1) + in.lambda(i, j) * x(i, j + 1) * x(i + 1, j);
  try {
    value = exact_div(numerator, in.below(i + 1, j + 1));
  } catch (const Error& e) {
    throw Error(e.code(), "layer " + std::to_string(in.layer) + " cell (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + "): " + e.what());
  }
}

void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace lamdet::kernels::detail
