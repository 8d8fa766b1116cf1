#include "common.hpp"

namespace lamdet::kernels::serial {

std::vector<AsmMatrix> enumerate_asms(int n) {
  std::vector<AsmMatrix> out;
  std::vector<detail::Row> rows;
  detail::complete_asms(rows, n, out);
  return out;
}

LayerOutput condense_layer(const LayerInputs& in) {
  const int m = in.current.rows() - 1;
  LayerOutput out{PolyGrid(m, m), PolyGrid(m, m)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) detail::condense_cell(in, i, j, out.numerators(i, j), out.next(i, j));
  return out;
}

LaurentPoly sum_terms(std::size_t count, const TermFn& term, std::vector<Monomial>* monomials) {
  LaurentPoly sum;
  if (monomials) monomials->clear();
  for (std::size_t t = 0; t < count; ++t) {
    Monomial m = term(t);
    sum.add_term(m, 1);
    if (monomials) monomials->push_back(std::move(m));
  }
  return sum;
}

}  // namespace lamdet::kernels::serial
