#pragma once

// Data-parallel kernels behind enumeration, condensation and the closed-form
// sum. `serial` is the reference; `omp` must return identical results for any
// thread count. Both throw the lowest-index failure when several work items
// fail, so errors are deterministic too.

#include <cstddef>
#include <functional>
#include <vector>

#include "lamdet/asm.hpp"
#include "lamdet/laurent.hpp"

namespace lamdet {

using PolyGrid = Grid<LaurentPoly>;

namespace kernels {

/// One octahedral step: next(i,j) = (mu(i,j) cur(i,j) cur(i+1,j+1)
/// + lambda(i,j) cur(i,j+1) cur(i+1,j)) / below(i+1,j+1). `layer` is the
/// index of the layer being produced and only feeds error messages.
struct LayerInputs {
  const PolyGrid& below;
  const PolyGrid& current;
  const PolyGrid& mu;
  const PolyGrid& lambda;
  int layer = 0;
};

struct LayerOutput {
  PolyGrid numerators;
  PolyGrid next;
};

/// Term generator for the closed-form sum; called once per index.
using TermFn = std::function<Monomial(std::size_t)>;

namespace serial {
std::vector<AsmMatrix> enumerate_asms(int n);
LayerOutput condense_layer(const LayerInputs& in);
/// Sum of term(0..count-1), each with coefficient 1. When `monomials` is
/// non-null it receives the generated monomials in index order.
LaurentPoly sum_terms(std::size_t count, const TermFn& term, std::vector<Monomial>* monomials = nullptr);
}  // namespace serial

namespace omp {
std::vector<AsmMatrix> enumerate_asms(int n);
LayerOutput condense_layer(const LayerInputs& in);
LaurentPoly sum_terms(std::size_t count, const TermFn& term, std::vector<Monomial>* monomials = nullptr);

/// Threads the parallel kernels will use (after LAMDET_THREADS is applied).
int thread_count();
/// Overrides the thread count; values < 1 restore the runtime default.
void set_thread_count(int threads);
}  // namespace omp

}  // namespace kernels
}  // namespace lamdet
