#include <omp.h>

#include <cstdlib>

#include "common.hpp"

namespace lamdet::kernels::omp {

namespace {

int& override_threads() {
  static int threads = [] {
    if (const char* env = std::getenv("LAMDET_THREADS")) {
      const int t = std::atoi(env);
      if (t > 0) return t;
    }
    return 0;
  }();
  return threads;
}

}  // namespace

int thread_count() {
  const int t = override_threads();
  return t > 0 ? t : omp_get_max_threads();
}

void set_thread_count(int threads) { override_threads() = threads > 0 ? threads : 0; }

std::vector<AsmMatrix> enumerate_asms(int n) {
  // Subtrees below each admissible first row are independent; concatenating
  // them in first-row order reproduces the serial order.
  const auto firsts = detail::next_cumulant_rows(detail::Row(n, 0), 0, n);
  const int count = static_cast<int>(firsts.size());
  std::vector<std::vector<AsmMatrix>> parts(count);
  std::vector<std::exception_ptr> errors(count);

#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (int f = 0; f < count; ++f) {
    try {
      std::vector<detail::Row> rows{firsts[f]};
      detail::complete_asms(rows, n, parts[f]);
    } catch (...) {
      errors[f] = std::current_exception();
    }
  }
  detail::rethrow_first(errors);

  std::vector<AsmMatrix> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

LayerOutput condense_layer(const LayerInputs& in) {
  const int m = in.current.rows() - 1;
  LayerOutput out{PolyGrid(m, m), PolyGrid(m, m)};
  const int cells = m * m;
  std::vector<std::exception_ptr> errors(cells);

#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (int c = 0; c < cells; ++c) {
    const int i = c / m, j = c % m;
    try {
      detail::condense_cell(in, i, j, out.numerators(i, j), out.next(i, j));
    } catch (...) {
      errors[c] = std::current_exception();
    }
  }
  detail::rethrow_first(errors);
  return out;
}

LaurentPoly sum_terms(std::size_t count, const TermFn& term, std::vector<Monomial>* monomials) {
  std::vector<Monomial> generated(count);
  std::vector<std::exception_ptr> errors(count);
  const long long total = static_cast<long long>(count);

#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count())
  for (long long t = 0; t < total; ++t) {
    try {
      generated[t] = term(static_cast<std::size_t>(t));
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  detail::rethrow_first(errors);

  // Fixed-size blocks summed in parallel, then merged in block order.
  constexpr std::size_t kBlock = 256;
  const long long blocks = static_cast<long long>((count + kBlock - 1) / kBlock);
  std::vector<LaurentPoly> partial(blocks);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (long long b = 0; b < blocks; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(count, lo + kBlock);
    for (std::size_t t = lo; t < hi; ++t) partial[b].add_term(generated[t], 1);
  }

  LaurentPoly sum;
  for (auto& p : partial) sum += p;
  if (monomials) *monomials = std::move(generated);
  return sum;
}

}  // namespace lamdet::kernels::omp
