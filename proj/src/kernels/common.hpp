#pragma once

// Pieces shared by the serial and OpenMP kernels. Keeping the per-item work
// here means the two backends differ only in how items are scheduled.

#include <exception>
#include <string>
#include <vector>

#include "lamdet/kernels.hpp"

namespace lamdet::kernels::detail {

using Row = std::vector<int>;

/// Cumulant rows that may follow `prev` as row `i` (0-based) of an n x n
/// left cumulant, ordered so that the ASM rows they induce ascend
/// lexicographically.
std::vector<Row> next_cumulant_rows(const Row& prev, int i, int n);

/// Depth-first completion of a partial stack of cumulant rows; appends the
/// finished ASMs in lexicographic order.
void complete_asms(std::vector<Row>& rows, int n, std::vector<AsmMatrix>& out);

/// The ASM row induced by cumulant row `cur` on top of `prev`.
Row asm_row(const Row& prev, const Row& cur);

/// Numerator and quotient for one cell of an octahedral step.
void condense_cell(const LayerInputs& in, int i, int j, LaurentPoly& numerator, LaurentPoly& value);

/// Rethrows the first captured failure, if any.
void rethrow_first(const std::vector<std::exception_ptr>& errors);

}  // namespace lamdet::kernels::detail
