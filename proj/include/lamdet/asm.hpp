#pragma once

// Alternating sign matrices, their corner-sum (cumulant) matrices and the
// entrywise lattice on left cumulants.

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "lamdet/error.hpp"
#include "lamdet/grid.hpp"

namespace lamdet {

/// A validated n x n alternating sign matrix. Only constructible through
/// validate_asm (or the factories that call it), so every instance holds the
/// ASM invariants.
class AsmMatrix {
 public:
  int n() const noexcept { return entries_.rows(); }
  int operator()(int i, int j) const { return entries_(i, j); }
  const IntGrid& entries() const noexcept { return entries_; }

  /// Number of +1 entries.
  int pos_count() const noexcept { return pos_count_; }
  /// Number of -1 entries.
  int neg_count() const noexcept { return neg_count_; }

  bool is_identity() const;
  bool is_permutation() const noexcept { return neg_count_ == 0; }

  static AsmMatrix identity(int n);

  bool operator==(const AsmMatrix& other) const { return entries_ == other.entries_; }
  /// Row-major lexicographic order on entries (-1 < 0 < 1).
  std::strong_ordering operator<=>(const AsmMatrix& other) const {
    return entries_ <=> other.entries_;
  }

 private:
  friend AsmMatrix validate_asm(const IntGrid& grid);
  explicit AsmMatrix(IntGrid entries, int pos, int neg)
      : entries_(std::move(entries)), pos_count_(pos), neg_count_(neg) {}

  IntGrid entries_;
  int pos_count_ = 0;
  int neg_count_ = 0;
};

/// Checks shape, range, unit line sums and sign alternation.
/// Throws Error{Shape|Range|RowSum|Alternation}.
AsmMatrix validate_asm(const IntGrid& grid);

/// Convenience for literals in tests and examples.
AsmMatrix make_asm(const std::vector<std::vector<int>>& rows);
IntGrid make_grid(const std::vector<std::vector<int>>& rows);

constexpr int kDefaultMaxEnumerationN = 7;

/// Every n x n ASM exactly once, in row-major lexicographic order of entries.
/// Throws ResourceLimit when n > max_n.
std::vector<AsmMatrix> enumerate_asms(int n, int max_n = kDefaultMaxEnumerationN);

enum class CumulantSide { Left, Right };

/// Corner-sum matrix of an ASM. Left: sum over rows <= i, cols <= j.
/// Right: sum over rows <= i, cols >= j.
class CumulantMatrix {
 public:
  CumulantMatrix(CumulantSide side, IntGrid entries);

  CumulantSide side() const noexcept { return side_; }
  int n() const noexcept { return entries_.rows(); }
  int operator()(int i, int j) const { return entries_(i, j); }
  const IntGrid& entries() const noexcept { return entries_; }

  /// Step and boundary invariants for this side.
  bool well_formed() const;

  bool operator==(const CumulantMatrix&) const = default;

 private:
  CumulantSide side_;
  IntGrid entries_;
};

CumulantMatrix left_cumulant(const AsmMatrix& b);
CumulantMatrix right_cumulant(const AsmMatrix& b);

/// Second differences of a left cumulant; out-of-range terms read as zero.
/// Throws NotACumulant if the result is not an ASM or the side is wrong.
AsmMatrix from_left_cumulant(const CumulantMatrix& c);
AsmMatrix from_right_cumulant(const CumulantMatrix& c);
AsmMatrix from_cumulant(const CumulantMatrix& c);

/// B * J: columns reversed.
AsmMatrix reflect(const AsmMatrix& b);

/// Reverses the columns of an integer grid.
IntGrid reverse_columns(const IntGrid& g);

enum class LatticeRelation { Less, Greater, Equal, Incomparable };

std::string_view to_string(LatticeRelation r);

/// Entrywise comparison of left cumulants. Throws SizeMismatch.
LatticeRelation lattice_compare(const AsmMatrix& a, const AsmMatrix& b);
AsmMatrix lattice_meet(const AsmMatrix& a, const AsmMatrix& b);
AsmMatrix lattice_join(const AsmMatrix& a, const AsmMatrix& b);

// Text format: one row per line, entries separated by single spaces.
std::string format_grid(const IntGrid& g);
IntGrid parse_grid(const std::string& text);
IntGrid read_grid(std::istream& in);

}  // namespace lamdet
