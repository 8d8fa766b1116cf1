#pragma once

// Octahedral-recurrence pyramid, the lambda/mu/x weight system and the
// closed-form alternating-sign-matrix expansion of the apex.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamdet/asm.hpp"
#include "lamdet/convention.hpp"
#include "lamdet/interlacing.hpp"
#include "lamdet/laurent.hpp"

namespace lamdet {

using PolyGrid = Grid<LaurentPoly>;
using RationalGrid = Grid<Rational>;

/// Which implementation of the data-parallel kernels to run. Results are
/// identical; Serial is the reference.
enum class Backend { Serial, Parallel };

enum class InitMode { Generic, Ones, Custom };

std::string_view to_string(InitMode m);

struct CustomInit {
  PolyGrid x0;  // (n+1) x (n+1)
  PolyGrid x1;  // n x n
};

/// Layers x[0..n]; layer k is (n-k+1) square. `numerators[k]` holds
/// D(x[k]) (the undivided recurrence numerators) for k = 1..n-1.
struct Pyramid {
  int n = 0;
  InitMode init_mode = InitMode::Generic;
  std::vector<PolyGrid> layers;
  std::vector<PolyGrid> numerators;

  bool layer_filled(int k) const { return layers.at(k).rows() > 0; }
  const LaurentPoly& apex() const;
};

/// Populates layers 0 and 1. Throws ShapeMismatch when custom values are
/// missing, unexpected or of the wrong size.
Pyramid init_pyramid(int n, InitMode mode, const std::optional<CustomInit>& custom = std::nullopt);

/// Fills layers 2..n with
///   x[k+1]_{i,j} = (mu_{i,n-k-j+delta} x[k]_{i,j} x[k]_{i+1,j+1}
///                   + lambda_{i,j} x[k]_{i,j+1} x[k]_{i+1,j}) / x[k-1]_{i+1,j+1}
/// using exact division. Throws NotDivisible (with the cell) or IndexError.
Pyramid condense(Pyramid p, const ConventionVariant& variant, Backend backend = Backend::Parallel);

// ---------------------------------------------------------------- weights

/// F(B)_{ij} = min(i,j) - B̄_{ij} (1-based i,j).
IntGrid f_weight(const AsmMatrix& b);
/// mu-exponent matrix under the given reading; entry (i,j) is the exponent
/// of mu_{i,j}.
IntGrid g_weight(const AsmMatrix& b, MuReading reading);

enum class WeightShift { S_Lambda, T_Mu, S_Mu, S_X0 };

/// Exponent grid -> monomial over shifted atoms: S sends (i,j) to (i+1,j+1),
/// T to (i+1,j-1). `mu_col_offset` is added to mu columns. Throws IndexError
/// if a shifted index leaves the atom domain.
Monomial shift_weight(const IntGrid& w, WeightShift kind, int mu_col_offset = 0);
Monomial lambda_monomial(const IntGrid& f);
Monomial mu_monomial(const IntGrid& g, int mu_col_offset = 0);
/// x[1]^B.
Monomial standard_weight(const AsmMatrix& b);

struct TermRecord {
  AsmMatrix b;  // size k
  AsmMatrix a;  // size k-1, down_left(b) member at `bits`
  BitString bits;
  Monomial monomial;
};

struct ClosedForm {
  LaurentPoly poly;
  std::vector<TermRecord> terms;
};

/// lambda^F(B) s(lambda)^-F(A) mu^G(B) shift(mu)^-G(A) x[1]^B s(x[0])^-A
/// with mu columns offset by `mu_col_offset`.
Monomial term_monomial(const AsmMatrix& b, const AsmMatrix& a, const ConventionVariant& variant,
                       int mu_col_offset = 0);

/// Closed-form expansion of x[k]_{1,1} inside a size-n pyramid (mu columns
/// shifted by n-k). k = 1 returns the atom x1[1,1] with no term records.
ClosedForm closed_form(int n, int k, const ConventionVariant& variant,
                       Backend backend = Backend::Parallel, int max_k = kDefaultMaxEnumerationN);

/// Sum over ASM(k) of 2^neg(B).
std::uint64_t count_terms(int k, int max_k = kDefaultMaxEnumerationN);

// ---------------------------------------------------------- specialization

enum class Collapse {
  Keep,      // leave atoms as they are
  Constant,  // every indexed atom -> the family's constant atom
  Diagonal,  // (i,j) -> diagonal atom i-j
  One,       // -> 1
};

struct SpecializationRules {
  Collapse lambda = Collapse::Keep;
  Collapse mu = Collapse::Keep;
  bool x0_to_one = false;
  /// Numeric bindings, looked up for the original atom first and then for
  /// its collapsed image.
  Valuation numeric;
};

/// Substitution homomorphism applied atom by atom. Throws
/// ZeroSubstitutionIntoNegativePower.
LaurentPoly specialize(const LaurentPoly& p, const SpecializationRules& rules);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Rational det_oracle(const RationalGrid& m);

// ------------------------------------------------------ exchange identity

/// Both sides of the per-B exchange identity for B of size k, taken in the
/// size-(k+1) pyramid:
///   sum_{A in D(B)} w_k(B,A) D(x[1])^B s(x[1])^-A
///     = sum_{C in U(B)} w_{k+1}(C,B) x[1]^C
/// The left side is formed as one exact division by the product of D over
/// the -1 entries of B.
struct ExchangeResult {
  bool equal = false;
  bool lhs_divisible = true;
  LaurentPoly lhs;  // zero when !lhs_divisible
  LaurentPoly rhs;
};

ExchangeResult exchange_identity(const AsmMatrix& b, const ConventionVariant& variant,
                                 bool mu_trivial = false);

}  // namespace lamdet
