#pragma once

// Sparse multivariate Laurent polynomials with exact rational coefficients.
//
// Terms are kept in canonical form: no zero coefficients, no zero exponents,
// atoms inside a monomial sorted by (family, row, col) and terms sorted by
// descending graded-lexicographic order, so structural equality is
// mathematical equality and serialization is byte-stable.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lamdet/error.hpp"

namespace lamdet {

using Rational = mpq_class;

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

enum class Family : std::uint8_t {
  X0,
  X1,
  Lambda,
  Mu,
  LambdaConst,  // collapsed lambda, no indices
  MuConst,
  LambdaDiag,   // lambda_{i-j}; row holds i-j
  MuDiag,
};

struct VarAtom {
  Family family = Family::X0;
  int row = 0;
  int col = 0;

  auto operator<=>(const VarAtom&) const = default;

  // Checked factories; throw IndexError outside the atom's index domain.
  static VarAtom x0(int i, int j);
  static VarAtom x1(int i, int j);
  static VarAtom lambda(int i, int j);
  static VarAtom mu(int i, int j);
  static VarAtom lambda_const();
  static VarAtom mu_const();
  static VarAtom lambda_diag(int d);
  static VarAtom mu_diag(int d);
};

std::string to_string(const VarAtom& a);
VarAtom parse_atom(std::string_view text);
std::string_view family_tag(Family f);
Family parse_family(std::string_view tag);

/// Product of atom powers with nonzero integer exponents.
class Monomial {
 public:
  using Factor = std::pair<VarAtom, int>;

  Monomial() = default;
  explicit Monomial(const VarAtom& atom, int exponent = 1);
  /// Accepts factors in any order, merges repeats and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  int exponent(const VarAtom& atom) const;
  long degree() const noexcept;

  Monomial inverse() const;
  /// Exponent-wise minimum (the monomial gcd for Laurent monomials).
  static Monomial min_exponents(const Monomial& a, const Monomial& b);
  /// True when every exponent of `this` is >= the one in `other`.
  bool dominates(const Monomial& other) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  Monomial& operator/=(const Monomial& other) { return *this *= other.inverse(); }
  friend Monomial operator/(Monomial a, const Monomial& b) { return a /= b; }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded-lex: higher total degree first, ties broken lexicographically with
/// the smallest atom most significant.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) == std::strong_ordering::greater;
  }
};

std::string to_string(const Monomial& m);

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(implicit)
  LaurentPoly(const Rational& c);                    // NOLINT(implicit)
  LaurentPoly(const VarAtom& atom);                  // NOLINT(implicit)
  LaurentPoly(const Monomial& m, const Rational& c = 1);

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return LaurentPoly(1L); }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Single term with empty monomial (or zero).
  bool is_constant() const;
  const std::pair<const Monomial, Rational>& leading_term() const;

  Rational coefficient(const Monomial& m) const;
  std::set<VarAtom> atoms() const;
  bool has_integer_coefficients() const;
  /// Greatest monomial dividing every term (exponent-wise minimum, with
  /// absent atoms counting as exponent 0).
  Monomial content() const;

  void add_term(const Monomial& m, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Monomial& m);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Monomial& m) { return a *= m; }
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }

 private:
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly negate(const LaurentPoly& p);
LaurentPoly pow(const LaurentPoly& p, unsigned e);

/// Returns r with r * q == p. Throws DivZero when q == 0 and NotDivisible when
/// q does not divide p in the Laurent ring.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

using Valuation = std::map<VarAtom, Rational>;

/// Ring homomorphism to Q. Throws UnboundAtom / ZeroBinding.
Rational eval(const LaurentPoly& p, const Valuation& v);

/// Deterministic in (atoms, seed, bit_size); numerators are nonzero with
/// |num| < 2^bit_size and denominators in [1, 2^bit_size).
Valuation random_valuation(const std::set<VarAtom>& atoms, std::uint64_t seed,
                           int bit_size = 16);

// Canonical text form, e.g. "x1[1,1]*x1[2,2]*x0[2,2]^-1 + L[1,1]*...". Zero is "0".
std::string to_text(const LaurentPoly& p);
LaurentPoly parse_poly(std::string_view text);

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

}  // namespace lamdet
