#include "lamdet/engine.hpp"

#include <algorithm>

#include "lamdet/kernels.hpp"

namespace lamdet {

std::string_view to_string(InitMode m) {
  switch (m) {
    case InitMode::Generic: return "generic";
    case InitMode::Ones: return "ones";
    case InitMode::Custom: return "custom";
  }
  return "?";
}

const LaurentPoly& Pyramid::apex() const {
  if (!layer_filled(n)) throw Error(ErrorCode::InvalidArgument, "pyramid has not been condensed");
  return layers[n](0, 0);
}

namespace {

PolyGrid atom_grid(int size, VarAtom (*make)(int, int)) {
  PolyGrid g(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) g(i, j) = make(i + 1, j + 1);
  return g;
}

void require_shape(const PolyGrid& g, int size, const char* what) {
  if (g.rows() != size || g.cols() != size) {
    throw Error(ErrorCode::ShapeMismatch, std::string(what) + " must be " + std::to_string(size) + "x" +
                                              std::to_string(size) + ", got " + std::to_string(g.rows()) + "x" +
                                              std::to_string(g.cols()));
  }
}

}  // namespace

Pyramid init_pyramid(int n, InitMode mode, const std::optional<CustomInit>& custom) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "pyramid size must be >= 1");
  if ((mode == InitMode::Custom) != custom.has_value())
    throw Error(ErrorCode::ShapeMismatch, "custom initial values are required exactly for custom init");

  Pyramid p;
  p.n = n;
  p.init_mode = mode;
  p.layers.assign(n + 1, PolyGrid());
  p.numerators.assign(n + 1, PolyGrid());
  switch (mode) {
    case InitMode::Generic:
      p.layers[0] = atom_grid(n + 1, &VarAtom::x0);
      p.layers[1] = atom_grid(n, &VarAtom::x1);
      break;
    case InitMode::Ones:
      p.layers[0] = PolyGrid(n + 1, n + 1, LaurentPoly::one());
      p.layers[1] = atom_grid(n, &VarAtom::x1);
      break;
    case InitMode::Custom:
      require_shape(custom->x0, n + 1, "x[0]");
      require_shape(custom->x1, n, "x[1]");
      p.layers[0] = custom->x0;
      p.layers[1] = custom->x1;
      break;
  }
  return p;
}

Pyramid condense(Pyramid p, const ConventionVariant& variant, Backend backend) {
  const int n = p.n;
  if (static_cast<int>(p.layers.size()) != n + 1 || !p.layer_filled(0) || !p.layer_filled(1))
    throw Error(ErrorCode::InvalidArgument, "layers 0 and 1 must be filled before condensing");
  p.numerators.assign(n + 1, PolyGrid());

  for (int k = 1; k < n; ++k) {
    const int m = n - k;
    PolyGrid mu(m, m), lambda(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        mu(i, j) = VarAtom::mu(i + 1, n - k - (j + 1) + variant.recurrence_mu_col);
        lambda(i, j) = VarAtom::lambda(i + 1, j + 1);
      }
    }
    const kernels::LayerInputs in{p.layers[k - 1], p.layers[k], mu, lambda, k + 1};
    auto out = backend == Backend::Serial ? kernels::serial::condense_layer(in) : kernels::omp::condense_layer(in);
    p.numerators[k] = std::move(out.numerators);
    p.layers[k + 1] = std::move(out.next);
  }
  return p;
}

// ------------------------------------------------------------------ weights

IntGrid f_weight(const AsmMatrix& b) {
  const int k = b.n();
  const auto cum = left_cumulant(b);
  IntGrid f(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) f(i, j) = std::min(i, j) + 1 - cum(i, j);
  return f;
}

IntGrid g_weight(const AsmMatrix& b, MuReading reading) {
  const int k = b.n();
  const auto cum = right_cumulant(b);
  auto id_right = [](int i, int j) { return std::max(i - j + 1, 0); };  // I̲ at 0-based (i,j)
  IntGrid g(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int flipped = k - 1 - j;
      switch (reading) {
        case MuReading::PrintedProduct: g(i, j) = id_right(i, j) - cum(i, flipped); break;
        case MuReading::MatrixDifference: g(i, j) = id_right(i, j) - cum(i, j); break;
        case MuReading::MatrixDifferenceFlipped: g(i, j) = id_right(i, flipped) - cum(i, flipped); break;
        case MuReading::ReflectedLeft: g(i, j) = std::min(i, j) + 1 - cum(i, flipped); break;
      }
    }
  }
  return g;
}

Monomial shift_weight(const IntGrid& w, WeightShift kind, int mu_col_offset) {
  std::vector<Monomial::Factor> factors;
  for (int i = 0; i < w.rows(); ++i) {
    for (int j = 0; j < w.cols(); ++j) {
      if (w(i, j) == 0) continue;
      // 1-based (i+1, j+1) shifted by s to (i+2, j+2) or by t to (i+2, j).
      VarAtom a;
      switch (kind) {
        case WeightShift::S_Lambda: a = VarAtom::lambda(i + 2, j + 2); break;
        case WeightShift::T_Mu: a = VarAtom::mu(i + 2, j + mu_col_offset); break;
        case WeightShift::S_Mu: a = VarAtom::mu(i + 2, j + 2 + mu_col_offset); break;
        case WeightShift::S_X0: a = VarAtom::x0(i + 2, j + 2); break;
      }
      factors.emplace_back(a, w(i, j));
    }
  }
  return Monomial::from_factors(std::move(factors));
}

Monomial lambda_monomial(const IntGrid& f) {
  std::vector<Monomial::Factor> factors;
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      if (f(i, j) != 0) factors.emplace_back(VarAtom::lambda(i + 1, j + 1), f(i, j));
  return Monomial::from_factors(std::move(factors));
}

Monomial mu_monomial(const IntGrid& g, int mu_col_offset) {
  std::vector<Monomial::Factor> factors;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (g(i, j) != 0) factors.emplace_back(VarAtom::mu(i + 1, j + 1 + mu_col_offset), g(i, j));
  return Monomial::from_factors(std::move(factors));
}

Monomial standard_weight(const AsmMatrix& b) {
  std::vector<Monomial::Factor> factors;
  for (int i = 0; i < b.n(); ++i)
    for (int j = 0; j < b.n(); ++j)
      if (b(i, j) != 0) factors.emplace_back(VarAtom::x1(i + 1, j + 1), b(i, j));
  return Monomial::from_factors(std::move(factors));
}

namespace {

// lambda/mu part of a closed-form term, without the x atoms.
Monomial coefficient_weight(const AsmMatrix& b, const AsmMatrix& a, const ConventionVariant& v, int mu_col_offset) {
  const auto mu_kind = v.mu_shift == MuShift::T ? WeightShift::T_Mu : WeightShift::S_Mu;
  Monomial m = lambda_monomial(f_weight(b));
  m /= shift_weight(f_weight(a), WeightShift::S_Lambda);
  m *= mu_monomial(g_weight(b, v.reading), mu_col_offset);
  m /= shift_weight(g_weight(a, v.reading), mu_kind, mu_col_offset);
  return m;
}

struct TermIndex {
  std::size_t b;
  BitString bits;
  const AsmMatrix* a;
};

}  // namespace

Monomial term_monomial(const AsmMatrix& b, const AsmMatrix& a, const ConventionVariant& variant, int mu_col_offset) {
  if (a.n() != b.n() - 1) throw Error(ErrorCode::SizeMismatch, "A must be one size smaller than B");
  Monomial m = coefficient_weight(b, a, variant, mu_col_offset);
  m *= standard_weight(b);
  m /= shift_weight(a.entries(), WeightShift::S_X0);
  return m;
}

ClosedForm closed_form(int n, int k, const ConventionVariant& variant, Backend backend, int max_k) {
  if (k < 1 || k > n)
    throw Error(ErrorCode::InvalidArgument,
                "closed form needs 1 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  ClosedForm out;
  if (k == 1) {
    out.poly = LaurentPoly(VarAtom::x1(1, 1));
    return out;
  }

  const auto asms = enumerate_asms(k, max_k);
  std::vector<OperatorFan> fans;
  fans.reserve(asms.size());
  for (const auto& b : asms) fans.push_back(down_left(b));

  std::vector<TermIndex> index;
  for (std::size_t bi = 0; bi < fans.size(); ++bi)
    for (const auto& [bits, a] : fans[bi].members) index.push_back({bi, bits, &a});

  const int offset = n - k;
  const kernels::TermFn term = [&](std::size_t t) {
    return term_monomial(asms[index[t].b], *index[t].a, variant, offset);
  };
  std::vector<Monomial> monomials;
  out.poly = backend == Backend::Serial ? kernels::serial::sum_terms(index.size(), term, &monomials)
                                        : kernels::omp::sum_terms(index.size(), term, &monomials);
  out.terms.reserve(index.size());
  for (std::size_t t = 0; t < index.size(); ++t)
    out.terms.push_back({asms[index[t].b], *index[t].a, index[t].bits, std::move(monomials[t])});
  return out;
}

std::uint64_t count_terms(int k, int max_k) {
  std::uint64_t total = 0;
  for (const auto& b : enumerate_asms(k, max_k)) total += std::uint64_t{1} << b.neg_count();
  return total;
}

// ------------------------------------------------------------ specialization

namespace {

// Image of one atom: either a replacement atom or a rational value.
struct Image {
  std::optional<VarAtom> atom;
  Rational value = 1;
};

Image collapse(const VarAtom& a, const SpecializationRules& r) {
  auto apply = [&](Collapse mode, VarAtom (*constant)(), VarAtom (*diag)(int)) -> Image {
    switch (mode) {
      case Collapse::Keep: return {a, 1};
      case Collapse::Constant: return {constant(), 1};
      case Collapse::Diagonal: return {diag(a.row - a.col), 1};
      case Collapse::One: return {std::nullopt, 1};
    }
    return {a, 1};
  };
  switch (a.family) {
    case Family::Lambda: return apply(r.lambda, &VarAtom::lambda_const, &VarAtom::lambda_diag);
    case Family::Mu: return apply(r.mu, &VarAtom::mu_const, &VarAtom::mu_diag);
    case Family::X0: return r.x0_to_one ? Image{std::nullopt, 1} : Image{a, 1};
    default: return {a, 1};
  }
}

Rational rational_pow(const Rational& base, int e, const VarAtom& atom) {
  if (base == 0) {
    if (e < 0)
      throw Error(ErrorCode::ZeroSubstitutionIntoNegativePower,
                  "zero substituted for " + to_string(atom) + " which has exponent " + std::to_string(e));
    return 0;
  }
  Rational r = 1;
  const Rational b = e < 0 ? Rational(1 / base) : base;
  for (int k = 0; k < std::abs(e); ++k) r *= b;
  return r;
}

}  // namespace

LaurentPoly specialize(const LaurentPoly& p, const SpecializationRules& rules) {
  LaurentPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    Rational c = coeff;
    std::vector<Monomial::Factor> factors;
    for (const auto& [atom, e] : mono.factors()) {
      if (auto it = rules.numeric.find(atom); it != rules.numeric.end()) {
        c *= rational_pow(it->second, e, atom);
        continue;
      }
      const Image img = collapse(atom, rules);
      if (!img.atom) {
        c *= rational_pow(img.value, e, atom);
        continue;
      }
      if (auto it = rules.numeric.find(*img.atom); it != rules.numeric.end()) {
        c *= rational_pow(it->second, e, atom);
        continue;
      }
      factors.emplace_back(*img.atom, e);
    }
    // A zero factor with positive exponent kills the term; keep scanning so
    // a zero into a negative power elsewhere still raises.
    if (c != 0) out.add_term(Monomial::from_factors(std::move(factors)), c);
  }
  return out;
}

Rational det_oracle(const RationalGrid& m) {
  if (!m.square()) throw Error(ErrorCode::Shape, "determinant needs a square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  RationalGrid a = m;
  Rational prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n && swap < 0; ++r)
        if (a(r, k) != 0) swap = r;
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// --------------------------------------------------------- exchange identity

ExchangeResult exchange_identity(const AsmMatrix& b, const ConventionVariant& variant, bool mu_trivial) {
  const int k = b.n();
  // Layer x[1] of the size-(k+1) pyramid and its recurrence numerators.
  auto x1 = [](int i, int j) { return LaurentPoly(VarAtom::x1(i, j)); };
  auto d = [&](int i, int j) {
    return LaurentPoly(VarAtom::mu(i, k - j + variant.recurrence_mu_col)) * x1(i, j) * x1(i + 1, j + 1) +
           LaurentPoly(VarAtom::lambda(i, j)) * x1(i, j + 1) * x1(i + 1, j);
  };

  LaurentPoly numerator_factor = LaurentPoly::one(), denominator = LaurentPoly::one();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (b(i, j) == 1) numerator_factor = numerator_factor * d(i + 1, j + 1);
      if (b(i, j) == -1) denominator = denominator * d(i + 1, j + 1);
    }
  }

  LaurentPoly sum;
  if (k == 1) {
    sum = LaurentPoly::one();
  } else {
    for (const auto& [bits, a] : down_left(b).members) {
      Monomial m = coefficient_weight(b, a, variant, 0);
      // s(x[1])^-A
      for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
          if (a(i, j) != 0) m *= Monomial(VarAtom::x1(i + 2, j + 2), -a(i, j));
      sum.add_term(m, 1);
    }
  }

  LaurentPoly rhs;
  for (const auto& [bits, c] : up_left(b).members) {
    Monomial m = coefficient_weight(c, b, variant, 0);
    m *= standard_weight(c);
    rhs.add_term(m, 1);
  }

  LaurentPoly numerator = sum * numerator_factor;
  if (mu_trivial) {
    SpecializationRules drop_mu;
    drop_mu.mu = Collapse::One;
    numerator = specialize(numerator, drop_mu);
    denominator = specialize(denominator, drop_mu);
    rhs = specialize(rhs, drop_mu);
  }

  ExchangeResult out;
  out.rhs = std::move(rhs);
  try {
    out.lhs = exact_div(numerator, denominator);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDivisible) throw;
    out.lhs_divisible = false;
    return out;
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace lamdet
