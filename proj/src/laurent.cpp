#include "lamdet/laurent.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace lamdet {

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    const bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && i == 0);
    if (!ok) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  }
  Rational q;
  if (q.set_str(std::string(text), 10) != 0)
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- atoms

namespace {

VarAtom checked(Family f, int row, int col, int min_col) {
  if (row < 1 || col < min_col) {
    throw Error(ErrorCode::IndexError, "atom index out of domain: " +
                                           std::string(family_tag(f)) + "[" +
                                           std::to_string(row) + "," +
                                           std::to_string(col) + "]");
  }
  return VarAtom{f, row, col};
}

}  // namespace

VarAtom VarAtom::x0(int i, int j) { return checked(Family::X0, i, j, 1); }
VarAtom VarAtom::x1(int i, int j) { return checked(Family::X1, i, j, 1); }
VarAtom VarAtom::lambda(int i, int j) { return checked(Family::Lambda, i, j, 1); }
VarAtom VarAtom::mu(int i, int j) { return checked(Family::Mu, i, j, 0); }
VarAtom VarAtom::lambda_const() { return {Family::LambdaConst, 0, 0}; }
VarAtom VarAtom::mu_const() { return {Family::MuConst, 0, 0}; }
VarAtom VarAtom::lambda_diag(int d) { return {Family::LambdaDiag, d, 0}; }
VarAtom VarAtom::mu_diag(int d) { return {Family::MuDiag, d, 0}; }

std::string_view family_tag(Family f) {
  switch (f) {
    case Family::X0: return "x0";
    case Family::X1: return "x1";
    case Family::Lambda: return "L";
    case Family::Mu: return "M";
    case Family::LambdaConst: return "L";
    case Family::MuConst: return "M";
    case Family::LambdaDiag: return "Ld";
    case Family::MuDiag: return "Md";
  }
  return "?";
}

Family parse_family(std::string_view tag) {
  if (tag == "x0") return Family::X0;
  if (tag == "x1") return Family::X1;
  if (tag == "L") return Family::Lambda;
  if (tag == "M") return Family::Mu;
  if (tag == "Ld") return Family::LambdaDiag;
  if (tag == "Md") return Family::MuDiag;
  throw Error(ErrorCode::ParseError, "unknown atom family '" + std::string(tag) + "'");
}

std::string to_string(const VarAtom& a) {
  std::string out(family_tag(a.family));
  switch (a.family) {
    case Family::LambdaConst:
    case Family::MuConst:
      return out;
    case Family::LambdaDiag:
    case Family::MuDiag:
      return out + "[" + std::to_string(a.row) + "]";
    default:
      return out + "[" + std::to_string(a.row) + "," + std::to_string(a.col) + "]";
  }
}

namespace {

int parse_int(std::string_view s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "expected integer");
  std::size_t pos = 0;
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    pos = 1;
  }
  if (pos == s.size()) throw Error(ErrorCode::ParseError, "expected integer");
  long v = 0;
  for (; pos < s.size(); ++pos) {
    if (s[pos] < '0' || s[pos] > '9')
      throw Error(ErrorCode::ParseError, "bad integer '" + std::string(s) + "'");
    v = v * 10 + (s[pos] - '0');
    if (v > (1L << 30)) throw Error(ErrorCode::ParseError, "integer too large");
  }
  return static_cast<int>(neg ? -v : v);
}

}  // namespace

VarAtom parse_atom(std::string_view text) {
  if (text == "L") return VarAtom::lambda_const();
  if (text == "M") return VarAtom::mu_const();
  const auto open = text.find('[');
  if (open == std::string_view::npos || text.back() != ']')
    throw Error(ErrorCode::ParseError, "bad atom '" + std::string(text) + "'");
  const Family f = parse_family(text.substr(0, open));
  const auto inner = text.substr(open + 1, text.size() - open - 2);
  if (f == Family::LambdaDiag) return VarAtom::lambda_diag(parse_int(inner));
  if (f == Family::MuDiag) return VarAtom::mu_diag(parse_int(inner));
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "bad atom '" + std::string(text) + "'");
  const int row = parse_int(inner.substr(0, comma));
  const int col = parse_int(inner.substr(comma + 1));
  try {
    switch (f) {
      case Family::X0: return VarAtom::x0(row, col);
      case Family::X1: return VarAtom::x1(row, col);
      case Family::Lambda: return VarAtom::lambda(row, col);
      default: return VarAtom::mu(row, col);
    }
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

// ------------------------------------------------------------ monomials

Monomial::Monomial(const VarAtom& atom, int exponent) {
  if (exponent != 0) factors_.emplace_back(atom, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [atom, e] : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == atom) {
      m.factors_.back().second += e;
      if (m.factors_.back().second == 0) m.factors_.pop_back();
    } else if (e != 0) {
      m.factors_.emplace_back(atom, e);
    }
  }
  return m;
}

int Monomial::exponent(const VarAtom& atom) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), atom,
                             [](const Factor& f, const VarAtom& a) { return f.first < a; });
  return (it != factors_.end() && it->first == atom) ? it->second : 0;
}

long Monomial::degree() const noexcept {
  long d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& f : m.factors_) f.second = -f.second;
  return m;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  std::vector<Factor> out;
  out.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      const int e = a->second + b->second;
      if (e != 0) out.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  factors_ = std::move(out);
  return *this;
}

Monomial Monomial::min_exponents(const Monomial& x, const Monomial& y) {
  Monomial m;
  auto a = x.factors_.begin();
  auto b = y.factors_.begin();
  while (a != x.factors_.end() || b != y.factors_.end()) {
    if (b == y.factors_.end() || (a != x.factors_.end() && a->first < b->first)) {
      if (a->second < 0) m.factors_.push_back(*a);
      ++a;
    } else if (a == x.factors_.end() || b->first < a->first) {
      if (b->second < 0) m.factors_.push_back(*b);
      ++b;
    } else {
      m.factors_.emplace_back(a->first, std::min(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return m;
}

bool Monomial::dominates(const Monomial& other) const {
  for (const auto& [atom, e] : other.factors_) {
    if (exponent(atom) < e) return false;
  }
  for (const auto& [atom, e] : factors_) {
    if (e < 0 && other.exponent(atom) > e) return false;
  }
  return true;
}

std::strong_ordering grlex_compare(const Monomial& x, const Monomial& y) {
  if (auto c = x.degree() <=> y.degree(); c != 0) return c;
  const auto& a = x.factors();
  const auto& b = y.factors();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      return a[i].second <=> 0;
    }
    if (i == a.size() || b[j].first < a[i].first) {
      return 0 <=> b[j].second;
    }
    if (a[i].second != b[j].second) return a[i].second <=> b[j].second;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& [atom, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += to_string(atom);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------- polynomials

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly::LaurentPoly(const VarAtom& atom) { terms_.emplace(Monomial(atom), Rational(1)); }

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

const std::pair<const Monomial, Rational>& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading term");
  return *terms_.begin();
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<VarAtom> LaurentPoly::atoms() const {
  std::set<VarAtom> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

bool LaurentPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

Monomial LaurentPoly::content() const {
  if (terms_.empty()) return {};
  auto it = terms_.begin();
  Monomial acc = it->first;
  for (++it; it != terms_.end(); ++it) acc = Monomial::min_exponents(acc, it->first);
  return acc;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

// grlex is compatible with multiplication, so the shifted terms arrive in map
// order and emplace_hint at end() is O(1).
LaurentPoly& LaurentPoly::operator*=(const Monomial& m) {
  if (m.empty()) return *this;
  TermMap out;
  for (auto& [k, c] : terms_) out.emplace_hint(out.end(), k * m, c);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly negate(const LaurentPoly& p) { return -p; }

LaurentPoly pow(const LaurentPoly& p, unsigned e) {
  LaurentPoly result = LaurentPoly::one();
  LaurentPoly base = p;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivZero, "division by the zero polynomial");
  if (p.is_zero()) return {};

  // Strip monomial content so both sides are ordinary polynomials; leading
  // term division is only well-founded there.
  const Monomial p_content = p.content();
  const Monomial q_content = q.content();
  LaurentPoly num = p * p_content.inverse();
  const LaurentPoly den = q * q_content.inverse();

  const auto& [den_lead, den_coeff] = den.leading_term();
  LaurentPoly quotient;
  while (!num.is_zero()) {
    const auto [lead, coeff] = num.leading_term();
    if (!lead.dominates(den_lead)) {
      throw Error(ErrorCode::NotDivisible,
                  "nonzero remainder with leading term " + to_string(lead));
    }
    const Monomial factor = lead / den_lead;
    const Rational c = coeff / den_coeff;
    quotient.add_term(factor, c);
    for (const auto& [m, dc] : den.terms()) num.add_term(m * factor, -c * dc);
  }
  quotient *= p_content / q_content;
  return quotient;
}

// ------------------------------------------------------------ evaluation

namespace {

Rational rational_pow(const Rational& base, int e) {
  Rational out;
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  if (e < 0) std::swap(num, den);
  out = Rational(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

Rational eval(const LaurentPoly& p, const Valuation& v) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [atom, e] : m.factors()) {
      auto it = v.find(atom);
      if (it == v.end()) throw Error(ErrorCode::UnboundAtom, "unbound atom " + to_string(atom));
      if (it->second == 0) throw Error(ErrorCode::ZeroBinding, "zero binding for " + to_string(atom));
      term *= rational_pow(it->second, e);
    }
    total += term;
  }
  return total;
}

Valuation random_valuation(const std::set<VarAtom>& atoms, std::uint64_t seed, int bit_size) {
  if (bit_size < 1 || bit_size > 62)
    throw Error(ErrorCode::InvalidArgument, "bit_size must be in [1,62]");
  // mt19937_64 output is fully specified by the standard; reduce by modulo
  // rather than a distribution so values are identical across libraries.
  std::mt19937_64 rng(seed);
  const std::uint64_t bound = (std::uint64_t{1} << bit_size) - 1;
  Valuation v;
  for (const auto& atom : atoms) {
    const auto num_mag = static_cast<long>(rng() % bound) + 1;
    const bool negative = (rng() & 1U) != 0;
    const auto den = static_cast<long>(rng() % bound) + 1;
    Rational q(negative ? -num_mag : num_mag, den);
    q.canonicalize();
    v.emplace(atom, q);
  }
  return v;
}

// --------------------------------------------------------- serialization

std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    if (m.empty()) {
      out += rational_to_string(c);
      continue;
    }
    if (c == -1) {
      out += "-";
    } else if (c != 1) {
      out += rational_to_string(c) + "*";
    }
    out += to_string(m);
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + sep.size();
  }
}

bool looks_numeric(std::string_view s) {
  return !s.empty() && s.find_first_not_of("-0123456789/") == std::string_view::npos;
}

}  // namespace

LaurentPoly parse_poly(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ' || text.back() == '\r'))
    text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
  if (text == "0") return {};
  LaurentPoly out;
  for (auto term : split(text, " + ")) {
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term");
    Rational coeff = 1;
    auto factors = split(term, "*");
    std::size_t first = 0;
    if (looks_numeric(factors[0])) {
      coeff = parse_rational(factors[0]);
      first = 1;
      if (factors.size() == 1) {
        out.add_term(Monomial{}, coeff);
        continue;
      }
    } else if (factors[0].front() == '-') {
      coeff = -1;
      factors[0].remove_prefix(1);
    }
    std::vector<Monomial::Factor> fs;
    for (std::size_t i = first; i < factors.size(); ++i) {
      auto f = factors[i];
      int e = 1;
      if (const auto caret = f.find('^'); caret != std::string_view::npos) {
        e = parse_int(f.substr(caret + 1));
        f = f.substr(0, caret);
        if (e == 0) throw Error(ErrorCode::ParseError, "zero exponent");
      }
      fs.emplace_back(parse_atom(f), e);
    }
    out.add_term(Monomial::from_factors(std::move(fs)), coeff);
  }
  return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json mono = nlohmann::json::array();
    for (const auto& [atom, e] : m.factors()) {
      mono.push_back({std::string(family_tag(atom.family)), atom.row, atom.col, e});
    }
    terms.push_back({{"coeff", rational_to_string(c)}, {"monomial", mono}});
  }
  return {{"text", to_text(p)}, {"terms", terms}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  try {
    LaurentPoly out;
    for (const auto& t : j.at("terms")) {
      std::vector<Monomial::Factor> fs;
      for (const auto& f : t.at("monomial")) {
        const std::string tag = f.at(0).get<std::string>();
        const int row = f.at(1).get<int>();
        const int col = f.at(2).get<int>();
        const int e = f.at(3).get<int>();
        VarAtom atom;
        if ((tag == "L" || tag == "M") && row == 0 && col == 0) {
          atom = tag == "L" ? VarAtom::lambda_const() : VarAtom::mu_const();
        } else {
          switch (parse_family(tag)) {
            case Family::X0: atom = VarAtom::x0(row, col); break;
            case Family::X1: atom = VarAtom::x1(row, col); break;
            case Family::Lambda: atom = VarAtom::lambda(row, col); break;
            case Family::Mu: atom = VarAtom::mu(row, col); break;
            case Family::LambdaDiag: atom = VarAtom::lambda_diag(row); break;
            default: atom = VarAtom::mu_diag(row); break;
          }
        }
        fs.emplace_back(atom, e);
      }
      out.add_term(Monomial::from_factors(std::move(fs)),
                   parse_rational(t.at("coeff").get<std::string>()));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace lamdet
