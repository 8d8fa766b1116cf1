#include "lamdet/asm.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "lamdet/kernels.hpp"

namespace lamdet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Shape: return "Shape";
    case ErrorCode::Range: return "Range";
    case ErrorCode::RowSum: return "RowSum";
    case ErrorCode::Alternation: return "Alternation";
    case ErrorCode::NotACumulant: return "NotACumulant";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvariantBroken: return "InvariantBroken";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DivZero: return "DivZero";
    case ErrorCode::UnboundAtom: return "UnboundAtom";
    case ErrorCode::ZeroBinding: return "ZeroBinding";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::ZeroSubstitutionIntoNegativePower: return "ZeroSubstitutionIntoNegativePower";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

// Checks one line (row or column) read through `at`.
template <typename At>
void check_line(int n, At at, const char* what, int index) {
  int sum = 0;
  int last_nonzero = 0;
  for (int t = 0; t < n; ++t) {
    const int v = at(t);
    if (v == 0) continue;
    if (v == last_nonzero) {
      throw Error(ErrorCode::Alternation, std::string(what) + " " + std::to_string(index + 1) +
                                              " does not alternate in sign");
    }
    last_nonzero = v;
    sum += v;
  }
  if (sum != 1) {
    throw Error(ErrorCode::RowSum,
                std::string(what) + " " + std::to_string(index + 1) + " sums to " + std::to_string(sum));
  }
}

}  // namespace

AsmMatrix validate_asm(const IntGrid& grid) {
  const int n = grid.rows();
  if (n < 1 || !grid.square()) {
    throw Error(ErrorCode::Shape, "expected a non-empty square grid, got " + std::to_string(grid.rows()) +
                                      "x" + std::to_string(grid.cols()));
  }
  int pos = 0, neg = 0;
  for (int v : grid.data()) {
    if (v < -1 || v > 1) throw Error(ErrorCode::Range, "entry " + std::to_string(v) + " outside {-1,0,1}");
    pos += v == 1;
    neg += v == -1;
  }
  // Sums first so that e.g. [[1,0],[1,0]] reports RowSum rather than the
  // repeated +1 in column 1.
  for (int i = 0; i < n; ++i) {
    int rs = 0, cs = 0;
    for (int t = 0; t < n; ++t) {
      rs += grid(i, t);
      cs += grid(t, i);
    }
    if (rs != 1) throw Error(ErrorCode::RowSum, "row " + std::to_string(i + 1) + " sums to " + std::to_string(rs));
    if (cs != 1) throw Error(ErrorCode::RowSum, "column " + std::to_string(i + 1) + " sums to " + std::to_string(cs));
  }
  for (int i = 0; i < n; ++i) {
    check_line(n, [&](int t) { return grid(i, t); }, "row", i);
    check_line(n, [&](int t) { return grid(t, i); }, "column", i);
  }
  return AsmMatrix(grid, pos, neg);
}

IntGrid make_grid(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  IntGrid g(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error(ErrorCode::Shape, "ragged rows");
    for (int j = 0; j < c; ++j) g(i, j) = rows[i][j];
  }
  return g;
}

AsmMatrix make_asm(const std::vector<std::vector<int>>& rows) { return validate_asm(make_grid(rows)); }

bool AsmMatrix::is_identity() const {
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j)
      if (entries_(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

AsmMatrix AsmMatrix::identity(int n) {
  IntGrid g(n, n, 0);
  for (int i = 0; i < n; ++i) g(i, i) = 1;
  return validate_asm(g);
}

std::vector<AsmMatrix> enumerate_asms(int n, int max_n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (n > max_n) {
    throw Error(ErrorCode::ResourceLimit,
                "n=" + std::to_string(n) + " exceeds enumeration bound " + std::to_string(max_n));
  }
  return kernels::omp::enumerate_asms(n);
}

// ------------------------------------------------------------- cumulants

CumulantMatrix::CumulantMatrix(CumulantSide side, IntGrid entries)
    : side_(side), entries_(std::move(entries)) {
  if (entries_.rows() < 1 || !entries_.square())
    throw Error(ErrorCode::Shape, "cumulant matrix must be square and non-empty");
}

bool CumulantMatrix::well_formed() const {
  const int n = this->n();
  const auto& c = entries_;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (side_ == CumulantSide::Left) {
        const int left = c.get_or(i, j - 1, 0);
        const int up = c.get_or(i - 1, j, 0);
        if (c(i, j) - left < 0 || c(i, j) - left > 1) return false;
        if (c(i, j) - up < 0 || c(i, j) - up > 1) return false;
      } else {
        const int right = c.get_or(i, j + 1, 0);
        const int up = c.get_or(i - 1, j, 0);
        if (c(i, j) - right < 0 || c(i, j) - right > 1) return false;
        if (c(i, j) - up < 0 || c(i, j) - up > 1) return false;
      }
    }
  }
  for (int t = 0; t < n; ++t) {
    if (side_ == CumulantSide::Left) {
      if (c(n - 1, t) != t + 1 || c(t, n - 1) != t + 1) return false;
    } else {
      if (c(t, 0) != t + 1 || c(n - 1, t) != n - t) return false;
    }
  }
  return true;
}

CumulantMatrix left_cumulant(const AsmMatrix& b) {
  const int n = b.n();
  IntGrid c(n, n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c(i, j) = b(i, j) + c.get_or(i - 1, j, 0) + c.get_or(i, j - 1, 0) - c.get_or(i - 1, j - 1, 0);
  return {CumulantSide::Left, std::move(c)};
}

CumulantMatrix right_cumulant(const AsmMatrix& b) {
  const int n = b.n();
  IntGrid c(n, n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= 0; --j)
      c(i, j) = b(i, j) + c.get_or(i - 1, j, 0) + c.get_or(i, j + 1, 0) - c.get_or(i - 1, j + 1, 0);
  return {CumulantSide::Right, std::move(c)};
}

namespace {

AsmMatrix checked_asm(IntGrid g) {
  try {
    return validate_asm(g);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotACumulant, std::string("not a cumulant matrix: ") + e.what());
  }
}

}  // namespace

AsmMatrix from_left_cumulant(const CumulantMatrix& c) {
  if (c.side() != CumulantSide::Left) throw Error(ErrorCode::NotACumulant, "expected a left cumulant");
  const auto& e = c.entries();
  const int n = c.n();
  IntGrid b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b(i, j) = e(i, j) + e.get_or(i - 1, j - 1, 0) - e.get_or(i, j - 1, 0) - e.get_or(i - 1, j, 0);
  AsmMatrix out = checked_asm(std::move(b));
  if (left_cumulant(out) != c) throw Error(ErrorCode::NotACumulant, "boundary of left cumulant is wrong");
  return out;
}

AsmMatrix from_right_cumulant(const CumulantMatrix& c) {
  if (c.side() != CumulantSide::Right) throw Error(ErrorCode::NotACumulant, "expected a right cumulant");
  const auto& e = c.entries();
  const int n = c.n();
  IntGrid b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b(i, j) = e(i, j) + e.get_or(i - 1, j + 1, 0) - e.get_or(i, j + 1, 0) - e.get_or(i - 1, j, 0);
  AsmMatrix out = checked_asm(std::move(b));
  if (right_cumulant(out) != c) throw Error(ErrorCode::NotACumulant, "boundary of right cumulant is wrong");
  return out;
}

AsmMatrix from_cumulant(const CumulantMatrix& c) {
  return c.side() == CumulantSide::Left ? from_left_cumulant(c) : from_right_cumulant(c);
}

IntGrid reverse_columns(const IntGrid& g) {
  IntGrid out(g.rows(), g.cols());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) out(i, j) = g(i, g.cols() - 1 - j);
  return out;
}

AsmMatrix reflect(const AsmMatrix& b) { return validate_asm(reverse_columns(b.entries())); }

// --------------------------------------------------------------- lattice

std::string_view to_string(LatticeRelation r) {
  switch (r) {
    case LatticeRelation::Less: return "Less";
    case LatticeRelation::Greater: return "Greater";
    case LatticeRelation::Equal: return "Equal";
    case LatticeRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

namespace {

void require_same_size(const AsmMatrix& a, const AsmMatrix& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorCode::SizeMismatch,
                "sizes differ: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
}

template <typename Op>
AsmMatrix entrywise(const AsmMatrix& a, const AsmMatrix& b, Op op) {
  require_same_size(a, b);
  const auto ca = left_cumulant(a);
  const auto cb = left_cumulant(b);
  IntGrid g(a.n(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) g(i, j) = op(ca(i, j), cb(i, j));
  return from_left_cumulant(CumulantMatrix(CumulantSide::Left, std::move(g)));
}

}  // namespace

LatticeRelation lattice_compare(const AsmMatrix& a, const AsmMatrix& b) {
  require_same_size(a, b);
  const auto ca = left_cumulant(a);
  const auto cb = left_cumulant(b);
  bool some_less = false, some_greater = false;
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) {
      some_less |= ca(i, j) < cb(i, j);
      some_greater |= ca(i, j) > cb(i, j);
    }
  }
  if (some_less && some_greater) return LatticeRelation::Incomparable;
  if (some_less) return LatticeRelation::Less;
  if (some_greater) return LatticeRelation::Greater;
  return LatticeRelation::Equal;
}

AsmMatrix lattice_meet(const AsmMatrix& a, const AsmMatrix& b) {
  return entrywise(a, b, [](int x, int y) { return std::min(x, y); });
}

AsmMatrix lattice_join(const AsmMatrix& a, const AsmMatrix& b) {
  return entrywise(a, b, [](int x, int y) { return std::max(x, y); });
}

// ----------------------------------------------------------- text format

std::string format_grid(const IntGrid& g) {
  std::string out;
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      if (j != 0) out += ' ';
      out += std::to_string(g(i, j));
    }
    out += '\n';
  }
  return out;
}

IntGrid read_grid(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (rows.empty()) continue;
      break;  // blank line ends a matrix
    }
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad matrix entry '" + tok + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "no matrix rows in input");
  try {
    return make_grid(rows);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

IntGrid parse_grid(const std::string& text) {
  std::istringstream in(text);
  return read_grid(in);
}

}  // namespace lamdet
