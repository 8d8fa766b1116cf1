#include "lamdet/interlacing.hpp"

#include <algorithm>

namespace lamdet {

std::string_view to_string(FanKind kind) {
  switch (kind) {
    case FanKind::DownLeft: return "down-left";
    case FanKind::UpLeft: return "up-left";
    case FanKind::DownRight: return "down-right";
    case FanKind::UpRight: return "up-right";
  }
  return "?";
}

FanKind parse_fan_kind(std::string_view text) {
  if (text == "down-left") return FanKind::DownLeft;
  if (text == "up-left") return FanKind::UpLeft;
  if (text == "down-right") return FanKind::DownRight;
  if (text == "up-right") return FanKind::UpRight;
  throw Error(ErrorCode::InvalidArgument, "unknown fan kind '" + std::string(text) + "'");
}

BitString::BitString(std::string bits) : bits_(std::move(bits)) {
  if (bits_.find_first_not_of("01") != std::string::npos)
    throw Error(ErrorCode::ParseError, "bit string must contain only 0 and 1");
}

BitString BitString::from_index(unsigned long index, std::size_t len) {
  std::string s(len, '0');
  for (std::size_t k = 0; k < len; ++k)
    if ((index >> (len - 1 - k)) & 1UL) s[k] = '1';
  return BitString(std::move(s));
}

BitString complement(const BitString& s) {
  std::string out = s.str();
  for (char& ch : out) ch = ch == '0' ? '1' : '0';
  return BitString(std::move(out));
}

const AsmMatrix& OperatorFan::at(const BitString& s) const {
  auto it = members.find(s);
  if (it == members.end()) throw Error(ErrorCode::InvalidArgument, "no fan member for bits " + s.str());
  return it->second;
}

namespace {

struct Bounds {
  IntGrid lo;
  IntGrid hi;
};

Bounds interlacing_bounds(const AsmMatrix& b, FanKind kind) {
  const int n = b.n();
  switch (kind) {
    case FanKind::DownLeft: {
      const auto c = left_cumulant(b);
      Bounds out{IntGrid(n - 1, n - 1), IntGrid(n - 1, n - 1)};
      for (int i = 0; i < n - 1; ++i) {
        for (int j = 0; j < n - 1; ++j) {
          const int x = c(i, j), y = c(i, j + 1), z = c(i + 1, j), w = c(i + 1, j + 1);
          out.lo(i, j) = std::max(x, w - 1);
          out.hi(i, j) = std::min(y, z);
        }
      }
      return out;
    }
    case FanKind::UpLeft: {
      const auto cum = left_cumulant(b);
      const auto& c = cum.entries();
      Bounds out{IntGrid(n + 1, n + 1), IntGrid(n + 1, n + 1)};
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          if (i == n || j == n) {
            out.lo(i, j) = out.hi(i, j) = (i == n ? j : i) + 1;
            continue;
          }
          const int x = c.get_or(i - 1, j - 1, 0), y = c.get_or(i - 1, j, 0);
          const int z = c.get_or(i, j - 1, 0), w = c(i, j);
          out.lo(i, j) = std::max(y, z);
          out.hi(i, j) = std::min(w, x + 1);
        }
      }
      return out;
    }
    case FanKind::DownRight: {
      const auto c = right_cumulant(b);
      Bounds out{IntGrid(n - 1, n - 1), IntGrid(n - 1, n - 1)};
      for (int i = 0; i < n - 1; ++i) {
        for (int j = 0; j < n - 1; ++j) {
          const int x = c(i, j), y = c(i, j + 1), z = c(i + 1, j), w = c(i + 1, j + 1);
          out.lo(i, j) = std::max(y, z - 1);
          out.hi(i, j) = std::min(x, w);
        }
      }
      return out;
    }
    case FanKind::UpRight: {
      const auto cum = right_cumulant(b);
      const auto& c = cum.entries();
      Bounds out{IntGrid(n + 1, n + 1), IntGrid(n + 1, n + 1)};
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          if (j == 0 || i == n) {
            out.lo(i, j) = out.hi(i, j) = j == 0 ? i + 1 : n + 1 - j;
            continue;
          }
          const int x = c.get_or(i - 1, j - 1, 0), y = c.get_or(i - 1, j, 0);
          const int z = c.get_or(i, j - 1, 0), w = c.get_or(i, j, 0);
          out.lo(i, j) = std::max(w, x);
          out.hi(i, j) = std::min(y + 1, z);
        }
      }
      return out;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "bad fan kind");
}

// Two-valued site driven by the anchor entry at (p, q) of the source.
Site anchor_site(FanKind kind, int p, int q) {
  switch (kind) {
    case FanKind::DownLeft: return {p - 1, q - 1};
    case FanKind::UpLeft: return {p, q};
    case FanKind::DownRight: return {p - 1, q};
    case FanKind::UpRight: return {p, q + 1};
  }
  return {};
}

bool is_down(FanKind kind) { return kind == FanKind::DownLeft || kind == FanKind::DownRight; }
bool is_left(FanKind kind) { return kind == FanKind::DownLeft || kind == FanKind::UpLeft; }

}  // namespace

OperatorFan make_fan(const AsmMatrix& b, FanKind kind) {
  const int n = b.n();
  if (is_down(kind) && n < 2) throw Error(ErrorCode::InvalidArgument, "down operators need n >= 2");

  const Bounds bounds = interlacing_bounds(b, kind);
  const int anchor_value = is_down(kind) ? -1 : 1;

  std::vector<Site> sites;
  for (int q = 0; q < n; ++q)
    for (int p = 0; p < n; ++p)
      if (b(p, q) == anchor_value) sites.push_back(anchor_site(kind, p, q));

  // The box rule must leave exactly the anchored sites free, each with two
  // consecutive values.
  const int m = bounds.lo.rows();
  std::vector<Site> free_sites;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int span = bounds.hi(i, j) - bounds.lo(i, j);
      if (span < 0 || span > 1) {
        throw Error(ErrorCode::InvariantBroken,
                    "interlacing bounds collapse at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (span == 1) free_sites.push_back({i, j});
    }
  }
  auto sorted_sites = sites;
  std::sort(sorted_sites.begin(), sorted_sites.end());
  if (sorted_sites != free_sites)
    throw Error(ErrorCode::InvariantBroken, "two-valued sites do not match the anchor entries");

  OperatorFan fan{b, kind, sites, {}};
  const auto side = is_left(kind) ? CumulantSide::Left : CumulantSide::Right;
  const unsigned long count = 1UL << sites.size();
  for (unsigned long idx = 0; idx < count; ++idx) {
    const BitString bits = BitString::from_index(idx, sites.size());
    IntGrid c = bounds.lo;
    for (std::size_t k = 0; k < sites.size(); ++k)
      if (bits.bit(k)) c(sites[k].row, sites[k].col) = bounds.hi(sites[k].row, sites[k].col);
    fan.members.emplace(bits, from_cumulant(CumulantMatrix(side, std::move(c))));
  }
  return fan;
}

OperatorFan down_left(const AsmMatrix& b) { return make_fan(b, FanKind::DownLeft); }
OperatorFan up_left(const AsmMatrix& b) { return make_fan(b, FanKind::UpLeft); }
OperatorFan down_right(const AsmMatrix& b) { return make_fan(b, FanKind::DownRight); }
OperatorFan up_right(const AsmMatrix& b) { return make_fan(b, FanKind::UpRight); }

AsmMatrix extremal_down(const AsmMatrix& b) {
  const int n = b.n();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "extremal_down needs n >= 2");
  const auto c = left_cumulant(b);
  IntGrid a(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) a(i, j) = std::max(c(i, j), c(i + 1, j + 1) - 1);
  return from_left_cumulant(CumulantMatrix(CumulantSide::Left, std::move(a)));
}

AsmMatrix extremal_up(const AsmMatrix& b) {
  const int n = b.n();
  const auto cum = left_cumulant(b);
  const auto& c = cum.entries();
  IntGrid up(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == n || j == n) {
        up(i, j) = (i == n ? j : i) + 1;
      } else {
        up(i, j) = std::min(c(i, j), c.get_or(i - 1, j - 1, 0) + 1);
      }
    }
  }
  return from_left_cumulant(CumulantMatrix(CumulantSide::Left, std::move(up)));
}

CumulantMatrix corner_move(const CumulantMatrix& c, int i, int j, int delta) {
  if (delta != 1 && delta != -1) throw Error(ErrorCode::InvalidArgument, "delta must be +1 or -1");
  if (!c.entries().in_range(i, j)) throw Error(ErrorCode::InvariantBroken, "corner outside the matrix");
  IntGrid g = c.entries();
  g(i, j) += delta;
  CumulantMatrix out(c.side(), std::move(g));
  if (!out.well_formed()) {
    throw Error(ErrorCode::InvariantBroken,
                "step constraints fail after move at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return out;
}

}  // namespace lamdet
