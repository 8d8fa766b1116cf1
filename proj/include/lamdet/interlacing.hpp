#pragma once

// Up/down operators on alternating sign matrices defined through interlacing
// of cumulant matrices.
//
// Left interlacing (down): for the box of B's left cumulant
//
//     x . y
//     . a .        max(x, w-1) <= a <= min(y, z)
//     z . w
//
// Left interlacing (up): max(y, z) <= c <= min(w, x+1), last row and last
// column of the larger cumulant fixed to 1..n+1.
//
// Right interlacing uses right cumulants with max(y, z-1) <= a <= min(x, w)
// (down) and max(w, x) <= c <= min(y+1, z) (up; first column 1..n+1, last
// row n+1..1).
//
// Exactly the sites anchored at a -1 (down) or +1 (up) of the source admit
// two values. Fan members are keyed by a bit string over those anchors, in
// column-major order of the anchor positions; bit 1 picks the larger value.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lamdet/asm.hpp"

namespace lamdet {

enum class FanKind { DownLeft, UpLeft, DownRight, UpRight };

std::string_view to_string(FanKind kind);
FanKind parse_fan_kind(std::string_view text);

struct Site {
  int row = 0;  // position in the cumulant being constructed
  int col = 0;
  auto operator<=>(const Site&) const = default;
};

/// Bits over the two-valued sites of a fan, one character per site.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::string bits);
  static BitString zeros(std::size_t len) { return BitString(std::string(len, '0')); }
  static BitString ones(std::size_t len) { return BitString(std::string(len, '1')); }
  static BitString from_index(unsigned long index, std::size_t len);

  std::size_t size() const noexcept { return bits_.size(); }
  bool bit(std::size_t k) const { return bits_.at(k) == '1'; }
  const std::string& str() const noexcept { return bits_; }

  auto operator<=>(const BitString&) const = default;

 private:
  std::string bits_;
};

BitString complement(const BitString& s);

struct OperatorFan {
  AsmMatrix source;
  FanKind kind;
  std::vector<Site> sites;  // site k is driven by bit k
  std::map<BitString, AsmMatrix> members;

  const AsmMatrix& at(const BitString& s) const;
};

OperatorFan down_left(const AsmMatrix& b);
OperatorFan up_left(const AsmMatrix& b);
OperatorFan down_right(const AsmMatrix& b);
OperatorFan up_right(const AsmMatrix& b);
OperatorFan make_fan(const AsmMatrix& b, FanKind kind);

/// A^min of down_left, from the closed formula max(B̄_ij, B̄_{i+1,j+1} - 1).
AsmMatrix extremal_down(const AsmMatrix& b);
/// C^max of up_left, from the closed formula min(B̄_ij, B̄_{i-1,j-1} + 1).
AsmMatrix extremal_up(const AsmMatrix& b);

/// Adds delta (+1 or -1) to one entry of a cumulant matrix (0-based).
/// Throws InvariantBroken when the result is not a cumulant of an ASM.
CumulantMatrix corner_move(const CumulantMatrix& c, int i, int j, int delta);

}  // namespace lamdet
