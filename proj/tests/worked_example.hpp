#pragma once

// The 4x4 matrix X with two -1 entries, the 2x2 swap Y, and their fans as
// usually displayed. Fan members are keyed by bit string; cumulants are listed next
// to their ASMs where the display gives them.

#include <map>
#include <string>
#include <vector>

#include "lamdet/asm.hpp"

namespace worked {

using Rows = std::vector<std::vector<int>>;

inline const Rows X = {{0, 1, 0, 0}, {1, -1, 1, 0}, {0, 1, -1, 1}, {0, 0, 1, 0}};
inline const Rows X_left = {{0, 1, 1, 1}, {1, 1, 2, 2}, {1, 2, 2, 3}, {1, 2, 3, 4}};
inline const Rows X_right = {{1, 1, 0, 0}, {2, 1, 1, 0}, {3, 2, 1, 1}, {4, 3, 2, 1}};

inline const Rows Y = {{0, 1}, {1, 0}};
inline const Rows Y_left = {{0, 1}, {1, 2}};
inline const Rows Y_right = {{1, 1}, {2, 1}};

inline const Rows I3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
inline const Rows J3 = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
inline const Rows Center = {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}};

struct Member {
  Rows matrix;
  Rows cumulant;
};

// Down-left fan of X (left cumulants).
inline const std::map<std::string, Member> down_left_X = {
    {"00", {Center, {{0, 1, 1}, {1, 1, 2}, {1, 2, 3}}}},
    {"01", {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, {{0, 1, 1}, {1, 2, 2}, {1, 2, 3}}}},
    {"10", {{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, {{1, 1, 1}, {1, 1, 2}, {1, 2, 3}}}},
    {"11", {I3, {{1, 1, 1}, {1, 2, 2}, {1, 2, 3}}}},
};

// Up-left fan of Y (left cumulants).
inline const std::map<std::string, Member> up_left_Y = {
    {"00", {J3, {{0, 0, 1}, {0, 1, 2}, {1, 2, 3}}}},
    {"01", {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, {{0, 1, 1}, {0, 1, 2}, {1, 2, 3}}}},
    {"10", {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}, {1, 1, 2}, {1, 2, 3}}}},
    {"11", {Center, {{0, 1, 1}, {1, 1, 2}, {1, 2, 3}}}},
};

// Down-right fan of X (right cumulants). The usual display of the right cumulant of the
// "00" member repeats the "01" one; the value here is the right cumulant of
// the identity, which is what the "00" ASM actually has.
inline const std::map<std::string, Member> down_right_X = {
    {"00", {I3, {{1, 0, 0}, {2, 1, 0}, {3, 2, 1}}}},
    {"01", {{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, {{1, 0, 0}, {2, 1, 1}, {3, 2, 1}}}},
    {"10", {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, {{1, 1, 0}, {2, 1, 0}, {3, 2, 1}}}},
    {"11", {Center, {{1, 1, 0}, {2, 1, 1}, {3, 2, 1}}}},
};
inline const Rows down_right_X_00_misprint = {{1, 0, 0}, {2, 1, 1}, {3, 2, 1}};

// Up-right fan of Y (right cumulants).
inline const std::map<std::string, Member> up_right_Y = {
    {"00", {Center, {{1, 1, 0}, {2, 1, 1}, {3, 2, 1}}}},
    {"01", {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, {{1, 1, 1}, {2, 1, 1}, {3, 2, 1}}}},
    {"10", {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, {{1, 1, 0}, {2, 2, 1}, {3, 2, 1}}}},
    {"11", {J3, {{1, 1, 1}, {2, 2, 1}, {3, 2, 1}}}},
};

}  // namespace worked
