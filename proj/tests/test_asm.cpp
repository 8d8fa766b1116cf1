#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "lamdet/asm.hpp"
#include "lamdet/io.hpp"
#include "oracles.hpp"
#include "worked_example.hpp"

using namespace lamdet;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Validate, WorkedExampleCounts) {
  const auto x = make_asm(worked::X);
  EXPECT_EQ(x.n(), 4);
  EXPECT_EQ(x.pos_count(), 6);
  EXPECT_EQ(x.neg_count(), 2);
  EXPECT_EQ(x.pos_count() - x.neg_count(), x.n());
}

TEST(Validate, SmallestAsm) {
  const auto one = make_asm({{1}});
  EXPECT_TRUE(one.is_identity());
  EXPECT_EQ(validate_asm(one.entries()), one);
}

TEST(Validate, Errors) {
  EXPECT_EQ(code_of([] { make_asm({{1, 0}, {1, 0}}); }), ErrorCode::RowSum);
  EXPECT_EQ(code_of([] { make_asm({{-1, 1, 1}, {1, 0, 0}, {1, 0, 0}}); }), ErrorCode::Alternation);
  EXPECT_EQ(code_of([] { make_asm({{2, -1}, {-1, 2}}); }), ErrorCode::Range);
  EXPECT_EQ(code_of([] { validate_asm(IntGrid(2, 3)); }), ErrorCode::Shape);
  EXPECT_EQ(code_of([] { validate_asm(IntGrid()); }), ErrorCode::Shape);
  // Sums fine, but the middle row has two +1 in a row and ends on -1.
  EXPECT_EQ(code_of([] { make_asm({{0, 0, 1}, {1, 1, -1}, {0, 0, 1}}); }), ErrorCode::Alternation);
}

TEST(Enumerate, CountsMatchMonotoneTriangles) {
  const std::vector<long> expected{1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(oracle::monotone_triangle_count(n), expected[n - 1]);
    EXPECT_EQ(static_cast<long>(enumerate_asms(n).size()), oracle::monotone_triangle_count(n)) << "n=" << n;
  }
}

TEST(Enumerate, OrderMatchesBacktracking) {
  for (int n = 1; n <= 5; ++n) {
    const auto got = enumerate_asms(n);
    const auto want = oracle::backtrack_asms(n);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) ASSERT_EQ(got[i].entries(), want[i]) << "n=" << n << " i=" << i;
  }
}

TEST(Enumerate, SmallCasesAndLimits) {
  const auto one = enumerate_asms(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], make_asm({{1}}));
  EXPECT_EQ(enumerate_asms(3).size(), 7u);
  EXPECT_EQ(code_of([] { enumerate_asms(8); }), ErrorCode::ResourceLimit);
  EXPECT_EQ(code_of([] { enumerate_asms(4, 3); }), ErrorCode::ResourceLimit);
  EXPECT_EQ(code_of([] { enumerate_asms(0); }), ErrorCode::InvalidArgument);
}

TEST(Cumulant, WorkedExample) {
  const auto x = make_asm(worked::X);
  EXPECT_EQ(left_cumulant(x).entries(), make_grid(worked::X_left));
  EXPECT_EQ(right_cumulant(x).entries(), make_grid(worked::X_right));
  const auto y = make_asm(worked::Y);
  EXPECT_EQ(left_cumulant(y).entries(), make_grid(worked::Y_left));
  EXPECT_EQ(right_cumulant(y).entries(), make_grid(worked::Y_right));
}

TEST(Cumulant, Identity) {
  for (int n = 1; n <= 5; ++n) {
    const auto id = AsmMatrix::identity(n);
    const auto l = left_cumulant(id), r = right_cumulant(id);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        EXPECT_EQ(l(i, j), std::min(i, j) + 1);
        EXPECT_EQ(r(i, j), std::max(i - j + 1, 0));
      }
    }
  }
}

TEST(Cumulant, Recovery) {
  const auto x = make_asm(worked::X);
  EXPECT_EQ(from_left_cumulant(CumulantMatrix(CumulantSide::Left, make_grid(worked::X_left))), x);
  EXPECT_EQ(from_right_cumulant(CumulantMatrix(CumulantSide::Right, make_grid(worked::X_right))), x);
  EXPECT_EQ(from_left_cumulant(CumulantMatrix(CumulantSide::Left, make_grid({{1}}))), make_asm({{1}}));
  EXPECT_EQ(from_right_cumulant(CumulantMatrix(CumulantSide::Right, make_grid({{1}}))), make_asm({{1}}));
  EXPECT_EQ(from_left_cumulant(CumulantMatrix(CumulantSide::Left, make_grid({{1, 1, 1}, {1, 2, 2}, {1, 2, 3}}))),
            make_asm(worked::I3));
  EXPECT_EQ(from_right_cumulant(CumulantMatrix(CumulantSide::Right, make_grid({{1, 1, 0}, {2, 1, 1}, {3, 2, 1}}))),
            make_asm(worked::Center));
}

TEST(Cumulant, RecoveryRejectsNonCumulants) {
  EXPECT_EQ(code_of([] { from_left_cumulant(CumulantMatrix(CumulantSide::Left, make_grid({{2, 1}, {1, 2}}))); }),
            ErrorCode::NotACumulant);
  EXPECT_EQ(code_of([] { from_left_cumulant(CumulantMatrix(CumulantSide::Right, make_grid({{1}}))); }),
            ErrorCode::NotACumulant);
}

TEST(Cumulant, ExhaustiveInvariants) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& b : enumerate_asms(n)) {
      const auto l = left_cumulant(b), r = right_cumulant(b);
      ASSERT_TRUE(l.well_formed());
      ASSERT_TRUE(r.well_formed());
      ASSERT_EQ(from_left_cumulant(l), b);
      ASSERT_EQ(from_right_cumulant(r), b);
      ASSERT_EQ(from_cumulant(r), b);
      bool at_bound = true;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          // Row sums: left part up to j plus right part from j+1 is the row count.
          ASSERT_EQ(l(i, j) + r.entries().get_or(i, j + 1, 0), i + 1);
          ASSERT_LE(l(i, j), std::min(i, j) + 1);
          at_bound = at_bound && l(i, j) == std::min(i, j) + 1;
        }
      }
      ASSERT_EQ(at_bound, b.is_identity());
      ASSERT_EQ(right_cumulant(reflect(b)).entries(), reverse_columns(l.entries()));
    }
  }
}

TEST(Reflect, ReversesColumns) {
  EXPECT_EQ(reflect(make_asm(worked::Y)), AsmMatrix::identity(2));
  const auto x = make_asm(worked::X);
  const auto rx = reflect(x);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(rx(i, j), x(i, 3 - j));
  EXPECT_EQ(reflect(rx), x);
}

TEST(Lattice, WorkedDiamond) {
  const auto a00 = make_asm(worked::down_left_X.at("00").matrix);
  const auto a01 = make_asm(worked::down_left_X.at("01").matrix);
  const auto a10 = make_asm(worked::down_left_X.at("10").matrix);
  const auto a11 = make_asm(worked::down_left_X.at("11").matrix);
  EXPECT_EQ(lattice_join(a01, a10), a11);
  EXPECT_EQ(lattice_meet(a01, a10), a00);
  EXPECT_EQ(lattice_compare(a01, a10), LatticeRelation::Incomparable);
  EXPECT_EQ(lattice_compare(a00, a11), LatticeRelation::Less);
  EXPECT_EQ(lattice_compare(a11, a01), LatticeRelation::Greater);
  EXPECT_EQ(lattice_compare(a01, a01), LatticeRelation::Equal);
  EXPECT_EQ(lattice_meet(a01, a01), a01);
}

TEST(Lattice, SizeMismatch) {
  EXPECT_EQ(code_of([] { lattice_meet(AsmMatrix::identity(2), AsmMatrix::identity(3)); }), ErrorCode::SizeMismatch);
  EXPECT_EQ(code_of([] { lattice_compare(AsmMatrix::identity(2), AsmMatrix::identity(3)); }),
            ErrorCode::SizeMismatch);
}

TEST(Lattice, AxiomsExhaustive) {
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_asms(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto m = lattice_meet(a, b), j = lattice_join(a, b);
        ASSERT_EQ(m, lattice_meet(b, a));
        ASSERT_EQ(j, lattice_join(b, a));
        ASSERT_EQ(lattice_meet(a, j), a);
        ASSERT_EQ(lattice_join(a, m), a);
        ASSERT_NE(lattice_compare(m, a), LatticeRelation::Greater);
        ASSERT_NE(lattice_compare(m, a), LatticeRelation::Incomparable);
      }
    }
    // Associativity over all triples is affordable up to n = 4 (42^3).
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto ab_m = lattice_meet(a, b), ab_j = lattice_join(a, b);
        for (const auto& c : all) {
          ASSERT_EQ(lattice_meet(ab_m, c), lattice_meet(a, lattice_meet(b, c)));
          ASSERT_EQ(lattice_join(ab_j, c), lattice_join(a, lattice_join(b, c)));
        }
      }
    }
  }
}

TEST(TextFormat, RoundTrip) {
  const auto x = make_asm(worked::X);
  const std::string text = format_grid(x.entries());
  EXPECT_EQ(text, "0 1 0 0\n1 -1 1 0\n0 1 -1 1\n0 0 1 0\n");
  EXPECT_EQ(parse_grid(text), x.entries());
  std::istringstream in(text + "\n" + text);
  EXPECT_EQ(read_grid(in), x.entries());
  EXPECT_EQ(read_grid(in), x.entries());
  EXPECT_EQ(code_of([] { parse_grid("1 x\n0 1\n"); }), ErrorCode::ParseError);
}

TEST(JsonFormat, RoundTrip) {
  const auto x = make_asm(worked::X);
  const auto j = to_json(x);
  EXPECT_EQ(j.dump(), R"({"n":4,"rows":[[0,1,0,0],[1,-1,1,0],[0,1,-1,1],[0,0,1,0]]})");
  EXPECT_EQ(asm_from_json(j), x);
  EXPECT_EQ(code_of([] { asm_from_json(nlohmann::json{{"rows", 3}}); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { asm_from_json(nlohmann::json{{"n", 1}, {"rows", {{1, 0}, {0, 1}}}}); }),
            ErrorCode::ParseError);
}
