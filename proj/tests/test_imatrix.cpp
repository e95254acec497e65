#include <gtest/gtest.h>

#include "irbar/checks.hpp"
#include "irbar/errors.hpp"
#include "irbar/imatrix.hpp"
#include "irbar/rng.hpp"

using namespace irbar;

namespace {

Interval iv(double u, double v) { return Interval::from_coords(u, v); }

IMatrix random_matrix(std::uint64_t seed, std::size_t n) {
  IMatrix a(n);
  for (std::size_t i = 0; i < n * n; ++i) {
    CounterRng rng(seed, i);
    a(i / n, i % n) = sample_class(rng);
  }
  return a;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(Determinant, WorkedMatrices) {
  EXPECT_EQ(det(matrix_b2()), iv(7, 4));
  EXPECT_EQ(format_interval(det(matrix_b2())), "-[-7,-4]");
  EXPECT_EQ(det(matrix_b1()), iv(7, -6));
  EXPECT_FALSE(is_invertible(matrix_b1()));
  EXPECT_TRUE(is_invertible(matrix_b2()));
  EXPECT_EQ(det(identity(3)), Interval::one());
}

TEST(Determinant, TwoByTwoFormula) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const IMatrix a = random_matrix(s, 2);
    EXPECT_EQ(det(a), mul(a(0, 0), a(1, 1)) - mul(a(0, 1), a(1, 0)));
    EXPECT_EQ(det(a), det_cofactor(a));
    EXPECT_EQ(det(transpose(a)), det(a));
  }
}

TEST(Determinant, TransposeInvarianceLargerOrders) {
  for (std::size_t n : {3u, 4u}) {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const IMatrix a = random_matrix(1000 + s, n);
      const Interval d = det(a), dt = det(transpose(a));
      EXPECT_LE(norm_inf(d - dt), 1e-9 * std::max(1.0, norm_inf(d)));
    }
  }
}

TEST(Adjugate, TwoByTwoLayout) {
  const IMatrix a = matrix_b2();
  const IMatrix adj = adjugate(a);
  EXPECT_EQ(adj(0, 0), a(1, 1));
  EXPECT_EQ(adj(0, 1), negate(a(0, 1)));
  EXPECT_EQ(adj(1, 0), negate(a(1, 0)));
  EXPECT_EQ(adj(1, 1), a(0, 0));
}

TEST(Adjugate, ProductIsDeterminantOnDiagonal) {
  // A adj(A) = det(A) I when the off-diagonal entries are non-degenerate.
  for (std::uint64_t s = 0; s < 300; ++s) {
    const IMatrix a = random_matrix(2000 + s, 2);
    if (a(0, 1).is_degenerate() || a(1, 0).is_degenerate()) continue;
    const IMatrix p = matmul(a, adjugate(a));
    const Interval d = det(a);
    const double tol = 1e-12 * std::max(1.0, norm_inf(p));
    EXPECT_LE(norm_inf(p(0, 0) - d), tol);
    EXPECT_LE(norm_inf(p(1, 1) - d), tol);
  }
}

TEST(Inverse, ScaleLastGroupingOnB2) {
  const InverseResult r = inverse(matrix_b2());
  EXPECT_EQ(r.inverse.scale, iv(1.0 / 7.0, 0.25));
  const IMatrix body = matmul(matrix_b2(), r.inverse.body);
  EXPECT_EQ(body(0, 0), iv(7, 4));
  EXPECT_EQ(body(0, 1), Interval::zero());
  EXPECT_EQ(body(1, 0), Interval::zero());
  const IMatrix prod = scaled_right_mul(matrix_b2(), r.inverse);
  // [1/7,1/4] . -[-7,-4] has no product inverse: the diagonal lands on class(7/4, 4/7).
  EXPECT_NEAR(prod(0, 0).u(), 7.0 / 4.0, 1e-15);
  EXPECT_NEAR(prod(0, 0).v(), 4.0 / 7.0, 1e-15);
  EXPECT_NEAR(r.residual, 0.75, 1e-15);
  EXPECT_FALSE(r.residual_warning.has_value());
}

TEST(Inverse, ScaleFirstGroupingDiffers) {
  const InverseResult r = inverse(matrix_b2());
  const IMatrix first = matmul(matrix_b2(), apply_scale(r.inverse.scale, r.inverse.body));
  EXPECT_NEAR(first(0, 0).u(), 23.0 / 14.0, 1e-15);
  EXPECT_NEAR(first(0, 0).v(), 1.0, 1e-15);
  EXPECT_NE(first(0, 0), scaled_right_mul(matrix_b2(), r.inverse)(0, 0));
}

TEST(Inverse, DegenerateEntriesGiveIdentity) {
  const IMatrix a = IMatrix::from_rows({{Interval::point(2), Interval::point(1)}, {Interval::point(1), Interval::point(3)}});
  const InverseResult r = inverse(a);
  EXPECT_LE(max_deviation(scaled_right_mul(a, r.inverse), identity(2)), 1e-15);
}

TEST(Inverse, Errors) {
  EXPECT_EQ(code_of([] { inverse(matrix_b1()); }), Errc::Singular);
  const InverseResult r = inverse(identity(3));
  ASSERT_TRUE(r.residual_warning.has_value());
  EXPECT_EQ(*r.residual_warning, r.residual);
}

TEST(Matmul, ParallelMatchesSerialBitwise) {
  for (std::size_t n : {2u, 16u, 24u}) {
    const IMatrix a = random_matrix(77, n), b = random_matrix(78, n);
    EXPECT_EQ(matmul(a, b), matmul_serial(a, b));
  }
}

TEST(Matmul, IdentityIsNeutralAndShapesChecked) {
  const IMatrix a = matrix_b3();
  EXPECT_EQ(matmul(a, identity(2)), a);
  EXPECT_EQ(matmul(identity(2), a), a);
  EXPECT_EQ(code_of([&] { matmul(a, identity(3)); }), Errc::ShapeMismatch);
}

TEST(Helpers, CenterDiagonalNorms) {
  const RealMatrix c = center_matrix(matrix_b3());
  EXPECT_EQ(c.a, (std::vector<double>{1.5, 1.5, 2.0, 3.5}));
  EXPECT_EQ(code_of([] { center_matrix(IMatrix::from_rows({{iv(2, 1)}})); }), Errc::ImproperEntry);
  EXPECT_TRUE(is_diagonal(identity(3)));
  EXPECT_FALSE(is_diagonal(matrix_b3()));
  EXPECT_EQ(norm_inf(matrix_b2()), 7.0);
}

TEST(TextFormat, ParseAndFormat) {
  const IMatrix a = parse_matrix("# comment\n[1,2]  [1,2]\n\n[1,3]\t[2,5]   # trailing\n");
  EXPECT_EQ(a, matrix_b3());
  EXPECT_EQ(format_matrix(matrix_b2()), "[1,2] [-1,3]\n[-1,3] [1,7]\n");
  EXPECT_EQ(parse_matrix(format_matrix(matrix_b1())), matrix_b1());
}

TEST(TextFormat, ErrorsCarryPosition) {
  try {
    parse_matrix("[1,2] [1,2]\n[1,3] [2,x]\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 10u);  // the offending character
  }
  EXPECT_EQ(code_of([] { parse_matrix(""); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { parse_matrix("# only comments\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { parse_matrix("[1,2] [1,2]\n[1,3]\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { parse_matrix("[1,2] [1,2]\n"); }), Errc::ParseError);
}
