#include "indpoly/polynomial.hpp"

#include <gtest/gtest.h>

using namespace indpoly;

TEST(Polynomial, ArithmeticAndTrim) {
  Polynomial a{1, 2}, b{1, -2};
  EXPECT_EQ(a + b, (Polynomial{2}));
  EXPECT_EQ(a - a, Polynomial{});
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(a * b, (Polynomial{1, 0, -4}));
  EXPECT_EQ(-a, (Polynomial{-1, -2}));
  EXPECT_EQ(a.scaled(3), (Polynomial{3, 6}));
  EXPECT_EQ(a.shifted(2), (Polynomial{0, 0, 1, 2}));
  EXPECT_EQ((Polynomial{1, 1}).pow(3), (Polynomial{1, 3, 3, 1}));
  EXPECT_EQ((Polynomial{1, 0, 0}).degree(), 0);
  EXPECT_EQ(Polynomial::monomial(3, 5)[3], 5);
  EXPECT_EQ(a[7], 0);
}

TEST(Polynomial, FreeFunctionAliases) {
  Polynomial p{1, 3}, q{0, 1};
  EXPECT_EQ(add(p, q), (Polynomial{1, 4}));
  EXPECT_EQ(sub(p, q), (Polynomial{1, 2}));
  EXPECT_EQ(mul(p, q), (Polynomial{0, 1, 3}));
  EXPECT_EQ(scale(p, -1), (Polynomial{-1, -3}));
  EXPECT_EQ(shift_mul_x(p, 1), (Polynomial{0, 1, 3}));
  EXPECT_EQ(eval_int(p, -1), -2);
}

TEST(Polynomial, EvaluationIsExactForLargeValues) {
  // (1+x)^200 at x = 1 is 2^200
  Polynomial p = Polynomial{1, 1}.pow(200);
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 2, 200);
  EXPECT_EQ(p.eval(1), expected);
  EXPECT_EQ(p.eval(-1), 0);
}

TEST(Polynomial, Rendering) {
  EXPECT_EQ((Polynomial{1, 7, 14, 7}).pretty(), "1 + 7x + 14x^2 + 7x^3");
  EXPECT_EQ((Polynomial{-1, 0, -1}).pretty(), "-1 - x^2");
  EXPECT_EQ(Polynomial{}.pretty(), "0");
  EXPECT_EQ((Polynomial{1, 5, 5, 1}).coefficient_list(), "[1, 5, 5, 1]");
  EXPECT_EQ(Polynomial{}.coefficient_list(), "[]");
}

TEST(ClosedForms, FibonacciPolynomials) {
  EXPECT_EQ(fibonacci_poly(0), Polynomial::one());
  EXPECT_EQ(fibonacci_poly(1), Polynomial::one());
  EXPECT_EQ(fibonacci_poly(2), (Polynomial{1, 1}));
  EXPECT_EQ(fibonacci_poly(4), (Polynomial{1, 3, 1}));
  EXPECT_THROW(fibonacci_poly(-1), std::invalid_argument);
}

TEST(ClosedForms, PathsAndCycles) {
  EXPECT_EQ(path_poly(1), (Polynomial{1, 1}));
  EXPECT_EQ(path_poly(3), (Polynomial{1, 3, 1}));
  EXPECT_EQ(path_poly(5), (Polynomial{1, 5, 6, 1}));
  EXPECT_EQ(cycle_poly(3), (Polynomial{1, 3}));
  EXPECT_EQ(cycle_poly(6), (Polynomial{1, 6, 9, 2}));
  EXPECT_EQ(cycle_poly(7), (Polynomial{1, 7, 14, 7}));
  EXPECT_THROW(cycle_poly(2), std::invalid_argument);
  EXPECT_THROW(path_poly(0), std::invalid_argument);
}

TEST(ClosedForms, PeriodicValuesAgreeWithPolynomials) {
  for (int n = 1; n <= 60; ++n)
    EXPECT_EQ(value_at_minus_one_path(n), path_poly(n).eval(-1)) << n;
  for (int n = 3; n <= 60; ++n)
    EXPECT_EQ(value_at_minus_one_cycle(n), cycle_poly(n).eval(-1)) << n;
  // C_{3k} gives 2(-1)^k
  EXPECT_EQ(value_at_minus_one_cycle(3'000'000), 2);
  EXPECT_EQ(value_at_minus_one_cycle(3'000'003), -2);
}

TEST(ClosedForms, EqualMultipartite) {
  // K_{2,2} = C4
  EXPECT_EQ(equal_multipartite_poly(2, 2), cycle_poly(4));
  // K_{1,1,1} = K3
  EXPECT_EQ(equal_multipartite_poly(3, 1), cycle_poly(3));
  for (int p = 1; p <= 5; ++p)
    EXPECT_EQ(equal_multipartite_poly(p, 3).eval(-1), 1 - p);
}
