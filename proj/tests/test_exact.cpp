#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "csl4/exact.hpp"

using namespace csl4;

namespace {

const double kTau = (1 + std::sqrt(5.0)) / 2;

GoldenInt g(long a, long b) { return {BigInt(a), BigInt(b)}; }

// Brute-force divisibility by floating point: x / y evaluated in both
// embeddings must round to the same element of Z[tau].
bool divides_brute(const GoldenInt& y, const GoldenInt& x) {
  for (long a = -60; a <= 60; ++a)
    for (long b = -60; b <= 60; ++b)
      if (g(a, b) * y == x) return true;
  return false;
}

std::vector<GoldenInt> units() {
  std::vector<GoldenInt> out;
  for (long k = -4; k <= 4; ++k) {
    out.push_back(tau_pow(k));
    out.push_back(-tau_pow(k));
  }
  return out;
}

}  // namespace

TEST(IntSqrt, Examples) {
  EXPECT_EQ(*int_sqrt(9), 3);
  EXPECT_EQ(*int_sqrt(1), 1);
  EXPECT_EQ(*int_sqrt(0), 0);
  EXPECT_FALSE(int_sqrt(45).has_value());
  EXPECT_THROW(int_sqrt(-4), ArithmeticError);
  BigInt big("123456789012345678901234567890");
  EXPECT_EQ(*int_sqrt(big * big), big);
  EXPECT_FALSE(int_sqrt(big * big + 1).has_value());
}

TEST(GoldenInt, ConjugateExamples) {
  EXPECT_EQ(golden_conj(GoldenInt::tau()), g(1, -1));
  EXPECT_EQ(golden_conj(GoldenInt(1)), GoldenInt(1));
  EXPECT_EQ(golden_conj(g(2, 3)), g(5, -3));
}

TEST(GoldenInt, NormExamples) {
  EXPECT_EQ(golden_norm(GoldenInt::tau()), 1);
  EXPECT_EQ(golden_norm(g(2, 1)), 5);
  EXPECT_EQ(golden_norm(GoldenInt(0)), 0);
  EXPECT_EQ(GoldenInt::tau().norm(), -1);
}

TEST(GoldenInt, TauSquared) {
  EXPECT_EQ(GoldenInt::tau() * GoldenInt::tau(), g(1, 1));
  EXPECT_EQ(tau_pow(-1), g(-1, 1));
  EXPECT_EQ(tau_pow(3) * tau_pow(-3), GoldenInt(1));
}

TEST(GoldenInt, EmbeddingsAgreeWithFloatingPoint) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    GoldenInt x = g(d(rng), d(rng));
    double main = x.a().get_d() + x.b().get_d() * kTau;
    double other = x.a().get_d() + x.b().get_d() * (1 - kTau);
    EXPECT_NEAR(x.to_double(), main, 1e-9);
    EXPECT_EQ(x.sign(), main > 0 ? 1 : (main < 0 ? -1 : 0));
    EXPECT_EQ(x.conj_sign(), other > 0 ? 1 : (other < 0 ? -1 : 0));
  }
}

TEST(GoldenInt, NormMultiplicativeAndConjugateHomomorphism) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    GoldenInt x = g(d(rng), d(rng));
    GoldenInt y = g(d(rng), d(rng));
    EXPECT_EQ(golden_norm(x * y), golden_norm(x) * golden_norm(y));
    EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
    EXPECT_EQ(x.conj().conj(), x);
  }
}

TEST(GoldenInt, TotalOrderIsTraceFirst) {
  EXPECT_LT(g(0, 0), g(1, 0));
  EXPECT_LT(g(1, 0), g(0, 1) * g(0, 1));  // trace 2 < trace 3
  EXPECT_LT(g(0, 1), g(1, 0));            // trace 1 < trace 2
}

TEST(GoldenNormalize, UnitInvariantAndTotallyPositive) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int i = 0; i < 300; ++i) {
    GoldenInt x = g(d(rng), d(rng));
    if (x.is_zero()) continue;
    GoldenInt n = golden_normalize(x);
    EXPECT_TRUE(golden_associated(n, x));
    for (const auto& u : units()) EXPECT_EQ(golden_normalize(x * u), n);
    // A totally positive associate exists iff N(x) > 0.
    if (x.norm() > 0) EXPECT_TRUE(n.totally_positive());
    // Minimal trace among totally positive associates in a window of unit powers.
    if (n.totally_positive())
      for (long k = -6; k <= 6; k += 2) {
        GoldenInt m = n * tau_pow(k);
        EXPECT_GE(m.trace(), n.trace());
      }
  }
  EXPECT_EQ(golden_normalize(GoldenInt::tau()), GoldenInt(1));
  EXPECT_EQ(golden_normalize(g(-2, 0)), GoldenInt(2));
}

TEST(GoldenGcd, Examples) {
  EXPECT_EQ(golden_gcd(2, 3), GoldenInt(1));
  EXPECT_EQ(golden_gcd(GoldenInt::tau(), g(1, 1)), GoldenInt(1));
  EXPECT_TRUE(golden_associated(golden_gcd(g(2, 1), 5), g(2, 1)));
  EXPECT_THROW(golden_gcd(0, 0), ArithmeticError);
  EXPECT_EQ(golden_gcd(0, 6), GoldenInt(6));
}

TEST(GoldenGcd, CommonDivisorsDivideGcdBruteForce) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> d(-12, 12);
  for (int i = 0; i < 40; ++i) {
    GoldenInt x = g(d(rng), d(rng));
    GoldenInt y = g(d(rng), d(rng));
    if (x.is_zero() || y.is_zero()) continue;
    GoldenInt h = golden_gcd(x, y);
    EXPECT_TRUE(divides_brute(h, x));
    EXPECT_TRUE(divides_brute(h, y));
    for (long a = -8; a <= 8; ++a)
      for (long b = -8; b <= 8; ++b) {
        GoldenInt c = g(a, b);
        if (c.is_zero() || !golden_divides(c, x) || !golden_divides(c, y)) continue;
        EXPECT_TRUE(golden_divides(c, h)) << c.str() << " | " << x.str() << ", " << y.str();
      }
    EXPECT_TRUE(golden_associated(h * golden_lcm(x, y), x * y));
  }
}

TEST(GoldenLcm, Examples) {
  EXPECT_EQ(golden_lcm(2, 3), GoldenInt(6));
  EXPECT_EQ(golden_lcm(GoldenInt::tau(), 1), GoldenInt(1));
  // 2+tau and its conjugate 3-tau generate the same ideal: 5 is ramified.
  EXPECT_TRUE(golden_associated(g(3, -1), g(2, 1)));
  EXPECT_TRUE(golden_associated(golden_lcm(g(2, 1), g(3, -1)), g(2, 1)));
  EXPECT_THROW(golden_lcm(0, 3), ArithmeticError);
  // Split prime 11 = (3+tau)(4-tau): the two factors are not associate.
  EXPECT_TRUE(golden_associated(golden_lcm(g(3, 1), g(4, -1)), 11));
}

TEST(GoldenSqrt, Examples) {
  EXPECT_EQ(*golden_sqrt(g(1, 1)), GoldenInt::tau());
  EXPECT_EQ(*golden_sqrt(4), GoldenInt(2));
  EXPECT_FALSE(golden_sqrt(2).has_value());
  EXPECT_FALSE(golden_sqrt(GoldenInt::tau()).has_value());
  EXPECT_EQ(*golden_sqrt(0), GoldenInt(0));
}

TEST(GoldenSqrt, RecoversRootsAndRejectsNonSquares) {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<long> d(-200, 200);
  for (int i = 0; i < 500; ++i) {
    GoldenInt x = g(d(rng), d(rng));
    auto r = golden_sqrt(x * x);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(*r == x || *r == -x);
    EXPECT_GE(r->sign(), 0);
  }
  // Small brute-force census of squares.
  for (long a = -15; a <= 15; ++a)
    for (long b = -15; b <= 15; ++b) {
      GoldenInt x = g(a, b);
      bool square = false;
      for (long c = -8; c <= 8 && !square; ++c)
        for (long e = -8; e <= 8 && !square; ++e) square = g(c, e) * g(c, e) == x;
      EXPECT_EQ(golden_sqrt(x).has_value(), square) << x.str();
    }
}

TEST(GoldenDivmod, RemainderSmaller) {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<long> d(-100, 100);
  for (int i = 0; i < 500; ++i) {
    GoldenInt x = g(d(rng), d(rng));
    GoldenInt y = g(d(rng) / 4, d(rng) / 4);
    if (y.is_zero()) continue;
    auto [q, r] = golden_divmod(x, y);
    EXPECT_EQ(q * y + r, x);
    EXPECT_LT(golden_norm(r), golden_norm(y));
  }
}

TEST(GoldenRat, FieldOperations) {
  GoldenRat half(GoldenInt(1), 2);
  GoldenRat tau(GoldenInt::tau());
  EXPECT_EQ(half + half, GoldenRat(1));
  EXPECT_EQ(tau * tau - tau, GoldenRat(1));
  EXPECT_EQ(GoldenRat(1) / tau, tau - GoldenRat(1));
  GoldenRat x(g(3, -7), 11);
  EXPECT_EQ(x / x, GoldenRat(1));
  EXPECT_EQ((x * tau) / tau, x);
  EXPECT_EQ(GoldenRat(g(2, 4), 4), GoldenRat(g(1, 2), 2));
  EXPECT_THROW(x / GoldenRat(0), ArithmeticError);
}

TEST(Parsing, RationalsAndGoldens) {
  EXPECT_EQ(parse_rational("3/6"), BigRat(1, 2));
  EXPECT_EQ(parse_rational("-4"), BigRat(-4));
  EXPECT_THROW(parse_rational("1/0"), ArithmeticError);
  EXPECT_THROW(parse_rational("abc"), ArithmeticError);
  EXPECT_EQ(parse_golden("1+1t/2"), GoldenRat(g(1, 1), 2));
  EXPECT_EQ(parse_golden("t"), GoldenRat(GoldenInt::tau()));
  EXPECT_EQ(parse_golden("-t"), GoldenRat(g(0, -1)));
  EXPECT_EQ(parse_golden("-1+2t"), GoldenRat(g(-1, 2)));
  EXPECT_EQ(parse_golden(GoldenRat(g(1, -1), 2).str()), GoldenRat(g(1, -1), 2));
  EXPECT_THROW(parse_golden("1+"), ArithmeticError);
}
