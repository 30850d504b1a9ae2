#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "csl4/quaternion.hpp"

using namespace csl4;

namespace {

HurwitzQuat hq(long a, long b, long c, long d) { return HurwitzQuat::from_coords(a, b, c, d); }

// Membership in J straight from the definition: all coordinates in Z, or all
// in Z + 1/2.
bool in_J(const RatQuat& q) {
  int ints = 0, halves = 0;
  for (const auto& x : q.c) {
    BigRat twice = x * 2;
    if (twice.get_den() != 1) return false;
    if (x.get_den() == 1) ++ints;
    else ++halves;
  }
  return ints == 4 || halves == 4;
}

// d^-1 a in J, computed over Q.
bool left_divides_field(const HurwitzQuat& d, const HurwitzQuat& a) {
  RatQuat dq = d.to_field(), aq = a.to_field();
  BigRat inv = BigRat(1) / dq.norm();
  return in_J(inv * (dq.conj() * aq));
}

HurwitzQuat random_hurwitz(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  std::uniform_int_distribution<int> coin(0, 1);
  long off = coin(rng);
  return HurwitzQuat::from_doubled({BigInt(2 * d(rng) + off), BigInt(2 * d(rng) + off),
                                    BigInt(2 * d(rng) + off), BigInt(2 * d(rng) + off)});
}

Icosian random_icosian(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  Icosian x;
  for (const auto& b : icosian_basis()) x = x + GoldenInt(d(rng), d(rng)) * b;
  return x;
}

BigInt sigma1(long m) {
  BigInt s = 0;
  for (long d = 1; d <= m; ++d)
    if (m % d == 0) s += d;
  return s;
}

}  // namespace

TEST(Hurwitz, HamiltonRules) {
  HurwitzQuat i = hq(0, 1, 0, 0), j = hq(0, 0, 1, 0), k = hq(0, 0, 0, 1);
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * i, hq(-1, 0, 0, 0));
  EXPECT_EQ(i * j * k, hq(-1, 0, 0, 0));
}

TEST(Hurwitz, NormExamples) {
  EXPECT_EQ(parse_hurwitz("1/2,1/2,1/2,1/2").norm(), 1);
  EXPECT_EQ(hq(1, 1, 1, 0).norm(), 3);
  EXPECT_EQ(hq(1, 1, 0, 0).norm(), 2);
}

TEST(Hurwitz, Membership) {
  EXPECT_NO_THROW(parse_hurwitz("1/2,-1/2,1/2,3/2"));
  EXPECT_THROW(parse_hurwitz("1/2,0,0,0"), ParseError);
  EXPECT_THROW(parse_hurwitz("1/3,0,0,0"), ParseError);
  EXPECT_THROW(parse_hurwitz("1,2,3"), ParseError);
  EXPECT_THROW(HurwitzQuat::from_doubled({1, 0, 0, 0}), QuaternionError);
}

TEST(Hurwitz, RingLawsAndNormMultiplicative) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    HurwitzQuat a = random_hurwitz(rng, 6), b = random_hurwitz(rng, 6), c = random_hurwitz(rng, 6);
    EXPECT_TRUE((a * b).in_ring());
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    EXPECT_EQ((a * b).conj(), b.conj() * a.conj());
    EXPECT_EQ(a * a.conj(), HurwitzQuat::scalar(a.norm()));
  }
}

TEST(Hurwitz, Units) {
  const auto& u = hurwitz_units();
  ASSERT_EQ(u.size(), 24u);
  std::set<HurwitzQuat> s(u.begin(), u.end());
  for (const auto& x : u) {
    EXPECT_EQ(x.norm(), 1);
    for (const auto& y : u) EXPECT_TRUE(s.count(x * y));
  }
}

TEST(Hurwitz, PrimitivePart) {
  auto p = primitive_part(hq(2, 2, 0, 0));
  EXPECT_EQ(p.content, 2);
  EXPECT_EQ(p.primitive, hq(1, 1, 0, 0));
  EXPECT_EQ(primitive_part(hq(1, 1, 1, 0)).content, 1);
  // (1+i+j+k) = 2 * (1+i+j+k)/2 and the latter is in J.
  auto h = primitive_part(hq(1, 1, 1, 1));
  EXPECT_EQ(h.content, 2);
  EXPECT_EQ(h.primitive.norm(), 1);
  EXPECT_THROW(primitive_part(HurwitzQuat()), QuaternionError);
}

TEST(Hurwitz, ReducedExamples) {
  EXPECT_TRUE(is_reduced(hq(1, 0, 0, 0)));
  EXPECT_TRUE(is_reduced(hq(1, 1, 1, 0)));
  EXPECT_FALSE(is_reduced(hq(1, 1, 0, 0)));
  EXPECT_THROW(is_reduced(hq(2, 0, 0, 0)), QuaternionError);
}

TEST(Hurwitz, ReducedDecompositionReconstructs) {
  std::mt19937_64 rng(22);
  int checked = 0;
  while (checked < 300) {
    HurwitzQuat q = random_hurwitz(rng, 8);
    if (q.is_zero() || !is_primitive(q)) continue;
    ++checked;
    auto [r, s] = reduced_decompose(q);
    EXPECT_EQ(r * s, q);
    EXPECT_TRUE(mpz_odd_p(r.norm().get_mpz_t()));
    BigInt two = s.norm();
    while (two % 2 == 0) two /= 2;
    EXPECT_EQ(two, 1);
    // Canonical up to right units.
    for (const auto& u : hurwitz_units()) EXPECT_EQ(reduced_decompose(q * u).reduced, r);
  }
  auto d = reduced_decompose(hq(1, 1, 0, 0));
  EXPECT_EQ(d.reduced.norm(), 1);
  EXPECT_EQ(d.two_part.norm(), 2);
}

TEST(Hurwitz, DivisionWithRemainder) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    HurwitzQuat a = random_hurwitz(rng, 20), b = random_hurwitz(rng, 5);
    if (b.is_zero()) continue;
    auto l = left_divmod(a, b);
    EXPECT_EQ(l.quot * b + l.rem, a);
    EXPECT_LT(l.rem.norm(), b.norm());
    auto r = right_divmod(a, b);
    EXPECT_EQ(b * r.quot + r.rem, a);
    EXPECT_LT(r.rem.norm(), b.norm());
  }
  auto e = left_divmod(hq(2, 0, 0, 0), hq(1, 1, 0, 0));
  EXPECT_TRUE(e.rem.is_zero());
}

TEST(Hurwitz, GlcdExamples) {
  EXPECT_EQ(glcd(hq(1, 1, 1, 0), hq(1, 0, 0, 0)).norm(), 1);
  HurwitzQuat two = hq(2, 0, 0, 0);
  HurwitzQuat h = parse_hurwitz("1/2,1/2,1/2,1/2");
  HurwitzQuat g = glcd(two, two * h);
  EXPECT_EQ(g.norm(), 4);
  EXPECT_TRUE(left_divides(g, two) && left_divides(two, g));
  HurwitzQuat q = hq(2, 2, 1, 0);
  HurwitzQuat gq = glcd(q, q);
  EXPECT_EQ(gq.norm(), q.norm());
  EXPECT_TRUE(left_divides(gq, q) && left_divides(q, gq));
}

TEST(Hurwitz, GlcdAgainstBruteForceDivisors) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 25; ++t) {
    HurwitzQuat a = random_hurwitz(rng, 3), b = random_hurwitz(rng, 3);
    if (a.is_zero() || b.is_zero()) continue;
    HurwitzQuat g = glcd(a, b);
    EXPECT_TRUE(left_divides_field(g, a));
    EXPECT_TRUE(left_divides_field(g, b));
    long bound = std::min(a.norm(), b.norm()).get_si();
    for (long m = 1; m <= bound; ++m)
      for (const auto& d : enumerate_norm_J(m)) {
        bool both = left_divides_field(d, a) && left_divides_field(d, b);
        EXPECT_EQ(left_divides(d, a) && left_divides(d, b), both);
        if (both) EXPECT_TRUE(left_divides_field(d, g)) << d.str() << " " << g.str();
      }
    // The right-handed version by symmetry under conjugation.
    HurwitzQuat r = grcd(a, b);
    EXPECT_EQ(r.norm(), glcd(a.conj(), b.conj()).norm());
    EXPECT_TRUE(right_divides(r, a) && right_divides(r, b));
  }
}

TEST(Hurwitz, NormEnumerationCounts) {
  EXPECT_EQ(enumerate_norm_J(0).size(), 1u);
  EXPECT_EQ(enumerate_norm_J(1).size(), 24u);
  EXPECT_EQ(enumerate_norm_J(3).size(), 96u);
  for (long m = 1; m <= 31; m += 2) EXPECT_EQ(BigInt(enumerate_norm_J(m).size()), 24 * sigma1(m)) << m;
  // Even norms: 24 times the sum of odd divisors.
  EXPECT_EQ(enumerate_norm_J(2).size(), 24u);
  EXPECT_EQ(enumerate_norm_J(4).size(), 24u);
}

TEST(Hurwitz, NormEnumerationMatchesBoxSearch) {
  for (long m = 1; m <= 10; ++m) {
    std::set<HurwitzQuat> box;
    long r = 2 * static_cast<long>(std::sqrt(static_cast<double>(m))) + 1;
    for (long a = -r; a <= r; ++a)
      for (long b = -r; b <= r; ++b)
        for (long c = -r; c <= r; ++c)
          for (long d = -r; d <= r; ++d) {
            long par = a & 1;
            if ((b & 1) != par || (c & 1) != par || (d & 1) != par) continue;
            if (a * a + b * b + c * c + d * d != 4 * m) continue;
            box.insert(HurwitzQuat::from_doubled({a, b, c, d}));
          }
    auto e = enumerate_norm_J(m);
    EXPECT_EQ(std::set<HurwitzQuat>(e.begin(), e.end()), box) << m;
  }
}

TEST(Hurwitz, CanonicalRight) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 50; ++t) {
    HurwitzQuat q = random_hurwitz(rng, 5);
    if (q.is_zero()) continue;
    auto [c, u] = canonical_right(q);
    EXPECT_EQ(q * u, c);
    for (const auto& v : hurwitz_units()) EXPECT_EQ(canonical_right(q * v).first, c);
  }
}

TEST(Icosian, BasisAndMembership) {
  for (const auto& b : icosian_basis()) EXPECT_TRUE(b.in_ring());
  EXPECT_THROW(parse_icosian("1/2,0,0,0"), ParseError);
  Icosian x = parse_icosian("1/2,1/2,1/2,1/2");
  EXPECT_EQ(x.norm(), GoldenInt(1));
  Icosian y = parse_icosian("0,1/2,-1+1t/2,1t/2");
  EXPECT_EQ(y.norm(), GoldenInt(1));
  EXPECT_EQ(icosian_basis_coords(y)[0] * GoldenInt(0) + GoldenInt(0), GoldenInt(0));
  Icosian rebuilt;
  auto coords = icosian_basis_coords(y);
  for (int i = 0; i < 4; ++i) rebuilt = rebuilt + coords[i] * icosian_basis()[i];
  EXPECT_EQ(rebuilt, y);
}

TEST(Icosian, Units) {
  const auto& u = icosian_units();
  ASSERT_EQ(u.size(), 120u);
  std::set<Icosian> s(u.begin(), u.end());
  for (const auto& x : u) {
    EXPECT_EQ(x.norm(), GoldenInt(1));
    EXPECT_TRUE(s.count(x.conj()));
    for (const auto& y : u) ASSERT_TRUE(s.count(x * y));
  }
}

TEST(Icosian, RingLawsTwistAndNorm) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 400; ++i) {
    Icosian x = random_icosian(rng, 4), y = random_icosian(rng, 4), z = random_icosian(rng, 4);
    EXPECT_TRUE((x * y).in_ring());
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    EXPECT_EQ((x * y).conj(), y.conj() * x.conj());
    EXPECT_EQ(twist(x * y), twist(y) * twist(x));
    EXPECT_EQ(twist(twist(x)), x);
    EXPECT_EQ(twist(x).norm(), x.norm().conj());
    EXPECT_TRUE(twist(x).in_ring());
    auto c = icosian_basis_coords(x);
    Icosian back;
    for (int k = 0; k < 4; ++k) back = back + c[k] * icosian_basis()[k];
    EXPECT_EQ(back, x);
  }
}

TEST(Icosian, TraceBall) {
  EXPECT_EQ(enumerate_trace_ball_I(0).size(), 1u);
  // T(x) = Tr |x|^2 >= 2 for x != 0, with equality exactly for the units.
  EXPECT_EQ(enumerate_trace_ball_I(2).size(), 121u);
  for (const auto& x : enumerate_trace_ball_I(5)) EXPECT_LE(trace_form(x), 5);
}

TEST(Icosian, NormEnumeration) {
  struct Case {
    GoldenInt n;
    std::size_t count;
  };
  // 120 times the sum of N(d) over divisors d of n up to units.
  std::vector<Case> cases = {{1, 120}, {2, 600}, {GoldenInt(2, 1), 720}, {3, 1200}, {GoldenInt(3, 1), 1440}};
  for (const auto& c : cases) {
    auto e = enumerate_norm_I(c.n);
    EXPECT_EQ(e.size(), c.count) << c.n.str();
    for (const auto& x : e) EXPECT_EQ(x.norm(), c.n);
    std::size_t filtered = 0;
    for (const auto& x : enumerate_trace_ball_I(c.n.trace()))
      if (x.norm() == c.n) ++filtered;
    EXPECT_EQ(filtered, c.count);
  }
}

TEST(Icosian, PrimitivePart) {
  Icosian x = GoldenInt(2, 1) * parse_icosian("1,1,0,0");
  auto p = primitive_part(x);
  EXPECT_TRUE(golden_associated(p.content, GoldenInt(2, 1)));
  EXPECT_TRUE(is_primitive(p.primitive));
  EXPECT_TRUE(is_primitive(parse_icosian("1,1,1,0")));
  EXPECT_FALSE(is_primitive(parse_icosian("2,0,0,0")));
}

TEST(Parsing, QuaternionText) {
  RatQuat r = parse_rat_quat("1/2,-3,0,7/4");
  EXPECT_EQ(r.c[0], BigRat(1, 2));
  EXPECT_EQ(r.c[3], BigRat(7, 4));
  GoldenQuat g = parse_golden_quat("t,0,1+t/2,0");
  EXPECT_EQ(g.c[0], GoldenRat(GoldenInt::tau()));
  EXPECT_THROW(parse_rat_quat("1,2,3,x"), ParseError);
  EXPECT_EQ(parse_hurwitz(hq(1, -2, 3, 0).str()), hq(1, -2, 3, 0));
  Icosian y = parse_icosian("0,1/2,-1+1t/2,1t/2");
  EXPECT_EQ(parse_icosian(y.str()), y);
}
