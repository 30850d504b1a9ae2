#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "csl4/counting.hpp"

using namespace csl4;

namespace {

using Series = std::vector<long long>;

Series mul(const Series& a, const Series& b, std::size_t order) {
  Series r(order + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) r[i + j] += a[i] * b[j];
  return r;
}

// num / den as a power series; den[0] == 1.
Series divide(const Series& num, const Series& den, std::size_t order) {
  Series r(order + 1, 0);
  for (std::size_t k = 0; k <= order; ++k) {
    long long c = k < num.size() ? num[k] : 0;
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) c -= den[j] * r[k - j];
    r[k] = c;
  }
  return r;
}

Series stretch(const Series& a) {
  Series r(2 * a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[2 * i] = a[i];
  return r;
}

struct Factor {
  Series num, den;
};

Factor d4_rot(long long p) { return {mul({1, 1}, {1, p}, 8), mul({1, -p}, {1, -p * p}, 8)}; }
Factor d4_csl(long long p) { return {{1, 1 + 2 * p, 2 + p, p}, mul({1, -p * p}, {1, 0, -p}, 8)}; }
Factor squared(const Factor& f) { return {mul(f.num, f.num, 16), mul(f.den, f.den, 16)}; }
Factor inert(const Factor& f) { return {stretch(f.num), stretch(f.den)}; }

Factor reference_factor(Family fam, Kind k, long long p) {
  bool rot = k == Kind::Rot;
  long long r5 = p % 5;
  switch (fam) {
    case Family::D4Star:
      if (p == 2) return {{1}, {1}};
      return rot ? d4_rot(p) : d4_csl(p);
    case Family::Z4:
      if (p == 2) return rot ? Factor{{1, 2}, {1}} : Factor{{1, 1}, {1}};
      return rot ? d4_rot(p) : d4_csl(p);
    case Family::A4:
      if (p == 5) return rot ? Factor{{1, 5}, {1, -25}} : Factor{{1, -19}, {1, -25}};
      if (r5 == 1 || r5 == 4) return rot ? d4_rot(p) : d4_csl(p);
      return {{1, 1}, {1, -p * p}};
    case Family::IcosianRing:
      if (p == 5) return rot ? d4_rot(5) : d4_csl(5);
      if (r5 == 1 || r5 == 4) return squared(rot ? d4_rot(p) : d4_csl(p));
      return inert(rot ? d4_rot(p * p) : d4_csl(p * p));
  }
  return {{1}, {1}};
}

long long independent_value(Family fam, Kind k, long n) {
  long long out = 1;
  long m = n;
  for (long p = 2; m > 1; ++p) {
    unsigned r = 0;
    while (m % p == 0) {
      m /= p;
      ++r;
    }
    if (r == 0) continue;
    Factor f = reference_factor(fam, k, p);
    out *= divide(f.num, f.den, r)[r];
  }
  return out;
}

BigRat pw(long p, long e) {
  if (e >= 0) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= p;
    return BigRat(r);
  }
  return BigRat(1) / pw(p, -e);
}

// Published prime-power closed forms for the centred hypercubic lattice.
BigRat d4_closed_rot(long p, long r) {
  return BigRat(p + 1, p - 1) * pw(p, r - 1) * (pw(p, r + 1) + pw(p, r - 1) - 2);
}

BigRat d4_closed_csl(long p, long r) {
  BigRat pre = BigRat((p + 1) * (p + 1), p * p * p - 1);
  if (r % 2 == 1) return pre * (pw(p, 2 * r + 1) + pw(p, 2 * r - 2) - 2 * pw(p, (r - 1) / 2));
  return pre * (pw(p, 2 * r + 1) + pw(p, 2 * r - 2) - 2 * pw(p, r / 2 - 1) * BigRat(1 + p * p, 1 + p));
}

}  // namespace

TEST(Counting, Examples) {
  EXPECT_EQ(f_rot(Family::D4Star, 3), 16);
  EXPECT_EQ(f_rot(Family::D4Star, 9), 168);
  EXPECT_EQ(f_csl(Family::D4Star, 9), 152);
  EXPECT_EQ(f_rot(Family::Z4, 6), 32);
  EXPECT_EQ(f_csl(Family::Z4, 6), 16);
  EXPECT_EQ(f_rot(Family::Z4, 4), 0);
  EXPECT_EQ(f_rot(Family::A4, 5), 30);
  EXPECT_EQ(f_csl(Family::A4, 5), 6);
  EXPECT_EQ(f_rot(Family::IcosianRing, 16), 440);
  EXPECT_EQ(f_csl(Family::IcosianRing, 16), 410);
  EXPECT_EQ(f_rot(Family::IcosianRing, 2), 0);
  for (Family f : kAllFamilies) {
    EXPECT_EQ(f_rot(f, 1), 1);
    EXPECT_EQ(f_csl(f, 1), 1);
    EXPECT_THROW(f_rot(f, 0), CountingError);
  }
}

TEST(Counting, D4SeriesListed) {
  auto rot = dirichlet_series(Family::D4Star, Kind::Rot, 17);
  std::map<long, long> want = {{1, 1}, {2, 0}, {3, 16}, {5, 36}, {7, 64}, {9, 168}, {11, 144},
                               {13, 196}, {15, 576}, {17, 324}};
  for (auto [n, v] : want) EXPECT_EQ(rot[n], v) << n;
  auto csl = dirichlet_series(Family::D4Star, Kind::Csl, 17);
  want[9] = 152;
  for (auto [n, v] : want) EXPECT_EQ(csl[n], v) << n;
}

TEST(Counting, IcosianSeriesListed) {
  auto rot = dirichlet_series(Family::IcosianRing, Kind::Rot, 25);
  std::map<long, long> want = {{1, 1}, {2, 0}, {3, 0}, {4, 25}, {5, 36}, {9, 100}, {11, 288}, {16, 440},
                               {20, 900}, {25, 960}};
  for (auto [n, v] : want) EXPECT_EQ(rot[n], v) << n;
  auto csl = dirichlet_series(Family::IcosianRing, Kind::Csl, 25);
  want[16] = 410;
  want[25] = 912;
  for (auto [n, v] : want) EXPECT_EQ(csl[n], v) << n;
}

TEST(Counting, AgreesWithIndependentExpansion) {
  for (Family f : kAllFamilies)
    for (Kind k : {Kind::Rot, Kind::Csl}) {
      auto series = dirichlet_series(f, k, 300);
      for (long n = 1; n <= 300; ++n) {
        BigInt want = static_cast<long>(independent_value(f, k, n));
        EXPECT_EQ(series[n], want) << family_name(f) << " " << kind_name(k) << " " << n;
        EXPECT_EQ(f_value(f, k, n), want) << family_name(f) << " " << kind_name(k) << " " << n;
      }
    }
}

TEST(Counting, D4ClosedFormsMatchPublishedFormulas) {
  for (long p : {3, 5, 7, 11, 13})
    for (long r = 1; r <= 5; ++r) {
      EXPECT_EQ(BigRat(d4_prime_power(Kind::Rot, p, r)), d4_closed_rot(p, r)) << p << "^" << r;
      EXPECT_EQ(BigRat(d4_prime_power(Kind::Csl, p, r)), d4_closed_csl(p, r)) << p << "^" << r;
    }
}

TEST(Counting, DualPathD4) {
  for (Kind k : {Kind::Rot, Kind::Csl}) {
    auto e = euler_expand(euler_rules(Family::D4Star, k), 200);
    for (long n = 1; n <= 200; ++n) EXPECT_EQ(e[n], f_value(Family::D4Star, k, n)) << n;
  }
}

TEST(Counting, Z4FactorIdentities) {
  // Multiplying by (1 + c 2^-s) gives b_n = a_n + c a_{n/2}.
  for (auto [k, c] : {std::pair{Kind::Rot, 2}, std::pair{Kind::Csl, 1}}) {
    auto d = dirichlet_series(Family::D4Star, k, 200);
    auto z = dirichlet_series(Family::Z4, k, 200);
    for (long n = 1; n <= 200; ++n) {
      BigInt want = d[n];
      if (n % 2 == 0) want += c * d[n / 2];
      EXPECT_EQ(z[n], want) << n;
    }
  }
}

TEST(Counting, Multiplicative) {
  for (Family f : kAllFamilies)
    for (Kind k : {Kind::Rot, Kind::Csl})
      for (long m = 1; m <= 100; ++m)
        for (long n = 1; n * m <= 100; ++n)
          if (std::gcd(m, n) == 1) EXPECT_EQ(f_value(f, k, m * n), f_value(f, k, m) * f_value(f, k, n));
}

TEST(Counting, CslNeverExceedsRot) {
  for (Family f : kAllFamilies)
    for (long n = 1; n <= 200; ++n) EXPECT_LE(f_csl(f, n), f_rot(f, n)) << family_name(f) << " " << n;
}

TEST(Counting, Spectra) {
  EXPECT_TRUE(spectrum_member(Family::D4Star, 15));
  EXPECT_FALSE(spectrum_member(Family::D4Star, 2));
  EXPECT_TRUE(spectrum_member(Family::Z4, 6));
  EXPECT_FALSE(spectrum_member(Family::Z4, 4));
  EXPECT_TRUE(spectrum_member(Family::A4, 2));
  EXPECT_TRUE(spectrum_member(Family::IcosianRing, 4));
  EXPECT_FALSE(spectrum_member(Family::IcosianRing, 2));
  EXPECT_FALSE(spectrum_member(Family::IcosianRing, 12));
  EXPECT_TRUE(spectrum_member(Family::IcosianRing, 11));
  for (Family f : kAllFamilies)
    for (long n = 1; n <= 100; ++n) EXPECT_EQ(spectrum_member(f, n), f_rot(f, n) > 0) << family_name(f) << " " << n;
}

TEST(Counting, RotationAndIsometryCounts) {
  EXPECT_EQ(rotation_count(Family::D4Star, 3), 576 * 16);
  EXPECT_EQ(isometry_count(Family::D4Star, 3), 2 * 576 * 16);
  EXPECT_EQ(rotation_count(Family::A4, 2), 120 * 5);
  EXPECT_EQ(rotation_count(Family::IcosianRing, 4), 7200 * 25);
}

TEST(EulerFactors, ExpansionAndSubstitution) {
  EulerFactor geo;
  geo.den = {{BigRat(1), 0, 0}, {BigRat(-1), 1, 1}};  // 1 / (1 - p x)
  auto c = geo.expand(3, 4);
  EXPECT_EQ(c, (std::vector<BigInt>{1, 3, 9, 27, 81}));
  auto sq = square_substitute(geo).expand(3, 4);
  EXPECT_EQ(sq, (std::vector<BigInt>{1, 0, 9, 0, 81}));
  auto prod = (geo * geo).expand(2, 3);
  EXPECT_EQ(prod, (std::vector<BigInt>{1, 4, 12, 32}));
  EulerFactor bad;
  bad.num = {{BigRat(1), 0, 0}, {BigRat(1, 2), 0, 1}};
  EXPECT_THROW(bad.expand(3, 2), CountingError);
}

TEST(Factorization, Basics) {
  EXPECT_EQ(factorize(360), (std::vector<std::pair<long, unsigned>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_FALSE(is_prime(1));
}
