#include "csl4/counting.hpp"

namespace csl4 {

std::string_view kind_name(Kind k) { return k == Kind::Rot ? "rot" : "csl"; }

PXPoly px_mul(const PXPoly& a, const PXPoly& b) {
  PXPoly out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Monomial m{x.coef * y.coef, x.p_exp + y.p_exp, x.x_exp + y.x_exp};
      bool merged = false;
      for (auto& z : out)
        if (z.p_exp == m.p_exp && z.x_exp == m.x_exp) {
          z.coef += m.coef;
          merged = true;
          break;
        }
      if (!merged) out.push_back(m);
    }
  return out;
}

EulerFactor operator*(const EulerFactor& a, const EulerFactor& b) {
  return {px_mul(a.num, b.num), px_mul(a.den, b.den)};
}

EulerFactor square_substitute(const EulerFactor& f) {
  auto sq = [](PXPoly p) {
    for (auto& m : p) {
      m.p_exp *= 2;
      m.x_exp *= 2;
    }
    return p;
  };
  return {sq(f.num), sq(f.den)};
}

namespace {

std::vector<BigRat> evaluate(const PXPoly& poly, long p, unsigned order) {
  std::vector<BigRat> c(order + 1);
  for (const auto& m : poly) {
    if (m.x_exp > order) continue;
    BigInt pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p), m.p_exp);
    c[m.x_exp] += m.coef * BigRat(pp);
  }
  return c;
}

}  // namespace

std::vector<BigInt> EulerFactor::expand(long p, unsigned order) const {
  auto n = evaluate(num, p, order);
  auto d = evaluate(den, p, order);
  if (d[0] != 1) throw CountingError("Euler factor denominator must have constant term 1");
  std::vector<BigRat> s(order + 1);
  for (unsigned k = 0; k <= order; ++k) {
    BigRat v = n[k];
    for (unsigned j = 1; j <= k; ++j) v -= d[j] * s[k - j];
    s[k] = v;
  }
  std::vector<BigInt> out;
  for (unsigned k = 0; k <= order; ++k) {
    if (!is_integer(s[k]))
      throw CountingError("non-integral series coefficient " + to_string(s[k]) + " at p=" +
                          std::to_string(p));
    out.push_back(s[k].get_num());
  }
  return out;
}

namespace {

Monomial mono(long coef, unsigned p_exp, unsigned x_exp) { return {BigRat(coef), p_exp, x_exp}; }

EulerFactor d4_rot_factor() {
  // (1+x)(1+px) / ((1-px)(1-p^2 x))
  return {px_mul({mono(1, 0, 0), mono(1, 0, 1)}, {mono(1, 0, 0), mono(1, 1, 1)}),
          px_mul({mono(1, 0, 0), mono(-1, 1, 1)}, {mono(1, 0, 0), mono(-1, 2, 1)})};
}

EulerFactor d4_csl_factor() {
  // (1 + x + 2px + 2x^2 + px^2 + px^3) / ((1-p^2 x)(1-px^2))
  return {{mono(1, 0, 0), mono(1, 0, 1), mono(2, 1, 1), mono(2, 0, 2), mono(1, 1, 2), mono(1, 1, 3)},
          px_mul({mono(1, 0, 0), mono(-1, 2, 1)}, {mono(1, 0, 0), mono(-1, 1, 2)})};
}

EulerFactor d4_factor(Kind k) { return k == Kind::Rot ? d4_rot_factor() : d4_csl_factor(); }

bool odd_prime(long p) { return p % 2 == 1; }
bool ramified(long p) { return p == 5; }
bool split(long p) { return p % 5 == 1 || p % 5 == 4; }
bool inert(long p) { return p % 5 == 2 || p % 5 == 3; }

std::vector<EulerRule> build_rules(Family f, Kind k) {
  switch (f) {
    case Family::D4Star: return {{"p odd", odd_prime, d4_factor(k)}};
    case Family::Z4: {
      EulerFactor two{{mono(1, 0, 0), mono(k == Kind::Rot ? 2 : 1, 0, 1)}, {mono(1, 0, 0)}};
      return {{"p = 2", [](long p) { return p == 2; }, two}, {"p odd", odd_prime, d4_factor(k)}};
    }
    case Family::A4: {
      EulerFactor five = k == Kind::Rot
                             ? EulerFactor{{mono(1, 0, 0), mono(1, 1, 1)}, {mono(1, 0, 0), mono(-1, 2, 1)}}
                             : EulerFactor{{mono(1, 0, 0), mono(-19, 0, 1)}, {mono(1, 0, 0), mono(-1, 2, 1)}};
      EulerFactor in{{mono(1, 0, 0), mono(1, 0, 1)}, {mono(1, 0, 0), mono(-1, 2, 1)}};
      return {{"p = 5", ramified, five}, {"p = +-1 mod 5", split, d4_factor(k)}, {"p = +-2 mod 5", inert, in}};
    }
    case Family::IcosianRing: {
      EulerFactor base = d4_factor(k);
      return {{"p = 5", ramified, base},
              {"p = +-1 mod 5", split, base * base},
              {"p = +-2 mod 5", inert, square_substitute(base)}};
    }
  }
  throw CountingError("unknown family");
}

std::size_t family_index(Family f) { return static_cast<std::size_t>(f); }

}  // namespace

const std::vector<EulerRule>& euler_rules(Family f, Kind k) {
  static const auto table = [] {
    std::array<std::array<std::vector<EulerRule>, 2>, 4> t;
    for (Family fam : kAllFamilies) {
      t[family_index(fam)][0] = build_rules(fam, Kind::Rot);
      t[family_index(fam)][1] = build_rules(fam, Kind::Csl);
    }
    return t;
  }();
  return table[family_index(f)][k == Kind::Rot ? 0 : 1];
}

const EulerFactor& local_factor(Family f, Kind k, long p) {
  static const EulerFactor trivial;
  for (const auto& rule : euler_rules(f, k))
    if (rule.applies(p)) return rule.factor;
  return trivial;
}

std::vector<std::pair<long, unsigned>> factorize(long n) {
  if (n < 1) throw CountingError("factorize needs n >= 1");
  std::vector<std::pair<long, unsigned>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

namespace {

unsigned max_exponent(long p, long N) {
  unsigned e = 0;
  for (long q = p; q <= N; q *= p) {
    ++e;
    if (q > N / p) break;
  }
  return e;
}

}  // namespace

DirichletCoeffs euler_expand(const std::vector<EulerRule>& rules, long N) {
  if (N < 1) throw CountingError("euler_expand needs N >= 1");
  DirichletCoeffs out;
  out.N = N;
  out.a.assign(static_cast<std::size_t>(N) + 1, BigInt(1));
  out.a[0] = 0;
  for (long p = 2; p <= N; ++p) {
    if (!is_prime(p)) continue;
    const EulerFactor* factor = nullptr;
    for (const auto& rule : rules)
      if (rule.applies(p)) {
        factor = &rule.factor;
        break;
      }
    unsigned order = max_exponent(p, N);
    std::vector<BigInt> local = factor ? factor->expand(p, order) : std::vector<BigInt>(order + 1, BigInt(0));
    if (!factor) local[0] = 1;
    for (long n = p; n <= N; n += p) {
      long m = n;
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.a[static_cast<std::size_t>(n)] *= local[e];
    }
  }
  return out;
}

DirichletCoeffs dirichlet_series(Family f, Kind k, long N) { return euler_expand(euler_rules(f, k), N); }

BigInt d4_prime_power(Kind k, long p, unsigned r) {
  if (r == 0) return 1;
  if (p == 2) return 0;
  BigInt P(p);
  auto pw = [&](long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
  };
  long R = r;
  BigRat v;
  if (k == Kind::Rot) {
    v = make_rat(P + 1, P - 1) * BigRat(pw(R - 1) * (pw(R + 1) + pw(R - 1) - 2));
  } else {
    BigRat lead = make_rat((P + 1) * (P + 1), pw(3) - 1);
    BigRat tail = (R % 2 == 1) ? BigRat(2 * pw((R - 1) / 2))
                               : BigRat(2 * pw(R / 2 - 1)) * make_rat(1 + pw(2), 1 + P);
    v = lead * (BigRat(pw(2 * R + 1) + pw(2 * R - 2)) - tail);
  }
  if (!is_integer(v)) throw CountingError("non-integral closed form at p^r");
  return v.get_num();
}

BigInt f_value(Family f, Kind k, long n) {
  if (n < 1) throw CountingError("f needs n >= 1");
  switch (f) {
    case Family::D4Star: {
      BigInt v = 1;
      for (auto [p, e] : factorize(n)) v *= d4_prime_power(k, p, e);
      return v;
    }
    case Family::Z4: {
      if (n % 2 == 1) return f_value(Family::D4Star, k, n);
      if (n % 4 == 0) return 0;
      BigInt v = f_value(Family::D4Star, k, n / 2);
      return k == Kind::Rot ? 2 * v : v;
    }
    case Family::A4:
    case Family::IcosianRing: {
      BigInt v = 1;
      for (auto [p, e] : factorize(n)) v *= local_factor(f, k, p).expand(p, e)[e];
      return v;
    }
  }
  throw CountingError("unknown family");
}

BigInt f_rot(Family f, long n) { return f_value(f, Kind::Rot, n); }
BigInt f_csl(Family f, long n) { return f_value(f, Kind::Csl, n); }

bool spectrum_member(Family f, long n) {
  if (n < 1) return false;
  switch (f) {
    case Family::D4Star: return n % 2 == 1;
    case Family::Z4: return n % 4 != 0;
    case Family::A4: return true;
    case Family::IcosianRing:
      for (auto [p, e] : factorize(n))
        if (inert(p) && e % 2 == 1) return false;
      return true;
  }
  return false;
}

BigInt rotation_count(Family f, long n) {
  return BigInt(static_cast<unsigned long>(point_group_order(f))) * f_rot(f, n);
}

BigInt isometry_count(Family f, long n) { return 2 * rotation_count(f, n); }

}  // namespace csl4
