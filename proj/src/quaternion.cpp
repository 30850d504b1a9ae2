#include "csl4/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace csl4 {

namespace detail {

BigInt RingTraits<BigInt>::half(const BigInt& x) {
  if (!is_even(x)) throw QuaternionError("odd value halved in ring product");
  BigInt r;
  mpz_divexact_ui(r.get_mpz_t(), x.get_mpz_t(), 2);
  return r;
}

GoldenInt RingTraits<GoldenInt>::half(const GoldenInt& x) {
  if (!is_even(x)) throw QuaternionError("odd value halved in ring product");
  BigInt a;
  BigInt b;
  mpz_divexact_ui(a.get_mpz_t(), x.a().get_mpz_t(), 2);
  mpz_divexact_ui(b.get_mpz_t(), x.b().get_mpz_t(), 2);
  return {a, b};
}

}  // namespace detail

namespace {

long to_long(const BigInt& x, const char* what) {
  if (!x.fits_slong_p()) throw std::length_error(std::string(what) + ": value out of range");
  return x.get_si();
}

std::size_t mix(std::size_t h, long v) {
  return h ^ (std::hash<long>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

long mpz_low(const BigInt& x) {
  return x.fits_slong_p() ? x.get_si() : static_cast<long>(mpz_getlimbn(x.get_mpz_t(), 0));
}

}  // namespace

// ---------------------------------------------------------------------------
// HalfQuat specializations

template <>
bool HurwitzQuat::in_ring() const {
  bool p = mpz_odd_p(d_[0].get_mpz_t()) != 0;
  for (std::size_t i = 1; i < 4; ++i)
    if ((mpz_odd_p(d_[i].get_mpz_t()) != 0) != p) return false;
  return true;
}

namespace {

// Numerators of the first two basis coordinates (see icosian_basis_coords);
// ring membership holds iff both are even.
std::pair<GoldenInt, GoldenInt> icosian_numerators(const Icosian::Doubled& n) {
  GoldenInt diff = n[3] - n[2];
  GoldenInt c1 = n[0] - n[2] - diff * GoldenInt(1, -1);
  GoldenInt c2 = n[1] - n[2] - diff * GoldenInt::tau();
  return {c1, c2};
}

}  // namespace

template <>
bool Icosian::in_ring() const {
  auto [c1, c2] = icosian_numerators(d_);
  return Traits::is_even(c1) && Traits::is_even(c2);
}

template <>
HurwitzQuat HurwitzQuat::divide_scalar(const BigInt& s) const {
  if (s == 0) throw QuaternionError("division by zero scalar");
  Doubled r;
  for (std::size_t i = 0; i < 4; ++i) {
    if (d_[i] % s != 0) throw QuaternionError("scalar does not divide quaternion");
    r[i] = d_[i] / s;
  }
  HalfQuat q(std::move(r));
  if (!q.in_ring()) throw QuaternionError("scalar does not divide quaternion");
  return q;
}

template <>
Icosian Icosian::divide_scalar(const GoldenInt& s) const {
  Doubled r;
  for (std::size_t i = 0; i < 4; ++i) {
    auto v = golden_divide(d_[i], s);
    if (!v) throw QuaternionError("scalar does not divide icosian");
    r[i] = *v;
  }
  HalfQuat q(std::move(r));
  if (!q.in_ring()) throw QuaternionError("scalar does not divide icosian");
  return q;
}

template <>
std::string HurwitzQuat::str() const {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += to_string(make_rat(d_[i], 2));
  }
  return s;
}

template <>
std::string Icosian::str() const {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += GoldenRat(d_[i], 2).str();
  }
  return s;
}

template <>
std::size_t HurwitzQuat::hash() const {
  std::size_t h = 0;
  for (const auto& x : d_) h = mix(h, mpz_low(x));
  return h;
}

template <>
std::size_t Icosian::hash() const {
  std::size_t h = 0;
  for (const auto& x : d_) h = mix(mix(h, mpz_low(x.a())), mpz_low(x.b()));
  return h;
}

// ---------------------------------------------------------------------------
// Units

const std::vector<HurwitzQuat>& hurwitz_units() {
  static const std::vector<HurwitzQuat> units = enumerate_norm_J(1);
  return units;
}

const std::vector<Icosian>& icosian_units() {
  static const std::vector<Icosian> units = enumerate_norm_I(GoldenInt(1));
  return units;
}

namespace {

template <class Q>
std::pair<Q, Q> canonical_right_impl(const Q& q, const std::vector<Q>& units) {
  Q best = q * units.front();
  Q best_u = units.front();
  for (std::size_t k = 1; k < units.size(); ++k) {
    Q c = q * units[k];
    if (c < best) {
      best = std::move(c);
      best_u = units[k];
    }
  }
  return {best, best_u};
}

}  // namespace

std::pair<HurwitzQuat, HurwitzQuat> canonical_right(const HurwitzQuat& q) {
  return canonical_right_impl(q, hurwitz_units());
}

std::pair<Icosian, Icosian> canonical_right(const Icosian& q) {
  return canonical_right_impl(q, icosian_units());
}

HurwitzQuat canonical_left(const HurwitzQuat& q) {
  const auto& units = hurwitz_units();
  HurwitzQuat best = units.front() * q;
  for (std::size_t k = 1; k < units.size(); ++k) {
    HurwitzQuat c = units[k] * q;
    if (c < best) best = std::move(c);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Hurwitz ring

HurwitzContent primitive_part(const HurwitzQuat& q) {
  if (q.is_zero()) throw QuaternionError("primitive_part of zero quaternion");
  const auto& d = q.doubled();
  BigInt g = 0;
  for (const auto& x : d) g = gcd(g, x);
  bool all_odd = true;
  for (const auto& x : d)
    if (mpz_even_p(BigInt(x / g).get_mpz_t())) all_odd = false;
  // q/n in J iff the doubled coordinates d/n are integers of equal parity.
  BigInt n = all_odd ? g : BigInt(g / 2);
  return {q.divide_scalar(n), n};
}

bool is_primitive(const HurwitzQuat& q) { return primitive_part(q).content == 1; }

bool is_reduced(const HurwitzQuat& q) {
  if (!is_primitive(q)) throw QuaternionError("is_reduced: quaternion not primitive");
  return mpz_odd_p(q.norm().get_mpz_t()) != 0;
}

ReducedDecomposition reduced_decompose(const HurwitzQuat& q) {
  if (!is_primitive(q))
    throw QuaternionError("reduced_decompose: quaternion not primitive");
  // Elements of even norm form the two-sided ideal (1+i)J = J(1+i).
  const HurwitzQuat one_plus_i = HurwitzQuat::from_coords(1, 1, 0, 0);
  const HurwitzQuat one_minus_i = one_plus_i.conj();
  HurwitzQuat r = q;
  HurwitzQuat s = HurwitzQuat::one();
  while (mpz_even_p(r.norm().get_mpz_t())) {
    r = (r * one_minus_i).divide_scalar(2);
    s = one_plus_i * s;
  }
  auto [canon, u] = canonical_right(r);
  // q = r s = (r u)(u^-1 s)
  return {canon, u.conj() * s};
}

namespace {

// Nearest element of J to the rational quaternion with doubled coordinates
// num/den (den > 0): minimal distance, then lexicographically smallest.
HurwitzQuat nearest_hurwitz(const HurwitzQuat::Doubled& num, const BigInt& den) {
  std::array<BigInt, 4> best_e;
  BigInt best_cost = -1;
  for (int parity = 0; parity < 2; ++parity) {
    std::array<BigInt, 4> e;
    BigInt cost = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      BigInt k0 = floor_div(num[i] - parity * den, 2 * den);
      BigInt e0 = 2 * k0 + parity;
      BigInt e1 = e0 + 2;
      BigInt c0 = num[i] - den * e0;
      BigInt c1 = num[i] - den * e1;
      c0 *= c0;
      c1 *= c1;
      if (c1 < c0) {
        e[i] = e1;
        cost += c1;
      } else {
        e[i] = e0;
        cost += c0;
      }
    }
    if (best_cost < 0 || cost < best_cost || (cost == best_cost && e < best_e)) {
      best_cost = cost;
      best_e = e;
    }
  }
  return HurwitzQuat::unchecked(best_e);
}

}  // namespace

DivMod left_divmod(const HurwitzQuat& a, const HurwitzQuat& b) {
  if (b.is_zero()) throw QuaternionError("left_divmod: division by zero");
  HurwitzQuat quot = nearest_hurwitz((a * b.conj()).doubled(), b.norm());
  return {quot, a - quot * b};
}

DivMod right_divmod(const HurwitzQuat& a, const HurwitzQuat& b) {
  if (b.is_zero()) throw QuaternionError("right_divmod: division by zero");
  HurwitzQuat quot = nearest_hurwitz((b.conj() * a).doubled(), b.norm());
  return {quot, a - b * quot};
}

HurwitzQuat glcd(const HurwitzQuat& a, const HurwitzQuat& b) {
  if (a.is_zero() && b.is_zero()) throw QuaternionError("glcd: both arguments zero");
  HurwitzQuat x = a;
  HurwitzQuat y = b;
  while (!y.is_zero()) {
    HurwitzQuat r = right_divmod(x, y).rem;
    x = std::move(y);
    y = std::move(r);
  }
  return canonical_right(x).first;
}

HurwitzQuat grcd(const HurwitzQuat& a, const HurwitzQuat& b) {
  if (a.is_zero() && b.is_zero()) throw QuaternionError("grcd: both arguments zero");
  HurwitzQuat x = a;
  HurwitzQuat y = b;
  while (!y.is_zero()) {
    HurwitzQuat r = left_divmod(x, y).rem;
    x = std::move(y);
    y = std::move(r);
  }
  return canonical_left(x);
}

namespace {

bool divides_doubled(const HurwitzQuat& prod, const BigInt& n) {
  HurwitzQuat::Doubled r;
  for (std::size_t i = 0; i < 4; ++i) {
    if (prod.doubled(i) % n != 0) return false;
    r[i] = prod.doubled(i) / n;
  }
  return HurwitzQuat::unchecked(r).in_ring();
}

}  // namespace

bool left_divides(const HurwitzQuat& d, const HurwitzQuat& a) {
  if (d.is_zero()) return a.is_zero();
  return divides_doubled(d.conj() * a, d.norm());
}

bool right_divides(const HurwitzQuat& d, const HurwitzQuat& a) {
  if (d.is_zero()) return a.is_zero();
  return divides_doubled(a * d.conj(), d.norm());
}

std::vector<HurwitzQuat> enumerate_norm_J(const BigInt& m) {
  if (m < 0) return {};
  const long target = 4 * to_long(m, "enumerate_norm_J");
  const long r = static_cast<long>(std::sqrt(static_cast<double>(target))) + 1;
  std::vector<HurwitzQuat> out;
  auto isqrt = [](long v) -> long {
    long s = static_cast<long>(std::sqrt(static_cast<double>(v)));
    while (s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
  };
  for (long d0 = -r; d0 <= r; ++d0) {
    long r0 = target - d0 * d0;
    if (r0 < 0) continue;
    for (long d1 = -r; d1 <= r; ++d1) {
      long r1 = r0 - d1 * d1;
      if (r1 < 0) continue;
      if ((d1 - d0) % 2 != 0) continue;
      for (long d2 = -r; d2 <= r; ++d2) {
        long r2 = r1 - d2 * d2;
        if (r2 < 0) continue;
        if ((d2 - d0) % 2 != 0) continue;
        long s = isqrt(r2);
        if (s * s != r2 || (s - d0) % 2 != 0) continue;
        out.push_back(HurwitzQuat::unchecked({d0, d1, d2, -s}));
        if (s != 0) out.push_back(HurwitzQuat::unchecked({d0, d1, d2, s}));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Icosian ring

std::array<GoldenInt, 4> icosian_basis_coords(const Icosian& q) {
  const auto& n = q.doubled();
  auto [c1, c2] = icosian_numerators(n);
  using T = Icosian::Traits;
  return {T::half(c1), T::half(c2), n[2], n[3] - n[2]};
}

const std::array<Icosian, 4>& icosian_basis() {
  static const std::array<Icosian, 4> basis = {
      Icosian::from_doubled({2, 0, 0, 0}),
      Icosian::from_doubled({0, 2, 0, 0}),
      Icosian::from_doubled({1, 1, 1, 1}),
      Icosian::from_doubled({GoldenInt(1, -1), GoldenInt::tau(), 0, 1}),
  };
  return basis;
}

Icosian twist(const Icosian& x) {
  const auto& d = x.doubled();
  return Icosian::unchecked({d[0].conj(), d[1].conj(), d[3].conj(), d[2].conj()});
}

IcosianContent primitive_part(const Icosian& q) {
  if (q.is_zero()) throw QuaternionError("primitive_part of zero icosian");
  auto c = icosian_basis_coords(q);
  GoldenInt g = 0;
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? golden_normalize(x) : golden_gcd(g, x);
  }
  return {q.divide_scalar(g), g};
}

bool is_primitive(const Icosian& q) { return golden_is_unit(primitive_part(q).content); }

BigInt trace_form(const Icosian& x) { return x.norm().trace(); }

namespace {

// One coordinate (a + b tau)/2 with w = 4 Tr(x_i^2) = 2a^2 + 2ab + 3b^2.
struct CoordOption {
  long a;
  long b;
  long w;
};

using RawIcosian = std::array<long, 8>;  // a0 b0 a1 b1 a2 b2 a3 b3

template <class Accept>
std::vector<RawIcosian> enumerate_icosian_raw(long bound4, Accept&& accept) {
  // Options bucketed by parity of (a, b), each bucket sorted by weight.
  std::array<std::vector<CoordOption>, 4> bucket;
  const long bmax = static_cast<long>(std::sqrt(bound4 / 2.5)) + 1;
  for (long b = -bmax; b <= bmax; ++b) {
    const long amax = static_cast<long>(std::sqrt(static_cast<double>(bound4))) + std::labs(b) + 1;
    for (long a = -amax; a <= amax; ++a) {
      long w = 2 * a * a + 2 * a * b + 3 * b * b;
      if (w <= bound4) bucket[((a & 1) << 1) | (b & 1)].push_back({a, b, w});
    }
  }
  for (auto& v : bucket)
    std::sort(v.begin(), v.end(), [](const CoordOption& x, const CoordOption& y) { return x.w < y.w; });

  auto parity_index = [](long a, long b) { return static_cast<int>(((a & 1) << 1) | (b & 1)); };

  std::vector<RawIcosian> out;
  for (const auto& b2 : bucket)
    for (const auto& o2 : b2) {
      const long rem2 = bound4 - o2.w;
      for (const auto& b3 : bucket)
        for (const auto& o3 : b3) {
          if (o3.w > rem2) break;
          const long rem3 = rem2 - o3.w;
          const long A = o3.a - o2.a;
          const long B = o3.b - o2.b;
          // Coordinate 1 needs (a1 - a2 - B, b1 - b2 - A - B) even,
          // coordinate 0 needs (a0 - a2 - A + B, b0 - b2 + A) even.
          const auto& bk1 = bucket[parity_index(o2.a + B, o2.b + A + B)];
          const auto& bk0 = bucket[parity_index(o2.a + A - B, o2.b - A)];
          for (const auto& o1 : bk1) {
            if (o1.w > rem3) break;
            const long rem1 = rem3 - o1.w;
            for (const auto& o0 : bk0) {
              if (o0.w > rem1) break;
              RawIcosian raw{o0.a, o0.b, o1.a, o1.b, o2.a, o2.b, o3.a, o3.b};
              if (accept(raw)) out.push_back(raw);
            }
          }
        }
    }
  // Order consistent with the GoldenInt order (trace, a, b) per coordinate.
  std::sort(out.begin(), out.end(), [](const RawIcosian& x, const RawIcosian& y) {
    for (int i = 0; i < 4; ++i) {
      auto kx = std::make_tuple(2 * x[2 * i] + x[2 * i + 1], x[2 * i], x[2 * i + 1]);
      auto ky = std::make_tuple(2 * y[2 * i] + y[2 * i + 1], y[2 * i], y[2 * i + 1]);
      if (kx != ky) return kx < ky;
    }
    return false;
  });
  return out;
}

std::vector<Icosian> to_icosians(const std::vector<RawIcosian>& raw) {
  std::vector<Icosian> out;
  out.reserve(raw.size());
  for (const auto& r : raw)
    out.push_back(Icosian::unchecked({GoldenInt(r[0], r[1]), GoldenInt(r[2], r[3]),
                                      GoldenInt(r[4], r[5]), GoldenInt(r[6], r[7])}));
  return out;
}

}  // namespace

std::vector<Icosian> enumerate_trace_ball_I(const BigInt& bound) {
  if (bound < 0) return {};
  const long bound4 = 4 * to_long(bound, "enumerate_trace_ball_I");
  return to_icosians(enumerate_icosian_raw(bound4, [](const RawIcosian&) { return true; }));
}

std::vector<Icosian> enumerate_norm_I(const GoldenInt& n) {
  if (n.is_zero()) return {Icosian()};
  if (!n.totally_positive()) return {};
  const long na = to_long(n.a(), "enumerate_norm_I");
  const long nb = to_long(n.b(), "enumerate_norm_I");
  // |x|^2 = sum (a_i^2 + b_i^2)/4 + sum (2 a_i b_i + b_i^2)/4 tau.
  auto accept = [na, nb](const RawIcosian& r) {
    long ra = 0;
    long rb = 0;
    for (int i = 0; i < 4; ++i) {
      long a = r[2 * i];
      long b = r[2 * i + 1];
      ra += a * a + b * b;
      rb += 2 * a * b + b * b;
    }
    return ra == 4 * na && rb == 4 * nb;
  };
  return to_icosians(enumerate_icosian_raw(4 * (2 * na + nb), accept));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<std::string> split_components(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4)
    throw ParseError("quaternion needs 4 comma-separated components: '" + text + "'");
  return parts;
}

}  // namespace

GoldenQuat parse_golden_quat(const std::string& text) {
  auto parts = split_components(text);
  GoldenQuat q;
  try {
    for (std::size_t i = 0; i < 4; ++i) q.c[i] = parse_golden(parts[i]);
  } catch (const ArithmeticError& e) {
    throw ParseError(e.what());
  }
  return q;
}

RatQuat parse_rat_quat(const std::string& text) {
  GoldenQuat g = parse_golden_quat(text);
  RatQuat q;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!g.c[i].is_rational())
      throw ParseError("expected rational components: '" + text + "'");
    q.c[i] = g.c[i].rational_part();
  }
  return q;
}

HurwitzQuat parse_hurwitz(const std::string& text) {
  RatQuat q = parse_rat_quat(text);
  HurwitzQuat::Doubled d;
  for (std::size_t i = 0; i < 4; ++i) {
    BigRat twice = 2 * q.c[i];
    if (!is_integer(twice)) throw ParseError("not a Hurwitz quaternion: '" + text + "'");
    d[i] = twice.get_num();
  }
  try {
    return HurwitzQuat::from_doubled(d);
  } catch (const QuaternionError&) {
    throw ParseError("not a Hurwitz quaternion: '" + text + "'");
  }
}

Icosian parse_icosian(const std::string& text) {
  GoldenQuat q = parse_golden_quat(text);
  Icosian::Doubled d;
  for (std::size_t i = 0; i < 4; ++i) {
    GoldenRat twice = GoldenRat(2) * q.c[i];
    if (!twice.is_integral()) throw ParseError("not an icosian: '" + text + "'");
    d[i] = twice.num();
  }
  try {
    return Icosian::from_doubled(d);
  } catch (const QuaternionError&) {
    throw ParseError("not an icosian: '" + text + "'");
  }
}

}  // namespace csl4
