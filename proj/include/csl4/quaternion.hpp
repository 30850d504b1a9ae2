#pragma once

// Quaternions over Q and Q(sqrt5), the Hurwitz ring J of integer quaternions
// and the icosian ring I.

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "csl4/exact.hpp"

namespace csl4 {

/// Raised when a quaternion violates a ring or primitivity precondition.
class QuaternionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed quaternion text, or text naming an element outside the ring.
class ParseError : public QuaternionError {
 public:
  using QuaternionError::QuaternionError;
};

/// Quaternion with coefficients in a field (BigRat or GoldenRat), in the
/// basis 1, i, j, k with i^2 = j^2 = k^2 = ijk = -1.
template <class F>
struct Quat {
  std::array<F, 4> c{};

  friend Quat operator+(const Quat& x, const Quat& y) {
    return {{x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]}};
  }
  friend Quat operator-(const Quat& x, const Quat& y) {
    return {{x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]}};
  }
  friend Quat operator*(const Quat& x, const Quat& y) {
    const auto& a = x.c;
    const auto& b = y.c;
    return {{a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
             a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
             a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
             a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]}};
  }
  friend Quat operator*(const F& s, const Quat& x) {
    return {{s * x.c[0], s * x.c[1], s * x.c[2], s * x.c[3]}};
  }
  friend bool operator==(const Quat& x, const Quat& y) { return x.c == y.c; }

  Quat conj() const { return {{c[0], -c[1], -c[2], -c[3]}}; }
  F norm() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }
};

using RatQuat = Quat<BigRat>;
using GoldenQuat = Quat<GoldenRat>;

namespace detail {
template <class Ring>
struct RingTraits;
template <>
struct RingTraits<BigInt> {
  using Field = BigRat;
  static BigInt half(const BigInt& x);
  static Field to_field(const BigInt& x) { return Field(x); }
  static bool is_even(const BigInt& x) { return mpz_even_p(x.get_mpz_t()) != 0; }
};
template <>
struct RingTraits<GoldenInt> {
  using Field = GoldenRat;
  static GoldenInt half(const GoldenInt& x);
  static Field to_field(const GoldenInt& x) { return Field(x); }
  static bool is_even(const GoldenInt& x) {
    return mpz_even_p(x.a().get_mpz_t()) && mpz_even_p(x.b().get_mpz_t());
  }
};
}  // namespace detail

/// Quaternion whose coordinates lie in (1/2)Ring, stored as the integral
/// doubled coordinates d_i, i.e. the value is (d0 + d1 i + d2 j + d3 k) / 2.
/// With Ring = BigInt the class models the Hurwitz ring J, with
/// Ring = GoldenInt the icosian ring I. Membership is checked on construction.
template <class Ring>
class HalfQuat {
 public:
  using Traits = detail::RingTraits<Ring>;
  using Field = typename Traits::Field;
  using Doubled = std::array<Ring, 4>;

  HalfQuat() = default;

  /// Throws QuaternionError unless the doubled coordinates describe a ring
  /// element.
  static HalfQuat from_doubled(Doubled d) {
    HalfQuat q(std::move(d));
    if (!q.in_ring()) throw QuaternionError("not a ring element: " + q.str());
    return q;
  }
  /// Integral coordinates (a, b, c, d) = a + bi + cj + dk.
  static HalfQuat from_coords(const Ring& a, const Ring& b, const Ring& c,
                              const Ring& d) {
    return HalfQuat(Doubled{Ring(2) * a, Ring(2) * b, Ring(2) * c, Ring(2) * d});
  }
  static HalfQuat scalar(const Ring& s) {
    return from_coords(s, Ring(0), Ring(0), Ring(0));
  }
  static HalfQuat one() { return scalar(Ring(1)); }

  /// Unchecked; callers guarantee ring membership.
  static HalfQuat unchecked(Doubled d) { return HalfQuat(std::move(d)); }

  const Doubled& doubled() const { return d_; }
  const Ring& doubled(std::size_t i) const { return d_[i]; }

  bool is_zero() const {
    for (const auto& x : d_)
      if (!(x == Ring(0))) return false;
    return true;
  }

  bool in_ring() const;

  Quat<Field> to_field() const {
    Quat<Field> q;
    for (std::size_t i = 0; i < 4; ++i)
      q.c[i] = Traits::to_field(d_[i]) * Field(make_half());
    return q;
  }

  friend HalfQuat operator+(const HalfQuat& x, const HalfQuat& y) {
    Doubled r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = x.d_[i] + y.d_[i];
    return HalfQuat(std::move(r));
  }
  friend HalfQuat operator-(const HalfQuat& x, const HalfQuat& y) {
    Doubled r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = x.d_[i] - y.d_[i];
    return HalfQuat(std::move(r));
  }
  friend HalfQuat operator-(const HalfQuat& x) {
    return HalfQuat(Doubled{-x.d_[0], -x.d_[1], -x.d_[2], -x.d_[3]});
  }
  /// Hamilton product; closed in both rings.
  friend HalfQuat operator*(const HalfQuat& x, const HalfQuat& y) {
    const auto& a = x.d_;
    const auto& b = y.d_;
    // (a/2)(b/2) = ab/4, whose doubled coordinates are ab/2.
    return HalfQuat(Doubled{
        Traits::half(a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]),
        Traits::half(a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2]),
        Traits::half(a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1]),
        Traits::half(a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0])});
  }
  friend HalfQuat operator*(const Ring& s, const HalfQuat& x) {
    return HalfQuat(Doubled{s * x.d_[0], s * x.d_[1], s * x.d_[2], s * x.d_[3]});
  }

  friend bool operator==(const HalfQuat& x, const HalfQuat& y) {
    return x.d_ == y.d_;
  }
  /// Lexicographic order on doubled coordinates.
  friend bool operator<(const HalfQuat& x, const HalfQuat& y) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (x.d_[i] < y.d_[i]) return true;
      if (y.d_[i] < x.d_[i]) return false;
    }
    return false;
  }

  HalfQuat conj() const { return HalfQuat(Doubled{d_[0], -d_[1], -d_[2], -d_[3]}); }

  /// Reduced norm |q|^2 = q * conj(q), an element of Ring.
  Ring norm() const {
    Ring s = d_[0] * d_[0] + d_[1] * d_[1] + d_[2] * d_[2] + d_[3] * d_[3];
    return Traits::half(Traits::half(s));
  }

  /// Exact scalar division; throws when the result leaves the ring.
  HalfQuat divide_scalar(const Ring& s) const;

  std::string str() const;
  std::size_t hash() const;

 private:
  explicit HalfQuat(Doubled d) : d_(std::move(d)) {}
  static BigRat make_half() { return BigRat(1, 2); }
  Doubled d_{};
};

using HurwitzQuat = HalfQuat<BigInt>;
using Icosian = HalfQuat<GoldenInt>;

struct HalfQuatHash {
  template <class R>
  std::size_t operator()(const HalfQuat<R>& q) const {
    return q.hash();
  }
};

template <>
bool HurwitzQuat::in_ring() const;
template <>
bool Icosian::in_ring() const;
template <>
HurwitzQuat HurwitzQuat::divide_scalar(const BigInt& s) const;
template <>
Icosian Icosian::divide_scalar(const GoldenInt& s) const;
template <>
std::string HurwitzQuat::str() const;
template <>
std::string Icosian::str() const;
template <>
std::size_t HurwitzQuat::hash() const;
template <>
std::size_t Icosian::hash() const;

// ---------------------------------------------------------------------------
// Unit groups

/// The 24 units of J, sorted.
const std::vector<HurwitzQuat>& hurwitz_units();
/// The 120 units of I, sorted.
const std::vector<Icosian>& icosian_units();

/// Smallest element of {q u : u unit}, and the unit achieving it.
std::pair<HurwitzQuat, HurwitzQuat> canonical_right(const HurwitzQuat& q);
std::pair<Icosian, Icosian> canonical_right(const Icosian& q);
/// Smallest element of {u q : u unit}.
HurwitzQuat canonical_left(const HurwitzQuat& q);

// ---------------------------------------------------------------------------
// Hurwitz ring J

/// Largest n with q/n in J, and q/n.
struct HurwitzContent {
  HurwitzQuat primitive;
  BigInt content;
};
HurwitzContent primitive_part(const HurwitzQuat& q);
bool is_primitive(const HurwitzQuat& q);

/// Primitive with odd norm. Throws on non-primitive input.
bool is_reduced(const HurwitzQuat& q);

/// q = reduced * two_part with |reduced|^2 odd and |two_part|^2 = 2^k;
/// `reduced` is canonical under right multiplication by units.
struct ReducedDecomposition {
  HurwitzQuat reduced;
  HurwitzQuat two_part;
};
ReducedDecomposition reduced_decompose(const HurwitzQuat& q);

struct DivMod {
  HurwitzQuat quot;
  HurwitzQuat rem;
};
/// a = quot * b + rem with |rem|^2 < |b|^2 (remainder for right divisors).
DivMod left_divmod(const HurwitzQuat& a, const HurwitzQuat& b);
/// a = b * quot + rem with |rem|^2 < |b|^2 (remainder for left divisors).
DivMod right_divmod(const HurwitzQuat& a, const HurwitzQuat& b);

/// Greatest left common divisor d (a, b in dJ), canonical up to right units.
HurwitzQuat glcd(const HurwitzQuat& a, const HurwitzQuat& b);
/// Greatest right common divisor d (a, b in Jd), canonical up to left units.
HurwitzQuat grcd(const HurwitzQuat& a, const HurwitzQuat& b);

/// True iff d left-divides a, i.e. a in dJ.
bool left_divides(const HurwitzQuat& d, const HurwitzQuat& a);
bool right_divides(const HurwitzQuat& d, const HurwitzQuat& a);

/// All q in J with |q|^2 = m, sorted.
std::vector<HurwitzQuat> enumerate_norm_J(const BigInt& m);

// ---------------------------------------------------------------------------
// Icosian ring I

/// tau-free coordinates of an icosian in the Z[tau]-basis
/// (1,0,0,0), (0,1,0,0), (1,1,1,1)/2, (1-tau,tau,0,1)/2.
std::array<GoldenInt, 4> icosian_basis_coords(const Icosian& q);
/// The four Z[tau]-basis quaternions of I.
const std::array<Icosian, 4>& icosian_basis();

/// x~ = (x0', x1', x3', x2').
Icosian twist(const Icosian& x);

struct IcosianContent {
  Icosian primitive;
  GoldenInt content;  // unit-normalized
};
IcosianContent primitive_part(const Icosian& q);
bool is_primitive(const Icosian& q);

/// Positive-definite trace form T(x) = |x|^2 + (|x|^2)'.
BigInt trace_form(const Icosian& x);

/// All x in I with T(x) <= bound, sorted.
std::vector<Icosian> enumerate_trace_ball_I(const BigInt& bound);
/// All x in I with |x|^2 == n exactly, sorted.
std::vector<Icosian> enumerate_norm_I(const GoldenInt& n);

// ---------------------------------------------------------------------------
// Text format: "a,b,c,d" with components "p/q" or "p+qt/r" (t = tau).

RatQuat parse_rat_quat(const std::string& text);
GoldenQuat parse_golden_quat(const std::string& text);
HurwitzQuat parse_hurwitz(const std::string& text);
Icosian parse_icosian(const std::string& text);

}  // namespace csl4
