#pragma once

// Exact scalar arithmetic: arbitrary-precision integers and rationals (GMP),
// the golden ring Z[tau] and its fraction field Q(sqrt 5).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace csl4 {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Raised for violated preconditions of the exact-arithmetic layer.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact square root of a non-negative integer, or nullopt when n is not a
/// perfect square. Throws ArithmeticError on negative input.
std::optional<BigInt> int_sqrt(const BigInt& n);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigRat make_rat(const BigInt& num, const BigInt& den);
BigInt floor(const BigRat& q);
bool is_integer(const BigRat& q);
std::string to_string(const BigInt& n);
std::string to_string(const BigRat& q);
BigRat parse_rational(const std::string& text);

/// Sign of u + v*sqrt(5) for integers u, v; exact.
int sign_sqrt5(const BigInt& u, const BigInt& v);

/// a + b*tau with tau = (1 + sqrt 5)/2, so tau^2 = tau + 1.
class GoldenInt {
 public:
  GoldenInt() = default;
  GoldenInt(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  GoldenInt(BigInt a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  GoldenInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

  static GoldenInt tau() { return {0, 1}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  friend GoldenInt operator+(const GoldenInt& x, const GoldenInt& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend GoldenInt operator-(const GoldenInt& x, const GoldenInt& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend GoldenInt operator-(const GoldenInt& x) { return {-x.a_, -x.b_}; }
  friend GoldenInt operator*(const GoldenInt& x, const GoldenInt& y) {
    BigInt bb = x.b_ * y.b_;
    return {x.a_ * y.a_ + bb, x.a_ * y.b_ + x.b_ * y.a_ + bb};
  }
  GoldenInt& operator+=(const GoldenInt& y) { return *this = *this + y; }
  GoldenInt& operator-=(const GoldenInt& y) { return *this = *this - y; }
  GoldenInt& operator*=(const GoldenInt& y) { return *this = *this * y; }

  friend bool operator==(const GoldenInt& x, const GoldenInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Total order by (trace, a, b); used for canonical representatives.
  friend std::strong_ordering operator<=>(const GoldenInt& x,
                                          const GoldenInt& y);

  /// Algebraic conjugate: tau -> 1 - tau.
  GoldenInt conj() const { return {a_ + b_, -b_}; }
  /// Field norm x * x', signed.
  BigInt norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
  /// x + x'.
  BigInt trace() const { return 2 * a_ + b_; }

  /// Sign under tau -> (1+sqrt5)/2, and under tau -> (1-sqrt5)/2.
  int sign() const { return sign_sqrt5(2 * a_ + b_, b_); }
  int conj_sign() const { return sign_sqrt5(2 * a_ + b_, -b_); }
  bool totally_positive() const { return sign() > 0 && conj_sign() > 0; }

  double to_double() const;
  double conj_to_double() const;
  std::string str() const;

 private:
  BigInt a_{0};
  BigInt b_{0};
};

/// |x x'|, the absolute field norm.
BigInt golden_norm(const GoldenInt& x);
GoldenInt golden_conj(const GoldenInt& x);

/// tau^k for any integer k; tau^-1 = tau - 1.
GoldenInt tau_pow(long k);

/// Exact division if y divides x in Z[tau].
std::optional<GoldenInt> golden_divide(const GoldenInt& x, const GoldenInt& y);
bool golden_divides(const GoldenInt& y, const GoldenInt& x);

/// Euclidean division: x = q*y + r with |N(r)| < |N(y)|.
std::pair<GoldenInt, GoldenInt> golden_divmod(const GoldenInt& x,
                                              const GoldenInt& y);

/// Canonical associate: totally positive, minimal trace, then smallest (a, b).
GoldenInt golden_normalize(const GoldenInt& x);
bool golden_associated(const GoldenInt& x, const GoldenInt& y);
bool golden_is_unit(const GoldenInt& x);

GoldenInt golden_gcd(const GoldenInt& x, const GoldenInt& y);
GoldenInt golden_lcm(const GoldenInt& x, const GoldenInt& y);

/// Square root in Z[tau] when one exists; the root is positive under the
/// main embedding tau -> (1+sqrt5)/2.
std::optional<GoldenInt> golden_sqrt(const GoldenInt& x);

/// Element of Q(sqrt5): numerator / denominator, denominator > 0, reduced.
class GoldenRat {
 public:
  GoldenRat() = default;
  GoldenRat(long a) : num_(a) {}  // NOLINT(google-explicit-constructor)
  GoldenRat(GoldenInt num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  GoldenRat(GoldenInt num, BigInt den);
  GoldenRat(const BigRat& q);  // NOLINT(google-explicit-constructor)

  const GoldenInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }
  bool is_rational() const { return num_.is_rational(); }
  BigRat rational_part() const { return make_rat(num_.a(), den_); }
  BigRat tau_part() const { return make_rat(num_.b(), den_); }

  friend GoldenRat operator+(const GoldenRat& x, const GoldenRat& y);
  friend GoldenRat operator-(const GoldenRat& x, const GoldenRat& y);
  friend GoldenRat operator-(const GoldenRat& x) { return {-x.num_, x.den_}; }
  friend GoldenRat operator*(const GoldenRat& x, const GoldenRat& y);
  friend GoldenRat operator/(const GoldenRat& x, const GoldenRat& y);
  GoldenRat& operator+=(const GoldenRat& y) { return *this = *this + y; }
  GoldenRat& operator-=(const GoldenRat& y) { return *this = *this - y; }
  GoldenRat& operator*=(const GoldenRat& y) { return *this = *this * y; }
  friend bool operator==(const GoldenRat& x, const GoldenRat& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  GoldenRat conj() const { return {num_.conj(), den_}; }
  int sign() const { return num_.sign(); }
  std::string str() const;

 private:
  void reduce();
  GoldenInt num_{0};
  BigInt den_{1};
};

/// Parses "p/q", "p+qt/r", "t", "-1+2t" and similar; t denotes tau.
GoldenRat parse_golden(const std::string& text);

}  // namespace csl4
