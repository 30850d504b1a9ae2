#include "csl4/exact.hpp"

#include <cctype>
#include <cmath>

namespace csl4 {

std::optional<BigInt> int_sqrt(const BigInt& n) {
  if (n < 0) throw ArithmeticError("int_sqrt: negative argument");
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

BigInt floor(const BigRat& q) {
  return floor_div(q.get_num(), q.get_den());
}

bool is_integer(const BigRat& q) { return q.get_den() == 1; }

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(text));
    return make_rat(BigInt(text.substr(0, slash)),
                    BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ArithmeticError("malformed rational: '" + text + "'");
  }
}

int sign_sqrt5(const BigInt& u, const BigInt& v) {
  int su = sgn(u);
  int sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // Opposite signs: compare u^2 with 5 v^2.
  BigInt lhs = u * u;
  BigInt rhs = 5 * v * v;
  if (lhs == rhs) return 0;  // unreachable for integers; sqrt5 irrational
  return lhs > rhs ? su : sv;
}

std::strong_ordering operator<=>(const GoldenInt& x, const GoldenInt& y) {
  int c = cmp(x.trace(), y.trace());
  if (c == 0) c = cmp(x.a_, y.a_);
  if (c == 0) c = cmp(x.b_, y.b_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

namespace {
constexpr double kTau = 1.6180339887498948482;
constexpr double kTauConj = -0.6180339887498948482;
}  // namespace

double GoldenInt::to_double() const {
  return a_.get_d() + b_.get_d() * kTau;
}

double GoldenInt::conj_to_double() const {
  return a_.get_d() + b_.get_d() * kTauConj;
}

std::string GoldenInt::str() const {
  if (b_ == 0) return a_.get_str();
  std::string tpart = (b_ == 1 ? std::string() : (b_ == -1 ? std::string("-") : b_.get_str())) + "t";
  if (a_ == 0) return tpart;
  return a_.get_str() + (b_ > 0 ? "+" : "") + tpart;
}

BigInt golden_norm(const GoldenInt& x) { return abs(x.norm()); }

GoldenInt golden_conj(const GoldenInt& x) { return x.conj(); }

GoldenInt tau_pow(long k) {
  GoldenInt base = k >= 0 ? GoldenInt::tau() : GoldenInt(-1, 1);
  GoldenInt r(1);
  for (long i = 0; i < std::labs(k); ++i) r *= base;
  return r;
}

namespace {

// Nearest integer to p/q, ties rounded down.
BigInt round_div(const BigInt& p, const BigInt& q) {
  BigInt num = 2 * p + q;
  BigInt den = 2 * q;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // floor(p/q + 1/2) rounds ties up; shift them down.
  BigInt r = floor_div(num, den);
  if (r * den == num) r -= 1;
  return r;
}

}  // namespace

std::optional<GoldenInt> golden_divide(const GoldenInt& x, const GoldenInt& y) {
  if (y.is_zero()) throw ArithmeticError("division by zero in Z[tau]");
  GoldenInt z = x * y.conj();
  BigInt n = y.norm();
  if (z.a() % n != 0 || z.b() % n != 0) return std::nullopt;
  return GoldenInt(z.a() / n, z.b() / n);
}

bool golden_divides(const GoldenInt& y, const GoldenInt& x) {
  if (y.is_zero()) return x.is_zero();
  return golden_divide(x, y).has_value();
}

std::pair<GoldenInt, GoldenInt> golden_divmod(const GoldenInt& x,
                                              const GoldenInt& y) {
  if (y.is_zero()) throw ArithmeticError("division by zero in Z[tau]");
  GoldenInt z = x * y.conj();
  BigInt n = y.norm();
  GoldenInt q(round_div(z.a(), n), round_div(z.b(), n));
  return {q, x - q * y};
}

GoldenInt golden_normalize(const GoldenInt& x) {
  if (x.is_zero()) return x;
  GoldenInt y = x;
  if (y.sign() != y.conj_sign()) y *= GoldenInt::tau();
  if (y.sign() < 0) y = -y;
  const GoldenInt up(1, 1);     // tau^2
  const GoldenInt down(2, -1);  // tau^-2
  while ((y * up).trace() < y.trace()) y *= up;
  while ((y * down).trace() < y.trace()) y *= down;
  // Trace along the orbit y * tau^(2k) is strictly convex in k, so at most one
  // neighbour can tie.
  for (const GoldenInt* step : {&up, &down}) {
    GoldenInt z = y * *step;
    if (z.trace() == y.trace() && std::make_pair(z.a(), z.b()) <
                                      std::make_pair(y.a(), y.b()))
      y = z;
  }
  return y;
}

bool golden_is_unit(const GoldenInt& x) { return golden_norm(x) == 1; }

bool golden_associated(const GoldenInt& x, const GoldenInt& y) {
  return golden_normalize(x) == golden_normalize(y);
}

GoldenInt golden_gcd(const GoldenInt& x, const GoldenInt& y) {
  if (x.is_zero() && y.is_zero())
    throw ArithmeticError("golden_gcd: both arguments zero");
  GoldenInt a = x;
  GoldenInt b = y;
  while (!b.is_zero()) {
    GoldenInt r = golden_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return golden_normalize(a);
}

GoldenInt golden_lcm(const GoldenInt& x, const GoldenInt& y) {
  if (x.is_zero() || y.is_zero())
    throw ArithmeticError("golden_lcm: zero argument");
  auto q = golden_divide(x * y, golden_gcd(x, y));
  return golden_normalize(*q);
}

std::optional<GoldenInt> golden_sqrt(const GoldenInt& x) {
  if (x.is_zero()) return x;
  if (x.sign() < 0 || x.conj_sign() < 0) return std::nullopt;
  // For y = c + d tau with y^2 = x: t = y + y' = 2c + d, nu = y y' = N(y),
  // nu^2 = N(x), t^2 = Tr(x) + 2 nu and 5 d^2 = t^2 - 4 nu.
  auto nu0 = int_sqrt(x.norm());
  if (!nu0) return std::nullopt;
  for (const BigInt& nu : {*nu0, BigInt(-*nu0)}) {
    BigInt t2 = x.trace() + 2 * nu;
    if (t2 < 0) continue;
    auto t = int_sqrt(t2);
    if (!t) continue;
    BigInt d2 = t2 - 4 * nu;
    if (d2 < 0 || d2 % 5 != 0) continue;
    auto d = int_sqrt(d2 / 5);
    if (!d) continue;
    for (const BigInt& ts : {*t, BigInt(-*t)}) {
      for (const BigInt& ds : {*d, BigInt(-*d)}) {
        BigInt twice_c = ts - ds;
        if (twice_c % 2 != 0) continue;
        GoldenInt y(twice_c / 2, ds);
        if (y * y == x) return y.sign() < 0 ? -y : y;
      }
    }
  }
  return std::nullopt;
}

GoldenRat::GoldenRat(GoldenInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw ArithmeticError("zero denominator");
  reduce();
}

GoldenRat::GoldenRat(const BigRat& q)
    : num_(q.get_num()), den_(q.get_den()) {}

void GoldenRat::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(gcd(num_.a(), num_.b()), den_);
  if (g > 1) {
    num_ = GoldenInt(num_.a() / g, num_.b() / g);
    den_ /= g;
  }
}

GoldenRat operator+(const GoldenRat& x, const GoldenRat& y) {
  if (x.den_ == y.den_) return {x.num_ + y.num_, x.den_};
  return {x.num_ * GoldenInt(y.den_) + y.num_ * GoldenInt(x.den_),
          x.den_ * y.den_};
}

GoldenRat operator-(const GoldenRat& x, const GoldenRat& y) { return x + (-y); }

GoldenRat operator*(const GoldenRat& x, const GoldenRat& y) {
  return {x.num_ * y.num_, x.den_ * y.den_};
}

GoldenRat operator/(const GoldenRat& x, const GoldenRat& y) {
  if (y.is_zero()) throw ArithmeticError("division by zero in Q(sqrt5)");
  // x / y = x * y' / N(y)
  BigInt n = y.num_.norm();
  return {x.num_ * y.num_.conj() * GoldenInt(y.den_), x.den_ * n};
}

std::string GoldenRat::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.get_str();
}

namespace {

GoldenInt parse_golden_numerator(const std::string& s, const std::string& whole) {
  auto fail = [&] { throw ArithmeticError("malformed number: '" + whole + "'"); };
  if (s.empty()) fail();
  GoldenInt acc;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      fail();
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::string digits = s.substr(start, i - start);
    bool is_tau = i < s.size() && s[i] == 't';
    if (is_tau) ++i;
    if (digits.empty() && !is_tau) fail();
    BigInt coef = digits.empty() ? BigInt(1) : BigInt(digits);
    coef *= sign;
    acc += is_tau ? GoldenInt(0, coef) : GoldenInt(coef);
    any = true;
  }
  return acc;
}

}  // namespace

GoldenRat parse_golden(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto slash = s.find('/');
  GoldenInt num = parse_golden_numerator(s.substr(0, slash), text);
  BigInt den = 1;
  if (slash != std::string::npos) {
    std::string d = s.substr(slash + 1);
    if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos)
      throw ArithmeticError("malformed denominator: '" + text + "'");
    den = BigInt(d);
    if (den == 0) throw ArithmeticError("zero denominator: '" + text + "'");
  }
  return {num, den};
}

}  // namespace csl4
