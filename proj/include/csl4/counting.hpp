#pragma once

// Counting functions f_rot (coincidence rotation classes of index n) and
// f_csl (distinct CSLs/CSMs of index n), their Dirichlet series and spectra.

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "csl4/coincidence.hpp"
#include "csl4/exact.hpp"

namespace csl4 {

class CountingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Kind { Rot, Csl };

std::string_view kind_name(Kind k);

/// coef * p^p_exp * x^x_exp, with x = p^-s.
struct Monomial {
  BigRat coef;
  unsigned p_exp = 0;
  unsigned x_exp = 0;
};

/// Polynomial in x whose coefficients are polynomials in p.
using PXPoly = std::vector<Monomial>;

PXPoly px_mul(const PXPoly& a, const PXPoly& b);

/// Local factor num/den of an Euler product; den has constant term 1.
struct EulerFactor {
  PXPoly num{{BigRat(1), 0, 0}};
  PXPoly den{{BigRat(1), 0, 0}};

  /// Power-series coefficients c_0..c_order at the prime p. Throws
  /// CountingError if a coefficient is not an integer.
  std::vector<BigInt> expand(long p, unsigned order) const;
};

EulerFactor operator*(const EulerFactor& a, const EulerFactor& b);
/// p -> p^2, x -> x^2.
EulerFactor square_substitute(const EulerFactor& f);

struct EulerRule {
  std::string name;
  std::function<bool(long)> applies;
  EulerFactor factor;
};

/// Local factors by prime class; primes matched by no rule have factor 1.
const std::vector<EulerRule>& euler_rules(Family f, Kind k);
const EulerFactor& local_factor(Family f, Kind k, long p);

struct DirichletCoeffs {
  long N = 0;
  std::vector<BigInt> a;  // a[0] unused; a[n] for 1 <= n <= N

  const BigInt& operator[](long n) const { return a.at(static_cast<std::size_t>(n)); }
};

DirichletCoeffs euler_expand(const std::vector<EulerRule>& rules, long N);
DirichletCoeffs dirichlet_series(Family f, Kind k, long N);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<long, unsigned>> factorize(long n);
bool is_prime(long n);

/// Prime-power closed forms of the centred hypercubic lattice.
BigInt d4_prime_power(Kind k, long p, unsigned r);

BigInt f_value(Family f, Kind k, long n);
BigInt f_rot(Family f, long n);
BigInt f_csl(Family f, long n);

bool spectrum_member(Family f, long n);

BigInt rotation_count(Family f, long n);
BigInt isometry_count(Family f, long n);

}  // namespace csl4
