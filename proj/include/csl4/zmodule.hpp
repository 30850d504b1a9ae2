#pragma once

// Finitely generated free Z-modules in Q^n with a canonical Hermite normal
// form basis. Lattices, coincidence site lattices and the rank-8 icosian
// modules are all represented this way.

#include <cstddef>
#include <string>
#include <vector>

#include "csl4/exact.hpp"
#include "csl4/quaternion.hpp"

namespace csl4 {

class ModuleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ModuleError("matrix dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<BigRat>;
using GoldenMatrix = Matrix<GoldenRat>;
using IntColumn = std::vector<BigInt>;
using RatVector = std::vector<BigRat>;

BigRat determinant(const RatMatrix& m);

/// Column-style Hermite normal form of the integer generators `cols`, each
/// of length n: lower-triangular echelon, positive pivots, entries left of a
/// pivot reduced into [0, pivot). Zero columns are dropped.
std::vector<IntColumn> hnf_columns(std::vector<IntColumn> cols, std::size_t n);

/// Integer kernel basis of the n x m integer matrix given by its columns.
std::vector<IntColumn> integer_kernel(const std::vector<IntColumn>& cols, std::size_t n);

/// Z-span of finitely many vectors in Q^n, stored canonically as
/// (1/scale) * H with H an integral HNF and scale the least positive integer
/// making the module integral. Two modules are equal iff their canonical
/// forms coincide.
class FreeModule {
 public:
  FreeModule() = default;

  static FreeModule from_generators(std::size_t ambient_dim, const std::vector<RatVector>& gens);
  static FreeModule from_integer_generators(std::size_t ambient_dim, std::vector<IntColumn> gens,
                                            const BigInt& scale = 1);
  static FreeModule standard_lattice(std::size_t n);
  static FreeModule zero(std::size_t n) { return from_integer_generators(n, {}); }

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return hnf_.size(); }
  const BigInt& scale() const { return scale_; }
  /// Integral HNF columns; the module basis is these divided by scale().
  const std::vector<IntColumn>& hnf() const { return hnf_; }
  std::vector<RatVector> basis() const;

  bool contains(const RatVector& v) const;
  bool contains(const FreeModule& other) const;

  /// Covolume |det| of a full-rank module.
  BigRat determinant() const;

  /// Bit-exact canonical serialization, usable as a hash key.
  std::string key() const;
  std::string to_json() const;
  static FreeModule from_json(const std::string& text);

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return a.dim_ == b.dim_ && a.scale_ == b.scale_ && a.hnf_ == b.hnf_;
  }

 private:
  std::size_t dim_ = 0;
  BigInt scale_{1};
  std::vector<IntColumn> hnf_;
};

FreeModule hnf_canonical(const FreeModule& m);
FreeModule module_sum(const FreeModule& a, const FreeModule& b);
FreeModule module_intersect(const FreeModule& a, const FreeModule& b);
/// [sup : sub]; throws ModuleError unless sub is a finite-index submodule.
BigInt index_in(const FreeModule& sub, const FreeModule& sup);
/// Image under an invertible linear map; throws ModuleError if singular.
FreeModule apply_map(const FreeModule& m, const RatMatrix& r);

/// a + b tau -> (a, b) per coordinate.
RatVector golden_embed(const std::vector<GoldenRat>& v);
/// Matrix over Q(sqrt5) acting on Q(sqrt5)^n as a 2n x 2n rational matrix.
RatMatrix golden_embed(const GoldenMatrix& m);
/// Z-span of embedded generators; with tau_closure, tau * g is added for
/// every generator g, producing the Z[tau]-span.
FreeModule golden_embed_module(const std::vector<GoldenQuat>& gens, bool tau_closure);

RatVector to_vector(const RatQuat& q);
RatVector to_vector(const GoldenQuat& q);

}  // namespace csl4
