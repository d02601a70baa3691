#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "steercert/errors.hpp"

namespace steercert {

using cdouble = std::complex<double>;

// Dense complex matrix, row-major storage. Dimensions are fixed after
// construction; entries are mutable through operator().
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);  // zero-filled
  static ComplexMatrix identity(int n);
  static ComplexMatrix diagonal(std::span<const double> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cdouble& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const cdouble& operator()(int i, int j) const {
    return data_[std::size_t(i) * cols_ + j];
  }
  cdouble* row(int i) { return data_.data() + std::size_t(i) * cols_; }
  const cdouble* row(int i) const { return data_.data() + std::size_t(i) * cols_; }
  cdouble* data() { return data_.data(); }
  const cdouble* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cdouble s);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cdouble trace() const;
  double max_abs() const;             // max entry modulus
  double frobenius_norm() const;
  double hermiticity_residual() const;  // max |M - M†|, square only
  bool all_finite() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cdouble> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// y = M x
std::vector<cdouble> matvec(const ComplexMatrix& m, std::span<const cdouble> x);

// Unit-norm complex vector.
class Ket {
 public:
  explicit Ket(std::vector<cdouble> amplitudes, double norm_tol = 1e-10);
  static Ket basis_state(int dim, int index);

  int dim() const { return int(amplitudes_.size()); }
  const std::vector<cdouble>& amplitudes() const { return amplitudes_; }
  cdouble amplitude(int i) const { return amplitudes_[std::size_t(i)]; }
  Ket conjugate() const;

 private:
  std::vector<cdouble> amplitudes_;
};

cdouble inner(const Ket& a, const Ket& b);  // <a|b>
ComplexMatrix projector(const Ket& v);      // |v><v|

// Eigendecomposition M = U diag(w) U^dag for Hermitian M, eigenvalues
// ascending, eigenvectors in the columns of U. Throws ShapeError for
// non-square input and ConsistencyError when M is not Hermitian to 1e-8.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

// Real symmetric eigensolver on row-major storage: a (n x n) is destroyed,
// eigenvalues come out ascending, eigenvectors in the columns of vecs.
void symmetric_eigen(int n, std::vector<double>& a, std::vector<double>& eigenvalues,
                     std::vector<double>& eigenvectors);

// Thin SVD via the Gram matrix of the smaller side: m = U diag(s) V^dag with
// s descending, U: rows x k, V: cols x k, k = min(rows, cols). Columns paired
// with singular values below ~1e-13*s_max are completed orthonormally.
struct Svd {
  std::vector<double> singular_values;
  ComplexMatrix u;
  ComplexMatrix v;
};
Svd svd(const ComplexMatrix& m);

// Largest singular value; equals max |eigenvalue| for Hermitian input.
double spectral_norm(const ComplexMatrix& m);

// Dense SPD Cholesky (lower), row-major. compute() returns nullopt when a
// pivot drops below tol * max diagonal.
class CholeskyFactor {
 public:
  static std::optional<CholeskyFactor> compute(std::vector<double> a, int n,
                                               double tol = 1e-13);
  void solve(std::vector<double>& rhs) const;
  int dim() const { return n_; }

 private:
  std::vector<double> l_;
  int n_ = 0;
};

}  // namespace steercert
