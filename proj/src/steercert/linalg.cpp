#include "steercert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "steercert/kernels.hpp"

namespace steercert {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ShapeError("ComplexMatrix: negative dimension");
  data_.assign(std::size_t(rows) * cols, cdouble{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m(int(entries.size()), int(entries.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = entries[std::size_t(i)];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeError("matrix addition: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeError("matrix subtraction: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble s) {
  kernels::cscal(s, data_.data(), data_.size());
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = std::conj(data_[i]);
  return r;
}

cdouble ComplexMatrix::trace() const {
  if (!is_square()) throw ShapeError("trace: non-square matrix");
  cdouble t{0.0, 0.0};
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cdouble& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  return std::sqrt(kernels::cnrm2sq(data_.data(), data_.size()));
}

double ComplexMatrix::hermiticity_residual() const {
  if (!is_square()) throw ShapeError("hermiticity_residual: non-square matrix");
  double m = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const cdouble& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  const std::size_t n = std::size_t(b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    cdouble* ci = c.row(i);
    for (int k = 0; k < a.cols(); ++k) {
      const cdouble aik = a(i, k);
      if (aik == cdouble{0.0, 0.0}) continue;
      kernels::caxpy(aik, b.row(k), ci, n);
    }
  }
  return c;
}

std::vector<cdouble> matvec(const ComplexMatrix& m, std::span<const cdouble> x) {
  if (std::size_t(m.cols()) != x.size()) throw ShapeError("matvec: shape mismatch");
  std::vector<cdouble> y(std::size_t(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    y[std::size_t(i)] = kernels::cdotu(m.row(i), x.data(), x.size());
  return y;
}

Ket::Ket(std::vector<cdouble> amplitudes, double norm_tol)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw ShapeError("Ket: empty amplitude vector");
  const double nrm =
      std::sqrt(kernels::cnrm2sq(amplitudes_.data(), amplitudes_.size()));
  if (!std::isfinite(nrm) || std::fabs(nrm - 1.0) > norm_tol)
    throw ConsistencyError("Ket: amplitudes not normalised (|norm-1| = " +
                           std::to_string(std::fabs(nrm - 1.0)) + ")");
}

Ket Ket::basis_state(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim)
    throw DomainError("Ket::basis_state: index out of range");
  std::vector<cdouble> a(std::size_t(dim));
  a[std::size_t(index)] = 1.0;
  return Ket(std::move(a));
}

Ket Ket::conjugate() const {
  std::vector<cdouble> a(amplitudes_.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::conj(amplitudes_[i]);
  return Ket(std::move(a));
}

cdouble inner(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) throw ShapeError("inner: dimension mismatch");
  return kernels::cdotc(a.amplitudes().data(), b.amplitudes().data(),
                        a.amplitudes().size());
}

ComplexMatrix projector(const Ket& v) {
  const int n = v.dim();
  ComplexMatrix p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p(i, j) = v.amplitude(i) * std::conj(v.amplitude(j));
  return p;
}

namespace {

// Implicit-shift QL iteration on a symmetric tridiagonal matrix
// (diag d, subdiagonal e with e[i] coupling d[i] and d[i+1]), accumulating
// the rotations into the n x n row-major matrix z. Classic EISPACK tql2.
template <typename T>
void tridiagonal_ql(int n, std::vector<double>& d, std::vector<double>& e, T* z) {
  if (n <= 1) return;
  e[std::size_t(n) - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    for (;;) {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= kEps * dd) break;
      }
      if (m == l) break;
      if (iter++ == 100)
        throw ConsistencyError("tridiagonal_ql: no convergence in 100 sweeps");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        for (int k = 0; k < n; ++k) {
          T* zr = z + std::size_t(k) * n;
          const T fk = zr[i + 1];
          zr[i + 1] = s * zr[i] + c * fk;
          zr[i] = c * zr[i] - s * fk;
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

// Householder reduction of a Hermitian matrix to real tridiagonal form.
// On return q is unitary with  input = q * tridiag(diag, off) * q^dag,
// off[k] >= 0 coupling diag[k], diag[k+1]. a is destroyed.
void hermitian_tridiagonalize(ComplexMatrix& a, ComplexMatrix& q,
                              std::vector<double>& diag, std::vector<double>& off) {
  const int n = a.rows();
  q = ComplexMatrix::identity(n);
  diag.assign(std::size_t(n), 0.0);
  off.assign(std::size_t(n), 0.0);
  std::vector<cdouble> sub(n > 1 ? std::size_t(n) - 1 : 0, cdouble{0.0, 0.0});
  std::vector<cdouble> v, u, w, cv, cw;

  for (int k = 0; k + 2 < n; ++k) {
    const int m = n - k - 1;
    v.assign(std::size_t(m), cdouble{0.0, 0.0});
    double xnorm2 = 0.0;
    for (int i = 0; i < m; ++i) {
      v[std::size_t(i)] = a(k + 1 + i, k);
      xnorm2 += std::norm(v[std::size_t(i)]);
    }
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) {
      sub[std::size_t(k)] = cdouble{0.0, 0.0};
      continue;
    }
    const cdouble x0 = v[0];
    const double ax0 = std::abs(x0);
    const cdouble phase = ax0 > 0.0 ? x0 / ax0 : cdouble{1.0, 0.0};
    v[0] += phase * xnorm;
    const double vnorm2 = 2.0 * (xnorm2 + ax0 * xnorm);
    const double tau = 2.0 / vnorm2;

    // u = A22 v ; w = tau*u - (tau^2/2)(v^dag u) v
    u.assign(std::size_t(m), cdouble{0.0, 0.0});
    for (int i = 0; i < m; ++i)
      u[std::size_t(i)] =
          kernels::cdotu(a.row(k + 1 + i) + k + 1, v.data(), std::size_t(m));
    const cdouble vu = kernels::cdotc(v.data(), u.data(), std::size_t(m));
    w = u;
    kernels::cscal(tau, w.data(), std::size_t(m));
    kernels::caxpy(-0.5 * tau * tau * vu, v.data(), w.data(), std::size_t(m));

    cv.assign(v.begin(), v.end());
    for (cdouble& z : cv) z = std::conj(z);
    cw.assign(w.begin(), w.end());
    for (cdouble& z : cw) z = std::conj(z);

    // A22 -= v w^dag + w v^dag
    for (int i = 0; i < m; ++i) {
      cdouble* rowi = a.row(k + 1 + i) + k + 1;
      kernels::caxpy(-v[std::size_t(i)], cw.data(), rowi, std::size_t(m));
      kernels::caxpy(-w[std::size_t(i)], cv.data(), rowi, std::size_t(m));
    }
    sub[std::size_t(k)] = -phase * xnorm;

    // q <- q (I - tau v v^dag), acting on columns k+1..n-1
    for (int r = 0; r < n; ++r) {
      cdouble* qr = q.row(r) + k + 1;
      const cdouble s = kernels::cdotu(qr, v.data(), std::size_t(m));
      kernels::caxpy(-tau * s, cv.data(), qr, std::size_t(m));
    }
  }
  if (n >= 2) sub[std::size_t(n) - 2] = a(n - 1, n - 2);
  for (int i = 0; i < n; ++i) diag[std::size_t(i)] = a(i, i).real();

  // Rotate away the phases of the subdiagonal; fold the diagonal unitary
  // into the columns of q so the remaining tridiagonal problem is real.
  cdouble phi{1.0, 0.0};
  for (int k = 0; k + 1 < n; ++k) {
    const double mag = std::abs(sub[std::size_t(k)]);
    off[std::size_t(k)] = mag;
    const cdouble next =
        mag > 0.0 ? phi * (sub[std::size_t(k)] / mag) : phi;
    if (next != cdouble{1.0, 0.0}) {
      for (int r = 0; r < n; ++r) q(r, k + 1) *= next;
    }
    phi = next;
  }
}

void sort_ascending(int n, std::vector<double>& d, ComplexMatrix& z) {
  std::vector<int> idx(std::size_t(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return d[std::size_t(a)] < d[std::size_t(b)]; });
  std::vector<double> ds(std::size_t(n));
  ComplexMatrix zs(n, n);
  for (int j = 0; j < n; ++j) {
    ds[std::size_t(j)] = d[std::size_t(idx[std::size_t(j)])];
    for (int i = 0; i < n; ++i) zs(i, j) = z(i, idx[std::size_t(j)]);
  }
  d = std::move(ds);
  z = std::move(zs);
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("hermitian_eigen: non-square matrix");
  const int n = m.rows();
  if (n < 1) throw ShapeError("hermitian_eigen: empty matrix");
  const double scale = std::max(1.0, m.max_abs());
  if (m.hermiticity_residual() > 1e-8 * scale)
    throw ConsistencyError("hermitian_eigen: input is not Hermitian");

  // work on the symmetrised copy so roundoff asymmetry cannot bias results
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  HermitianEigen out;
  std::vector<double> off;
  hermitian_tridiagonalize(a, out.eigenvectors, out.eigenvalues, off);
  tridiagonal_ql(n, out.eigenvalues, off, out.eigenvectors.data());
  sort_ascending(n, out.eigenvalues, out.eigenvectors);
  return out;
}

void symmetric_eigen(int n, std::vector<double>& a, std::vector<double>& eigenvalues,
                     std::vector<double>& eigenvectors) {
  if (int(a.size()) != n * n) throw ShapeError("symmetric_eigen: bad storage size");
  eigenvalues.assign(std::size_t(n), 0.0);
  std::vector<double> off(std::size_t(n), 0.0);
  eigenvectors.assign(std::size_t(n) * n, 0.0);
  for (int i = 0; i < n; ++i) eigenvectors[std::size_t(i) * n + i] = 1.0;

  std::vector<double> v, u, w;
  for (int k = 0; k + 2 < n; ++k) {
    const int m = n - k - 1;
    v.assign(std::size_t(m), 0.0);
    double xnorm2 = 0.0;
    for (int i = 0; i < m; ++i) {
      v[std::size_t(i)] = a[std::size_t(k + 1 + i) * n + k];
      xnorm2 += v[std::size_t(i)] * v[std::size_t(i)];
    }
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) {
      off[std::size_t(k)] = 0.0;
      continue;
    }
    const double sign = v[0] >= 0.0 ? 1.0 : -1.0;
    v[0] += sign * xnorm;
    const double tau = 2.0 / (2.0 * (xnorm2 + std::fabs(a[std::size_t(k + 1) * n + k]) * xnorm));

    u.assign(std::size_t(m), 0.0);
    for (int i = 0; i < m; ++i)
      u[std::size_t(i)] =
          kernels::dot(a.data() + std::size_t(k + 1 + i) * n + k + 1, v.data(),
                       std::size_t(m));
    const double vu = kernels::dot(v.data(), u.data(), std::size_t(m));
    w = u;
    kernels::scal(tau, w.data(), std::size_t(m));
    kernels::axpy(-0.5 * tau * tau * vu, v.data(), w.data(), std::size_t(m));

    for (int i = 0; i < m; ++i) {
      double* rowi = a.data() + std::size_t(k + 1 + i) * n + k + 1;
      kernels::axpy(-v[std::size_t(i)], w.data(), rowi, std::size_t(m));
      kernels::axpy(-w[std::size_t(i)], v.data(), rowi, std::size_t(m));
    }
    off[std::size_t(k)] = -sign * xnorm;

    for (int r = 0; r < n; ++r) {
      double* qr = eigenvectors.data() + std::size_t(r) * n + k + 1;
      const double s = kernels::dot(qr, v.data(), std::size_t(m));
      kernels::axpy(-tau * s, v.data(), qr, std::size_t(m));
    }
  }
  if (n >= 2) off[std::size_t(n) - 2] = a[std::size_t(n - 1) * n + n - 2];
  for (int i = 0; i < n; ++i) eigenvalues[std::size_t(i)] = a[std::size_t(i) * n + i];

  tridiagonal_ql(n, eigenvalues, off, eigenvectors.data());

  // ascending sort with column permutation
  std::vector<int> idx(std::size_t(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
    return eigenvalues[std::size_t(x)] < eigenvalues[std::size_t(y)];
  });
  std::vector<double> ds(std::size_t(n));
  std::vector<double> zs(std::size_t(n) * n);
  for (int j = 0; j < n; ++j) {
    ds[std::size_t(j)] = eigenvalues[std::size_t(idx[std::size_t(j)])];
    for (int i = 0; i < n; ++i)
      zs[std::size_t(i) * n + j] = eigenvectors[std::size_t(i) * n + idx[std::size_t(j)]];
  }
  eigenvalues = std::move(ds);
  eigenvectors = std::move(zs);
}

namespace {

// Gram-Schmidt completion of partially filled orthonormal columns of u
// (columns [0, filled) are valid); candidates are canonical basis vectors.
void complete_columns(ComplexMatrix& u, int filled) {
  const int n = u.rows();
  const int want = u.cols();
  int next = filled;
  for (int cand = 0; cand < n && next < want; ++cand) {
    std::vector<cdouble> r(std::size_t(n), cdouble{0.0, 0.0});
    r[std::size_t(cand)] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < next; ++j) {
        cdouble ov{0.0, 0.0};
        for (int i = 0; i < n; ++i) ov += std::conj(u(i, j)) * r[std::size_t(i)];
        for (int i = 0; i < n; ++i) r[std::size_t(i)] -= ov * u(i, j);
      }
    }
    const double nrm = std::sqrt(kernels::cnrm2sq(r.data(), r.size()));
    if (nrm < 0.5) continue;
    for (int i = 0; i < n; ++i) u(i, next) = r[std::size_t(i)] / nrm;
    ++next;
  }
  if (next < want)
    throw ConsistencyError("svd: failed to complete an orthonormal basis");
}

}  // namespace

Svd svd(const ComplexMatrix& m) {
  const int r = m.rows(), c = m.cols();
  if (r < 1 || c < 1) throw ShapeError("svd: empty matrix");
  const int k = std::min(r, c);
  Svd out;
  out.singular_values.assign(std::size_t(k), 0.0);
  out.u = ComplexMatrix(r, k);
  out.v = ComplexMatrix(c, k);

  const bool gram_right = (r >= c);  // eigendecompose m^dag m (c x c)
  const int g = gram_right ? c : r;
  ComplexMatrix gram(g, g);
  if (gram_right) {
    for (int row = 0; row < r; ++row)
      for (int i = 0; i < c; ++i) {
        const cdouble coef = std::conj(m(row, i));
        if (coef == cdouble{0.0, 0.0}) continue;
        kernels::caxpy(coef, m.row(row), gram.row(i), std::size_t(c));
      }
  } else {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        gram(i, j) = kernels::cdotc(m.row(j), m.row(i), std::size_t(c));
  }
  HermitianEigen eig = hermitian_eigen(gram);

  const double smax = std::sqrt(std::max(0.0, eig.eigenvalues.back()));
  const double cutoff = smax * 1e-13 * std::max(r, c);
  int filled = 0;
  for (int j = 0; j < k; ++j) {
    const int src = g - 1 - j;  // descending order
    const double lam = std::max(0.0, eig.eigenvalues[std::size_t(src)]);
    const double sv = std::sqrt(lam);
    out.singular_values[std::size_t(j)] = sv;
    if (gram_right) {
      for (int i = 0; i < c; ++i) out.v(i, j) = eig.eigenvectors(i, src);
    } else {
      for (int i = 0; i < r; ++i) out.u(i, j) = eig.eigenvectors(i, src);
    }
    if (sv > cutoff && sv > 0.0) {
      if (gram_right) {
        // u_j = m v_j / s
        for (int i = 0; i < r; ++i) {
          cdouble acc{0.0, 0.0};
          const cdouble* mr = m.row(i);
          for (int t = 0; t < c; ++t) acc += mr[t] * out.v(t, j);
          out.u(i, j) = acc / sv;
        }
      } else {
        // v_j = m^dag u_j / s
        for (int t = 0; t < c; ++t) {
          cdouble acc{0.0, 0.0};
          for (int i = 0; i < r; ++i) acc += std::conj(m(i, t)) * out.u(i, j);
          out.v(t, j) = acc / sv;
        }
      }
      filled = j + 1;
    }
  }
  if (filled < k) {
    if (gram_right)
      complete_columns(out.u, filled);
    else
      complete_columns(out.v, filled);
  }
  return out;
}

double spectral_norm(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("spectral_norm: non-square matrix");
  const int n = m.rows();
  ComplexMatrix gram(n, n);
  for (int row = 0; row < n; ++row)
    for (int i = 0; i < n; ++i) {
      const cdouble coef = std::conj(m(row, i));
      if (coef == cdouble{0.0, 0.0}) continue;
      kernels::caxpy(coef, m.row(row), gram.row(i), std::size_t(n));
    }
  HermitianEigen eig = hermitian_eigen(gram);
  return std::sqrt(std::max(0.0, eig.eigenvalues.back()));
}

std::optional<CholeskyFactor> CholeskyFactor::compute(std::vector<double> a, int n,
                                                      double tol) {
  if (int(a.size()) != n * n) throw ShapeError("cholesky: bad storage size");
  double maxdiag = 0.0;
  for (int i = 0; i < n; ++i)
    maxdiag = std::max(maxdiag, std::fabs(a[std::size_t(i) * n + i]));
  if (maxdiag == 0.0) maxdiag = 1.0;

  CholeskyFactor f;
  f.n_ = n;
  std::vector<double>& l = a;  // factor in place, lower triangle
  for (int j = 0; j < n; ++j) {
    double* lj = l.data() + std::size_t(j) * n;
    const double djj =
        lj[j] - kernels::dot(lj, lj, std::size_t(j));
    if (djj <= tol * maxdiag) return std::nullopt;
    const double root = std::sqrt(djj);
    lj[j] = root;
    for (int i = j + 1; i < n; ++i) {
      double* li = l.data() + std::size_t(i) * n;
      li[j] = (li[j] - kernels::dot(li, lj, std::size_t(j))) / root;
    }
  }
  // zero strict upper triangle, keep transpose copy for the back solve
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) l[std::size_t(i) * n + j] = 0.0;
  f.l_ = std::move(l);
  return f;
}

void CholeskyFactor::solve(std::vector<double>& rhs) const {
  const int n = n_;
  if (int(rhs.size()) != n) throw ShapeError("cholesky solve: bad rhs size");
  // forward: L y = b
  for (int i = 0; i < n; ++i) {
    const double* li = l_.data() + std::size_t(i) * n;
    rhs[std::size_t(i)] =
        (rhs[std::size_t(i)] - kernels::dot(li, rhs.data(), std::size_t(i))) / li[i];
  }
  // backward: L^T x = y  (column access on L = row access on L^T)
  for (int i = n - 1; i >= 0; --i) {
    double acc = rhs[std::size_t(i)];
    for (int kk = i + 1; kk < n; ++kk)
      acc -= l_[std::size_t(kk) * n + i] * rhs[std::size_t(kk)];
    rhs[std::size_t(i)] = acc / l_[std::size_t(i) * n + i];
  }
}

}  // namespace steercert
