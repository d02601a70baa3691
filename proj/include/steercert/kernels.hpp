#pragma once

#include <complex>
#include <cstddef>

namespace steercert::kernels {

using cdouble = std::complex<double>;

// Contiguous vector kernels backing the dense linear algebra layer.
//
// Each kernel exists as a scalar reference implementation and, on x86-64
// hardware with AVX2+FMA, a vectorised variant. The variant is picked once at
// load time (env STEERCERT_KERNELS=scalar|avx2 overrides). Vectorised results
// may differ from scalar in the last bits (FMA contraction, reassociated
// sums); equivalence is tested to ~1e-13 relative accuracy.
struct Dispatch {
  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*nrm2sq)(const double* x, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  void (*scal)(double a, double* x, std::size_t n);
  // sum conj(x_i) * y_i
  cdouble (*cdotc)(const cdouble* x, const cdouble* y, std::size_t n);
  // sum x_i * y_i
  cdouble (*cdotu)(const cdouble* x, const cdouble* y, std::size_t n);
  void (*caxpy)(cdouble a, const cdouble* x, cdouble* y, std::size_t n);
  void (*cscal)(cdouble a, cdouble* x, std::size_t n);
  double (*cnrm2sq)(const cdouble* x, std::size_t n);
  const char* name;
};

const Dispatch& scalar();
// nullptr when the AVX2 unit was not compiled in or the CPU lacks AVX2/FMA.
const Dispatch* avx2_or_null();
const Dispatch& active();
// Test hook; not thread-safe against concurrent kernel calls.
void force(const Dispatch& d);

inline double dot(const double* x, const double* y, std::size_t n) {
  return active().dot(x, y, n);
}
inline double nrm2sq(const double* x, std::size_t n) {
  return active().nrm2sq(x, n);
}
inline double max_abs(const double* x, std::size_t n) {
  return active().max_abs(x, n);
}
inline void axpy(double a, const double* x, double* y, std::size_t n) {
  active().axpy(a, x, y, n);
}
inline void scal(double a, double* x, std::size_t n) { active().scal(a, x, n); }
inline cdouble cdotc(const cdouble* x, const cdouble* y, std::size_t n) {
  return active().cdotc(x, y, n);
}
inline cdouble cdotu(const cdouble* x, const cdouble* y, std::size_t n) {
  return active().cdotu(x, y, n);
}
inline void caxpy(cdouble a, const cdouble* x, cdouble* y, std::size_t n) {
  active().caxpy(a, x, y, n);
}
inline void cscal(cdouble a, cdouble* x, std::size_t n) {
  active().cscal(a, x, n);
}
inline double cnrm2sq(const cdouble* x, std::size_t n) {
  return active().cnrm2sq(x, n);
}

}  // namespace steercert::kernels
