#include "steercert/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace steercert::kernels {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double nrm2sq_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

double max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

cdouble cdotc_scalar(const cdouble* x, const cdouble* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cdouble cdotu_scalar(const cdouble* x, const cdouble* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void caxpy_scalar(cdouble a, const cdouble* x, cdouble* y, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cdouble{ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

void cscal_scalar(cdouble a, cdouble* x, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = cdouble{ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

double cnrm2sq_scalar(const cdouble* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

const Dispatch kScalar = {
    dot_scalar,   nrm2sq_scalar, max_abs_scalar, axpy_scalar,
    scal_scalar,  cdotc_scalar,  cdotu_scalar,   caxpy_scalar,
    cscal_scalar, cnrm2sq_scalar, "scalar",
};

const Dispatch* select_initial() {
  const char* env = std::getenv("STEERCERT_KERNELS");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return &kScalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_or_null() != nullptr)
      return avx2_or_null();
  }
  if (const Dispatch* v = avx2_or_null()) return v;
  return &kScalar;
}

const Dispatch* g_active = nullptr;

}  // namespace

const Dispatch& scalar() { return kScalar; }

#if !defined(STEERCERT_AVX2_TU)
const Dispatch* avx2_or_null() { return nullptr; }
#endif

const Dispatch& active() {
  if (g_active == nullptr) g_active = select_initial();
  return *g_active;
}

void force(const Dispatch& d) { g_active = &d; }

}  // namespace steercert::kernels
