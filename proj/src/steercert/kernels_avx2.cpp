// AVX2+FMA variants of the vector kernels. This translation unit is the only
// one compiled with -mavx2 -mfma; callers reach it through the dispatch table
// after the runtime CPU check.

#include "steercert/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace steercert::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double nrm2sq_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

double max_abs_avx2(const double* x, std::size_t n) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    m = _mm256_max_pd(m, _mm256_and_pd(_mm256_loadu_pd(x + i), mask));
  __m128d lo = _mm256_castpd256_pd128(m);
  __m128d hi = _mm256_extractf128_pd(m, 1);
  lo = _mm_max_pd(lo, hi);
  double r = std::max(_mm_cvtsd_f64(lo), _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo)));
  for (; i < n; ++i) r = std::max(r, std::fabs(x[i]));
  return r;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scal_avx2(double a, double* x, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

// Complex values are interleaved (re, im); one __m256d holds two of them.

cdouble cdotc_avx2(const cdouble* x, const cdouble* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    // per lane pair: re += xr*yr + xi*yi
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    // im lanes carry (-xi*yr, +xr*yi) via addsub
    __m256d xsw = _mm256_permute_pd(xv, 0x5);  // (xi, xr) per pair
    acc_im = _mm256_addsub_pd(acc_im, _mm256_mul_pd(xsw, yv));
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cdouble cdotu_avx2(const cdouble* x, const cdouble* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    // re lanes: (xr*yr, xi*yi) -> subtract odd from even via addsub trick:
    // accumulate (xr*yr - xi*yi) by negating the product's odd lanes.
    acc_re = _mm256_addsub_pd(acc_re, _mm256_xor_pd(_mm256_mul_pd(xv, yv),
                                                    _mm256_set1_pd(-0.0)));
    __m256d xsw = _mm256_permute_pd(xv, 0x5);
    acc_im = _mm256_fmadd_pd(xsw, yv, acc_im);
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void caxpy_avx2(cdouble a, const cdouble* x, cdouble* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d xsw = _mm256_permute_pd(xv, 0x5);
    // (ar*xr - ai*xi, ar*xi + ai*xr) per pair
    __m256d prod = _mm256_fmaddsub_pd(xv, ar, _mm256_mul_pd(xsw, ai));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
  }
  const double arr = a.real(), aii = a.imag();
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cdouble{arr * xr - aii * xi, arr * xi + aii * xr};
  }
}

void cscal_avx2(cdouble a, cdouble* x, std::size_t n) {
  double* xd = reinterpret_cast<double*>(x);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d xsw = _mm256_permute_pd(xv, 0x5);
    _mm256_storeu_pd(xd + 2 * i, _mm256_fmaddsub_pd(xv, ar, _mm256_mul_pd(xsw, ai)));
  }
  const double arr = a.real(), aii = a.imag();
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = cdouble{arr * xr - aii * xi, arr * xi + aii * xr};
  }
}

double cnrm2sq_avx2(const cdouble* x, std::size_t n) {
  return nrm2sq_avx2(reinterpret_cast<const double*>(x), 2 * n);
}

const Dispatch kAvx2 = {
    dot_avx2,   nrm2sq_avx2, max_abs_avx2, axpy_avx2,
    scal_avx2,  cdotc_avx2,  cdotu_avx2,   caxpy_avx2,
    cscal_avx2, cnrm2sq_avx2, "avx2",
};

}  // namespace

const Dispatch* avx2_or_null() {
  static const bool ok =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok ? &kAvx2 : nullptr;
}

}  // namespace steercert::kernels
