// AVX2 lane. Element-wise kernels mirror the scalar lane's per-element
// operation order exactly (mul then add, no FMA) so results are
// bit-identical; reductions use 4-wide partial sums.

#if defined(ESNN_HAVE_AVX2)

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace esnn::kernels::detail {
namespace {

void k_scale(double* x, std::size_t n, double a) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), va));
  }
  for (; i < n; ++i) x[i] *= a;
}

void k_shift(double* x, std::size_t n, double a) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_add_pd(_mm256_loadu_pd(x + i), va));
  }
  for (; i < n; ++i) x[i] += a;
}

void k_axpy(double* y, std::size_t n, double a, const double* x) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), t));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void k_drive(double* acc, std::size_t n, const double* w) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(
        acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(w + i)));
  }
  for (; i < n; ++i) acc[i] += w[i];
}

void k_drive_lazy(double* acc, std::size_t n, const double* w, const double* f,
                  const double* fs) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_mul_pd(_mm256_loadu_pd(f + i), _mm256_loadu_pd(fs + i));
    t = _mm256_add_pd(_mm256_loadu_pd(w + i), t);
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), t));
  }
  for (; i < n; ++i) {
    double t = f[i] * fs[i];
    t = w[i] + t;
    acc[i] = acc[i] + t;
  }
}

void k_lif_integrate(double* v, double* ge, double* gi, std::size_t n,
                     const LifConsts& c) {
  const __m256d vrest = _mm256_set1_pd(c.v_rest);
  const __m256d eexc = _mm256_set1_pd(c.e_exc);
  const __m256d einh = _mm256_set1_pd(c.e_inh);
  const __m256d k = _mm256_set1_pd(c.k);
  const __m256d dge = _mm256_set1_pd(c.ge_decay);
  const __m256d dgi = _mm256_set1_pd(c.gi_decay);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vv = _mm256_loadu_pd(v + i);
    __m256d vge = _mm256_loadu_pd(ge + i);
    __m256d vgi = _mm256_loadu_pd(gi + i);
    __m256d leak = _mm256_sub_pd(vrest, vv);
    __m256d iexc = _mm256_mul_pd(vge, _mm256_sub_pd(eexc, vv));
    __m256d iinh = _mm256_mul_pd(vgi, _mm256_sub_pd(einh, vv));
    __m256d s = _mm256_add_pd(_mm256_add_pd(leak, iexc), iinh);
    vv = _mm256_add_pd(vv, _mm256_mul_pd(k, s));
    _mm256_storeu_pd(v + i, vv);
    _mm256_storeu_pd(ge + i, _mm256_mul_pd(vge, dge));
    _mm256_storeu_pd(gi + i, _mm256_mul_pd(vgi, dgi));
  }
  for (; i < n; ++i) {
    const double leak = c.v_rest - v[i];
    const double iexc = ge[i] * (c.e_exc - v[i]);
    const double iinh = gi[i] * (c.e_inh - v[i]);
    const double s = (leak + iexc) + iinh;
    v[i] = v[i] + c.k * s;
    ge[i] *= c.ge_decay;
    gi[i] *= c.gi_decay;
  }
}

double hsum(__m256d x) {
  __m128d lo = _mm256_castpd256_pd128(x);
  __m128d hi = _mm256_extractf128_pd(x, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swap = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swap));
}

double k_dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i] * y[i];
  return r;
}

double k_sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i];
  return r;
}

}  // namespace

const Table& avx2_table() {
  static const Table t{k_scale,      k_shift,         k_axpy, k_drive,
                       k_drive_lazy, k_lif_integrate, k_dot,  k_sum};
  return t;
}

}  // namespace esnn::kernels::detail

#endif  // ESNN_HAVE_AVX2
