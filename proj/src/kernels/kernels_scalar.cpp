// Scalar reference lane. This is the semantic definition of every kernel;
// the SIMD lanes must reproduce it (bit-exactly for the element-wise ones).
// Compiled with fp-contraction off so the AVX2 lane can match it.

#include "kernels_impl.hpp"

namespace esnn::kernels::detail {
namespace {

void k_scale(double* x, std::size_t n, double a) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void k_shift(double* x, std::size_t n, double a) {
  for (std::size_t i = 0; i < n; ++i) x[i] += a;
}

void k_axpy(double* y, std::size_t n, double a, const double* x) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void k_drive(double* acc, std::size_t n, const double* w) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += w[i];
}

void k_drive_lazy(double* acc, std::size_t n, const double* w, const double* f,
                  const double* fs) {
  for (std::size_t i = 0; i < n; ++i) {
    double t = f[i] * fs[i];
    t = w[i] + t;
    acc[i] = acc[i] + t;
  }
}

void k_lif_integrate(double* v, double* ge, double* gi, std::size_t n,
                     const LifConsts& c) {
  for (std::size_t i = 0; i < n; ++i) {
    const double leak = c.v_rest - v[i];
    const double iexc = ge[i] * (c.e_exc - v[i]);
    const double iinh = gi[i] * (c.e_inh - v[i]);
    const double s = (leak + iexc) + iinh;
    v[i] = v[i] + c.k * s;
    ge[i] *= c.ge_decay;
    gi[i] *= c.gi_decay;
  }
}

double k_dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double k_sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

}  // namespace

const Table& scalar_table() {
  static const Table t{k_scale,      k_shift,         k_axpy, k_drive,
                       k_drive_lazy, k_lif_integrate, k_dot,  k_sum};
  return t;
}

}  // namespace esnn::kernels::detail
