#pragma once

#include <cstddef>

// Data-parallel inner loops of the simulator and the clustering math.
// Every entry point has a scalar reference implementation and (on x86-64)
// an AVX2 variant selected at runtime. The element-wise kernels are written
// so that both lanes perform the same per-element operations in the same
// order with fp-contraction disabled, and are therefore bit-identical;
// the reductions (dot/sum/nrm2) differ only in summation order and are
// equivalence-tested to tight relative tolerance.
namespace esnn::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
// Returns false if the requested lane is unavailable on this host/build.
bool set_backend(Backend b);
const char* backend_name();
bool avx2_available();

struct LifConsts {
  double v_rest;
  double e_exc;
  double e_inh;
  double k;         // dt / tau_mem
  double ge_decay;  // exp(-dt / tau_ge)
  double gi_decay;  // exp(-dt / tau_gi)
};

// x *= a
void scale(double* x, std::size_t n, double a);
// x += a
void shift(double* x, std::size_t n, double a);
// y += a * x
void axpy(double* y, std::size_t n, double a, const double* x);
// acc += w  (synaptic drive while the short-term component is inactive)
void drive(double* acc, std::size_t n, const double* w);
// acc += w + f * fs  (drive with per-column lazily decayed short-term term)
void drive_lazy(double* acc, std::size_t n, const double* w, const double* f,
                const double* fs);
// v += k*((v_rest - v) + ge*(e_exc - v) + gi*(e_inh - v)); then ge, gi decay
void lif_integrate(double* v, double* ge, double* gi, std::size_t n,
                   const LifConsts& c);

double dot(const double* x, const double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double nrm2(const double* x, std::size_t n);

}  // namespace esnn::kernels
