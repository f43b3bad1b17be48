#include <cmath>
#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"

namespace esnn::kernels {
namespace {

using detail::Table;

bool host_has_avx2() {
#if defined(ESNN_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

struct State {
  Backend backend;
  const Table* table;
};

State resolve_initial() {
  Backend want = host_has_avx2() ? Backend::avx2 : Backend::scalar;
  if (const char* env = std::getenv("ESNN_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) want = Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && host_has_avx2()) want = Backend::avx2;
  }
#if defined(ESNN_HAVE_AVX2)
  if (want == Backend::avx2) return {Backend::avx2, &detail::avx2_table()};
#endif
  return {Backend::scalar, &detail::scalar_table()};
}

State& state() {
  static State s = resolve_initial();
  return s;
}

}  // namespace

Backend active_backend() { return state().backend; }

bool avx2_available() { return host_has_avx2(); }

bool set_backend(Backend b) {
  if (b == Backend::avx2) {
#if defined(ESNN_HAVE_AVX2)
    if (!host_has_avx2()) return false;
    state() = {Backend::avx2, &detail::avx2_table()};
    return true;
#else
    return false;
#endif
  }
  state() = {Backend::scalar, &detail::scalar_table()};
  return true;
}

const char* backend_name() {
  return state().backend == Backend::avx2 ? "avx2" : "scalar";
}

void scale(double* x, std::size_t n, double a) { state().table->scale(x, n, a); }
void shift(double* x, std::size_t n, double a) { state().table->shift(x, n, a); }
void axpy(double* y, std::size_t n, double a, const double* x) {
  state().table->axpy(y, n, a, x);
}
void drive(double* acc, std::size_t n, const double* w) {
  state().table->drive(acc, n, w);
}
void drive_lazy(double* acc, std::size_t n, const double* w, const double* f,
                const double* fs) {
  state().table->drive_lazy(acc, n, w, f, fs);
}
void lif_integrate(double* v, double* ge, double* gi, std::size_t n,
                   const LifConsts& c) {
  state().table->lif_integrate(v, ge, gi, n, c);
}
double dot(const double* x, const double* y, std::size_t n) {
  return state().table->dot(x, y, n);
}
double sum(const double* x, std::size_t n) { return state().table->sum(x, n); }
double nrm2(const double* x, std::size_t n) {
  return std::sqrt(state().table->dot(x, x, n));
}

}  // namespace esnn::kernels
