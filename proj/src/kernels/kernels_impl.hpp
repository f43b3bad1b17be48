#pragma once

#include <cstddef>

#include "esnn/kernels.hpp"

// Per-lane entry points. Each lane provides the same table of functions;
// dispatch.cpp wires the active one.
namespace esnn::kernels::detail {

struct Table {
  void (*scale)(double*, std::size_t, double);
  void (*shift)(double*, std::size_t, double);
  void (*axpy)(double*, std::size_t, double, const double*);
  void (*drive)(double*, std::size_t, const double*);
  void (*drive_lazy)(double*, std::size_t, const double*, const double*,
                     const double*);
  void (*lif_integrate)(double*, double*, double*, std::size_t,
                        const LifConsts&);
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
};

const Table& scalar_table();
#if defined(ESNN_HAVE_AVX2)
const Table& avx2_table();
#endif

}  // namespace esnn::kernels::detail
