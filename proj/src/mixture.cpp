#include "esnn/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "esnn/kernels.hpp"

namespace esnn::mixture {

void ModelParams::validate() const {
  if (g.size() != K * n || g0.size() != K)
    throw std::invalid_argument("ModelParams: shape mismatch");
  for (std::size_t k = 0; k < K; ++k) {
    const double norm = kernels::nrm2(g.data() + k * n, n);
    if (std::abs(norm - 1.0) > 1e-9)
      throw std::invalid_argument("ModelParams: row norm != 1");
  }
  if (kind == ModelKind::exponential) {
    double z = 0.0;
    for (double b : g0) z += std::exp(b);
    if (std::abs(z - 1.0) > 1e-9)
      throw std::invalid_argument("ModelParams: sum(exp(g0)) != 1");
  } else {
    for (double b : g0)
      if (b < -1.0 || b > 0.0)
        throw std::invalid_argument("ModelParams: linear bias outside [-1, 0]");
  }
}

double cosine_similarity(std::span<const double> x, std::span<const double> g) {
  if (x.size() != g.size())
    throw std::invalid_argument("cosine_similarity: size mismatch");
  const double nx = kernels::nrm2(x.data(), x.size());
  const double ng = kernels::nrm2(g.data(), g.size());
  if (nx == 0.0 || ng == 0.0)
    throw std::invalid_argument("cosine_similarity: zero-norm input");
  return kernels::dot(x.data(), g.data(), x.size()) / (nx * ng);
}

std::vector<double> posterior_exponential(std::span<const double> u,
                                          std::span<const double> g0) {
  if (u.size() != g0.size() || u.empty())
    throw std::invalid_argument("posterior_exponential: size mismatch");
  const std::size_t K = u.size();
  std::vector<double> q(K);
  double m = -INFINITY;
  for (std::size_t k = 0; k < K; ++k) {
    q[k] = u[k] + g0[k];
    m = std::max(m, q[k]);
  }
  double z = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    q[k] = std::exp(q[k] - m);
    z += q[k];
  }
  for (double& v : q) v /= z;
  return q;
}

std::optional<std::vector<double>> posterior_linear(std::span<const double> u,
                                                    std::span<const double> g0) {
  if (u.size() != g0.size() || u.empty())
    throw std::invalid_argument("posterior_linear: size mismatch");
  const std::size_t K = u.size();
  std::vector<double> q(K);
  double z = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    q[k] = std::max(u[k] + g0[k], 0.0);
    z += q[k];
  }
  if (z == 0.0) return std::nullopt;
  for (double& v : q) v /= z;
  return q;
}

double linear_prior_from_bias(double g0) {
  return std::sqrt(1.0 - g0 * g0) + g0 * std::acos(-g0);
}

double bias_from_prior(double p, ModelKind kind, BiasApprox approx) {
  if (!(p > 0.0) || p > 1.0)
    throw std::invalid_argument("bias_from_prior: prior must be in (0, 1]");
  if (kind == ModelKind::exponential) return std::log(p);
  if (approx == BiasApprox::line) return p - 1.0;
  // linear_prior_from_bias is strictly increasing on [-1, 0]
  double lo = -1.0, hi = 0.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (linear_prior_from_bias(mid) < p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double joint_likelihood(std::span<const double> x, const ModelParams& params,
                        std::size_t k) {
  if (k >= params.K) throw std::invalid_argument("joint_likelihood: bad k");
  const double u = cosine_similarity(x, params.row(k));
  if (params.kind == ModelKind::exponential) return std::exp(u + params.g0[k]);
  return std::max(u + params.g0[k], 0.0) / 2.0;
}

}  // namespace esnn::mixture
