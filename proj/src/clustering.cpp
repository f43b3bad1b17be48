#include "esnn/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "esnn/kernels.hpp"

namespace esnn::cluster {

std::vector<double> ElasticCentroid::efficacy() const {
  std::vector<double> g = w;
  kernels::axpy(g.data(), g.size(), 1.0, f.data());
  return g;
}

void ElasticCentroid::validate() const {
  if (f.size() != w.size() || gamma.size() != w.size())
    throw std::invalid_argument("ElasticCentroid: shape mismatch");
  for (double g : gamma)
    if (g < 0.0) throw std::invalid_argument("ElasticCentroid: gamma < 0");
}

std::vector<double> weight_dependent_gain(std::span<const double> w,
                                          double gamma_max, double c) {
  std::vector<double> gain(w.size(), gamma_max * c);
  const double wmax = w.empty() ? 0.0 : *std::max_element(w.begin(), w.end());
  if (wmax > 0.0) {
    for (std::size_t j = 0; j < w.size(); ++j)
      gain[j] = gamma_max * (c + (1.0 - c) * w[j] / wmax);
  }
  return gain;
}

void decay_step(ElasticCentroid& c, double dt, double lambda) {
  if (dt < 0.0) throw std::invalid_argument("decay_step: negative dt");
  if (dt == 0.0) return;
  const double d = std::exp(-lambda * dt);
  kernels::scale(c.f.data(), c.f.size(), d);
  c.f0 *= d;
}

void hebbian_update(ElasticCentroid& c, std::span<const double> x, double q,
                    const ElasticConfig& cfg) {
  if (q < 0.0 || q > 1.0)
    throw std::invalid_argument("hebbian_update: q outside [0, 1]");
  if (x.size() != c.dim())
    throw std::invalid_argument("hebbian_update: size mismatch");
  if (q == 0.0) return;
  for (std::size_t j = 0; j < x.size(); ++j) c.f[j] += c.gamma[j] * x[j] * q;
  if (cfg.update_bias) c.f0 += cfg.gamma_max * q;
}

CentroidSet::CentroidSet(std::vector<ElasticCentroid> centroids,
                         ElasticConfig cfg)
    : centroids_(std::move(centroids)), cfg_(cfg) {
  if (centroids_.empty()) throw std::invalid_argument("CentroidSet: empty");
  for (const auto& c : centroids_) c.validate();
  resp_sum_.assign(centroids_.size(), 0.0);
}

std::vector<double> CentroidSet::biases() const {
  const std::size_t K = centroids_.size();
  std::vector<double> b(K);
  if (cfg_.update_bias && cfg_.bias_mode == BiasMode::exact) {
    // closed-form tracking: decaying responsibility sums against the
    // stationary term weighted by beta
    for (std::size_t k = 0; k < K; ++k) {
      if (cfg_.kind == mixture::ModelKind::exponential) {
        b[k] = std::log((resp_sum_[k] + std::exp(centroids_[k].w0) * cfg_.beta) /
                        (obs_sum_ + cfg_.beta));
      } else {
        b[k] = (resp_sum_[k] - obs_sum_ + centroids_[k].w0 * cfg_.beta) /
               (obs_sum_ + cfg_.beta);
      }
    }
    return b;
  }
  for (std::size_t k = 0; k < K; ++k) b[k] = centroids_[k].w0 + centroids_[k].f0;
  if (cfg_.update_bias) {
    // read-time renormalisation standing in for the algorithm's Z(0):
    // shift so sum(exp(b)) = 1, or clamp into the linear bias range
    if (cfg_.kind == mixture::ModelKind::exponential) {
      double m = *std::max_element(b.begin(), b.end());
      double z = 0.0;
      for (double v : b) z += std::exp(v - m);
      const double shift = m + std::log(z);
      for (double& v : b) v -= shift;
    } else {
      for (double& v : b) v = std::clamp(v, -1.0, 0.0);
    }
  }
  return b;
}

std::optional<std::vector<double>> CentroidSet::infer(
    std::span<const double> x) const {
  const std::size_t K = centroids_.size();
  std::vector<double> u(K);
  for (std::size_t k = 0; k < K; ++k)
    u[k] = mixture::cosine_similarity(x, centroids_[k].efficacy());
  const std::vector<double> b = biases();
  if (cfg_.kind == mixture::ModelKind::exponential)
    return mixture::posterior_exponential(u, b);
  return mixture::posterior_linear(u, b);
}

void CentroidSet::advance_to(double t) {
  if (started_ && t < t_)
    throw std::invalid_argument("CentroidSet: time went backwards");
  const double dt = started_ ? t - t_ : 0.0;
  if (dt > 0.0) {
    for (auto& c : centroids_) decay_step(c, dt, cfg_.lambda);
    const double d = std::exp(-cfg_.lambda * dt);
    for (double& s : resp_sum_) s *= d;
    obs_sum_ *= d;
  }
  t_ = t;
  started_ = true;
}

std::optional<std::vector<double>> CentroidSet::observe(
    double t, std::span<const double> x) {
  advance_to(t);
  bool all_zero = true;
  for (double v : x)
    if (v != 0.0) {
      all_zero = false;
      break;
    }
  if (all_zero) return std::nullopt;

  auto q = infer(x);
  if (!q) return std::nullopt;
  for (std::size_t k = 0; k < centroids_.size(); ++k)
    hebbian_update(centroids_[k], x, (*q)[k], cfg_);
  if (cfg_.update_bias && cfg_.bias_mode == BiasMode::exact) {
    for (std::size_t k = 0; k < centroids_.size(); ++k) resp_sum_[k] += (*q)[k];
    obs_sum_ += 1.0;
  }
  return q;
}

std::vector<StreamSample> run_stream(
    std::span<const std::pair<double, std::vector<double>>> events,
    CentroidSet& set) {
  std::vector<StreamSample> out;
  out.reserve(events.size());
  for (const auto& [t, x] : events) {
    auto q = set.observe(t, x);
    if (q) out.push_back({t, std::move(*q)});
  }
  return out;
}

std::vector<double> estimate_latent_input(
    std::span<const std::pair<double, std::vector<double>>> events,
    std::size_t n, const LatentInputConfig& cfg) {
  if (!(cfg.alpha > 0.0) || !(cfg.sigma > 0.0) || !(cfg.window > 0.0))
    throw std::invalid_argument("LatentInputConfig: all fields must be > 0");
  std::vector<double> est(n, 0.0);
  for (const auto& [tau, x] : events) {
    if (tau <= 0.0)
      throw std::invalid_argument("estimate_latent_input: tau <= 0");
    if (tau > cfg.window) continue;
    if (x.size() != n)
      throw std::invalid_argument("estimate_latent_input: size mismatch");
    const double wgt = std::exp(-cfg.alpha * tau) / std::sqrt(tau);
    kernels::axpy(est.data(), n, wgt, x.data());
  }
  const double prefactor =
      std::exp(-0.5 * static_cast<double>(n) * std::log(2.0 * M_PI)) / cfg.sigma;
  kernels::scale(est.data(), n, prefactor);
  return est;
}

}  // namespace esnn::cluster
