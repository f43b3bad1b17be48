#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "esnn/mixture.hpp"

// The online clustering algorithm: centroids whose efficacy G = W + F is
// attracted toward inputs in proportion to their posterior responsibility
// and relaxes exponentially back to the resting weights W.
// A centroid set is single-owner mutable state; independent sets may run
// concurrently.
namespace esnn::cluster {

struct ElasticCentroid {
  std::vector<double> w;      // resting weights
  std::vector<double> f;      // short-term component, relaxes to 0
  double w0 = 0.0;            // resting bias
  double f0 = 0.0;            // short-term bias component
  std::vector<double> gamma;  // per-synapse Hebbian gain, >= 0

  std::size_t dim() const { return w.size(); }
  // G = W + F, recomputed on access so the identity holds by construction
  std::vector<double> efficacy() const;
  void validate() const;
};

enum class BiasMode {
  increment,  // F0 += gamma*Q per update, renormalised at read time
  exact       // closed-form tracking from decaying responsibility sums
};

struct ElasticConfig {
  double lambda = 1.0 / 300.0;  // relaxation rate, 1/time
  double gamma_max = 0.7;       // Hebbian magnitude
  double c = 1.0;               // weight-dependence mixing, c <= 1
  mixture::ModelKind kind = mixture::ModelKind::exponential;
  bool update_bias = false;
  BiasMode bias_mode = BiasMode::increment;
  double beta = 1.0;  // novel-object odds constant, used by the exact mode
};

struct LatentInputConfig {
  double alpha;   // object-replacement rate, 1/time
  double sigma;   // diffusion scale
  double window;  // truncation horizon
};

// gamma_j = gamma_max * (c + (1-c) * w_j / max(w)); with an all-zero or
// negative-free w the max term degenerates to plain c mixing
std::vector<double> weight_dependent_gain(std::span<const double> w,
                                          double gamma_max, double c);

// F *= exp(-lambda*dt), F0 likewise; W untouched. Throws on dt < 0.
void decay_step(ElasticCentroid& c, double dt, double lambda);

// F_j += gamma_j * x_j * q; optionally F0 += gamma_max * q
void hebbian_update(ElasticCentroid& c, std::span<const double> x, double q,
                    const ElasticConfig& cfg);

class CentroidSet {
 public:
  CentroidSet(std::vector<ElasticCentroid> centroids, ElasticConfig cfg);

  // Posterior over centroids for one input; nullopt = no winner (linear
  // model with empty support). Throws on a zero input.
  std::optional<std::vector<double>> infer(std::span<const double> x) const;

  // Advance time and apply one observation: relax, infer, then update every
  // centroid with its own responsibility (all Q computed before any update).
  // Returns the inference result, or nullopt for skipped/unclaimed inputs.
  std::optional<std::vector<double>> observe(double t, std::span<const double> x);

  void advance_to(double t);  // relaxation only

  std::size_t size() const { return centroids_.size(); }
  const ElasticCentroid& centroid(std::size_t k) const { return centroids_[k]; }
  ElasticCentroid& centroid(std::size_t k) { return centroids_[k]; }
  const ElasticConfig& config() const { return cfg_; }
  double time() const { return t_; }

 private:
  std::vector<double> biases() const;

  std::vector<ElasticCentroid> centroids_;
  ElasticConfig cfg_;
  double t_ = 0.0;
  bool started_ = false;
  // exact bias mode: responsibility and observation sums under the same decay
  std::vector<double> resp_sum_;
  double obs_sum_ = 0.0;
};

struct StreamSample {
  double t;
  std::vector<double> posterior;
};

// Algorithm loop over a timestamped stream: per event decay by the elapsed
// time, skip zero inputs, infer, then update. Throws on decreasing
// timestamps. Zero and unclaimed inputs produce no output sample.
std::vector<StreamSample> run_stream(
    std::span<const std::pair<double, std::vector<double>>> events,
    CentroidSet& set);

// Estimate of the underlying input from stochastic measurements:
// (2*pi)^(-n/2) / sigma * sum_i x_i * tau_i^(-1/2) * exp(-alpha*tau_i),
// events older than the window excluded. Throws on tau <= 0.
std::vector<double> estimate_latent_input(
    std::span<const std::pair<double, std::vector<double>>> events,
    std::size_t n, const LatentInputConfig& cfg);

}  // namespace esnn::cluster
