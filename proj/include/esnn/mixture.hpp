#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

// Posterior inference rules for the two parameterised mixture models
// (exponential and rectified-linear). Pure functions, double precision,
// no time dynamics. Safe to call concurrently.
namespace esnn::mixture {

enum class ModelKind { exponential, linear };

// K components over n features. Rows of g are unit-norm direction vectors,
// g0 are the bias terms (log-prior for the exponential model, a value in
// [-1, 0] for the linear one).
struct ModelParams {
  ModelKind kind = ModelKind::exponential;
  std::size_t K = 0;
  std::size_t n = 0;
  std::vector<double> g;   // K x n, row-major
  std::vector<double> g0;  // K

  std::span<const double> row(std::size_t k) const {
    return {g.data() + k * n, n};
  }
  // Throws std::invalid_argument if the invariants do not hold:
  // unit rows (1e-9), bias normalisation (exp) or bias range (linear).
  void validate() const;
};

enum class BiasApprox { exact, line };

// (g.x)/(|g||x|). Throws on a zero-norm input.
double cosine_similarity(std::span<const double> x, std::span<const double> g);

// softmax over u + g0; entries sum to 1 for any finite input
std::vector<double> posterior_exponential(std::span<const double> u,
                                          std::span<const double> g0);

// max(u+g0, 0) / sum; nullopt when every rectified term is zero, i.e. no
// component claims the input (callers map this to the noise class)
std::optional<std::vector<double>> posterior_linear(std::span<const double> u,
                                                    std::span<const double> g0);

// Bias from a prior probability P in (0, 1].
//   exponential:   ln P
//   linear exact:  the unique root in [-1, 0] of
//                  P = sqrt(1 - b^2) + b*arccos(-b), bisected to |db| < 1e-10
//   linear line:   P - 1
double bias_from_prior(double p, ModelKind kind,
                       BiasApprox approx = BiasApprox::exact);

// Forward map of the linear-model bias back to a prior probability.
double linear_prior_from_bias(double g0);

// e^(u_k + g0_k) for the exponential model, max(u_k + g0_k, 0)/2 for the
// linear one (Z = 2). Throws on zero x.
double joint_likelihood(std::span<const double> x, const ModelParams& params,
                        std::size_t k);

}  // namespace esnn::mixture
