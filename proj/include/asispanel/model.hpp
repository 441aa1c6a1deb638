#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asispanel/errors.hpp"
#include "asispanel/rng.hpp"

namespace asispanel {

enum class VarianceMode { Known, Sampled };

struct InverseGammaPrior {
  double shape = 2.0;
  double scale = 1.0;
};

/// Model parameters: observation-noise variance, heterogeneity variance,
/// and the Gaussian prior on the global mean of the individual effects.
struct ModelSpec {
  double sigma_eps_sq = 1.0;
  double sigma_alpha_sq = 1.0;
  double phi_alpha = 0.0;
  double tau_alpha_sq = 100.0;
  VarianceMode variance_mode = VarianceMode::Known;
  // Present iff variance_mode == Sampled.
  std::optional<InverseGammaPrior> eps_hyperprior;
  std::optional<InverseGammaPrior> alpha_hyperprior;

  void validate() const {
    auto check_positive = [](double v, const char* name) {
      if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(name) + " must be a positive finite real");
    };
    check_positive(sigma_eps_sq, "sigma_eps_sq");
    check_positive(sigma_alpha_sq, "sigma_alpha_sq");
    check_positive(tau_alpha_sq, "tau_alpha_sq");
    if (!std::isfinite(phi_alpha)) throw DomainError("phi_alpha must be finite");
    const bool sampled = variance_mode == VarianceMode::Sampled;
    const bool have_priors = eps_hyperprior.has_value() && alpha_hyperprior.has_value();
    if (sampled && !have_priors)
      throw DomainError("Sampled variance mode requires both variance hyperpriors");
    if (!sampled && (eps_hyperprior.has_value() || alpha_hyperprior.has_value()))
      throw DomainError("variance hyperpriors are only meaningful in Sampled mode");
    if (sampled) {
      check_positive(eps_hyperprior->shape, "eps_hyperprior.shape");
      check_positive(eps_hyperprior->scale, "eps_hyperprior.scale");
      check_positive(alpha_hyperprior->shape, "alpha_hyperprior.shape");
      check_positive(alpha_hyperprior->scale, "alpha_hyperprior.scale");
    }
  }
};

/// The three Gibbs precisions of the model: individual effects, global mean
/// under the centered scheme, global mean under the noncentered scheme.
struct Precisions {
  double lambda_alpha;
  double lambda_mu_sa;
  double lambda_mu_aa;
};

inline Precisions compute_precisions_from(double sigma_eps_sq, double sigma_alpha_sq,
                                          double tau_alpha_sq, std::size_t n,
                                          std::size_t t) {
  if (!(sigma_eps_sq > 0.0) || !(sigma_alpha_sq > 0.0) || !(tau_alpha_sq > 0.0))
    throw DomainError("variances must be strictly positive");
  if (n < 1 || t < 1) throw DomainError("panel dimensions must be >= 1");
  const double inv_eps = 1.0 / sigma_eps_sq;
  const double inv_alpha = 1.0 / sigma_alpha_sq;
  const double inv_tau = 1.0 / tau_alpha_sq;
  return {inv_eps * static_cast<double>(t) + inv_alpha,
          inv_alpha * static_cast<double>(n) + inv_tau,
          inv_eps * static_cast<double>(n) * static_cast<double>(t) + inv_tau};
}

inline Precisions compute_precisions(const ModelSpec& spec, std::size_t n, std::size_t t) {
  return compute_precisions_from(spec.sigma_eps_sq, spec.sigma_alpha_sq,
                                 spec.tau_alpha_sq, n, t);
}

/// Balanced panel of observations, immutable after construction. Row sums
/// and the grand mean are computed once here; nothing mutates them later.
class PanelDataset {
 public:
  PanelDataset(std::size_t n_individuals, std::size_t n_periods, std::vector<double> y)
      : PanelDataset(n_individuals, n_periods, std::move(y), 0, {}) {}

  PanelDataset(std::size_t n_individuals, std::size_t n_periods, std::vector<double> y,
               std::size_t n_covariates, std::vector<double> x)
      : n_(n_individuals), t_(n_periods), k_(n_covariates), y_(std::move(y)), x_(std::move(x)) {
    if (n_ < 1 || t_ < 1) throw DomainError("panel dimensions must be >= 1");
    if (y_.size() != n_ * t_) throw DimensionError("y must have N*T entries");
    for (double v : y_)
      if (!std::isfinite(v)) throw DomainError("y contains a non-finite value");
    if (k_ > 0) {
      if (x_.size() != n_ * t_ * k_)
        throw DimensionError("covariates must have N*T*K entries");
      for (double v : x_)
        if (!std::isfinite(v)) throw DomainError("covariates contain a non-finite value");
    } else if (!x_.empty()) {
      throw DimensionError("covariate values supplied with K = 0");
    }
    sums_.resize(n_);
    double total = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      double s = 0.0;
      for (std::size_t t = 0; t < t_; ++t) s += y_[i * t_ + t];
      sums_[i] = s;
      total += s;
    }
    grand_mean_ = total / (static_cast<double>(n_) * static_cast<double>(t_));
  }

  std::size_t n_individuals() const { return n_; }
  std::size_t n_periods() const { return t_; }
  std::size_t n_covariates() const { return k_; }
  bool has_covariates() const { return k_ > 0; }

  double y(std::size_t i, std::size_t t) const { return y_[i * t_ + t]; }
  double x(std::size_t i, std::size_t t, std::size_t k) const {
    return x_[(i * t_ + t) * k_ + k];
  }
  const std::vector<double>& y_flat() const { return y_; }
  const std::vector<double>& x_flat() const { return x_; }

  const std::vector<double>& individual_sums() const { return sums_; }
  double individual_mean(std::size_t i) const {
    return sums_[i] / static_cast<double>(t_);
  }
  double grand_mean() const { return grand_mean_; }

 private:
  std::size_t n_;
  std::size_t t_;
  std::size_t k_;
  std::vector<double> y_;  // row-major, y[i*T + t]
  std::vector<double> x_;  // row-major, x[(i*T + t)*K + k]
  std::vector<double> sums_;
  double grand_mean_ = 0.0;
};

/// Synthetic data-generating process: individual effects around mu_true,
/// then observation noise. Draw order is alpha_1..alpha_N followed by the
/// noise in row-major order, so a seed pins the dataset bit-exactly.
inline PanelDataset generate_synthetic(const ModelSpec& spec, double mu_true,
                                       std::size_t n, std::size_t t,
                                       std::uint64_t seed) {
  spec.validate();
  if (!std::isfinite(mu_true)) throw DomainError("mu_true must be finite");
  if (n < 1 || t < 1) throw DomainError("panel dimensions must be >= 1");
  RngStream rng(seed);
  const double sd_alpha = std::sqrt(spec.sigma_alpha_sq);
  const double sd_eps = std::sqrt(spec.sigma_eps_sq);
  std::vector<double> alpha(n);
  for (std::size_t i = 0; i < n; ++i) alpha[i] = mu_true + sd_alpha * rng.normal();
  std::vector<double> y(n * t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < t; ++s)
      y[i * t + s] = alpha[i] + sd_eps * rng.normal();
  return PanelDataset(n, t, std::move(y));
}

struct GaussianMoments {
  double mean;
  double variance;
};

/// Exact posterior of the global mean with the individual effects integrated
/// out: each individual mean is Gaussian around mu with variance
/// sigma_alpha^2 + sigma_eps^2/T, independent across individuals.
inline GaussianMoments posterior_oracle_mu(const PanelDataset& data, const ModelSpec& spec) {
  spec.validate();
  if (spec.variance_mode != VarianceMode::Known)
    throw DomainError("posterior oracle requires Known variance mode");
  if (data.has_covariates())
    throw DomainError("posterior oracle requires a covariate-free panel");
  const double n = static_cast<double>(data.n_individuals());
  const double t = static_cast<double>(data.n_periods());
  const double v = spec.sigma_alpha_sq + spec.sigma_eps_sq / t;
  const double inv_tau = 1.0 / spec.tau_alpha_sq;
  const double precision = inv_tau + n / v;
  const double mean =
      (inv_tau * spec.phi_alpha + (n / v) * data.grand_mean()) / precision;
  return {mean, 1.0 / precision};
}

}  // namespace asispanel
