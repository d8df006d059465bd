#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>

#include "delopt/core.hpp"
#include "delopt/rng.hpp"

namespace delopt {

enum class LossKind { Logistic, LeastSquares, LeastAbsolute };

const char* loss_kind_name(LossKind k);
LossKind loss_kind_from_name(const std::string& name);

/// Empirical constants of a problem instance (Lipschitz, smoothness,
/// gradient noise, domain radius).
struct ProblemConstants {
  double G = 0.0;
  double L = 0.0;
  double sigma = 0.0;
  double R = 0.0;
};

/// Finite-sum stochastic objective f(x) = (1/N) sum_i F(x; (a_i, b_i)).
///
/// Losses:
///   logistic        F = log(1 + exp(-b <a, x>)),   b in {-1, +1}
///   least-squares   F = 0.5 (b - <a, x>)^2
///   least-absolute  F = |b - <a, x>|               (piecewise linear)
class Objective {
 public:
  Objective(LossKind kind, Eigen::MatrixXd features, Vec labels, Domain domain);

  LossKind kind() const { return kind_; }
  Eigen::Index dim() const { return features_.cols(); }
  std::int64_t size() const { return features_.rows(); }
  const Domain& domain() const { return domain_; }
  const Eigen::MatrixXd& features() const { return features_; }
  const Vec& labels() const { return labels_; }

  /// Exact finite-sum objective value.
  double full_value(const Vec& x) const;

  /// Exact gradient (subgradient for the least-absolute loss).
  Vec full_grad(const Vec& x) const;

  /// Gradient of the single term F(x; (a_i, b_i)).
  Vec sample_grad(std::int64_t i, const Vec& x) const;

  double sample_value(std::int64_t i, const Vec& x) const;

  bool smooth() const { return kind_ != LossKind::LeastAbsolute; }

 private:
  LossKind kind_;
  Eigen::MatrixXd features_;  // N x d, row per sample
  Vec labels_;                // N
  Domain domain_;
};

/// Minibatch gradient: average of m per-sample gradients, samples drawn
/// i.i.d. with replacement from the dataset. Unbiased for grad f(x).
Vec stochastic_grad(const Objective& obj, const Vec& x, int m, SampleRng& rng);

/// Probe-based estimates of (G, L, sigma, R).
///
/// G is the max sampled per-term gradient norm over random feasible x,
/// sigma the square root of the largest per-x empirical variance against
/// the exact gradient, L a closed-form smoothness bound (0 for the
/// nonsmooth least-absolute loss), R the domain radius. Probing uses a
/// fixed internal seed so the result is a pure function of the inputs.
/// Unconstrained domains are probed over the unit ball at the origin.
ProblemConstants estimate_constants(const Objective& obj, int trials = 1000);

/// Synthetic dataset generator (stand-in for the text corpus experiment).
///
/// logistic:        rows have k = max(1, d/10) active +-1 entries; labels
///                  come from a planted separator and are flipped with
///                  probability `noise`.
/// least-squares /
/// least-absolute:  standard Gaussian rows, b = <a, x_planted> + noise * g.
///
/// The planted vector has norm 0.9 * radius, so it is strictly feasible;
/// the domain is the l2 ball of the given radius at the origin.
Objective make_synthetic(LossKind kind, std::int64_t N, int d, double noise,
                         std::uint64_t seed, double radius = 1.0);

/// Dataset CSV, header `label,f0,...,f{d-1}`, one row per sample.
void save_dataset_csv(const Objective& obj, const std::string& path);
Objective load_dataset_csv(const std::string& path, LossKind kind,
                           double radius);

/// JSON sidecar recording synthetic-generation parameters.
void save_synthetic_sidecar(const std::string& path, LossKind kind,
                            std::int64_t N, int d, double noise,
                            std::uint64_t seed, double radius);

}  // namespace delopt
