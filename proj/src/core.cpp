#include "delopt/core.hpp"

#include <cmath>

namespace delopt {

bool Domain::contains(const Vec& x, double tol) const {
  if (x.size() != dim()) return false;
  if (!is_ball()) return true;
  return (x - center_).norm() <= radius_ + tol;
}

Vec Domain::project(const Vec& x) const {
  check_same_dim(x, center_, "Domain::project");
  if (!is_ball()) return x;
  Vec diff = x - center_;
  double nrm = diff.norm();
  if (nrm <= radius_) return x;
  return center_ + (radius_ / nrm) * diff;
}

double prox_value(const ProxSetup& p, const Vec& x) {
  check_same_dim(x, p.center, "prox_value");
  return 0.5 * (x - p.center).squaredNorm();
}

double bregman(const ProxSetup& p, const Vec& x, const Vec& y) {
  check_same_dim(x, p.center, "bregman");
  check_same_dim(y, p.center, "bregman");
  return 0.5 * (x - y).squaredNorm();
}

Vec da_argmin(const ProxSetup& p, const Vec& z, double alpha) {
  check_same_dim(z, p.center, "da_argmin");
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("da_argmin: alpha must be > 0");
  }
  return p.domain.project(p.center - alpha * z);
}

Vec md_step(const ProxSetup& p, const Vec& x, const Vec& g, double alpha) {
  check_same_dim(x, p.center, "md_step");
  check_same_dim(g, p.center, "md_step");
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("md_step: alpha must be > 0");
  }
  if (!p.domain.contains(x)) {
    throw std::invalid_argument("md_step: x is outside the domain");
  }
  return p.domain.project(x - alpha * g);
}

StepSchedule StepSchedule::constant(double L, double eta_bar) {
  if (L < 0.0) throw std::invalid_argument("StepSchedule: L must be >= 0");
  if (!(eta_bar > 0.0)) {
    throw std::invalid_argument("StepSchedule: constant eta must be > 0");
  }
  StepSchedule s;
  s.L_ = L;
  s.kind_ = EtaKind::Constant;
  s.scale_ = eta_bar;
  return s;
}

StepSchedule StepSchedule::sqrt_growth(double L, double scale, std::int64_t t0,
                                       double exponent) {
  if (L < 0.0) throw std::invalid_argument("StepSchedule: L must be >= 0");
  if (!(scale > 0.0)) {
    throw std::invalid_argument("StepSchedule: growth scale must be > 0");
  }
  if (t0 < 0) throw std::invalid_argument("StepSchedule: t0 must be >= 0");
  if (exponent < 0.0 || exponent > 1.0) {
    throw std::invalid_argument("StepSchedule: exponent must be in [0, 1]");
  }
  StepSchedule s;
  s.L_ = L;
  s.kind_ = EtaKind::SqrtGrowth;
  s.scale_ = scale;
  s.t0_ = t0;
  s.exponent_ = exponent;
  return s;
}

double StepSchedule::eta(std::int64_t t) const {
  if (t < 1) throw std::invalid_argument("StepSchedule::eta: t must be >= 1");
  if (kind_ == EtaKind::Constant) return scale_;
  return scale_ * std::pow(static_cast<double>(t + t0_), exponent_);
}

double StepSchedule::alpha(std::int64_t t) const { return 1.0 / (L_ + eta(t)); }

}  // namespace delopt
