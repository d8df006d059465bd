#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace delopt {

using Vec = Eigen::VectorXd;

inline bool is_finite(const Vec& v) { return v.allFinite(); }

inline void check_same_dim(const Vec& a, const Vec& b, const char* where) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
}

/// Feasible set X: either all of R^d or a Euclidean ball.
class Domain {
 public:
  enum class Kind { Unconstrained, L2Ball };

  static Domain unconstrained(Eigen::Index dim) {
    Domain d;
    d.kind_ = Kind::Unconstrained;
    d.center_ = Vec::Zero(dim);
    d.radius_ = 0.0;
    return d;
  }

  static Domain l2_ball(Vec center, double radius) {
    if (!(radius > 0.0)) {
      throw std::invalid_argument("Domain::l2_ball: radius must be > 0");
    }
    if (!is_finite(center)) {
      throw std::invalid_argument("Domain::l2_ball: center must be finite");
    }
    Domain d;
    d.kind_ = Kind::L2Ball;
    d.center_ = std::move(center);
    d.radius_ = radius;
    return d;
  }

  Kind kind() const { return kind_; }
  bool is_ball() const { return kind_ == Kind::L2Ball; }
  Eigen::Index dim() const { return center_.size(); }
  const Vec& center() const { return center_; }

  double radius() const {
    if (!is_ball()) {
      throw std::logic_error("Domain::radius: unconstrained domain");
    }
    return radius_;
  }

  /// Membership with absolute tolerance (projection output may sit a
  /// rounding error outside the exact ball).
  bool contains(const Vec& x, double tol = 1e-12) const;

  /// Euclidean projection onto the set. Total on finite inputs.
  Vec project(const Vec& x) const;

 private:
  Kind kind_ = Kind::Unconstrained;
  Vec center_;
  double radius_ = 0.0;
};

/// Euclidean proximal setup: psi(x) = 0.5 * |x - center|^2 over a domain.
/// Kept as a struct with a single kind; alternative proximal functions
/// would extend this without touching callers.
struct ProxSetup {
  Vec center;
  Domain domain;

  static ProxSetup euclidean(Vec center, Domain domain) {
    if (center.size() != domain.dim()) {
      throw std::invalid_argument("ProxSetup: center/domain dimension mismatch");
    }
    return ProxSetup{std::move(center), std::move(domain)};
  }

  /// Default prox for a domain: centered at the ball center (origin when
  /// unconstrained), so psi(x(1)) = 0 at the start point.
  static ProxSetup for_domain(const Domain& d) {
    return ProxSetup{d.center(), d};
  }
};

/// psi(x) = 0.5 * |x - center|^2.
double prox_value(const ProxSetup& p, const Vec& x);

/// Bregman divergence of psi; for the Euclidean prox this is
/// 0.5 * |x - y|^2.
double bregman(const ProxSetup& p, const Vec& x, const Vec& y);

/// argmin over X of <z, x> + psi(x)/alpha. Closed form for the Euclidean
/// prox: project(center - alpha * z).
Vec da_argmin(const ProxSetup& p, const Vec& z, double alpha);

/// argmin over X of <g, y> + D(y, x)/alpha, i.e. one mirror-descent step.
/// Requires x feasible (within tolerance). Euclidean form:
/// project(x - alpha * g).
Vec md_step(const ProxSetup& p, const Vec& x, const Vec& g, double alpha);

/// Inverse-stepsize schedule alpha(t) = 1 / (L + eta(t)) with a
/// non-decreasing damping term eta(t).
class StepSchedule {
 public:
  enum class EtaKind { Constant, SqrtGrowth };

  /// Constants the schedule was derived from, carried for reporting and
  /// bound evaluation only; they do not affect alpha.
  struct Provenance {
    double sigma = 0.0;
    double R = 0.0;
    double C = 0.0;
    std::int64_t n = 0;
    std::int64_t T_planned = 0;
    std::int64_t tau = 0;
  };

  StepSchedule() : StepSchedule(constant(0.0, 1.0)) {}

  /// eta(t) = eta_bar for all t.
  static StepSchedule constant(double L, double eta_bar);

  /// eta(t) = scale * (t + t0)^exponent, exponent in [0, 1].
  static StepSchedule sqrt_growth(double L, double scale, std::int64_t t0 = 0,
                                  double exponent = 0.5);

  double eta(std::int64_t t) const;
  double alpha(std::int64_t t) const;

  double smoothness() const { return L_; }
  EtaKind eta_kind() const { return kind_; }
  double eta_scale() const { return scale_; }
  std::int64_t eta_t0() const { return t0_; }
  double eta_exponent() const { return exponent_; }

  Provenance provenance;

 private:
  double L_ = 0.0;
  EtaKind kind_ = EtaKind::Constant;
  double scale_ = 1.0;  // eta_bar for the constant kind
  std::int64_t t0_ = 0;
  double exponent_ = 0.5;
};

}  // namespace delopt
