#include "delopt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace delopt {
namespace {

// log(1 + exp(z)) without overflow; branch at zero.
double softplus(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

// 1 / (1 + exp(-z)) evaluated stably.
double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Uniform point in the probe region: the domain ball, or the unit ball
// at the origin for unconstrained domains.
Vec probe_point(const Domain& dom, SampleRng& rng) {
  Eigen::Index d = dom.dim();
  Vec dir(d);
  for (Eigen::Index j = 0; j < d; ++j) dir[j] = rng.gaussian();
  double nrm = dir.norm();
  if (nrm == 0.0) return dom.center();
  double radius = dom.is_ball() ? dom.radius() : 1.0;
  double r = radius * std::pow(rng.uniform01_open(), 1.0 / static_cast<double>(d));
  return dom.center() + (r / nrm) * dir;
}

}  // namespace

const char* loss_kind_name(LossKind k) {
  switch (k) {
    case LossKind::Logistic: return "logistic";
    case LossKind::LeastSquares: return "least-squares";
    case LossKind::LeastAbsolute: return "least-absolute";
  }
  return "?";
}

LossKind loss_kind_from_name(const std::string& name) {
  if (name == "logistic") return LossKind::Logistic;
  if (name == "least-squares") return LossKind::LeastSquares;
  if (name == "least-absolute") return LossKind::LeastAbsolute;
  throw std::invalid_argument("unknown loss kind: " + name);
}

Objective::Objective(LossKind kind, Eigen::MatrixXd features, Vec labels,
                     Domain domain)
    : kind_(kind),
      features_(std::move(features)),
      labels_(std::move(labels)),
      domain_(std::move(domain)) {
  if (features_.rows() == 0) {
    throw std::invalid_argument("Objective: empty dataset");
  }
  if (labels_.size() != features_.rows()) {
    throw std::invalid_argument("Objective: label/feature count mismatch");
  }
  if (domain_.dim() != features_.cols()) {
    throw std::invalid_argument("Objective: domain/feature dimension mismatch");
  }
  if (!features_.allFinite() || !labels_.allFinite()) {
    throw std::invalid_argument("Objective: non-finite data");
  }
  if (kind_ == LossKind::Logistic) {
    for (Eigen::Index i = 0; i < labels_.size(); ++i) {
      if (labels_[i] != 1.0 && labels_[i] != -1.0) {
        throw std::invalid_argument("Objective: logistic labels must be +-1");
      }
    }
  }
}

double Objective::sample_value(std::int64_t i, const Vec& x) const {
  double margin = features_.row(i).dot(x);
  double b = labels_[i];
  switch (kind_) {
    case LossKind::Logistic: return softplus(-b * margin);
    case LossKind::LeastSquares: {
      double r = b - margin;
      return 0.5 * r * r;
    }
    case LossKind::LeastAbsolute: return std::abs(b - margin);
  }
  return 0.0;
}

Vec Objective::sample_grad(std::int64_t i, const Vec& x) const {
  double margin = features_.row(i).dot(x);
  double b = labels_[i];
  double coef = 0.0;
  switch (kind_) {
    case LossKind::Logistic: coef = -b * sigmoid(-b * margin); break;
    case LossKind::LeastSquares: coef = -(b - margin); break;
    case LossKind::LeastAbsolute: coef = -sign(b - margin); break;
  }
  return coef * features_.row(i).transpose();
}

double Objective::full_value(const Vec& x) const {
  check_same_dim(x, domain_.center(), "Objective::full_value");
  Vec margins = features_ * x;
  double total = 0.0;
  switch (kind_) {
    case LossKind::Logistic:
      for (Eigen::Index i = 0; i < margins.size(); ++i) {
        total += softplus(-labels_[i] * margins[i]);
      }
      break;
    case LossKind::LeastSquares:
      total = 0.5 * (labels_ - margins).squaredNorm();
      break;
    case LossKind::LeastAbsolute:
      total = (labels_ - margins).cwiseAbs().sum();
      break;
  }
  return total / static_cast<double>(size());
}

Vec Objective::full_grad(const Vec& x) const {
  check_same_dim(x, domain_.center(), "Objective::full_grad");
  Vec margins = features_ * x;
  Vec coef(margins.size());
  switch (kind_) {
    case LossKind::Logistic:
      for (Eigen::Index i = 0; i < margins.size(); ++i) {
        coef[i] = -labels_[i] * sigmoid(-labels_[i] * margins[i]);
      }
      break;
    case LossKind::LeastSquares:
      coef = -(labels_ - margins);
      break;
    case LossKind::LeastAbsolute:
      for (Eigen::Index i = 0; i < margins.size(); ++i) {
        coef[i] = -sign(labels_[i] - margins[i]);
      }
      break;
  }
  return (features_.transpose() * coef) / static_cast<double>(size());
}

Vec stochastic_grad(const Objective& obj, const Vec& x, int m, SampleRng& rng) {
  if (m < 1) throw std::invalid_argument("stochastic_grad: m must be >= 1");
  Vec g = Vec::Zero(obj.dim());
  for (int j = 0; j < m; ++j) {
    std::int64_t i = rng.uniform_index(obj.size());
    g += obj.sample_grad(i, x);
  }
  return g / static_cast<double>(m);
}

namespace {

// Largest eigenvalue of (1/N) A^T A by power iteration; deterministic
// start vector.
double gram_spectral_norm(const Eigen::MatrixXd& A) {
  Eigen::Index d = A.cols();
  Vec v = Vec::Ones(d).normalized();
  double lambda = 0.0;
  for (int it = 0; it < 200; ++it) {
    Vec w = (A.transpose() * (A * v)) / static_cast<double>(A.rows());
    double nrm = w.norm();
    if (nrm == 0.0) return 0.0;
    double next = v.dot(w);
    v = w / nrm;
    if (it > 10 && std::abs(next - lambda) <= 1e-12 * std::max(1.0, lambda)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return lambda;
}

}  // namespace

ProblemConstants estimate_constants(const Objective& obj, int trials) {
  if (trials < 1) throw std::invalid_argument("estimate_constants: trials >= 1");
  // Fixed probe seed: the estimate is a deterministic function of the data.
  SampleRng rng(0x0debc0de5eedULL, 7);

  ProblemConstants out;
  const std::int64_t N = obj.size();
  const int var_samples = static_cast<int>(std::min<std::int64_t>(N, 256));

  double max_grad_norm = 0.0;
  double max_var = 0.0;
  for (int p = 0; p < trials; ++p) {
    Vec x = probe_point(obj.domain(), rng);
    Vec mean_grad = obj.full_grad(x);
    double var = 0.0;
    for (int s = 0; s < var_samples; ++s) {
      std::int64_t i = rng.uniform_index(N);
      Vec gi = obj.sample_grad(i, x);
      max_grad_norm = std::max(max_grad_norm, gi.norm());
      var += (gi - mean_grad).squaredNorm();
    }
    max_var = std::max(max_var, var / var_samples);
  }
  out.G = max_grad_norm;
  out.sigma = std::sqrt(max_var);

  switch (obj.kind()) {
    case LossKind::Logistic: {
      double max_row_sq = 0.0;
      for (Eigen::Index i = 0; i < obj.size(); ++i) {
        max_row_sq = std::max(max_row_sq, obj.features().row(i).squaredNorm());
      }
      out.L = 0.25 * max_row_sq;
      break;
    }
    case LossKind::LeastSquares:
      out.L = gram_spectral_norm(obj.features());
      break;
    case LossKind::LeastAbsolute:
      out.L = 0.0;  // nonsmooth; only G-based rates apply
      break;
  }

  out.R = obj.domain().is_ball() ? obj.domain().radius() : 1.0;
  return out;
}

Objective make_synthetic(LossKind kind, std::int64_t N, int d, double noise,
                         std::uint64_t seed, double radius) {
  if (N < 1 || d < 1) {
    throw std::invalid_argument("make_synthetic: N and d must be >= 1");
  }
  if (!(radius > 0.0)) {
    throw std::invalid_argument("make_synthetic: radius must be > 0");
  }
  SampleRng rng(seed, 0);

  Vec planted(d);
  for (int j = 0; j < d; ++j) planted[j] = rng.gaussian();
  planted *= 0.9 * radius / planted.norm();

  Eigen::MatrixXd A(N, d);
  Vec b(N);
  if (kind == LossKind::Logistic) {
    int k = std::max(1, d / 10);
    for (std::int64_t i = 0; i < N; ++i) {
      A.row(i).setZero();
      for (int c = 0; c < k; ++c) {
        // k distinct active coordinates per row
        std::int64_t j;
        do {
          j = rng.uniform_index(d);
        } while (A(i, j) != 0.0);
        A(i, j) = rng.uniform01() < 0.5 ? 1.0 : -1.0;
      }
      double margin = A.row(i).dot(planted);
      double label = margin >= 0.0 ? 1.0 : -1.0;
      if (rng.uniform01() < noise) label = -label;
      b[i] = label;
    }
  } else {
    for (std::int64_t i = 0; i < N; ++i) {
      for (int j = 0; j < d; ++j) A(i, j) = rng.gaussian();
      b[i] = A.row(i).dot(planted) + noise * rng.gaussian();
    }
  }

  Domain dom = Domain::l2_ball(Vec::Zero(d), radius);
  return Objective(kind, std::move(A), std::move(b), std::move(dom));
}

void save_dataset_csv(const Objective& obj, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "label";
  for (Eigen::Index j = 0; j < obj.dim(); ++j) out << ",f" << j;
  out << "\n";
  out.precision(17);
  for (Eigen::Index i = 0; i < obj.size(); ++i) {
    out << obj.labels()[i];
    for (Eigen::Index j = 0; j < obj.dim(); ++j) out << ',' << obj.features()(i, j);
    out << "\n";
  }
}

Objective load_dataset_csv(const std::string& path, LossKind kind,
                           double radius) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  // header: label,f0,...,f{d-1}
  std::int64_t d = std::count(line.begin(), line.end(), ',');
  if (d < 1) throw std::runtime_error(path + ": malformed header");

  std::vector<double> labels;
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::int64_t col = 0;
    while (std::getline(ss, cell, ',')) {
      double v = std::stod(cell);
      if (col == 0) {
        labels.push_back(v);
      } else {
        values.push_back(v);
      }
      ++col;
    }
    if (col != d + 1) throw std::runtime_error(path + ": ragged row");
  }
  std::int64_t N = static_cast<std::int64_t>(labels.size());
  if (N == 0) throw std::runtime_error(path + ": no data rows");
  Eigen::MatrixXd A(N, d);
  Vec b(N);
  for (std::int64_t i = 0; i < N; ++i) {
    b[i] = labels[i];
    for (std::int64_t j = 0; j < d; ++j) A(i, j) = values[i * d + j];
  }
  Domain dom = Domain::l2_ball(Vec::Zero(d), radius);
  return Objective(kind, std::move(A), std::move(b), std::move(dom));
}

void save_synthetic_sidecar(const std::string& path, LossKind kind,
                            std::int64_t N, int d, double noise,
                            std::uint64_t seed, double radius) {
  nlohmann::json j{{"kind", loss_kind_name(kind)}, {"N", N},       {"d", d},
                   {"noise", noise},               {"seed", seed}, {"radius", radius}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace delopt
