#include "sliceq/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "sliceq/errors.hpp"

namespace sliceq {

std::string to_string(Domain d) { return d == Domain::UnitDisk ? "disk" : "plane"; }

Domain parse_domain(const std::string& s) {
  if (s == "disk") return Domain::UnitDisk;
  if (s == "plane") return Domain::Plane;
  throw ConfigError("unknown domain '" + s + "' (expected disk or plane)");
}

void FockParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be positive");
  if (!(p > 1.0) || !std::isfinite(p)) throw ConfigError("p must exceed 1");
  if (domain == Domain::Plane && !(radius >= 1.0 && std::isfinite(radius))) {
    throw ConfigError("plane radius must be at least 1");
  }
  if (n_r < 4 || n_theta < 4) throw ConfigError("quadrature needs at least 4 nodes per direction");
}

GaussLegendre gauss_legendre(std::size_t n) {
  GaussLegendre gl{std::vector<double>(n), std::vector<double>(n)};
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // three-term recurrence for P_n(x) and P_{n-1}(x)
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

QuadratureGrid::QuadratureGrid(double r_max, std::size_t n_r, std::size_t n_theta)
    : r_max_(r_max), n_theta_(n_theta), angular_weight_(2.0 * std::numbers::pi / static_cast<double>(n_theta)) {
  const GaussLegendre gl = gauss_legendre(n_r);
  radii_.resize(n_r);
  radial_weights_.resize(n_r);
  for (std::size_t k = 0; k < n_r; ++k) {
    const double r = 0.5 * r_max * (gl.nodes[k] + 1.0);
    radii_[k] = r;
    radial_weights_[k] = 0.5 * r_max * gl.weights[k] * r;
  }
  cos_.resize(n_theta);
  sin_.resize(n_theta);
  for (std::size_t j = 0; j < n_theta; ++j) {
    const double t = angular_weight_ * static_cast<double>(j);
    cos_[j] = std::cos(t);
    sin_[j] = std::sin(t);
  }
  // Exact mirror symmetry theta_j <-> theta_{n-j}.
  for (std::size_t j = 1; j < n_theta; ++j) {
    if (j > n_theta - j) {
      cos_[j] = cos_[n_theta - j];
      sin_[j] = -sin_[n_theta - j];
    }
  }
  if (n_theta % 2 == 0) sin_[n_theta / 2] = 0.0;
}

QuadratureNode QuadratureGrid::node(std::size_t idx) const {
  const std::size_t ring = idx / n_theta_;
  const std::size_t j = idx % n_theta_;
  return {radii_[ring], angular_weight_ * static_cast<double>(j), radial_weights_[ring] * angular_weight_};
}

std::vector<QuadratureNode> QuadratureGrid::nodes() const {
  std::vector<QuadratureNode> out;
  out.reserve(size());
  for (std::size_t idx = 0; idx < size(); ++idx) out.push_back(node(idx));
  return out;
}

std::complex<double> QuadratureGrid::point(std::size_t idx) const {
  const double r = radii_[idx / n_theta_];
  const std::size_t j = idx % n_theta_;
  return {r * cos_[j], r * sin_[j]};
}

Quaternion QuadratureGrid::point(std::size_t idx, const ImaginaryUnit& I) const {
  return embed(point(idx), I);
}

double QuadratureGrid::gaussian_mass(double alpha) const {
  double ring_sum = 0.0;
  for (std::size_t k = 0; k < radii_.size(); ++k) {
    ring_sum += radial_weights_[k] * std::exp(-alpha * radii_[k] * radii_[k]);
  }
  return ring_sum * angular_weight_ * static_cast<double>(n_theta_) * alpha / std::numbers::pi;
}

QuadratureGrid build_grid(const FockParams& params) {
  params.validate();
  return QuadratureGrid(params.r_max(), params.n_r, params.n_theta);
}

std::vector<ImaginaryUnit> slice_sample(std::size_t n) {
  std::vector<ImaginaryUnit> out{ImaginaryUnit::i(), ImaginaryUnit::j(), ImaginaryUnit::k()};
  out.reserve(n + 3);
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t s = 0; s < n; ++s) {
    const double z = 1.0 - (2.0 * static_cast<double>(s) + 1.0) / static_cast<double>(n);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(s);
    out.push_back(ImaginaryUnit::from_vector(rho * std::cos(phi), rho * std::sin(phi), z));
  }
  return out;
}

}  // namespace sliceq
