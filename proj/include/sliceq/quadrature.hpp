#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sliceq/quaternion.hpp"

namespace sliceq {

enum class Domain {
  UnitDisk,  // the slice disk B_I = {|z| < 1}
  Plane,     // the slice plane C_I truncated at |z| < radius
};

std::string to_string(Domain d);
/// "disk" or "plane"; throws ConfigError otherwise.
Domain parse_domain(const std::string& s);

/// Parameters of a Fock-space computation.
struct FockParams {
  double alpha = 1.0;
  double p = 2.0;
  Domain domain = Domain::UnitDisk;
  double radius = 6.0;          // plane mode only
  std::size_t truncation = 48;  // kernel series degree
  std::size_t n_r = 64;         // Gauss-Legendre radial nodes
  std::size_t n_theta = 256;    // trapezoid angular nodes
  std::size_t n_slices = 64;    // Fibonacci points on S for the sup

  /// Throws ConfigError unless alpha > 0, p > 1, radius >= 1, n_r, n_theta >= 4.
  void validate() const;
  double r_max() const { return domain == Domain::UnitDisk ? 1.0 : radius; }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(std::size_t n);

struct QuadratureNode {
  double r;
  double theta;
  double weight;  // Lebesgue area element dx dy
};

/// Tensor polar grid on the disk of radius r_max: Gauss-Legendre in r (with the
/// Jacobian r folded into the radial weights) times the uniform trapezoid rule in
/// theta. Nodes are stored ring-major: node = ring * n_theta + angle.
///
/// The angle set is closed under theta -> -theta, so every node's complex
/// conjugate is also a node with the same weight.
class QuadratureGrid {
 public:
  QuadratureGrid(double r_max, std::size_t n_r, std::size_t n_theta);

  std::size_t size() const { return radii_.size() * n_theta_; }
  std::size_t n_rings() const { return radii_.size(); }
  std::size_t n_theta() const { return n_theta_; }
  double r_max() const { return r_max_; }

  std::span<const double> radii() const { return radii_; }
  /// Gauss weight times r for each ring.
  std::span<const double> radial_weights() const { return radial_weights_; }
  double angular_weight() const { return angular_weight_; }
  std::span<const double> cos_theta() const { return cos_; }
  std::span<const double> sin_theta() const { return sin_; }

  QuadratureNode node(std::size_t idx) const;
  std::vector<QuadratureNode> nodes() const;
  /// Node position as x + iy.
  std::complex<double> point(std::size_t idx) const;
  /// Node position on the slice C_I.
  Quaternion point(std::size_t idx, const ImaginaryUnit& I) const;

  /// sum of weights * (alpha/pi) exp(-alpha r^2), the Gaussian mass of the domain.
  double gaussian_mass(double alpha) const;

 private:
  double r_max_;
  std::size_t n_theta_;
  std::vector<double> radii_;
  std::vector<double> radial_weights_;
  double angular_weight_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

/// Throws ConfigError for invalid params.
QuadratureGrid build_grid(const FockParams& params);

/// The coordinate axes i, j, k followed by an n-point Fibonacci lattice on S.
std::vector<ImaginaryUnit> slice_sample(std::size_t n);

}  // namespace sliceq
