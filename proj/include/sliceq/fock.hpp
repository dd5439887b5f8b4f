#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sliceq/quadrature.hpp"
#include "sliceq/quaternion.hpp"
#include "sliceq/slice_series.hpp"

namespace sliceq {

/// Values of a series on the grid of every slice at once.
///
/// On C_I, (x + yI)^n = u_n + v_n I with (u_n, v_n) independent of I, so
/// f(x + yI) = A(x, y) + I B(x, y) with quaternions A, B computed once per node.
class SliceProfile {
 public:
  SliceProfile(const SliceSeries& f, const QuadratureGrid& grid);

  const QuadratureGrid& grid() const { return *grid_; }
  std::size_t size() const { return a_.size(); }

  /// f at node `idx` of the slice C_I.
  Quaternion value(std::size_t idx, const ImaginaryUnit& I) const { return a_[idx] + mul(I.value(), b_[idx]); }
  std::vector<Quaternion> values(const ImaginaryUnit& I) const;

  /// |f|^2 at every node of C_I (out.size() == size()).
  void moduli2(const ImaginaryUnit& I, std::span<double> out) const;

 private:
  const QuadratureGrid* grid_;
  std::vector<Quaternion> a_;
  std::vector<Quaternion> b_;
  // |A|^2 + |B|^2 and <A, e_l B> for l = 1, 2, 3
  std::vector<double> s_;
  std::vector<double> c1_;
  std::vector<double> c2_;
  std::vector<double> c3_;
};

/// Per-ring angular sums of |f|^p from squared moduli at the nodes.
std::vector<double> ring_power_sums(const QuadratureGrid& grid, std::span<const double> moduli2, double p);

/// (alpha p / 2 pi) * integral of |f|^p exp(-alpha p |z|^2 / 2) dA, from ring sums.
double norm_power_from_rings(const QuadratureGrid& grid, std::span<const double> ring_sums, double p, double alpha);

/// ||f||_{F^p_{alpha,I}} on the slice disk (or truncated plane).
double fock_norm_slice(const SliceSeries& f, const ImaginaryUnit& I, const FockParams& params);

struct SupNorm {
  double value = 0.0;
  ImaginaryUnit unit = ImaginaryUnit::i();
};

/// Sup of fock_norm_slice over slice_sample(params.n_slices).
/// Throws ConfigError when n_slices < 8.
SupNorm fock_norm(const SliceSeries& f, const FockParams& params);

/// integral over C_I of f(z) conj(g(z)) d lambda_{alpha,I}(z), with
/// d lambda = (alpha/pi) exp(-alpha |z|^2) dA. params.p is ignored.
Quaternion inner_product(const SliceSeries& f, const SliceSeries& g, const ImaginaryUnit& I,
                         const FockParams& params);

/// ||q^m||^2 for m = 0..params.truncation.
struct GramTable {
  std::vector<double> diag;
};
GramTable gram_table(const FockParams& params);

/// B_alpha(q, w) = sum_{n<=N} q^n (alpha conj(w))^n / n!.
Quaternion kernel_eval(const Quaternion& q, const Quaternion& w, const FockParams& params);

/// Domain-adapted kernel sum_{m<=N} q^m conj(w)^m / diag[m].
class CorrectedKernel {
 public:
  explicit CorrectedKernel(GramTable gram);

  const GramTable& gram() const { return gram_; }
  Quaternion operator()(const Quaternion& q, const Quaternion& w) const;

 private:
  GramTable gram_;
};

/// Builds the Gram table each call; prefer CorrectedKernel for repeated use.
Quaternion corrected_kernel_eval(const Quaternion& q, const Quaternion& w, const FockParams& params);

enum class KernelKind { Exponential, Corrected };

/// Samples of f on the grid of build_grid(params), slice C_I.
std::vector<Quaternion> sample_on_grid(const SliceSeries& f, const ImaginaryUnit& I, const FockParams& params);

/// Integral projection onto the Fock space,
///   T f(q) = integral over C_I of B(q, w) f(w) d lambda_{alpha,I}(w).
/// The kernel multiplies from the left; with right coefficients this is the order
/// that reproduces f(q) for q off the slice C_I.
class Projector {
 public:
  Projector(const FockParams& params, const ImaginaryUnit& I, KernelKind kind = KernelKind::Exponential);

  const QuadratureGrid& grid() const { return grid_; }
  const ImaginaryUnit& unit() const { return unit_; }
  std::vector<Quaternion> sample(const SliceSeries& f) const;

  /// Throws ConfigError when samples.size() != grid().size().
  Quaternion apply(std::span<const Quaternion> samples, const Quaternion& q) const;

 private:
  FockParams params_;
  ImaginaryUnit unit_;
  KernelKind kind_;
  QuadratureGrid grid_;
  std::vector<double> measure_;  // weight * (alpha/pi) exp(-alpha r^2) per ring
  std::vector<double> inv_diag_;  // kernel coefficient scale per degree
};

Quaternion project_T(std::span<const Quaternion> samples, const Quaternion& q, const ImaginaryUnit& I,
                     const FockParams& params, KernelKind kind = KernelKind::Exponential);

}  // namespace sliceq
