#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "sliceq/quaternion.hpp"
#include "sliceq/slice_series.hpp"

namespace sliceq {

/// Deterministic sampler: std::mt19937_64 (bit-exact across platforms) feeding
/// 53-bit uniforms and Box-Muller normals. std::normal_distribution is avoided
/// because its algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  double normal();

  /// Four independent standard normal components.
  Quaternion normal_quaternion();
  /// Uniform in the open 4-ball of the given radius.
  Quaternion point_in_ball(double radius = 1.0);
  /// Uniform on S.
  ImaginaryUnit unit();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Degree-`degree` series with standard-normal coefficient components.
SliceSeries random_series(Rng& rng, std::size_t degree);

/// Same as above from a fresh Rng(seed). Throws DomainError when
/// max_degree > kDefaultMaxDegree.
SliceSeries random_series(std::uint64_t seed, std::size_t max_degree);

/// Mixes a base seed with a label so independent streams stay stable when other
/// streams are added or removed (FNV-1a over the label, then splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::string_view label);

}  // namespace sliceq
