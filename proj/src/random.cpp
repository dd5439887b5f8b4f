#include "sliceq/random.hpp"

#include <cmath>
#include <numbers>
#include <string_view>

#include "sliceq/errors.hpp"

namespace sliceq {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  spare_ = rad * std::sin(ang);
  has_spare_ = true;
  return rad * std::cos(ang);
}

Quaternion Rng::normal_quaternion() {
  const double a = normal();
  const double b = normal();
  const double c = normal();
  const double d = normal();
  return {a, b, c, d};
}

Quaternion Rng::point_in_ball(double radius) {
  Quaternion dir;
  do {
    dir = normal_quaternion();
  } while (dir.norm() < 1e-12);
  const double r = radius * std::pow(uniform(), 0.25);
  return (r / dir.norm()) * dir;
}

ImaginaryUnit Rng::unit() {
  for (;;) {
    const double a = normal();
    const double b = normal();
    const double c = normal();
    if (a * a + b * b + c * c > 1e-24) return ImaginaryUnit::from_vector(a, b, c);
  }
}

SliceSeries random_series(Rng& rng, std::size_t degree) {
  std::vector<Quaternion> c(degree + 1);
  for (auto& a : c) a = rng.normal_quaternion();
  return SliceSeries(std::move(c));
}

SliceSeries random_series(std::uint64_t seed, std::size_t max_degree) {
  if (max_degree > kDefaultMaxDegree) {
    throw DomainError("random_series: degree exceeds the truncation cap");
  }
  Rng rng(seed);
  return random_series(rng, max_degree);
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t z = base ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sliceq
