#include "sliceq/quaternion.hpp"

#include <ostream>

#include "sliceq/errors.hpp"

namespace sliceq {

Quaternion inverse(const Quaternion& q) {
  const double n2 = q.norm2();
  if (n2 == 0.0) {
    throw DomainError("non-invertible: zero quaternion");
  }
  return conj(q) / n2;
}

ImaginaryUnit ImaginaryUnit::from_vector(double x1, double x2, double x3) {
  const double n = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("imaginary unit from a zero or non-finite vector");
  }
  return ImaginaryUnit(Quaternion(0.0, x1 / n, x2 / n, x3 / n));
}

ImaginaryUnit ImaginaryUnit::from_imaginary(const Quaternion& q) {
  return from_vector(q.x1, q.x2, q.x3);
}

double axis_epsilon(const Quaternion& q) { return 1e-13 * (1.0 + q.norm()); }

ImaginaryUnit axis(const Quaternion& q) {
  if (q.imag_norm() > axis_epsilon(q)) {
    return ImaginaryUnit::from_imaginary(q);
  }
  return ImaginaryUnit::i();
}

SliceCoords slice_coords(const Quaternion& q) {
  const double y = q.imag_norm();
  if (y > axis_epsilon(q)) {
    return {q.x0, y, ImaginaryUnit::from_imaginary(q)};
  }
  return {q.x0, 0.0, ImaginaryUnit::i()};
}

namespace {

Quaternion reject(const Quaternion& v, const Quaternion& u) { return v - dot(v, u) * u; }

}  // namespace

ImaginaryUnit orthogonal_unit(const ImaginaryUnit& I) {
  const Quaternion u = I.value();
  const Quaternion j(0, 0, 1, 0);
  const Quaternion seed = ((u - j).norm() < 1e-8 || (u + j).norm() < 1e-8) ? Quaternion(0, 0, 0, 1) : j;
  // Second pass restores orthogonality lost to cancellation when I is close to the seed.
  const Quaternion v = reject(reject(seed, u), u);
  return ImaginaryUnit::from_imaginary(v);
}

BasisPair decompose_basis(const Quaternion& a, const ImaginaryUnit& I, const ImaginaryUnit& J) {
  const Quaternion u = I.value();
  const Quaternion v = J.value();
  if (std::abs(dot(u, v)) > 1e-10) {
    throw DomainError("decompose_basis: J is not orthogonal to I");
  }
  const Quaternion k = mul(u, v);  // = I x J for orthogonal units
  const Quaternion im = a.imag();
  return {{a.x0, dot(im, u)}, {dot(im, v), dot(im, k)}};
}

Quaternion recombine(const BasisPair& pair, const ImaginaryUnit& I, const ImaginaryUnit& J) {
  return embed(pair.z, I) + mul(embed(pair.w, I), J.value());
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.x0 << ", " << q.x1 << ", " << q.x2 << ", " << q.x3 << ')';
}

}  // namespace sliceq
