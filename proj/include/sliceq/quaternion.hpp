#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>

namespace sliceq {

/// A quaternion x0 + x1 i + x2 j + x3 k.
///
/// Plain value type; all arithmetic is free of side effects. Multiplication is
/// the Hamilton product and does not commute.
struct Quaternion {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re) : x0(re) {}  // NOLINT(google-explicit-constructor)
  constexpr Quaternion(double a, double b, double c, double d) : x0(a), x1(b), x2(c), x3(d) {}

  constexpr double real() const { return x0; }
  constexpr Quaternion imag() const { return {0.0, x1, x2, x3}; }

  constexpr double norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
  double norm() const { return std::sqrt(norm2()); }
  double imag_norm() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    x0 += o.x0;
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    x0 -= o.x0;
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    x0 *= s;
    x1 *= s;
    x2 *= s;
    x3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product: ij = k, jk = i, ki = j.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
          a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

constexpr Quaternion conj(const Quaternion& q) { return {q.x0, -q.x1, -q.x2, -q.x3}; }
inline double abs(const Quaternion& q) { return q.norm(); }

// Euclidean inner product on R^4.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

/// conj(q) / |q|^2. Throws DomainError("non-invertible") for q == 0.
Quaternion inverse(const Quaternion& q);

/// Element of the unit sphere S of purely imaginary quaternions (u^2 = -1).
class ImaginaryUnit {
 public:
  /// Normalizes (x1, x2, x3). Throws DomainError for the zero vector.
  static ImaginaryUnit from_vector(double x1, double x2, double x3);
  /// Normalizes the imaginary part of q; the real part is discarded.
  static ImaginaryUnit from_imaginary(const Quaternion& q);

  static constexpr ImaginaryUnit i() { return ImaginaryUnit(Quaternion(0, 1, 0, 0)); }
  static constexpr ImaginaryUnit j() { return ImaginaryUnit(Quaternion(0, 0, 1, 0)); }
  static constexpr ImaginaryUnit k() { return ImaginaryUnit(Quaternion(0, 0, 0, 1)); }

  constexpr const Quaternion& value() const { return u_; }
  constexpr operator Quaternion() const { return u_; }  // NOLINT(google-explicit-constructor)
  constexpr ImaginaryUnit operator-() const { return ImaginaryUnit(-u_); }

  friend constexpr bool operator==(const ImaginaryUnit&, const ImaginaryUnit&) = default;

 private:
  constexpr explicit ImaginaryUnit(const Quaternion& u) : u_(u) {}
  Quaternion u_;
};

/// q = x + y I with y >= 0.
struct SliceCoords {
  double x = 0.0;
  double y = 0.0;
  ImaginaryUnit unit = ImaginaryUnit::i();

  Quaternion reassemble() const { return Quaternion(x) + y * unit.value(); }
};

/// Threshold below which |Im q| is treated as zero: 1e-13 (1 + |q|).
double axis_epsilon(const Quaternion& q);

/// I_q = Im(q)/|Im(q)|, or i when q is (numerically) real.
ImaginaryUnit axis(const Quaternion& q);

SliceCoords slice_coords(const Quaternion& q);

/// Deterministic unit J orthogonal to I in R^3: Gram-Schmidt of j against I,
/// with k used instead when I lies within 1e-8 of +-j.
ImaginaryUnit orthogonal_unit(const ImaginaryUnit& I);

/// Maps a + b i in C to a + b I in the slice C_I.
inline Quaternion embed(std::complex<double> c, const ImaginaryUnit& I) {
  return Quaternion(c.real()) + c.imag() * I.value();
}

/// Coordinates of a quaternion in the basis {1, I, J, IJ}: a = z + w J with
/// z, w in C_I (represented as std::complex, imaginary part on I).
struct BasisPair {
  std::complex<double> z;
  std::complex<double> w;
};

/// Throws DomainError when I and J are not orthogonal.
BasisPair decompose_basis(const Quaternion& a, const ImaginaryUnit& I, const ImaginaryUnit& J);

Quaternion recombine(const BasisPair& pair, const ImaginaryUnit& I, const ImaginaryUnit& J);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace sliceq
