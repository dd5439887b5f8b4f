#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sliceq/quaternion.hpp"

namespace sliceq {

/// Default degree cap for star products.
inline constexpr std::size_t kDefaultMaxDegree = 64;

/// Truncated slice-regular power series f(q) = sum_{n<=N} q^n a_n
/// (powers on the left, coefficients on the right).
class SliceSeries {
 public:
  /// The zero constant.
  SliceSeries();
  /// Throws DomainError for an empty coefficient list.
  explicit SliceSeries(std::vector<Quaternion> coeffs, std::size_t truncated_degrees = 0);

  static SliceSeries constant(const Quaternion& a);
  /// q^m a.
  static SliceSeries monomial(std::size_t m, const Quaternion& a = Quaternion(1.0));

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const Quaternion> coeffs() const { return coeffs_; }
  const Quaternion& operator[](std::size_t n) const { return coeffs_[n]; }
  /// a_n, or zero past the stored degree.
  Quaternion coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quaternion(); }

  /// Number of degrees dropped by the star product that produced this series.
  std::size_t truncated_degrees() const { return truncated_; }

  double max_coeff_norm() const;
  /// 1e-12 (1 + max |a_n|), the scale-aware zero threshold.
  double zero_epsilon() const;

  /// The first m+1 coefficients (or all of them when m >= degree()).
  SliceSeries truncate(std::size_t m) const;

  friend SliceSeries operator+(const SliceSeries& f, const SliceSeries& g);
  friend SliceSeries operator-(const SliceSeries& f, const SliceSeries& g);
  /// Right scalar multiplication: (f a)(q) = f(q) a.
  friend SliceSeries operator*(const SliceSeries& f, const Quaternion& a);

  friend bool operator==(const SliceSeries& f, const SliceSeries& g) { return f.coeffs_ == g.coeffs_; }

 private:
  std::vector<Quaternion> coeffs_;
  std::size_t truncated_ = 0;
};

/// sum q^n a_n by Horner's rule: a_0 + q (a_1 + q (a_2 + ...)).
Quaternion eval(const SliceSeries& f, const Quaternion& q);

/// Regular product: c_n = sum_k a_k b_{n-k}, capped at max_degree.
SliceSeries star_mul(const SliceSeries& f, const SliceSeries& g, std::size_t max_degree = kDefaultMaxDegree);

/// Residual of f*g(q) against f(q) g(f(q)^{-1} q f(q)), or |f*g(q)| when f(q) vanishes.
double star_pointwise_check(const SliceSeries& f, const SliceSeries& g, const Quaternion& q);

/// f^c(q) = sum q^n conj(a_n).
SliceSeries regular_conjugate(const SliceSeries& f);

/// Coefficients 0..order of the star inverse (f * f^c)^{-1} f^c.
/// Throws DomainError when a_0 vanishes.
SliceSeries star_reciprocal(const SliceSeries& f, std::size_t order);

/// f(rq) for r in [0, 1].
SliceSeries dilate(const SliceSeries& f, double r);

/// sum_{n<=N} q^n (alpha conj(w))^n / n!, the kernel section B_alpha(., w).
SliceSeries star_exponential(const Quaternion& w, double alpha, std::size_t N);

/// Splitting of a series on the slice C_I: a_n = f1_n + f2_n J.
struct SplitPair {
  std::vector<std::complex<double>> f1;
  std::vector<std::complex<double>> f2;
  ImaginaryUnit I = ImaginaryUnit::i();
  ImaginaryUnit J = ImaginaryUnit::j();

  /// f_I(z) = F(z) + L(z) J for z = x + yI given as a complex number.
  Quaternion eval_slice(std::complex<double> z) const;
  /// F + L J.
  Quaternion recombine_pair(std::complex<double> F, std::complex<double> L) const;
  SliceSeries recombine() const;
};

/// Q_I: splits every coefficient in the basis (I, orthogonal_unit(I)).
SplitPair split_Q(const SliceSeries& f, const ImaginaryUnit& I);

/// P_I: extends the slice function to q via the representation formula
///   (1/2) [(1 - I_q I) f_I(x + yI) + (1 + I_q I) f_I(x - yI)].
Quaternion extend_P(const SplitPair& pair, const Quaternion& q);

}  // namespace sliceq
