#include "sliceq/slice_series.hpp"

#include <algorithm>
#include <cmath>

#include "sliceq/errors.hpp"

namespace sliceq {

SliceSeries::SliceSeries() : coeffs_{Quaternion()} {}

SliceSeries::SliceSeries(std::vector<Quaternion> coeffs, std::size_t truncated_degrees)
    : coeffs_(std::move(coeffs)), truncated_(truncated_degrees) {
  if (coeffs_.empty()) {
    throw DomainError("slice series needs at least one coefficient");
  }
}

SliceSeries SliceSeries::constant(const Quaternion& a) { return SliceSeries({a}); }

SliceSeries SliceSeries::monomial(std::size_t m, const Quaternion& a) {
  std::vector<Quaternion> c(m + 1);
  c[m] = a;
  return SliceSeries(std::move(c));
}

double SliceSeries::max_coeff_norm() const {
  double m = 0.0;
  for (const auto& a : coeffs_) m = std::max(m, a.norm());
  return m;
}

double SliceSeries::zero_epsilon() const { return 1e-12 * (1.0 + max_coeff_norm()); }

SliceSeries SliceSeries::truncate(std::size_t m) const {
  if (m >= degree()) return *this;
  return SliceSeries(std::vector<Quaternion>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(m + 1)));
}

SliceSeries operator+(const SliceSeries& f, const SliceSeries& g) {
  std::vector<Quaternion> c(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coeff(n) + g.coeff(n);
  return SliceSeries(std::move(c));
}

SliceSeries operator-(const SliceSeries& f, const SliceSeries& g) {
  std::vector<Quaternion> c(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coeff(n) - g.coeff(n);
  return SliceSeries(std::move(c));
}

SliceSeries operator*(const SliceSeries& f, const Quaternion& a) {
  std::vector<Quaternion> c(f.coeffs_.size());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coeffs_[n] * a;
  return SliceSeries(std::move(c));
}

Quaternion eval(const SliceSeries& f, const Quaternion& q) {
  const auto c = f.coeffs();
  Quaternion acc = c.back();
  for (std::size_t n = c.size() - 1; n-- > 0;) {
    acc = mul(q, acc) + c[n];
  }
  return acc;
}

SliceSeries star_mul(const SliceSeries& f, const SliceSeries& g, std::size_t max_degree) {
  const std::size_t full = f.degree() + g.degree();
  const std::size_t deg = std::min(full, max_degree);
  std::vector<Quaternion> c(deg + 1);
  for (std::size_t n = 0; n <= deg; ++n) {
    const std::size_t k_lo = n > g.degree() ? n - g.degree() : 0;
    const std::size_t k_hi = std::min(n, f.degree());
    Quaternion s;
    for (std::size_t k = k_lo; k <= k_hi; ++k) s += mul(f[k], g[n - k]);
    c[n] = s;
  }
  return SliceSeries(std::move(c), full - deg);
}

double star_pointwise_check(const SliceSeries& f, const SliceSeries& g, const Quaternion& q) {
  const Quaternion fg = eval(star_mul(f, g), q);
  const Quaternion fq = eval(f, q);
  if (fq.norm() <= f.zero_epsilon()) {
    return fg.norm();
  }
  const Quaternion rotated = mul(mul(inverse(fq), q), fq);
  return (fg - mul(fq, eval(g, rotated))).norm();
}

SliceSeries regular_conjugate(const SliceSeries& f) {
  std::vector<Quaternion> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& a : c) a = conj(a);
  return SliceSeries(std::move(c));
}

SliceSeries star_reciprocal(const SliceSeries& f, std::size_t order) {
  if (f[0].norm() <= f.zero_epsilon()) {
    throw DomainError("reciprocal undefined at origin: a_0 = 0");
  }
  const SliceSeries fc = regular_conjugate(f);
  const SliceSeries sym = star_mul(f, fc, 2 * f.degree());

  // f * f^c has real coefficients; invert it as a real formal power series.
  std::vector<double> s(sym.degree() + 1);
  for (std::size_t n = 0; n < s.size(); ++n) s[n] = sym[n].x0;
  if (s[0] <= sym.zero_epsilon()) {
    throw DomainError("reciprocal undefined at origin: f * f^c vanishes at 0");
  }
  std::vector<double> t(order + 1);
  t[0] = 1.0 / s[0];
  for (std::size_t n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= std::min(n, s.size() - 1); ++k) acc += s[k] * t[n - k];
    t[n] = -acc * t[0];
  }

  std::vector<Quaternion> r(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Quaternion acc;
    for (std::size_t k = 0; k <= std::min(n, fc.degree()); ++k) acc += t[n - k] * fc[k];
    r[n] = acc;
  }
  return SliceSeries(std::move(r));
}

SliceSeries dilate(const SliceSeries& f, double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("dilate: r must lie in [0, 1]");
  }
  std::vector<Quaternion> c(f.coeffs().begin(), f.coeffs().end());
  double scale = 1.0;
  for (auto& a : c) {
    a *= scale;
    scale *= r;
  }
  return SliceSeries(std::move(c));
}

SliceSeries star_exponential(const Quaternion& w, double alpha, std::size_t N) {
  if (!(alpha > 0.0)) {
    throw DomainError("star_exponential: alpha must be positive");
  }
  const Quaternion step = alpha * conj(w);
  std::vector<Quaternion> c(N + 1);
  c[0] = Quaternion(1.0);
  for (std::size_t n = 1; n <= N; ++n) {
    c[n] = mul(c[n - 1], step) / static_cast<double>(n);
  }
  return SliceSeries(std::move(c));
}

Quaternion SplitPair::eval_slice(std::complex<double> z) const {
  std::complex<double> F = f1.back();
  std::complex<double> L = f2.back();
  for (std::size_t n = f1.size() - 1; n-- > 0;) {
    F = z * F + f1[n];
    L = z * L + f2[n];
  }
  return recombine_pair(F, L);
}

Quaternion SplitPair::recombine_pair(std::complex<double> F, std::complex<double> L) const {
  return sliceq::recombine(BasisPair{F, L}, I, J);
}

SliceSeries SplitPair::recombine() const {
  std::vector<Quaternion> c(f1.size());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = recombine_pair(f1[n], f2[n]);
  return SliceSeries(std::move(c));
}

SplitPair split_Q(const SliceSeries& f, const ImaginaryUnit& I) {
  SplitPair pair;
  pair.I = I;
  pair.J = orthogonal_unit(I);
  pair.f1.reserve(f.degree() + 1);
  pair.f2.reserve(f.degree() + 1);
  for (const auto& a : f.coeffs()) {
    const BasisPair b = decompose_basis(a, pair.I, pair.J);
    pair.f1.push_back(b.z);
    pair.f2.push_back(b.w);
  }
  return pair;
}

Quaternion extend_P(const SplitPair& pair, const Quaternion& q) {
  const SliceCoords sc = slice_coords(q);
  const Quaternion at_z = pair.eval_slice({sc.x, sc.y});
  const Quaternion at_zbar = pair.eval_slice({sc.x, -sc.y});
  const Quaternion iq_i = mul(sc.unit.value(), pair.I.value());
  return 0.5 * (mul(Quaternion(1.0) - iq_i, at_z) + mul(Quaternion(1.0) + iq_i, at_zbar));
}

}  // namespace sliceq
