#include "sliceq/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sliceq/errors.hpp"

namespace sliceq {

SliceProfile::SliceProfile(const SliceSeries& f, const QuadratureGrid& grid) : grid_(&grid) {
  const std::size_t n = grid.size();
  a_.resize(n);
  b_.resize(n);
  s_.resize(n);
  c1_.resize(n);
  c2_.resize(n);
  c3_.resize(n);
  const auto coeffs = f.coeffs();
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::complex<double> z = grid.point(idx);
    const double x = z.real();
    const double y = z.imag();
    // Horner on A + I B: (x + yI)(A + IB) = (xA - yB) + I(yA + xB).
    Quaternion A = coeffs.back();
    Quaternion B;
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
      const Quaternion nA = x * A - y * B + coeffs[k];
      B = y * A + x * B;
      A = nA;
    }
    a_[idx] = A;
    b_[idx] = B;
    s_[idx] = A.norm2() + B.norm2();
    c1_[idx] = dot(A, mul(Quaternion(0, 1, 0, 0), B));
    c2_[idx] = dot(A, mul(Quaternion(0, 0, 1, 0), B));
    c3_[idx] = dot(A, mul(Quaternion(0, 0, 0, 1), B));
  }
}

std::vector<Quaternion> SliceProfile::values(const ImaginaryUnit& I) const {
  std::vector<Quaternion> out(size());
  for (std::size_t idx = 0; idx < out.size(); ++idx) out[idx] = value(idx, I);
  return out;
}

void SliceProfile::moduli2(const ImaginaryUnit& I, std::span<double> out) const {
  const Quaternion u = I.value();
  for (std::size_t idx = 0; idx < s_.size(); ++idx) {
    const double m2 = s_[idx] + 2.0 * (u.x1 * c1_[idx] + u.x2 * c2_[idx] + u.x3 * c3_[idx]);
    out[idx] = std::max(m2, 0.0);
  }
}

namespace {

// x^(p/2) with cheap paths for the common exponents.
double half_power(double x, double p) {
  if (p == 2.0) return x;
  if (p == 3.0) return x * std::sqrt(x);
  if (p == 4.0) return x * x;
  return std::pow(x, 0.5 * p);
}

}  // namespace

std::vector<double> ring_power_sums(const QuadratureGrid& grid, std::span<const double> moduli2, double p) {
  const std::size_t nt = grid.n_theta();
  std::vector<double> rings(grid.n_rings());
  for (std::size_t k = 0; k < rings.size(); ++k) {
    double acc = 0.0;
    const double* row = moduli2.data() + k * nt;
    for (std::size_t j = 0; j < nt; ++j) acc += half_power(row[j], p);
    rings[k] = acc;
  }
  return rings;
}

double norm_power_from_rings(const QuadratureGrid& grid, std::span<const double> ring_sums, double p, double alpha) {
  const auto radii = grid.radii();
  const auto wr = grid.radial_weights();
  double acc = 0.0;
  for (std::size_t k = 0; k < ring_sums.size(); ++k) {
    acc += wr[k] * std::exp(-0.5 * alpha * p * radii[k] * radii[k]) * ring_sums[k];
  }
  return alpha * p / (2.0 * std::numbers::pi) * grid.angular_weight() * acc;
}

namespace {

double slice_norm_power(const SliceProfile& profile, const ImaginaryUnit& I, const FockParams& params,
                        std::vector<double>& scratch) {
  scratch.resize(profile.size());
  profile.moduli2(I, scratch);
  const auto rings = ring_power_sums(profile.grid(), scratch, params.p);
  return norm_power_from_rings(profile.grid(), rings, params.p, params.alpha);
}

}  // namespace

double fock_norm_slice(const SliceSeries& f, const ImaginaryUnit& I, const FockParams& params) {
  const QuadratureGrid grid = build_grid(params);
  const SliceProfile profile(f, grid);
  std::vector<double> scratch;
  return std::pow(slice_norm_power(profile, I, params, scratch), 1.0 / params.p);
}

SupNorm fock_norm(const SliceSeries& f, const FockParams& params) {
  if (params.n_slices < 8) throw ConfigError("fock_norm needs at least 8 sampled slices");
  const QuadratureGrid grid = build_grid(params);
  const SliceProfile profile(f, grid);
  std::vector<double> scratch;
  SupNorm best{-1.0, ImaginaryUnit::i()};
  for (const auto& I : slice_sample(params.n_slices)) {
    const double v = slice_norm_power(profile, I, params, scratch);
    if (v > best.value) best = {v, I};
  }
  best.value = std::pow(best.value, 1.0 / params.p);
  return best;
}

Quaternion inner_product(const SliceSeries& f, const SliceSeries& g, const ImaginaryUnit& I,
                         const FockParams& params) {
  const QuadratureGrid grid = build_grid(params);
  const SliceProfile pf(f, grid);
  const SliceProfile pg(g, grid);
  const auto radii = grid.radii();
  const auto wr = grid.radial_weights();
  const std::size_t nt = grid.n_theta();
  Quaternion acc;
  for (std::size_t k = 0; k < grid.n_rings(); ++k) {
    Quaternion ring;
    for (std::size_t j = 0; j < nt; ++j) {
      const std::size_t idx = k * nt + j;
      ring += mul(pf.value(idx, I), conj(pg.value(idx, I)));
    }
    acc += (wr[k] * std::exp(-params.alpha * radii[k] * radii[k])) * ring;
  }
  return (params.alpha / std::numbers::pi * grid.angular_weight()) * acc;
}

GramTable gram_table(const FockParams& params) {
  GramTable t;
  t.diag.reserve(params.truncation + 1);
  for (std::size_t m = 0; m <= params.truncation; ++m) {
    const SliceSeries e = SliceSeries::monomial(m);
    t.diag.push_back(inner_product(e, e, ImaginaryUnit::i(), params).x0);
  }
  return t;
}

Quaternion kernel_eval(const Quaternion& q, const Quaternion& w, const FockParams& params) {
  return eval(star_exponential(w, params.alpha, params.truncation), q);
}

CorrectedKernel::CorrectedKernel(GramTable gram) : gram_(std::move(gram)) {
  if (gram_.diag.empty()) throw ConfigError("corrected kernel needs a non-empty Gram table");
  for (double d : gram_.diag) {
    if (!(d > 0.0)) throw ConfigError("Gram diagonal must be positive");
  }
}

Quaternion CorrectedKernel::operator()(const Quaternion& q, const Quaternion& w) const {
  std::vector<Quaternion> c(gram_.diag.size());
  const Quaternion wb = conj(w);
  Quaternion power(1.0);
  for (std::size_t m = 0; m < c.size(); ++m) {
    c[m] = power / gram_.diag[m];
    power = mul(power, wb);
  }
  return eval(SliceSeries(std::move(c)), q);
}

Quaternion corrected_kernel_eval(const Quaternion& q, const Quaternion& w, const FockParams& params) {
  return CorrectedKernel(gram_table(params))(q, w);
}

std::vector<Quaternion> sample_on_grid(const SliceSeries& f, const ImaginaryUnit& I, const FockParams& params) {
  const QuadratureGrid grid = build_grid(params);
  return SliceProfile(f, grid).values(I);
}

Projector::Projector(const FockParams& params, const ImaginaryUnit& I, KernelKind kind)
    : params_(params), unit_(I), kind_(kind), grid_(build_grid(params)) {
  measure_.resize(grid_.n_rings());
  const auto radii = grid_.radii();
  const auto wr = grid_.radial_weights();
  for (std::size_t k = 0; k < measure_.size(); ++k) {
    measure_[k] = wr[k] * grid_.angular_weight() * params.alpha / std::numbers::pi *
                  std::exp(-params.alpha * radii[k] * radii[k]);
  }
  inv_diag_.resize(params.truncation + 1);
  if (kind_ == KernelKind::Exponential) {
    double c = 1.0;
    for (std::size_t n = 0; n < inv_diag_.size(); ++n) {
      inv_diag_[n] = c;
      c *= params.alpha / static_cast<double>(n + 1);
    }
  } else {
    const GramTable gram = gram_table(params);
    for (std::size_t n = 0; n < inv_diag_.size(); ++n) inv_diag_[n] = 1.0 / gram.diag[n];
  }
}

std::vector<Quaternion> Projector::sample(const SliceSeries& f) const { return SliceProfile(f, grid_).values(unit_); }

Quaternion Projector::apply(std::span<const Quaternion> samples, const Quaternion& q) const {
  if (samples.size() != grid_.size()) {
    throw ConfigError("project_T: sample count does not match the quadrature grid");
  }
  const std::size_t N = inv_diag_.size();
  // q^n and q^n I, so that q^n (a + bI) = a q^n + b q^n I.
  std::vector<Quaternion> qn(N);
  std::vector<Quaternion> qni(N);
  Quaternion power(1.0);
  for (std::size_t n = 0; n < N; ++n) {
    qn[n] = power;
    qni[n] = mul(power, unit_.value());
    power = mul(power, q);
  }
  const std::size_t nt = grid_.n_theta();
  Quaternion acc;
  for (std::size_t k = 0; k < grid_.n_rings(); ++k) {
    Quaternion ring;
    for (std::size_t j = 0; j < nt; ++j) {
      const std::size_t idx = k * nt + j;
      const std::complex<double> wbar = std::conj(grid_.point(idx));
      std::complex<double> c(1.0, 0.0);
      Quaternion kernel;
      for (std::size_t n = 0; n < N; ++n) {
        const std::complex<double> t = inv_diag_[n] * c;
        kernel += t.real() * qn[n] + t.imag() * qni[n];
        c *= wbar;
      }
      ring += mul(kernel, samples[idx]);
    }
    acc += measure_[k] * ring;
  }
  return acc;
}

Quaternion project_T(std::span<const Quaternion> samples, const Quaternion& q, const ImaginaryUnit& I,
                     const FockParams& params, KernelKind kind) {
  return Projector(params, I, kind).apply(samples, q);
}

}  // namespace sliceq
