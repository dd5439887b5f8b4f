#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "sliceq/errors.hpp"
#include "sliceq/fock.hpp"
#include "sliceq/harness.hpp"
#include "sliceq/oracle.hpp"
#include "sliceq/random.hpp"
#include "sliceq/slice_series.hpp"

namespace sliceq {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string tagged(const std::string& id, const std::string& params) { return id + "[" + params + "]"; }

std::size_t instances(const RunConfig& c, std::size_t fallback) {
  return c.n_random_series > 0 ? c.n_random_series : fallback;
}

Rng rng_for(const RunConfig& c, std::string_view id) { return Rng(derive_seed(c.seed, id)); }

double max_coeff_distance(const SliceSeries& f, const SliceSeries& g) {
  double m = 0.0;
  for (std::size_t n = 0; n <= std::max(f.degree(), g.degree()); ++n) {
    m = std::max(m, (f.coeff(n) - g.coeff(n)).norm());
  }
  return m;
}

/// Sup-over-slices norms of one series for several exponents at one alpha.
class NormTable {
 public:
  NormTable(const QuadratureGrid& grid, std::size_t n_slices) : grid_(grid), units_(slice_sample(n_slices)) {}

  const std::vector<ImaginaryUnit>& units() const { return units_; }

  /// result[e][s] = ||f||^p_{alpha, units[s]} for p = exponents[e].
  std::vector<std::vector<double>> slice_powers(const SliceSeries& f, const std::vector<double>& exponents,
                                                double alpha) const {
    const SliceProfile profile(f, grid_);
    std::vector<double> m2(profile.size());
    std::vector<std::vector<double>> out(exponents.size(), std::vector<double>(units_.size()));
    for (std::size_t s = 0; s < units_.size(); ++s) {
      profile.moduli2(units_[s], m2);
      for (std::size_t e = 0; e < exponents.size(); ++e) {
        const auto rings = ring_power_sums(grid_, m2, exponents[e]);
        out[e][s] = norm_power_from_rings(grid_, rings, exponents[e], alpha);
      }
    }
    return out;
  }

  /// ||f||_{F^p_alpha} for each exponent.
  std::vector<double> sup_norms(const SliceSeries& f, const std::vector<double>& exponents, double alpha) const {
    const auto powers = slice_powers(f, exponents, alpha);
    std::vector<double> out(exponents.size());
    for (std::size_t e = 0; e < exponents.size(); ++e) {
      out[e] = std::pow(*std::max_element(powers[e].begin(), powers[e].end()), 1.0 / exponents[e]);
    }
    return out;
  }

 private:
  const QuadratureGrid& grid_;
  std::vector<ImaginaryUnit> units_;
};

// ---------------------------------------------------------------- slice series

std::vector<CheckResult> check_rep_formula(const RunConfig& c) {
  Rng rng = rng_for(c, "rep-formula");
  double worst = 0.0;
  const std::size_t n_series = instances(c, 100);
  for (std::size_t s = 0; s < n_series; ++s) {
    const SliceSeries f = random_series(rng, c.max_degree);
    const SplitPair pair = split_Q(f, rng.unit());
    for (int t = 0; t < 100; ++t) {
      const Quaternion q = rng.point_in_ball();
      worst = std::max(worst, (extend_P(pair, q) - eval(f, q)).norm());
    }
  }
  auto r = identity_result("rep-formula", "representation formula: P_I(Q_I f)(q) = f(q)", worst, 1e-12);
  r.note = std::to_string(n_series) + " series x 100 points in the unit ball";
  return {r};
}

std::vector<CheckResult> check_split_roundtrip(const RunConfig& c) {
  Rng rng = rng_for(c, "split-roundtrip");
  double worst = 0.0;
  const std::size_t n = instances(c, 200);
  for (std::size_t s = 0; s < n; ++s) {
    const SliceSeries f = random_series(rng, c.max_degree);
    const SliceSeries back = split_Q(f, rng.unit()).recombine();
    for (std::size_t k = 0; k <= f.degree(); ++k) {
      worst = std::max(worst, (back[k] - f[k]).norm() / (1.0 + f[k].norm()));
    }
  }
  auto r = identity_result("split-roundtrip", "splitting: f_I = F + L J", worst, 1e-15);
  r.note = "coefficient error relative to 1 + |a_n|";
  return {r};
}

std::vector<CheckResult> check_star_assoc(const RunConfig& c) {
  Rng rng = rng_for(c, "star-assoc");
  double worst = 0.0;
  for (std::size_t s = 0, n = instances(c, 200); s < n; ++s) {
    const SliceSeries f = random_series(rng, 5);
    const SliceSeries g = random_series(rng, 5);
    const SliceSeries h = random_series(rng, 5);
    worst = std::max(worst, max_coeff_distance(star_mul(star_mul(f, g), h), star_mul(f, star_mul(g, h))));
  }
  return {identity_result("star-assoc", "regular product: (f*g)*h = f*(g*h)", worst, kIdentityTolerance)};
}

std::vector<CheckResult> check_star_unit(const RunConfig& c) {
  Rng rng = rng_for(c, "star-unit");
  const SliceSeries one = SliceSeries::constant(Quaternion(1.0));
  double worst = 0.0;
  for (std::size_t s = 0, n = instances(c, 200); s < n; ++s) {
    const SliceSeries f = random_series(rng, 5);
    worst = std::max({worst, max_coeff_distance(star_mul(one, f), f), max_coeff_distance(star_mul(f, one), f)});
  }
  return {identity_result("star-unit", "regular product: 1*f = f*1 = f", worst, kIdentityTolerance)};
}

std::vector<CheckResult> check_star_conj_real(const RunConfig& c) {
  Rng rng = rng_for(c, "star-conj-real");
  double worst = 0.0;
  for (std::size_t s = 0, n = instances(c, 200); s < n; ++s) {
    const SliceSeries f = random_series(rng, 5);
    const SliceSeries sym = star_mul(f, regular_conjugate(f));
    for (const auto& a : sym.coeffs()) worst = std::max(worst, a.imag_norm());
  }
  return {identity_result("star-conj-real", "regular conjugate: f*f^c has real coefficients", worst, 1e-13)};
}

std::vector<CheckResult> check_star_reciprocal(const RunConfig& c) {
  Rng rng = rng_for(c, "star-reciprocal");
  constexpr std::size_t kOrder = 10;
  double worst = 0.0;
  double worst_scaled = 0.0;
  std::size_t over = 0;
  const std::size_t n = instances(c, 200);
  for (std::size_t s = 0; s < n; ++s) {
    SliceSeries f = random_series(rng, 5);
    while (f[0].norm() < 0.1) f = random_series(rng, 5);
    const SliceSeries r = star_reciprocal(f, kOrder);
    const SliceSeries prod = star_mul(f, r);
    double inst = 0.0;
    for (std::size_t k = 0; k <= kOrder; ++k) {
      const double res = (prod.coeff(k) - Quaternion(k == 0 ? 1.0 : 0.0)).norm();
      double scale = 0.0;
      for (std::size_t j = 0; j <= std::min(k, f.degree()); ++j) scale += f[j].norm() * r[k - j].norm();
      inst = std::max(inst, res);
      worst_scaled = std::max(worst_scaled, res / scale);
    }
    worst = std::max(worst, inst);
    if (inst > kIdentityTolerance) ++over;
  }
  auto rec = identity_result("star-reciprocal", "regular reciprocal: f * (f*f^c)^{-1} f^c = 1", worst,
                             kIdentityTolerance);
  rec.note = std::to_string(over) + " of " + std::to_string(n) +
             " instances above tolerance; worst residual relative to sum |a_k||r_{n-k}|: " + fmt(worst_scaled);
  return {rec};
}

std::vector<CheckResult> check_star_pointwise(const RunConfig& c) {
  Rng rng = rng_for(c, "star-pointwise");
  const std::size_t n = instances(c, 500);
  const std::size_t n_zero = n / 10;
  double worst = 0.0;
  double worst_zero = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    const SliceSeries g = random_series(rng, 4);
    if (s < n_zero) {
      // (q - z) * h vanishes at q = z.
      const Quaternion z = rng.point_in_ball();
      const SliceSeries f = star_mul(SliceSeries({-z, Quaternion(1.0)}), random_series(rng, 3));
      worst_zero = std::max(worst_zero, star_pointwise_check(f, g, z));
    } else {
      const SliceSeries f = random_series(rng, 4);
      worst = std::max(worst, star_pointwise_check(f, g, rng.point_in_ball()));
    }
  }
  auto r = identity_result("star-pointwise", "f*g(q) = f(q) g(f(q)^{-1} q f(q)), and 0 where f(q) = 0",
                           std::max(worst, worst_zero), kIdentityTolerance);
  r.note = std::to_string(n_zero) + " engineered zeros (worst " + fmt(worst_zero) + "), " +
           std::to_string(n - n_zero) + " generic triples (worst " + fmt(worst) + ")";
  return {r};
}

// ---------------------------------------------------------------- Fock numerics

std::vector<CheckResult> check_norm_sandwich(const RunConfig& c) {
  const std::vector<double> ps{4.0 / 3.0, 2.0, 3.0};
  const std::vector<double> alphas{0.5, 1.0, 2.0};
  const QuadratureGrid grid = build_grid(c.params);
  const NormTable table(grid, c.params.n_slices);
  Rng rng = rng_for(c, "norm-sandwich");

  struct Worst {
    double ratio = -1.0;
    double lhs = 0.0;
    double rhs = 0.0;
  };
  std::vector<Worst> lower(ps.size() * alphas.size());
  std::vector<Worst> upper(ps.size() * alphas.size());

  const std::size_t n = instances(c, 200);
  for (std::size_t s = 0; s < n; ++s) {
    const SliceSeries f = random_series(rng, c.max_degree);
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      const auto powers = table.slice_powers(f, ps, alphas[a]);
      for (std::size_t e = 0; e < ps.size(); ++e) {
        const auto& row = powers[e];
        const double sup = *std::max_element(row.begin(), row.end());
        const double c2p = std::pow(2.0, ps[e]);
        auto& lo = lower[e * alphas.size() + a];
        auto& hi = upper[e * alphas.size() + a];
        for (double slice : row) {
          if (slice / sup > lo.ratio) lo = {slice / sup, slice, sup};
          if (sup / (c2p * slice) > hi.ratio) hi = {sup / (c2p * slice), sup, c2p * slice};
        }
      }
    }
  }

  std::vector<CheckResult> out;
  for (std::size_t e = 0; e < ps.size(); ++e) {
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      const std::string tag = "p=" + fmt(ps[e]) + ",alpha=" + fmt(alphas[a]);
      const auto& lo = lower[e * alphas.size() + a];
      const auto& hi = upper[e * alphas.size() + a];
      auto rl = inequality_result(tagged("norm-sandwich-lower", tag),
                                  "norm equivalence: ||f||_{alpha,I}^p <= ||f||_alpha^p", lo.lhs, lo.rhs, 1.0);
      auto ru = inequality_result(tagged("norm-sandwich-upper", tag),
                                  "norm equivalence: ||f||_alpha^p <= 2^p ||f||_{alpha,I}^p", hi.lhs, hi.rhs,
                                  std::pow(2.0, ps[e]));
      rl.note = ru.note = std::to_string(n) + " series, " + std::to_string(table.units().size()) +
                          " slices, domain " + to_string(c.params.domain);
      out.push_back(rl);
      out.push_back(ru);
    }
  }
  return out;
}

std::vector<CheckResult> check_quadrature_mass(const RunConfig& c) {
  FockParams disk = c.params;
  disk.domain = Domain::UnitDisk;
  FockParams plane = c.params;
  plane.domain = Domain::Plane;
  const QuadratureGrid gd = build_grid(disk);
  const QuadratureGrid gp = build_grid(plane);
  double worst = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    worst = std::max(worst, std::abs(gd.gaussian_mass(alpha) - (1.0 - std::exp(-alpha))));
    const double R = plane.radius;
    worst = std::max(worst, std::abs(gp.gaussian_mass(alpha) - (1.0 - std::exp(-alpha * R * R))));
  }
  auto r = identity_result("quadrature-mass", "Gaussian measure d lambda = (alpha/pi) e^{-alpha|z|^2} dA", worst,
                           kIdentityTolerance);
  r.note = "unit disk and plane(R=" + fmt(plane.radius) + "), alpha in {0.5, 1, 2}";
  return {r};
}

std::vector<CheckResult> check_gram_diagonal(const RunConfig& c) {
  constexpr std::size_t kMaxM = 12;
  double worst = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    FockParams params = c.params;
    params.domain = Domain::UnitDisk;
    params.alpha = alpha;
    params.truncation = kMaxM;
    const GramTable gram = gram_table(params);
    for (std::size_t m = 0; m <= kMaxM; ++m) {
      worst = std::max(worst, std::abs(gram.diag[m] - oracle::gram_diagonal(m, alpha)));
    }
  }
  auto r = identity_result("gram-diagonal", "monomial norms ||q^m||^2 = gamma(m+1, alpha)/alpha^m on the unit disk",
                           worst, 1e-9);
  r.note = "m <= 12, alpha in {0.5, 1, 2}, adaptive Simpson oracle";
  return {r};
}

std::vector<CheckResult> check_orthogonality(const RunConfig& c) {
  constexpr std::size_t kMaxM = 12;
  Rng rng = rng_for(c, "orthogonality");
  double worst = 0.0;
  for (const ImaginaryUnit& I : {ImaginaryUnit::i(), rng.unit()}) {
    std::vector<double> norms(kMaxM + 1);
    for (std::size_t m = 0; m <= kMaxM; ++m) {
      const SliceSeries e = SliceSeries::monomial(m);
      norms[m] = std::sqrt(inner_product(e, e, I, c.params).x0);
    }
    for (std::size_t m = 0; m <= kMaxM; ++m) {
      for (std::size_t n = m + 1; n <= kMaxM; ++n) {
        const Quaternion ip = inner_product(SliceSeries::monomial(m), SliceSeries::monomial(n), I, c.params);
        worst = std::max(worst, ip.norm() / (norms[m] * norms[n]));
      }
    }
  }
  return {identity_result("orthogonality", "monomials q^m are orthogonal in F^2_alpha", worst, 1e-10)};
}

std::vector<CheckResult> check_inner_product(const RunConfig& c) {
  Rng rng = rng_for(c, "inner-product");
  double pos = 0.0;
  double herm = 0.0;
  double right = 0.0;
  double left = 0.0;
  const QuadratureGrid grid = build_grid(c.params);
  std::vector<double> weights(grid.size());
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const double r = grid.radii()[idx / grid.n_theta()];
    weights[idx] = grid.radial_weights()[idx / grid.n_theta()] * grid.angular_weight() * c.params.alpha /
                   std::numbers::pi * std::exp(-c.params.alpha * r * r);
  }
  for (std::size_t s = 0, n = instances(c, 50); s < n; ++s) {
    const SliceSeries f = random_series(rng, c.max_degree);
    const SliceSeries g = random_series(rng, c.max_degree);
    const SliceSeries h = random_series(rng, c.max_degree);
    const Quaternion a = rng.normal_quaternion();
    const ImaginaryUnit I = rng.unit();

    const Quaternion ff = inner_product(f, f, I, c.params);
    pos = std::max(pos, ff.x0 < 0.0 ? std::abs(ff.x0) + ff.imag_norm() : ff.imag_norm());

    const Quaternion fg = inner_product(f, g, I, c.params);
    const Quaternion gf = inner_product(g, f, I, c.params);
    herm = std::max(herm, (fg - conj(gf)).norm());

    const Quaternion fh = inner_product(f, h, I, c.params);
    right = std::max(right, (inner_product(f, g * a + h, I, c.params) - (mul(fg, a) + fh)).norm());

    // (a f)(q) = a f(q) on the slice; not slice regular, so evaluated directly.
    // a f is not slice regular, so integrate the pointwise product directly.
    Quaternion af_g;
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
      const Quaternion z = grid.point(idx, I);
      af_g += weights[idx] * mul(mul(a, eval(f, z)) + eval(h, z), conj(eval(g, z)));
    }
    left = std::max(left, (af_g - (mul(a, fg) + inner_product(h, g, I, c.params))).norm());
  }
  const std::string ref = "inner product <f,g> = integral of f conj(g) d lambda: ";
  auto rp = identity_result("inner-positivity", ref + "positivity <f,f> >= 0", pos, kIdentityTolerance);
  auto rh = identity_result("inner-hermiticity", ref + "hermiticity <f,g> = conj <g,f>", herm, kIdentityTolerance);
  auto rr = identity_result("inner-right-linearity", ref + "right linearity <f, g a + h> = <f,g> a + <f,h>", right,
                            kIdentityTolerance);
  rr.note = "left linearity <a f + h, g> = a <f,g> + <h,g> residual: " + fmt(left);
  return {rp, rh, rr};
}

std::vector<CheckResult> check_growth(const RunConfig& c) {
  // The pointwise estimate is a whole-plane Fock-space fact; evaluate the norm
  // on the truncated plane.
  FockParams params = c.params;
  params.domain = Domain::Plane;
  const QuadratureGrid grid = build_grid(params);
  const NormTable table(grid, params.n_slices);
  Rng rng = rng_for(c, "growth");
  const double p = params.p;
  const double alpha = params.alpha;
  const double corollary = std::pow(2.0, p + 1.0);

  double worst_norm = 0.0;
  double worst_ratio = -1.0;
  double cor_lhs = 0.0;
  double cor_rhs = 0.0;
  const std::size_t n = instances(c, 100);
  for (std::size_t s = 0; s < n; ++s) {
    const SliceSeries f = random_series(rng, c.max_degree);
    const double nf = table.sup_norms(f, {p}, alpha)[0];
    for (int t = 0; t < 500; ++t) {
      const Quaternion q = rng.point_in_ball();
      const double fq = eval(f, q).norm();
      const double gauss = std::exp(0.5 * alpha * q.norm2());
      worst_norm = std::max(worst_norm, fq / (gauss * nf));
      const double rhs = corollary * gauss * nf;
      if (fq / rhs > worst_ratio) {
        worst_ratio = fq / rhs;
        cor_lhs = fq;
        cor_rhs = rhs;
      }
    }
  }
  const std::string note = std::to_string(n) + " series x 500 points, plane(R=" + fmt(params.radius) +
                           "), p=" + fmt(p) + ", alpha=" + fmt(alpha);
  auto rn = inequality_result("growth-normalized", "growth estimate: |f(q)| <= 2 e^{alpha|q|^2/2} when ||f|| <= 1",
                              worst_norm, 2.0, 2.0, 0.5e-6);
  auto rc = inequality_result("growth-corollary", "growth estimate: |f(q)| <= 2^{p+1} e^{alpha|q|^2/2} ||f||",
                              cor_lhs, cor_rhs, corollary);
  rn.note = rc.note = note;
  return {rn, rc};
}

std::vector<CheckResult> check_reproducing(const RunConfig& c) {
  constexpr std::size_t kMaxM = 8;
  constexpr int kPoints = 20;
  Rng rng = rng_for(c, "reproducing");
  std::vector<Quaternion> points(kPoints);
  for (auto& q : points) q = rng.point_in_ball();

  auto worst_error = [&](const Projector& proj) {
    double worst = 0.0;
    for (std::size_t m = 0; m <= kMaxM; ++m) {
      const SliceSeries e = SliceSeries::monomial(m);
      const auto samples = proj.sample(e);
      for (const auto& q : points) worst = std::max(worst, (proj.apply(samples, q) - eval(e, q)).norm());
    }
    return worst;
  };

  FockParams plane = c.params;
  plane.domain = Domain::Plane;
  plane.radius = 4.0;
  plane.alpha = 1.0;
  const double plane_err = worst_error(Projector(plane, ImaginaryUnit::i(), KernelKind::Exponential));
  double tail = 0.0;
  for (std::size_t m = 0; m <= kMaxM; ++m) {
    const double full = std::tgamma(static_cast<double>(m) + 1.0);
    tail = std::max(tail, 1.0 - oracle::lower_incomplete_gamma(m, plane.alpha * plane.radius * plane.radius) / full);
  }

  FockParams disk = c.params;
  disk.domain = Domain::UnitDisk;
  disk.alpha = 1.0;
  const double disk_err = worst_error(Projector(disk, ImaginaryUnit::i(), KernelKind::Corrected));

  auto rp = identity_result("reproducing-plane",
                            "projection T f(q) = integral of B_alpha(q,w) f(w) d lambda(w) reproduces monomials",
                            plane_err, 1e-6);
  rp.note = "plane(R=4), alpha=1, m <= 8, kernel e_*^{alpha q conj(w)}; truncation tail max_m Q(m+1, alpha R^2) = " +
            fmt(tail);
  auto rd = identity_result("reproducing-disk", "plumbing", disk_err, 1e-8);
  rd.note = "unit disk, alpha=1, m <= 8, kernel sum q^m conj(w)^m / ||q^m||^2";
  return {rp, rd};
}

std::vector<CheckResult> check_dilation(const RunConfig& c) {
  const QuadratureGrid grid = build_grid(c.params);
  const NormTable table(grid, c.params.n_slices);
  Rng rng = rng_for(c, "dilation");
  const std::array<double, 3> radii{0.9, 0.99, 0.999};
  const double p = c.params.p;

  double worst_step = 0.0;
  double worst_final = -1.0;
  double final_lhs = 0.0;
  double final_rhs = 0.0;
  const std::size_t n = instances(c, 50);
  for (std::size_t s = 0; s < n; ++s) {
    const SliceSeries f = random_series(rng, c.max_degree);
    const double nf = table.sup_norms(f, {p}, c.params.alpha)[0];
    double prev = std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (double r : radii) {
      d = table.sup_norms(dilate(f, r) - f, {p}, c.params.alpha)[0];
      if (std::isfinite(prev)) worst_step = std::max(worst_step, d / prev);
      prev = d;
    }
    if (d / nf > worst_final) {
      worst_final = d / nf;
      final_lhs = d;
      final_rhs = 1e-3 * nf;
    }
  }
  const std::string ref = "dilations f_r(q) = f(rq): ||f_r - f|| -> 0 as r -> 1";
  // Strict decrease: the worst successive ratio must stay below 1.
  CheckResult rm = identity_result("dilation-monotone", ref, worst_step, 1.0);
  rm.pass = worst_step < 1.0;
  rm.margin = 1.0 - worst_step;
  rm.note = "max ||f_{r'} - f|| / ||f_r - f|| over r = 0.9, 0.99, 0.999; " + std::to_string(n) + " series";
  auto rf = inequality_result("dilation-final", ref, final_lhs, final_rhs, 1e-3);
  rf.note = "||f_0.999 - f|| <= 1e-3 ||f||; worst relative value " + fmt(worst_final);
  return {rm, rf};
}

std::vector<CheckResult> check_embedding(const RunConfig& c) {
  struct Pair {
    double p;
    double u;
  };
  const std::array<Pair, 3> pairs{{{4.0 / 3.0, 4.0}, {1.5, 3.0}, {2.0, 2.0}}};
  // Distinct exponents; pairs index into this list.
  const std::vector<double> exponents{4.0 / 3.0, 4.0, 1.5, 3.0, 2.0};
  const std::array<std::array<std::size_t, 2>, 3> index{{{0, 1}, {2, 3}, {4, 4}}};
  const QuadratureGrid grid = build_grid(c.params);
  const NormTable table(grid, c.params.n_slices);
  Rng rng = rng_for(c, "embedding");

  struct Worst {
    double ratio = -1.0;
    double lhs = 0.0;
    double rhs = 0.0;
    std::size_t flagged = 0;
  };
  std::array<Worst, 3> worst{};
  const std::size_t n = instances(c, 200);
  for (std::size_t s = 0; s < n; ++s) {
    const SliceSeries f = random_series(rng, c.max_degree);
    const auto norms = table.sup_norms(f, exponents, c.params.alpha);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const double np = norms[index[k][0]];
      const double nu = norms[index[k][1]];
      const double u = pairs[k].u;
      const double lhs = std::pow(nu, u);
      const double rhs = std::pow(2.0, u + 1.0) * (u / pairs[k].p) * std::pow(np, u);
      if (lhs >= 0.99 * rhs) ++worst[k].flagged;
      if (lhs / rhs > worst[k].ratio) worst[k] = {lhs / rhs, lhs, rhs, worst[k].flagged};
    }
  }
  std::vector<CheckResult> out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const double u = pairs[k].u;
    auto r = inequality_result(tagged("embedding", "p=" + fmt(pairs[k].p) + ",u=" + fmt(u)),
                               "embedding: ||f||_u^u <= 2^{u+1} (u/p) ||f||_p^u, 1/p + 1/u = 1", worst[k].lhs,
                               worst[k].rhs, std::pow(2.0, u + 1.0) * u / pairs[k].p);
    r.note = std::to_string(worst[k].flagged) + " of " + std::to_string(n) +
             " instances within 1% of saturation; worst ratio " + fmt(worst[k].ratio);
    out.push_back(r);
  }
  return out;
}

std::vector<CheckResult> check_poly_density(const RunConfig& c) {
  constexpr std::size_t kDegree = 20;
  const QuadratureGrid grid = build_grid(c.params);
  const NormTable table(grid, c.params.n_slices);
  Rng rng = rng_for(c, "poly-density");
  const SliceSeries f = random_series(rng, kDegree);
  const double p = c.params.p;

  std::vector<double> err(kDegree + 1);
  for (std::size_t m = 0; m <= kDegree; ++m) {
    err[m] = table.sup_norms(f - f.truncate(m), {p}, c.params.alpha)[0];
  }
  double worst_rise = 0.0;
  for (std::size_t m = 1; m <= kDegree; ++m) {
    if (err[m - 1] > 0.0) worst_rise = std::max(worst_rise, err[m] / err[m - 1]);
  }
  const std::string ref = "polynomials are dense in F^p_alpha";
  auto rm = inequality_result("poly-density-monotone", ref, worst_rise, 1.0, 1.0);
  rm.note = "max ||f - f_{<=m}|| / ||f - f_{<=m-1}||, degree-20 f";
  auto rf = identity_result("poly-density-final", ref, err[kDegree], 1e-6);
  rf.note = "||f - f_{<=20}||; ||f - f_{<=10}|| = " + fmt(err[10]);
  return {rm, rf};
}

std::vector<CheckResult> check_kernel_symmetry(const RunConfig& c) {
  Rng rng = rng_for(c, "kernel-symmetry");
  double worst = 0.0;
  for (std::size_t s = 0, n = instances(c, 200); s < n; ++s) {
    const Quaternion q = rng.point_in_ball();
    const Quaternion w = rng.point_in_ball();
    worst = std::max(worst, (kernel_eval(q, w, c.params) - conj(kernel_eval(w, q, c.params))).norm());
  }
  return {identity_result("kernel-symmetry", "reproducing kernel B_alpha(q,w) = conj B_alpha(w,q)", worst, 1e-12)};
}

std::vector<CheckResult> check_kernel_complex_slice(const RunConfig& c) {
  Rng rng = rng_for(c, "kernel-complex-slice");
  const ImaginaryUnit I = ImaginaryUnit::i();
  const double alpha = c.params.alpha;
  const std::size_t N = c.params.truncation;
  double worst = 0.0;
  double tail = 0.0;
  for (std::size_t s = 0, n = instances(c, 200); s < n; ++s) {
    const Quaternion qa = rng.point_in_ball();
    const Quaternion wa = rng.point_in_ball();
    const std::complex<double> z(qa.x0, qa.x1);
    const std::complex<double> w(wa.x0, wa.x1);
    const Quaternion expected = embed(std::exp(alpha * z * std::conj(w)), I);
    worst = std::max(worst, (kernel_eval(embed(z, I), embed(w, I), c.params) - expected).norm());
    const double x = alpha * std::abs(z) * std::abs(w);
    tail = std::max(tail, std::pow(x, static_cast<double>(N + 1)) / std::tgamma(static_cast<double>(N + 2)) *
                              std::exp(x));
  }
  auto r = identity_result("kernel-complex-slice",
                           "on a slice B_alpha coincides with the complex Fock kernel e^{alpha z conj(w)}", worst,
                           1e-12 + tail);
  r.note = "truncation N=" + std::to_string(N) + ", tail bound " + fmt(tail);
  return {r};
}

std::vector<CheckResult> check_kernel_span(const RunConfig& c) {
  // Least-squares fit of a polynomial by kernel sections B(., w_m) a_m with
  // centres w_m on the slice C_i, in the L^2(d lambda) norm of that slice.
  FockParams params = c.params;
  const ImaginaryUnit I = ImaginaryUnit::i();
  const QuadratureGrid grid = build_grid(params);
  Rng rng = rng_for(c, "kernel-span");
  const SliceSeries f = random_series(rng, 4);
  const SplitPair target = split_Q(f, I);
  const double beta = params.alpha;

  constexpr int kCentres = 24;
  std::vector<std::complex<double>> centres(kCentres);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int m = 0; m < kCentres; ++m) {
    const double rad = 0.9 * std::sqrt((m + 0.5) / kCentres);
    centres[m] = std::polar(rad, golden * m);
  }

  const auto radii = grid.radii();
  const auto wr = grid.radial_weights();
  const Eigen::Index rows = static_cast<Eigen::Index>(grid.size());
  Eigen::VectorXd sqrt_w(rows);
  Eigen::VectorXcd rhs1(rows);
  Eigen::VectorXcd rhs2(rows);
  for (Eigen::Index idx = 0; idx < rows; ++idx) {
    const std::size_t ring = static_cast<std::size_t>(idx) / grid.n_theta();
    sqrt_w[idx] = std::sqrt(wr[ring] * grid.angular_weight() * params.alpha / std::numbers::pi *
                            std::exp(-params.alpha * radii[ring] * radii[ring]));
    const std::complex<double> z = grid.point(static_cast<std::size_t>(idx));
    std::complex<double> F = target.f1.back();
    std::complex<double> L = target.f2.back();
    for (std::size_t n = target.f1.size() - 1; n-- > 0;) {
      F = z * F + target.f1[n];
      L = z * L + target.f2[n];
    }
    rhs1[idx] = sqrt_w[idx] * F;
    rhs2[idx] = sqrt_w[idx] * L;
  }
  const double target_norm = std::sqrt(rhs1.squaredNorm() + rhs2.squaredNorm());

  std::vector<double> errors;
  for (int k : {1, 2, 4, 8, 12, 16, 24}) {
    Eigen::MatrixXcd A(rows, k);
    for (Eigen::Index idx = 0; idx < rows; ++idx) {
      const std::complex<double> z = grid.point(static_cast<std::size_t>(idx));
      for (int m = 0; m < k; ++m) A(idx, m) = sqrt_w[idx] * std::exp(beta * z * std::conj(centres[m]));
    }
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(A);
    const Eigen::VectorXcd c1 = cod.solve(rhs1);
    const Eigen::VectorXcd c2 = cod.solve(rhs2);
    const double res = std::sqrt((A * c1 - rhs1).squaredNorm() + (A * c2 - rhs2).squaredNorm());
    errors.push_back(res / target_norm);
  }
  double worst_rise = 0.0;
  for (std::size_t t = 1; t < errors.size(); ++t) worst_rise = std::max(worst_rise, errors[t] / errors[t - 1]);
  auto r = inequality_result("kernel-span", "finite kernel sums P_I sum e^{beta q conj(w_m)} a_m are dense",
                             worst_rise, 1.0, 1.0);
  std::string trace;
  for (double e : errors) trace += (trace.empty() ? "" : " ") + fmt(e);
  r.note = "relative L2 error for 1,2,4,8,12,16,24 centres: " + trace;
  return {r};
}

struct CheckEntry {
  CheckInfo info;
  std::function<std::vector<CheckResult>(const RunConfig&)> run;
};

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = [] {
    std::vector<CheckEntry> e{
        {{"dilation", "dilations f_r(q) = f(rq): ||f_r - f|| -> 0 as r -> 1",
          "||f_r - f|| decreases over r = 0.9, 0.99, 0.999 and ends below 1e-3 ||f||"},
         check_dilation},
        {{"embedding", "embedding: ||f||_u^u <= 2^{u+1} (u/p) ||f||_p^u, 1/p + 1/u = 1",
          "embedding inequality for (4/3, 4), (3/2, 3), (2, 2)"},
         check_embedding},
        {{"gram-diagonal", "monomial norms ||q^m||^2 = gamma(m+1, alpha)/alpha^m on the unit disk",
          "Gram diagonal against the adaptive-Simpson oracle, m <= 12"},
         check_gram_diagonal},
        {{"growth", "growth estimate for entire slice regular functions",
          "normalized growth bound 2 and the 2^{p+1} corollary"},
         check_growth},
        {{"inner-product", "inner product <f,g> = integral of f conj(g) d lambda",
          "positivity, hermiticity, right linearity"},
         check_inner_product},
        {{"kernel-complex-slice", "on a slice B_alpha coincides with the complex Fock kernel",
          "B_alpha against e^{alpha z conj(w)} on C_i"},
         check_kernel_complex_slice},
        {{"kernel-span", "finite kernel sums are dense", "least-squares kernel-span approximation"},
         check_kernel_span},
        {{"kernel-symmetry", "B_alpha(q,w) = conj B_alpha(w,q)", "kernel conjugate symmetry"},
         check_kernel_symmetry},
        {{"norm-sandwich", "norm equivalence: ||f||_{alpha,I}^p <= ||f||_alpha^p <= 2^p ||f||_{alpha,I}^p",
          "sandwich inequality for p in {4/3, 2, 3}, alpha in {0.5, 1, 2}"},
         check_norm_sandwich},
        {{"orthogonality", "monomials q^m are orthogonal in F^2_alpha", "|<q^m, q^n>| for m < n <= 12"},
         check_orthogonality},
        {{"poly-density", "polynomials are dense in F^p_alpha", "truncation error of a degree-20 series"},
         check_poly_density},
        {{"quadrature-mass", "Gaussian measure d lambda = (alpha/pi) e^{-alpha|z|^2} dA",
          "Gaussian mass of the disk and truncated plane"},
         check_quadrature_mass},
        {{"rep-formula", "representation formula: P_I(Q_I f) = f", "extend_P(split_Q(f)) against eval"},
         check_rep_formula},
        {{"reproducing", "projection with the reproducing kernel fixes F^2_alpha",
          "project_T on monomials (plane R=4 exponential kernel; unit disk corrected kernel)"},
         check_reproducing},
        {{"split-roundtrip", "splitting: f_I = F + L J", "recombine(split_Q(f)) = f"}, check_split_roundtrip},
        {{"star-assoc", "regular product is associative", "(f*g)*h = f*(g*h)"}, check_star_assoc},
        {{"star-conj-real", "f*f^c has real coefficients", "imaginary parts of f*f^c"}, check_star_conj_real},
        {{"star-pointwise", "f*g(q) = f(q) g(f(q)^{-1} q f(q))", "pointwise formula incl. engineered zeros"},
         check_star_pointwise},
        {{"star-reciprocal", "f * f^{-*} = 1", "reciprocal residual through degree 10"}, check_star_reciprocal},
        {{"star-unit", "1 is the unit of the regular product", "1*f = f*1 = f"}, check_star_unit},
    };
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.info.id < b.info.id; });
    return e;
  }();
  return entries;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const auto& info : check_catalog()) ids.push_back(info.id);
  return ids;
}

std::vector<CheckResult> run_check(const std::string& id, const RunConfig& config) {
  for (const auto& e : registry()) {
    if (e.info.id != id) continue;
    const auto start = std::chrono::steady_clock::now();
    auto results = e.run(config);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : results) r.wall_seconds = secs;
    return results;
  }
  throw UsageError("unknown check id '" + id + "'");
}

}  // namespace sliceq
