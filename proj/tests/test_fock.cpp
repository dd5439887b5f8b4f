#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "sliceq/errors.hpp"
#include "sliceq/fock.hpp"
#include "sliceq/oracle.hpp"
#include "sliceq/random.hpp"

using namespace sliceq;

namespace {

FockParams plane(double R = 6.0) {
  FockParams p;
  p.domain = Domain::Plane;
  p.radius = R;
  return p;
}

// Gaussian-weighted integral of g(r, theta) over the grid.
template <typename G>
double gauss_integral(const QuadratureGrid& grid, double alpha, G g) {
  double sum = 0.0;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const auto nd = grid.node(idx);
    sum += nd.weight * alpha / std::numbers::pi * std::exp(-alpha * nd.r * nd.r) * g(nd.r, nd.theta);
  }
  return sum;
}

}  // namespace

TEST(Quadrature, GaussLegendreExactness) {
  const auto gl = gauss_legendre(10);
  for (int k = 0; k < 20; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * std::pow(gl.nodes[i], k);
    EXPECT_NEAR(s, k % 2 ? 0.0 : 2.0 / (k + 1), 1e-14) << k;
  }
}

TEST(Quadrature, GaussianMass) {
  const FockParams disk;
  const auto grid = build_grid(disk);
  EXPECT_NEAR(grid.gaussian_mass(1.0), 1.0 - std::exp(-1.0), 1e-14);
  EXPECT_NEAR(grid.gaussian_mass(1.0), 0.6321205588285577, 1e-14);
  const auto pg = build_grid(plane(6.0));
  EXPECT_NEAR(pg.gaussian_mass(2.0), 1.0 - std::exp(-72.0), 1e-12);
}

TEST(Quadrature, AngularHarmonicsVanish) {
  const auto grid = build_grid(FockParams{});
  for (int m = 1; m <= 20; ++m) {
    double c = 0.0;
    double s = 0.0;
    for (std::size_t idx = 0; idx < grid.n_theta(); ++idx) {
      const auto nd = grid.node(idx);
      c += std::cos(m * nd.theta);
      s += std::sin(m * nd.theta);
    }
    EXPECT_NEAR(c, 0.0, 1e-12);
    EXPECT_NEAR(s, 0.0, 1e-12);
  }
}

TEST(Quadrature, SecondMomentOnPlane) {
  const auto grid = build_grid(plane(8.0));
  EXPECT_NEAR(gauss_integral(grid, 1.0, [](double r, double) { return r * r; }), 1.0, 1e-12);
}

TEST(Quadrature, InvalidParams) {
  FockParams p;
  p.alpha = 0.0;
  EXPECT_THROW(build_grid(p), ConfigError);
  p = FockParams{};
  p.p = 1.0;
  EXPECT_THROW(p.validate(), ConfigError);
  p = plane(0.5);
  EXPECT_THROW(p.validate(), ConfigError);
  p = FockParams{};
  p.n_r = 2;
  EXPECT_THROW(build_grid(p), ConfigError);
  EXPECT_THROW(parse_domain("torus"), ConfigError);
}

TEST(Oracle, IncompleteGamma) {
  // gamma(1, x) = 1 - e^{-x}; gamma(2, x) = 1 - (1 + x) e^{-x}.
  EXPECT_NEAR(oracle::lower_incomplete_gamma(0, 1.0), 1.0 - std::exp(-1.0), 1e-13);
  EXPECT_NEAR(oracle::lower_incomplete_gamma(1, 2.0), 1.0 - 3.0 * std::exp(-2.0), 1e-13);
  EXPECT_NEAR(oracle::lower_incomplete_gamma(4, 60.0), 24.0, 1e-10);
}

TEST(FockNorm, Examples) {
  const FockParams disk;
  EXPECT_EQ(fock_norm_slice(SliceSeries(), ImaginaryUnit::i(), disk), 0.0);
  // (alpha p / 2 pi) integral e^{-alpha |z|^2} dA over the unit disk, p = 2, alpha = 1.
  EXPECT_NEAR(fock_norm_slice(SliceSeries::constant(Quaternion(1.0)), ImaginaryUnit::i(), disk),
              std::sqrt(1.0 - std::exp(-1.0)), 1e-13);

  const SliceSeries real({Quaternion(0.5), Quaternion(-1.0), Quaternion(2.0)});
  const double ni = fock_norm_slice(real, ImaginaryUnit::i(), disk);
  EXPECT_NEAR(fock_norm_slice(real, ImaginaryUnit::j(), disk), ni, 1e-12);
  EXPECT_NEAR(fock_norm(real, disk).value, ni, 1e-12);
}

TEST(FockNorm, ClosedFormOnDisk) {
  // ||q^m||^p_{alpha} with p = 2: (alpha/pi) int |z|^{2m} e^{-alpha|z|^2} dA = gamma(m+1, alpha)/alpha^m.
  FockParams p;
  for (double alpha : {0.5, 1.0, 2.0}) {
    p.alpha = alpha;
    for (std::size_t m = 0; m <= 8; ++m) {
      const double n = fock_norm_slice(SliceSeries::monomial(m), ImaginaryUnit::k(), p);
      EXPECT_NEAR(n * n, oracle::gram_diagonal(m, alpha), 1e-12);
    }
  }
}

TEST(FockNorm, SupDominatesAndSandwich) {
  Rng rng(21);
  FockParams p;
  for (double exponent : {4.0 / 3.0, 2.0, 3.0}) {
    p.p = exponent;
    for (int t = 0; t < 10; ++t) {
      const SliceSeries f = random_series(rng, 6);
      const double sup = fock_norm(f, p).value;
      for (const auto& I : slice_sample(p.n_slices)) EXPECT_LE(fock_norm_slice(f, I, p), sup * (1 + 1e-14));
      const double ni = fock_norm_slice(f, ImaginaryUnit::i(), p);
      EXPECT_LE(std::pow(sup, exponent), std::pow(2.0, exponent) * std::pow(ni, exponent) * (1 + 1e-8));
    }
  }
  p.n_slices = 4;
  EXPECT_THROW(fock_norm(SliceSeries(), p), ConfigError);
}

TEST(FockNorm, GrowthBoundFailsOnUnitDisk) {
  // On the unit disk f = 1 has ||1||_p^p = 1 - e^{-alpha p / 2}, so
  // |f(0)| / ||f|| = (1 - e^{-alpha p/2})^{-1/p} exceeds 2 for small alpha p.
  FockParams p;
  p.alpha = 0.5;
  p.p = 4.0 / 3.0;
  const double norm = fock_norm(SliceSeries::constant(Quaternion(1.0)), p).value;
  const double closed = std::pow(1.0 - std::exp(-p.alpha * p.p / 2.0), 1.0 / p.p);
  EXPECT_NEAR(norm, closed, 1e-13);
  EXPECT_GT(1.0 / norm, 2.0);
  // On the plane of radius R the norm is (1 - e^{-alpha p R^2/2})^{1/p}, close to 1.
  FockParams q = plane(6.0);
  q.alpha = p.alpha;
  q.p = p.p;
  const double plane_closed = std::pow(1.0 - std::exp(-q.alpha * q.p * 18.0), 1.0 / q.p);
  EXPECT_NEAR(fock_norm(SliceSeries::constant(Quaternion(1.0)), q).value, plane_closed, 1e-12);
  EXPECT_LT(1.0 / plane_closed, 2.0);
}

TEST(InnerProduct, MonomialsAndPositivity) {
  FockParams p;
  const auto I = ImaginaryUnit::from_vector(1, -2, 0.5);
  for (std::size_t m = 0; m <= 8; ++m) {
    for (std::size_t n = 0; n <= 8; ++n) {
      const Quaternion ip = inner_product(SliceSeries::monomial(m), SliceSeries::monomial(n), I, p);
      if (m == n) {
        EXPECT_NEAR(ip.x0, oracle::gram_diagonal(m, p.alpha), 1e-12);
        EXPECT_NEAR(ip.imag_norm(), 0.0, 1e-15);
      } else {
        EXPECT_LE(ip.norm(), 1e-10);
      }
    }
  }
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const SliceSeries f = random_series(rng, 6);
    const Quaternion ff = inner_product(f, f, rng.unit(), p);
    EXPECT_GE(ff.x0, 0.0);
    EXPECT_LE(ff.imag_norm(), 1e-12);
  }
}

TEST(InnerProduct, LeftLinearHermitianButNotRightLinear) {
  // <f,g> = int f conj(g): <a f, g> = a <f,g>, but <f, g a> = int f conj(a) conj(g),
  // which differs from <f,g> a in general.
  FockParams p;
  const auto I = ImaginaryUnit::i();
  const SliceSeries f = SliceSeries::constant(Quaternion(0, 0, 1, 0));
  const SliceSeries g = SliceSeries::constant(Quaternion(1.0));
  const Quaternion a(0, 1, 0, 0);
  const Quaternion lhs = inner_product(f, g * a, I, p);
  const Quaternion rhs = mul(inner_product(f, g, I, p), a);
  EXPECT_GT((lhs - rhs).norm(), 0.1);
  EXPECT_LE((inner_product(f, g, I, p) - conj(inner_product(g, f, I, p))).norm(), 1e-15);
}

TEST(Gram, Diagonal) {
  FockParams p;
  p.truncation = 12;
  const auto g = gram_table(p);
  ASSERT_EQ(g.diag.size(), 13u);
  EXPECT_NEAR(g.diag[0], 1.0 - std::exp(-1.0), 1e-14);
  for (std::size_t m = 0; m <= 12; ++m) {
    EXPECT_GT(g.diag[m], 0.0);
    EXPECT_NEAR(g.diag[m], oracle::gram_diagonal(m, 1.0), 1e-12);
  }
  FockParams q = plane(8.0);
  q.truncation = 6;
  const auto gp = gram_table(q);
  EXPECT_NEAR(gp.diag[1], 1.0, 1e-12);
  EXPECT_NEAR(gp.diag[4], 24.0, 1e-10);
}

TEST(Kernel, Examples) {
  const FockParams p;
  const Quaternion q(0.3, -0.2, 0.5, 0.1);
  EXPECT_EQ(kernel_eval(q, Quaternion(), p), Quaternion(1.0));
  EXPECT_NEAR(corrected_kernel_eval(q, Quaternion(), p).x0, 1.0 / (1.0 - std::exp(-1.0)), 1e-13);
  EXPECT_NEAR(corrected_kernel_eval(q, Quaternion(), p).imag_norm(), 0.0, 1e-15);

  const FockParams pp = plane(8.0);
  EXPECT_NEAR(kernel_eval(Quaternion(0.5), Quaternion(0.5), pp).x0, std::exp(0.25), 1e-15);
  EXPECT_NEAR(corrected_kernel_eval(Quaternion(0.5), Quaternion(0.5), pp).x0, std::exp(0.25), 1e-10);

  Rng rng(41);
  const CorrectedKernel ck(gram_table(p));
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = rng.point_in_ball();
    const Quaternion b = rng.point_in_ball();
    EXPECT_LE((kernel_eval(a, b, p) - conj(kernel_eval(b, a, p))).norm(), 1e-12);
    EXPECT_LE((ck(a, b) - conj(ck(b, a))).norm(), 1e-12);
    const std::complex<double> z(a.x0, a.x1);
    const std::complex<double> w(b.x0, b.x1);
    const auto I = ImaginaryUnit::i();
    EXPECT_LE((kernel_eval(embed(z, I), embed(w, I), p) - embed(std::exp(z * std::conj(w)), I)).norm(), 1e-13);
  }
}

TEST(Projector, ConstantOnPlane) {
  const FockParams p = plane(6.0);
  const Projector proj(p, ImaginaryUnit::i());
  const auto samples = proj.sample(SliceSeries::constant(Quaternion(1.0)));
  Rng rng(51);
  for (int t = 0; t < 10; ++t) {
    const Quaternion q = rng.point_in_ball();
    EXPECT_LE((proj.apply(samples, q) - Quaternion(1.0)).norm(), 1e-8);
  }
  EXPECT_THROW(proj.apply(std::vector<Quaternion>(3), Quaternion()), ConfigError);
}

TEST(Projector, CorrectedKernelReproducesOnDisk) {
  FockParams p;
  p.truncation = 16;
  const Projector proj(p, ImaginaryUnit::i(), KernelKind::Corrected);
  Rng rng(61);
  for (std::size_t m = 0; m <= 8; ++m) {
    const SliceSeries f = SliceSeries::monomial(m, rng.normal_quaternion());
    const auto samples = proj.sample(f);
    for (int t = 0; t < 5; ++t) {
      const Quaternion q = rng.point_in_ball();
      EXPECT_LE((proj.apply(samples, q) - eval(f, q)).norm(), 1e-8);
    }
  }
}

TEST(Projector, ExponentialKernelDefectIsGaussianTail) {
  // On the plane of radius R the exponential kernel returns q^m (gamma(m+1, alpha R^2) / m!).
  FockParams p = plane(4.0);
  const Projector proj(p, ImaginaryUnit::i());
  const Quaternion q(0.3, 0.1, -0.4, 0.2);
  for (std::size_t m : {0u, 4u, 8u}) {
    const auto samples = proj.sample(SliceSeries::monomial(m));
    const double fraction = oracle::lower_incomplete_gamma(m, 16.0) / std::tgamma(m + 1.0);
    const Quaternion expected = eval(SliceSeries::monomial(m), q) * fraction;
    EXPECT_LE((proj.apply(samples, q) - expected).norm(), 1e-10);
  }
}
