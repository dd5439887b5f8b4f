#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "sliceq/errors.hpp"
#include "sliceq/random.hpp"
#include "sliceq/slice_series.hpp"

using namespace sliceq;

namespace {

const Quaternion kI(0, 1, 0, 0);
const Quaternion kJ(0, 0, 1, 0);
const Quaternion kK(0, 0, 0, 1);

void expect_near(const Quaternion& a, const Quaternion& b, double tol) {
  EXPECT_LE((a - b).norm(), tol) << a << " vs " << b;
}

// Independent evaluation: explicit left powers times right coefficients.
Quaternion naive_eval(const SliceSeries& f, const Quaternion& q) {
  Quaternion power(1.0);
  Quaternion sum;
  for (std::size_t n = 0; n <= f.degree(); ++n) {
    sum += mul(power, f[n]);
    power = mul(power, q);
  }
  return sum;
}

}  // namespace

TEST(SliceSeries, EvalExamples) {
  const SliceSeries f({Quaternion(1.0), kI});
  EXPECT_EQ(eval(f, kJ), Quaternion(1, 0, 0, -1));
  EXPECT_EQ(eval(SliceSeries::monomial(2), Quaternion(1, 1, 0, 0)), Quaternion(0, 2, 0, 0));

  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const SliceSeries g = random_series(rng, 7);
    EXPECT_EQ(eval(g, Quaternion()), g[0]);
    const Quaternion q = rng.point_in_ball();
    expect_near(eval(g, q), naive_eval(g, q), 1e-13);
  }
}

TEST(SliceSeries, AdditionMatchesPointwise) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const SliceSeries f = random_series(rng, 5);
    const SliceSeries g = random_series(rng, 8);
    const Quaternion q = rng.point_in_ball();
    expect_near(eval(f + g, q), eval(f, q) + eval(g, q), 1e-13);
    expect_near(eval(f - g, q), eval(f, q) - eval(g, q), 1e-13);
  }
}

TEST(SliceSeries, StarProductExamples) {
  const SliceSeries f = SliceSeries::monomial(1, kI);
  const SliceSeries g = SliceSeries::monomial(1, kJ);
  EXPECT_EQ(star_mul(f, g), SliceSeries::monomial(2, kK));
  EXPECT_EQ(star_mul(g, f), SliceSeries::monomial(2, -kK));

  Rng rng(3);
  const SliceSeries h = random_series(rng, 6);
  EXPECT_EQ(star_mul(SliceSeries::constant(Quaternion(1.0)), h), h);
}

TEST(SliceSeries, StarProductTruncationIsAudited) {
  const SliceSeries f = SliceSeries::monomial(40);
  const SliceSeries prod = star_mul(f, f);
  EXPECT_EQ(prod.degree(), kDefaultMaxDegree);
  EXPECT_EQ(prod.truncated_degrees(), 80 - kDefaultMaxDegree);
  EXPECT_EQ(star_mul(f, f, 100).truncated_degrees(), 0u);
}

TEST(SliceSeries, PointwiseCheck) {
  // f = 1 - q vanishes at q = 1.
  const SliceSeries f({Quaternion(1.0), Quaternion(-1.0)});
  Rng rng(4);
  const SliceSeries g = random_series(rng, 4);
  EXPECT_LE(star_pointwise_check(f, g, Quaternion(1.0)), 1e-12);

  // Real coefficients on C_i.
  const SliceSeries fr({Quaternion(0.5), Quaternion(-1.5), Quaternion(2.0)});
  const SliceSeries gr({Quaternion(1.0), Quaternion(0.25)});
  EXPECT_LE(star_pointwise_check(fr, gr, Quaternion(0.3, 0.4, 0, 0)), 1e-15);

  for (int t = 0; t < 300; ++t) {
    const SliceSeries a = random_series(rng, 4);
    const SliceSeries b = random_series(rng, 4);
    EXPECT_LE(star_pointwise_check(a, b, rng.point_in_ball()), 1e-10);
  }
}

TEST(SliceSeries, PointwiseFormulaAgainstIndependentOracle) {
  // f*g(q) = f(q) g(f(q)^{-1} q f(q)), both sides computed from scratch.
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const SliceSeries f = random_series(rng, 3);
    const SliceSeries g = random_series(rng, 3);
    const Quaternion q = rng.point_in_ball();
    const Quaternion fq = naive_eval(f, q);
    const Quaternion rhs = mul(fq, naive_eval(g, mul(mul(inverse(fq), q), fq)));
    expect_near(naive_eval(star_mul(f, g), q), rhs, 1e-10);
  }
}

TEST(SliceSeries, RegularConjugate) {
  EXPECT_EQ(regular_conjugate(SliceSeries::monomial(1, kI)), SliceSeries::monomial(1, -kI));
  const SliceSeries real({Quaternion(1.0), Quaternion(-2.0)});
  EXPECT_EQ(regular_conjugate(real), real);
  const SliceSeries f({kI, kJ});
  EXPECT_EQ(star_mul(f, regular_conjugate(f)), SliceSeries({Quaternion(1.0), Quaternion(), Quaternion(1.0)}));
}

TEST(SliceSeries, Reciprocal) {
  EXPECT_EQ(star_reciprocal(SliceSeries::constant(Quaternion(1.0)), 3).coeff(0), Quaternion(1.0));

  // 1 / (1 - q a) = sum q^n a^n.
  const Quaternion a(0.2, -0.3, 0.5, 0.1);
  const SliceSeries f({Quaternion(1.0), -a});
  const SliceSeries r = star_reciprocal(f, 5);
  Quaternion power(1.0);
  for (std::size_t n = 0; n <= 5; ++n) {
    expect_near(r.coeff(n), power, 1e-14);
    power = mul(power, a);
  }

  const SliceSeries g({kI, kJ});
  const SliceSeries prod = star_mul(g, star_reciprocal(g, 4));
  for (std::size_t n = 0; n <= 4; ++n) expect_near(prod.coeff(n), Quaternion(n == 0 ? 1.0 : 0.0), 1e-12);

  EXPECT_THROW(star_reciprocal(SliceSeries::monomial(1), 3), DomainError);
}

TEST(SliceSeries, SplitExamples) {
  const auto I = ImaginaryUnit::i();
  const SliceSeries real({Quaternion(1.0), Quaternion(-2.0), Quaternion(0.5)});
  const SplitPair pr = split_Q(real, I);
  for (std::size_t n = 0; n < 3; ++n) {
    EXPECT_EQ(pr.f1[n], std::complex<double>(real[n].x0, 0));
    EXPECT_EQ(pr.f2[n], std::complex<double>());
  }

  const SplitPair pc = split_Q(SliceSeries::constant(Quaternion(1, 1, 1, 1)), I);
  EXPECT_EQ(pc.f1[0], std::complex<double>(1, 1));
  EXPECT_EQ(pc.f2[0], std::complex<double>(1, 1));

  const SplitPair pk = split_Q(SliceSeries::monomial(1, kK), I);
  EXPECT_EQ(pk.f1[1], std::complex<double>());
  EXPECT_EQ(pk.f2[1], std::complex<double>(0, 1));
}

TEST(SliceSeries, SplitRoundTrip) {
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const SliceSeries f = random_series(rng, 10);
    const SliceSeries back = split_Q(f, rng.unit()).recombine();
    for (std::size_t n = 0; n <= f.degree(); ++n) {
      EXPECT_LE((back[n] - f[n]).norm(), 1e-15 * (1 + f[n].norm()));
    }
  }
}

TEST(SliceSeries, RepresentationFormula) {
  const SliceSeries sq = SliceSeries::monomial(2);
  const Quaternion q(1, 0, 1, 0);
  expect_near(extend_P(split_Q(sq, ImaginaryUnit::i()), q), Quaternion(0, 0, 2, 0), 1e-15);

  Rng rng(7);
  const SliceSeries f = random_series(rng, 6);
  const SplitPair pair = split_Q(f, ImaginaryUnit::i());
  expect_near(extend_P(pair, Quaternion(0.4)), eval(f, Quaternion(0.4)), 1e-13);
  for (int t = 0; t < 500; ++t) {
    const Quaternion x = rng.point_in_ball();
    expect_near(extend_P(pair, x), eval(f, x), 1e-12);
  }
}

TEST(SliceSeries, Dilate) {
  Rng rng(8);
  const SliceSeries f = random_series(rng, 5);
  EXPECT_EQ(dilate(f, 1.0), f);
  const SliceSeries d0 = dilate(f, 0.0);
  EXPECT_EQ(d0.coeff(0), f[0]);
  for (std::size_t n = 1; n <= d0.degree(); ++n) EXPECT_EQ(d0.coeff(n), Quaternion());
  const SliceSeries g({Quaternion(1.0), Quaternion(1.0), Quaternion(1.0)});
  EXPECT_EQ(dilate(g, 0.5), SliceSeries({Quaternion(1.0), Quaternion(0.5), Quaternion(0.25)}));
  EXPECT_THROW(dilate(f, 1.5), DomainError);
  EXPECT_THROW(dilate(f, -0.1), DomainError);
}

TEST(SliceSeries, StarExponential) {
  const SliceSeries e0 = star_exponential(Quaternion(), 1.0, 10);
  EXPECT_EQ(eval(e0, Quaternion(0.3, 0.2, 0.1, 0.0)), Quaternion(1.0));

  const double x = 0.7;
  const double w = 0.9;
  EXPECT_NEAR(eval(star_exponential(Quaternion(w), 1.5, 30), Quaternion(x)).x0, std::exp(1.5 * x * w), 1e-14);

  // Term-by-term oracle: sum i^n (-j)^n / n!.
  Quaternion oracle;
  Quaternion ip(1.0);
  Quaternion jp(1.0);
  double fact = 1.0;
  for (int n = 0; n <= 20; ++n) {
    if (n > 0) fact *= n;
    oracle += mul(ip, jp) / fact;
    ip = mul(ip, kI);
    jp = mul(jp, -kJ);
  }
  expect_near(eval(star_exponential(kJ, 1.0, 20), kI), oracle, 1e-15);
}
