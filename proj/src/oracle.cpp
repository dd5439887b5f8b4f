#include "sliceq/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace sliceq::oracle {

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double lower_incomplete_gamma(std::size_t m, double x, double tol) {
  const double md = static_cast<double>(m);
  return adaptive_simpson([md](double t) { return std::pow(t, md) * std::exp(-t); }, 0.0, x, tol);
}

double gram_diagonal(std::size_t m, double alpha, double radius) {
  const double scale = std::pow(alpha, static_cast<double>(m));
  return lower_incomplete_gamma(m, alpha * radius * radius, 1e-12 * std::min(1.0, scale)) / scale;
}

}  // namespace sliceq::oracle
