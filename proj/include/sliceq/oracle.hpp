#pragma once

#include <cstddef>
#include <functional>

// Reference values computed independently of the polar quadrature grid.

namespace sliceq::oracle {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 50);

/// gamma(m + 1, x) = integral_0^x t^m e^{-t} dt.
double lower_incomplete_gamma(std::size_t m, double x, double tol = 1e-12);

/// ||q^m||^2 against d lambda_alpha on a slice disk of radius R:
/// gamma(m + 1, alpha R^2) / alpha^m.
double gram_diagonal(std::size_t m, double alpha, double radius = 1.0);

}  // namespace sliceq::oracle
