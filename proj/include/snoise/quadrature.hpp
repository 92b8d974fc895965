#pragma once

#include <functional>

#include "snoise/errors.hpp"

namespace snoise {

// Thin wrappers around GSL adaptive quadrature. Endpoints are never
// evaluated (Gauss-Kronrod nodes are interior), so integrable endpoint
// singularities are fine. Throws QuadratureError when the requested
// tolerance cannot be certified.

// Integral of f over the finite interval [a, b] (QAGS).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double epsabs = 1e-12, double epsrel = 1e-10,
                 double* abs_err_out = nullptr);

// Integral of f over [a, infinity) (QAGIU).
double integrate_upper(const std::function<double(double)>& f, double a,
                       double epsabs = 1e-12, double epsrel = 1e-10,
                       double* abs_err_out = nullptr);

// Fixed-order Gauss-Legendre on [a, b]; no error estimate, no adaptivity.
// Intended for smooth integrands evaluated in bulk (128 nodes).
double gauss_legendre(const std::function<double(double)>& f, double a, double b);

}  // namespace snoise
