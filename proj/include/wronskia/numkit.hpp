#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "wronskia/grid.hpp"
#include "wronskia/scalar_function.hpp"

namespace wronskia {

/// Raised when a construction degenerates at a specific point (seed with
/// vanishing value/slope, numerically dependent solution pair, ...).
struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// O(h^2) central-difference estimate of the k-th derivative, k in 1..3.
/// k = 3 uses the 5-point stencil. The stencil must stay inside f's domain.
double central_derivative(const ScalarFunction& f, int k, double t, double h);

/// Cumulative integral F[i] ~ integral of f from grid start to point i,
/// F[0] = 0. Composite Simpson over point pairs; odd indices are closed by
/// the 3-point parabolic end rule.
std::vector<double> integrate_cumulative(const ScalarFunction& f, const Grid& grid);
std::vector<double> integrate_cumulative(const std::vector<double>& samples,
                                         const Grid& grid);

/// The cumulative integral of f as a function: eval interpolates the
/// quadrature table (cubic Hermite, slopes are f itself), deriv(k) is
/// f.deriv(k-1) exactly.
ScalarFunction antiderivative(const ScalarFunction& f, const Grid& grid);

/// Integrates u''' + beta(t) u'' + gamma(t) u' + delta u = 0 by classical
/// fixed-step RK4 on the grid. The result interpolates between nodes with
/// cubic Hermite segments; deriv(3) is recovered from the equation itself.
ScalarFunction rk4_linear3(const ScalarFunction& beta, const ScalarFunction& gamma,
                           double delta, const std::array<double, 3>& ics,
                           const Grid& grid);

/// Same scheme for w'' + p(t) w' + q(t) w = 0; deriv(2) and deriv(3) come
/// from the equation and its t-derivative.
ScalarFunction rk4_linear2(const ScalarFunction& p, const ScalarFunction& q,
                           const std::array<double, 2>& ics, const Grid& grid);

}  // namespace wronskia
