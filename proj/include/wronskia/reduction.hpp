#pragma once

#include <string>
#include <utility>

#include "wronskia/grid.hpp"
#include "wronskia/linalg.hpp"
#include "wronskia/numkit.hpp"
#include "wronskia/wronskian.hpp"

namespace wronskia {

/// A known solution x0 of u''' + gamma(t) u' + delta u = 0, from which the
/// remaining two are constructed. Both x0 and x0' must stay away from zero
/// on the working grid.
struct SeedSolution {
  ScalarFunction x0;
  Interval domain;
  double delta = 0.0;
};

SeedSolution make_power_seed(double p, double delta);
SeedSolution make_exp_seed(double v, double delta);
/// Parses "power:p" or "exp:v".
SeedSolution parse_seed(const std::string& text, double delta);

/// Throws SingularityError naming the first grid point where the seed or its
/// slope falls below 1e-10 * (1 + t^2).
void validate_seed_on_grid(const SeedSolution& seed, const Grid& grid);

/// gamma0(t; delta) = -(x0'''(t) + delta x0(t)) / x0'(t): the unique
/// coefficient making the seed a solution. Throws SingularityError when
/// x0'(t) is below threshold.
double gamma_from_seed(const SeedSolution& seed, double t);

/// gamma0 as a function (value analytic, higher derivatives by finite
/// differences).
ScalarFunction gamma_function(const SeedSolution& seed);

/// w'' + p(t) w' + q(t) w = 0 obtained from the substitution u = x0 int w:
/// p = 3 x0'/x0, q = 3 x0''/x0 + gamma0.
struct ReducedODE {
  ScalarFunction p, q;
  Interval domain;
};

ReducedODE reduce(const SeedSolution& seed);

/// Integrates the reduced equation from canonical initial conditions (1,0)
/// and (0,1) at the grid start and checks the pair stays independent.
std::pair<ScalarFunction, ScalarFunction> solve_reduced(const ReducedODE& red,
                                                        const Grid& grid);

/// Assembles the fundamental set x = x0, y = x0 int w1, z = x0 int w2 with
/// derivatives from the product rule (quadrature lower limits at the grid
/// start).
FundamentalSet compose(const SeedSolution& seed, const ScalarFunction& w1,
                       const ScalarFunction& w2, const Grid& grid);

/// Full pipeline: gamma0, reduce, integrate, compose.
struct ReductionResult {
  FundamentalSet set;
  SideCondition side;
};
ReductionResult run_reduction(const SeedSolution& seed, const Grid& grid);

/// Least-squares change of basis: coefficients A with source * A ~ target,
/// column-equilibrated normal equations. residual is the max pointwise
/// misfit normalized by 1 + max |target|; cond estimates the equilibrated
/// Gram matrix's conditioning.
struct BasisFit {
  Mat3 coeffs;
  double residual = 0.0;
  double cond = 0.0;
};
BasisFit fit_change_of_basis(const FundamentalSet& source,
                             const FundamentalSet& target, const Grid& grid);

}  // namespace wronskia
