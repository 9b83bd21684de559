#pragma once

#include <functional>
#include <string>

#include "wronskia/grid.hpp"
#include "wronskia/scalar_function.hpp"

namespace wronskia {

/// Coefficients of the side condition u''' + beta(t) u'' + gamma(t) u' +
/// delta u = 0. delta must be nonzero.
struct SideCondition {
  ScalarFunction beta;
  ScalarFunction gamma;
  double delta = 0.0;

  SideCondition() = default;
  SideCondition(ScalarFunction beta_fn, ScalarFunction gamma_fn, double d);
};

/// Ordered triple of functions claimed linearly independent on a common
/// interval. The ordering is significant: swapping members flips the sign
/// of the Wronskian and hence of the curve constant derived from it.
struct FundamentalSet {
  ScalarFunction x, y, z;
  Interval domain;

  const ScalarFunction& member(int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

/// A relation F(W(x,y,z), W(x',y',z')) = 0 between the two Wronskians,
/// kept as its residual function.
struct WronskianRelation {
  std::function<double(double w_pos, double w_der)> residual;

  /// Substitutes w_der = -delta * w_pos: the one-variable compatibility
  /// residual G(C0; delta).
  std::function<double(double)> reduced(double delta) const {
    auto r = residual;
    return [r, delta](double w) { return r(w, -delta * w); };
  }
};

/// W' - alpha * W^2 = 0, the curve-constant form.
WronskianRelation tzitzeica_relation(double alpha);

/// 3x3 Wronskian of (f, g, h): rows are values, first and second derivatives.
double wronskian3(const ScalarFunction& f, const ScalarFunction& g,
                  const ScalarFunction& h, double t);

/// Wronskian of the first derivatives: rows are first, second and third
/// derivatives.
double wronskian3_deriv(const ScalarFunction& f, const ScalarFunction& g,
                        const ScalarFunction& h, double t);

/// Max over the grid of |W(x',y',z') + delta W(x,y,z)| / (1 + |delta W|).
/// Small iff the set solves the side condition's equation.
double check_derivative_relation(const FundamentalSet& set, const SideCondition& sc,
                                 const Grid& grid);

/// Max over interior grid points of |W' + beta W| / (1 + |W|), with W'
/// estimated by central differences of the sampled Wronskian.
double abel_check(const FundamentalSet& set, const SideCondition& sc,
                  const Grid& grid);

/// alpha = -delta / W0. Throws std::domain_error when W0 == 0.
double compatibility_alpha(double W0, double delta);

/// W(x,y,z) sampled at every grid point. `parallel` selects the OpenMP
/// kernel; both fill the same slots and are bitwise identical.
std::vector<double> wronskian_samples(const FundamentalSet& set, const Grid& grid,
                                      bool parallel = true);
std::vector<double> wronskian_deriv_samples(const FundamentalSet& set,
                                            const Grid& grid, bool parallel = true);

/// Nonvanishing screen for both Wronskians over the grid, threshold
/// 1e-12 * (1 + max row norm) per point.
struct Condition3Report {
  bool ok = false;
  double min_w_margin = 0.0;      // min |W| / threshold over grid
  double min_wder_margin = 0.0;   // same for W(x',y',z')
  double worst_t = 0.0;
};
Condition3Report check_condition3(const FundamentalSet& set, const Grid& grid);

}  // namespace wronskia
