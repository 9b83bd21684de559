#pragma once

#include <functional>
#include <vector>

#include "wronskia/grid.hpp"

namespace wronskia {

/// A scalar function of t carrying its derivatives up to order 3.
///
/// deriv(0, t) == eval(t) by contract. The evaluator is shared and immutable,
/// so copies are cheap and instances are safe to use from multiple threads.
class ScalarFunction {
 public:
  /// evaluator(k, t) returns the k-th derivative at t, 0 <= k <= 3.
  using Evaluator = std::function<double(int, double)>;

  ScalarFunction() = default;
  ScalarFunction(Interval domain, Evaluator ev)
      : domain_(domain), eval_(std::move(ev)) {}

  double operator()(double t) const { return eval_(0, t); }
  double eval(double t) const { return eval_(0, t); }
  double deriv(int k, double t) const;

  const Interval& domain() const { return domain_; }
  explicit operator bool() const { return static_cast<bool>(eval_); }

  /// Same function restricted to a smaller interval.
  ScalarFunction restricted(Interval dom) const { return {dom, eval_}; }

 private:
  Interval domain_;
  Evaluator eval_;
};

// ---- closed-form constructors ------------------------------------------

ScalarFunction constant(double c);

/// c0 + c1 t + c2 t^2 + ...
ScalarFunction polynomial(std::vector<double> coeffs);

/// coef * t^p. Domain is the whole line when p is a nonnegative integer,
/// otherwise t > 0.
ScalarFunction power_law(double coef, double p);

/// e^{v t}
ScalarFunction exponential(double v);

/// e^{a t} cos(b t) and e^{a t} sin(b t); k-th derivatives in closed form
/// via R^k e^{a t} cos(b t + k theta), R = hypot(a,b), theta = atan2(b,a).
ScalarFunction exp_cos(double a, double b);
ScalarFunction exp_sin(double a, double b);

// ---- combinators (derivative rules applied exactly, to order 3) ---------

ScalarFunction scale(double a, const ScalarFunction& f);
ScalarFunction lin_comb(double a, const ScalarFunction& f,
                        double b, const ScalarFunction& g);
ScalarFunction product(const ScalarFunction& f, const ScalarFunction& g);
/// e^{g(t)}; needs g's derivatives to order 3.
ScalarFunction exp_of(const ScalarFunction& g);

/// Analytic value with derivatives delegated to central finite differences
/// of the value itself. For coefficient functions whose higher derivatives
/// have no closed form.
ScalarFunction value_with_fd_derivs(Interval domain,
                                    std::function<double(double)> f);

/// Interpolates sampled values on a uniform grid; derivative tables are
/// filled by O(h^2) finite-difference stencils (one-sided at the edges).
/// Requires grid.n() >= 7.
ScalarFunction from_samples(const Grid& grid, std::vector<double> values);

}  // namespace wronskia
