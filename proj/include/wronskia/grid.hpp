#pragma once

#include <limits>
#include <vector>

namespace wronskia {

/// Closed interval of admissible arguments.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double t) const { return lo <= t && t <= hi; }

  static Interval whole_line() { return {}; }
  /// Positive axis, excluding 0 (smallest normal double as left end).
  static Interval positive() { return {std::numeric_limits<double>::min(),
                                       std::numeric_limits<double>::infinity()}; }

  Interval intersect(const Interval& o) const {
    return {lo > o.lo ? lo : o.lo, hi < o.hi ? hi : o.hi};
  }
};

/// Uniform grid of n points on [t0, t1], endpoints included.
/// n >= 5 so finite-difference stencils always fit.
class Grid {
 public:
  static Grid uniform(double t0, double t1, int n);
  /// Adopts externally supplied points; they must be strictly increasing and
  /// uniformly spaced to relative tolerance 1e-9.
  static Grid from_points(std::vector<double> points);

  double t0() const { return t0_; }
  double t1() const { return t1_; }
  int n() const { return n_; }
  double h() const { return h_; }
  const std::vector<double>& points() const { return points_; }
  double operator[](int i) const { return points_[static_cast<size_t>(i)]; }

  Interval span() const { return {t0_, t1_}; }

 private:
  Grid() = default;
  double t0_ = 0.0, t1_ = 1.0, h_ = 0.0;
  int n_ = 0;
  std::vector<double> points_;
};

}  // namespace wronskia
