#include "wronskia/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wronskia {

Grid Grid::uniform(double t0, double t1, int n) {
  if (!(t1 > t0))
    throw std::invalid_argument("grid: t1 must exceed t0");
  if (n < 5)
    throw std::invalid_argument("grid: need at least 5 points, got " +
                                std::to_string(n));
  Grid g;
  g.t0_ = t0;
  g.t1_ = t1;
  g.n_ = n;
  g.h_ = (t1 - t0) / (n - 1);
  g.points_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    g.points_[static_cast<size_t>(i)] = t0 + g.h_ * i;
  g.points_.back() = t1;
  return g;
}

Grid Grid::from_points(std::vector<double> points) {
  const int n = static_cast<int>(points.size());
  if (n < 5)
    throw std::invalid_argument("grid: need at least 5 points, got " +
                                std::to_string(n));
  const double t0 = points.front();
  const double t1 = points.back();
  if (!(t1 > t0))
    throw std::invalid_argument("grid: points must increase");
  const double h = (t1 - t0) / (n - 1);
  for (int i = 1; i < n; ++i) {
    const double step = points[static_cast<size_t>(i)] - points[static_cast<size_t>(i - 1)];
    if (!(step > 0.0))
      throw std::invalid_argument("grid: points must be strictly increasing at index " +
                                  std::to_string(i));
    if (std::abs(step - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw std::invalid_argument("grid: non-uniform spacing at index " +
                                  std::to_string(i));
  }
  Grid g;
  g.t0_ = t0;
  g.t1_ = t1;
  g.n_ = n;
  g.h_ = h;
  g.points_ = std::move(points);
  return g;
}

}  // namespace wronskia
