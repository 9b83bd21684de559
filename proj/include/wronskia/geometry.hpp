#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wronskia/grid.hpp"
#include "wronskia/linalg.hpp"
#include "wronskia/wronskian.hpp"

namespace wronskia {

/// A space curve sampled on a uniform grid: position columns plus derivative
/// columns through order 3 per coordinate. col[c][k][i] is the k-th
/// derivative of coordinate c at grid point i.
///
/// When the derivative columns were filled by finite differences instead of
/// supplied analytically, edge_margin marks how many points at each end
/// carry one-sided stencils; verdicts exclude them.
struct SampledCurve {
  Grid grid;
  std::array<std::array<std::vector<double>, 4>, 3> col;
  int edge_margin = 0;
  std::string provenance;

  int n() const { return grid.n(); }
  Vec3 position(int i) const { return at(0, i); }
  Vec3 at(int k, int i) const {
    const auto u = static_cast<size_t>(i);
    const auto d = static_cast<size_t>(k);
    return {col[0][d][u], col[1][d][u], col[2][d][u]};
  }
};

/// Evaluates a fundamental set on the grid, derivative columns analytic.
SampledCurve sample_set(const FundamentalSet& set, const Grid& grid,
                        std::string provenance, bool parallel = true);

/// Builds a curve from bare position columns; derivative columns are filled
/// with O(h^2) stencils (central inside, one-sided at the ends) and
/// edge_margin is set to 2. Requires n >= 7.
SampledCurve curve_from_positions(const Grid& grid, std::vector<double> x,
                                  std::vector<double> y, std::vector<double> z,
                                  std::string provenance);

// ---- pointwise invariants -------------------------------------------------

/// k = |r' x r''| / |r'|^3. Throws std::domain_error when |r'| < 1e-12.
double curvature(const SampledCurve& c, int i);

/// tau = <r', r'', r'''> / |r' x r''|^2 (mixed product over squared cross
/// norm; same determinant kernel as the derivative Wronskian). Throws
/// std::domain_error when |r' x r''| < 1e-12.
double torsion(const SampledCurve& c, int i);

/// Distance from the origin to the osculating plane: |W| / |r' x r''|.
/// The signed value W / |r' x r''| is what the certifier stores.
double osculating_distance(const SampledCurve& c, int i);

/// Per-point Frenet data over the whole grid. ok[i] records whether the
/// regularity and nonvanishing-Wronskian screens passed at i.
struct FrenetData {
  std::vector<double> k, tau, d;        // curvature, torsion, |distance|
  std::vector<double> W, W_der;         // both Wronskians from the columns
  std::vector<double> speed, cross_norm;
  std::vector<unsigned char> ok;
};

/// OpenMP kernel; compute_frenet_serial is the reference implementation the
/// tests compare against (outputs are bitwise identical).
FrenetData compute_frenet(const SampledCurve& c);
FrenetData compute_frenet_serial(const SampledCurve& c);

// ---- certification ----------------------------------------------------------

/// Everything the certifier measured, plus pass/fail per criterion.
/// Verdict keys: "screens", "alpha_constant", "wronskian_constant",
/// "tzitzeica_relation", and with delta known "alpha_formula_match"; each
/// surface check adds "surface:<name>".
struct TzitzeicaReport {
  std::string provenance;
  std::optional<double> delta;
  double W0 = 0.0, W_std = 0.0;
  double alpha_est = 0.0, alpha_std = 0.0;
  std::optional<double> alpha_formula;
  double relation_residual = 0.0;
  double compat_residual = 0.0;  // |alpha_est * W0 + delta| when delta known
  double certified_fraction = 0.0;
  std::vector<std::pair<std::string, double>> surface_residuals;
  std::map<std::string, bool> verdict;
  double tol = 0.0;
  std::string failure_reason;

  bool pass() const;
};

/// Screens the curve (>= 90% of non-edge points must pass), averages the
/// per-point ratio tau/d^2 with an order-independent reduction, and checks
/// the curve-constant criteria at the given relative tolerance.
TzitzeicaReport certify_tzitzeica(const SampledCurve& c,
                                  std::optional<double> delta, double tol);

// ---- surfaces and maps ------------------------------------------------------

/// Implicit surfaces the paper-level examples live on.
const std::map<std::string, std::string>& surface_catalog();  // name -> formula text

/// Max over the grid of |F(x,y,z)| for the named implicit form.
/// Throws std::invalid_argument for unknown names.
double surface_residual(const SampledCurve& c, const std::string& surface);

/// Applies a linear map to positions and derivative columns. The matrix must
/// have |det| > 1e-12. W columns scale by det(map).
SampledCurve affine_map(const SampledCurve& c, const Mat3& map);

}  // namespace wronskia
