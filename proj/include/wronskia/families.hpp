#pragma once

#include <array>
#include <string>
#include <variant>

#include "wronskia/grid.hpp"
#include "wronskia/wronskian.hpp"

namespace wronskia {

/// sign(x) * |x|^(1/3). The real branch everywhere; negative arguments give
/// negative roots.
double real_cbrt(double x);

enum class CubicKind {
  three_distinct_real,
  repeated_real,
  one_real_complex_pair,
};

/// Root structure of v^3 + gamma_tilde v + delta = 0.
///
/// roots holds {v1, v2, v3} for the real cases (descending for distinct
/// roots, {v, v, -2v} for the repeated case) and {m, n, v3} for the complex
/// case, where the conjugate pair is m +/- i n and v3 = -2m.
struct CubicClassification {
  double gamma_tilde = 0.0;
  double delta = 0.0;
  double D = 0.0;  // -4 gamma_tilde^3 - 27 delta^2
  CubicKind kind = CubicKind::three_distinct_real;
  std::array<double, 3> roots{};
};

/// Classifies by the sign of D (scaled tolerance around zero) and computes
/// roots by the trigonometric/Cardano formulas with one Newton polish step.
/// delta must be nonzero.
CubicClassification classify_cubic(double gamma_tilde, double delta);

// ---- closed-form solution families ---------------------------------------

struct ExpTrigSpec { double delta; };                 // gamma = 0
struct CubicDistinctSpec { double v1; double v2; };   // gamma constant, D > 0
struct CubicRepeatedSpec { double v1; };              // gamma constant, D = 0
struct CubicComplexSpec { double m; double n; };      // gamma constant, D < 0
struct AirySpec { double delta; };                    // gamma = delta t

using FamilySpec = std::variant<ExpTrigSpec, CubicDistinctSpec, CubicRepeatedSpec,
                                CubicComplexSpec, AirySpec>;

struct Family {
  FundamentalSet set;
  SideCondition side;
  double expected_W = 0.0;  // closed-form Wronskian of the ordered triple
  std::string name;
};

/// Builds the ordered solution triple of the chosen family together with its
/// side condition and closed-form Wronskian. The grid fixes the domain and
/// the lower limits of the quadratures in the Airy third member
/// z = pi delta^(-1/3) (x int y - y int x).
/// Throws std::invalid_argument when the spec parameters are excluded
/// (within 1e-9 of a degenerate line, or delta = 0).
Family build_family(const FamilySpec& spec, const Grid& grid);

/// The closed-form curve x = t^(-3/2), y = (1 - 2 t^(-3/2)) e^(t^(3/2)),
/// z = (1 + 2 t^(-3/2)) e^(-t^(3/2)) with delta = -27/8 and its side
/// condition; W = 27/4. Defined for t > 0 (interesting for t > 1).
Family example4_family(const Grid& grid);

}  // namespace wronskia
