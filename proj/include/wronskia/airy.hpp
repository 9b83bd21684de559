#pragma once

namespace wronskia {

/// Ai, Bi and their first derivatives at a common argument.
/// The pair Wronskian ai*bi_prime - ai_prime*bi equals 1/pi.
struct AiryValue {
  double ai = 0.0;
  double bi = 0.0;
  double ai_prime = 0.0;
  double bi_prime = 0.0;

  double pair_wronskian() const { return ai * bi_prime - ai_prime * bi; }
};

/// Evaluates the Airy pair for |x| <= 12.
///
/// Maclaurin series about 0 for |x| <= 6 (terms added until the relative
/// term drops below 1e-16); outside that, RK4 continuation of y'' = x y
/// starting from the series values at +/-6. Asymptotic expansions are
/// deliberately not used, so one verifiable code path covers the range.
/// Throws std::domain_error for |x| > 12.
AiryValue airy(double x);

}  // namespace wronskia
