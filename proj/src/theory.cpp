#include "opdyn/theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace opdyn::theory {

double drift_f(double phi, double p) {
  const double q = 1.0 - p;
  return 2.0 * q * q * phi * phi - q * (3.0 - p) * phi + 1.0;
}

double drift_g(double phi, double p) { return phi * (1.0 - drift_f(phi, p)); }

double phi_bar(double p) {
  if (p >= 1.0)
    throw std::invalid_argument("phi_bar: requires bias p < 1");
  return (3.0 - p) / (4.0 * (1.0 - p));
}

DriftRoots drift_roots(double p) {
  const double disc = p * p - 6.0 * p + 1.0;
  if (disc < 0.0 || p >= 1.0) return {};
  const double s = std::sqrt(disc);
  const double denom = 4.0 * (1.0 - p);
  return {true, (3.0 - p - s) / denom, (3.0 - p + s) / denom};
}

double metastability_ceiling(double p) {
  if (p < 0.0 || p >= p_star)
    throw std::invalid_argument(
        "metastability_ceiling: defined only for 0 <= p < p_star");
  return (1.0 - 3.0 * p) / (4.0 * (1.0 - p));
}

double q_from_cr(double c_r) {
  if (c_r < 0.0) throw std::invalid_argument("q_from_cr: negative robustness");
  if (std::isinf(c_r)) return 0.0;
  return 1.0 / (1.0 + c_r);
}

double q_from_cd(double c_d) {
  if (c_d < 0.0) throw std::invalid_argument("q_from_cd: negative dominance");
  if (std::isinf(c_d)) return 1.0;
  return c_d / (1.0 + c_d);
}

RegimePrediction predict_regime(double c_r, double c_d, double n,
                                double epsilon, double delta,
                                CoreBoundVariant variant) {
  if (n <= 1.0) throw std::invalid_argument("predict_regime: n must exceed 1");
  RegimePrediction out;
  out.dominance_gap = c_d - c_star;
  const double exponent = variant == CoreBoundVariant::kMainText
                              ? (epsilon + delta) / 2.0
                              : epsilon / 2.0 + delta;
  if (c_d > c_star) {
    out.robustness_requirement = std::pow(n, exponent);
    out.robustness_gap = c_r - out.robustness_requirement;
    out.regime = c_r > out.robustness_requirement
                     ? Regime::kConsensusPredicted
                     : Regime::kOutsideTheory;
  } else if (c_d < c_star) {
    out.robustness_requirement = min_metastable_robustness;
    out.robustness_gap = c_r - out.robustness_requirement;
    out.regime = c_r > out.robustness_requirement
                     ? Regime::kMetastabilityPredicted
                     : Regime::kOutsideTheory;
  } else {
    // Exactly critical dominance: neither sufficient condition applies.
    out.robustness_requirement = std::numeric_limits<double>::quiet_NaN();
    out.robustness_gap = std::numeric_limits<double>::quiet_NaN();
    out.regime = Regime::kOutsideTheory;
  }
  return out;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kConsensusPredicted:
      return "consensus-predicted";
    case Regime::kMetastabilityPredicted:
      return "metastability-predicted";
    case Regime::kOutsideTheory:
      return "outside-theory";
  }
  return "unknown";
}

}  // namespace opdyn::theory
