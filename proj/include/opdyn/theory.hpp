#pragma once

#include <numbers>
#include <string>

// Closed-form threshold theory for the (biased) 2-Choices dynamics.
//
// With bias p toward blue, a red agent whose neighborhood is a φ-fraction
// red stays red with probability 1 − (p + (1−p)(1−φ))², which expands to the
// drift quadratic f below.  The sign of f over (0, 1] decides the phase:
// strictly positive (p above the critical bias) drives the red side to
// extinction, a sign change (p below it) pins the dynamics at a metastable
// red fraction instead.

namespace opdyn::theory {

// Critical bias: the p at which min f = 0.
inline constexpr double p_star = 3.0 - 2.0 * std::numbers::sqrt2;
// Critical dominance: c_d whose induced bias equals p_star.
inline constexpr double c_star = (std::numbers::sqrt2 - 1.0) / 2.0;
// Empirical dominance threshold used when classifying datasets.
inline constexpr double sigma_empirical = 0.5;
// Metastability needs robustness above 1/c_star ≈ 4.83.
inline constexpr double min_metastable_robustness = 1.0 / c_star;

// Drift quadratic f(φ) = 2(1−p)²φ² − (1−p)(3−p)φ + 1 and the one-round map
// g(φ) = φ(1 − f(φ)) bounding the expected next red fraction.
double drift_f(double phi, double p);
double drift_g(double phi, double p);

// Location of min f: φ̄ = (3−p) / (4(1−p)).  p = 1 is an error (no dynamics
// left to analyze).  φ̄(0) = 3/4.
double phi_bar(double p);

// Roots of f in φ, real exactly when p ≤ p_star.
struct DriftRoots {
  bool real = false;
  double lower = 0.0, upper = 0.0;
};
DriftRoots drift_roots(double p);

// Guaranteed cap on the blue volume fraction while metastable:
// (1 − 3p) / (4(1 − p)), valid for p < p_star; p ≥ p_star is an error
// (no metastable phase exists there).
double metastability_ceiling(double p);

// Effective bias induced by the network structure: the probability a pick
// crosses sides.  For the core q = 1/(1 + c_r); for the periphery
// q = c_d/(1 + c_d).  Infinite c_r gives q = 0.
double q_from_cr(double c_r);
double q_from_cd(double c_d);

// Which bias-bound exponent the core-side size condition uses.
enum class CoreBoundVariant {
  kMainText,  // c_r > n^((ε+δ)/2), giving O(log n) rounds
  kAppendix,  // c_r > n^(ε/2+δ), giving poly(log n) rounds
};

enum class Regime { kConsensusPredicted, kMetastabilityPredicted, kOutsideTheory };

// Prediction plus how far each quantity sits from its threshold (positive
// gap = condition satisfied, magnitude = distance).
struct RegimePrediction {
  Regime regime = Regime::kOutsideTheory;
  double dominance_gap = 0.0;       // c_d − c_star
  double robustness_requirement = 0.0;  // threshold c_r was compared against
  double robustness_gap = 0.0;      // c_r − requirement (inf c_r → inf gap)
};

// Applies the two sufficient conditions:
//   consensus    iff c_d > c_star and c_r > n^exponent (variant above);
//   metastability iff c_d < c_star and c_r > 1/c_star.
// Everything else — including exact threshold equality — is outside the
// theory's reach.  Purely advisory for finite n.
RegimePrediction predict_regime(double c_r, double c_d, double n,
                                double epsilon, double delta,
                                CoreBoundVariant variant = CoreBoundVariant::kMainText);

const char* regime_name(Regime r);

}  // namespace opdyn::theory
