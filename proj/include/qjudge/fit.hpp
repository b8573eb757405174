#pragma once

#include <array>

namespace qjudge {

/// Observed probabilities the 2D geometry is fit to, plus per-term weights.
/// p_second is the direct probability of the second event (the one judged
/// unlikely), p_first the direct probability of the first, p_seq the
/// sequential "first then second" probability.
struct Targets2D {
    double p_second = 0.0;
    double p_first = 0.0;
    double p_seq = 0.0;
    std::array<double, 3> weights{1.0, 1.0, 1.0};
};

/// Recovered geometry. Angles are degrees in [0,180) with theta_f reported
/// in the canonical [0,90] representative of the reflection symmetry
/// (theta_f, theta_psi) -> (-theta_f, -theta_psi) mod 180. residual and
/// predicted are recomputed at the reported angles, so residual_2d and
/// forward_2d reproduce them exactly.
struct FitResult {
    double theta_f = 0.0;
    double theta_psi = 0.0;
    double residual = 0.0;
    std::array<double, 3> predicted{};
};

/// Closed form of the 2D real model with the second event's axis fixed at 0
/// degrees, the first event's axis at theta_f and the state at theta_psi:
/// returns { cos^2(theta_psi), cos^2(theta_psi - theta_f),
///           cos^2(theta_psi - theta_f) * cos^2(theta_f) }.
/// Angles in degrees; cos^2 makes every term periodic mod 180.
std::array<double, 3> forward_2d(double theta_f, double theta_psi);

/// Weighted sum of squared differences between forward_2d and the targets.
double residual_2d(const Targets2D& targets, double theta_f, double theta_psi);

/// Exhaustive grid scan of [0,180)^2 at grid_step degrees, then coordinate
/// cyclic golden-section refinement around the best cell until neither
/// coordinate moves by refine_tol. Deterministic: grid ties break toward
/// smaller theta_f, then smaller theta_psi, and refinement only accepts
/// strictly better points.
FitResult fit_2d(const Targets2D& targets, double grid_step = 1.0, double refine_tol = 1e-4);

}  // namespace qjudge
