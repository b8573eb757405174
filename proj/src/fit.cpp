#include "qjudge/fit.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "qjudge/kernels.hpp"

namespace qjudge {

namespace {

double deg2rad(double d) { return d * (std::numbers::pi / 180.0); }

double mod180(double d) {
    double r = std::fmod(d, 180.0);
    if (r < 0.0) r += 180.0;
    return r;
}

// Mirrors the arithmetic of the fit_residual_row kernel exactly (same
// expression shapes, same order), so a residual computed here is bitwise
// reproducible from the scalar grid scan.
std::array<double, 3> predict(double cos_f, double sin_f, double cos_psi, double sin_psi) {
    const double c = cos_psi * cos_f + sin_psi * sin_f;
    const double p1 = c * c;
    return {cos_psi * cos_psi, p1, p1 * (cos_f * cos_f)};
}

double residual_at(const Targets2D& t, double cos_f, double sin_f, double cos_psi,
                   double sin_psi) {
    const std::array<double, 3> p = predict(cos_f, sin_f, cos_psi, sin_psi);
    const double d0 = p[0] - t.p_second;
    const double d1 = p[1] - t.p_first;
    const double d2 = p[2] - t.p_seq;
    return t.weights[0] * d0 * d0 + t.weights[1] * d1 * d1 + t.weights[2] * d2 * d2;
}

struct Best {
    double theta_f = 0.0;
    double theta_psi = 0.0;
    double value = std::numeric_limits<double>::infinity();

    // Strict improvement only: ties keep the incumbent, which keeps the
    // search deterministic and the result anchored to the grid tie-break.
    void offer(double tf, double tp, double v) {
        if (v < value) {
            theta_f = tf;
            theta_psi = tp;
            value = v;
        }
    }
};

// Golden-section minimization of the residual along one coordinate over
// [center-span, center+span], shrinking until the bracket is narrower than
// tol. Every evaluated point is offered to the incumbent.
void golden_line(const Targets2D& t, Best& best, bool vary_f, double center, double span,
                 double tol) {
    constexpr double invphi = 0.6180339887498949;  // (sqrt(5)-1)/2
    const double fixed_f = best.theta_f;
    const double fixed_psi = best.theta_psi;

    const auto eval = [&](double x) {
        const double tf = vary_f ? x : fixed_f;
        const double tp = vary_f ? fixed_psi : x;
        const double v = residual_2d(t, tf, tp);
        best.offer(tf, tp, v);
        return v;
    };

    double a = center - span;
    double b = center + span;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = eval(x1);
    double f2 = eval(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = eval(x2);
        }
    }
}

}  // namespace

std::array<double, 3> forward_2d(double theta_f, double theta_psi) {
    const double rf = deg2rad(theta_f);
    const double rp = deg2rad(theta_psi);
    return predict(std::cos(rf), std::sin(rf), std::cos(rp), std::sin(rp));
}

double residual_2d(const Targets2D& targets, double theta_f, double theta_psi) {
    const double rf = deg2rad(theta_f);
    const double rp = deg2rad(theta_psi);
    return residual_at(targets, std::cos(rf), std::sin(rf), std::cos(rp), std::sin(rp));
}

FitResult fit_2d(const Targets2D& targets, double grid_step, double refine_tol) {
    // Grid angles i*step for i*step < 180; the epsilon guard keeps a step
    // like 0.3 from emitting a node at 180 through accumulated roundoff.
    std::vector<double> angle;
    for (std::size_t i = 0; static_cast<double>(i) * grid_step < 180.0 - grid_step * 1e-9; ++i) {
        angle.push_back(static_cast<double>(i) * grid_step);
    }
    const std::size_t n = angle.size();
    std::vector<double> cos_tab(n), sin_tab(n);
    for (std::size_t i = 0; i < n; ++i) {
        cos_tab[i] = std::cos(deg2rad(angle[i]));
        sin_tab[i] = std::sin(deg2rad(angle[i]));
    }

    const double target[3] = {targets.p_second, targets.p_first, targets.p_seq};
    const double weight[3] = {targets.weights[0], targets.weights[1], targets.weights[2]};

    // Scan theta_f in the outer loop and theta_psi inner, keeping the first
    // strict minimum; that realizes the smaller-theta_f-then-smaller-
    // theta_psi tie-break. Row evaluation goes through the kernel table; the
    // row is then reduced in index order, identical to a sequential scan.
    std::size_t best_fi = 0, best_pj = 0;
    double best_grid = std::numeric_limits<double>::infinity();
    std::vector<double> row(n);
    const kernels::KernelTable& k = kernels::active();
    for (std::size_t fi = 0; fi < n; ++fi) {
        k.fit_residual_row(cos_tab.data(), sin_tab.data(), n, cos_tab[fi], sin_tab[fi], target,
                           weight, row.data());
        for (std::size_t pj = 0; pj < n; ++pj) {
            if (row[pj] < best_grid) {
                best_grid = row[pj];
                best_fi = fi;
                best_pj = pj;
            }
        }
    }

    // Refinement restarts from the best cell with the residual recomputed in
    // the scalar form, so the incumbent value is reproducible from the
    // reported angles no matter which kernel backend scanned the grid.
    Best best;
    best.offer(angle[best_fi], angle[best_pj], residual_2d(targets, angle[best_fi], angle[best_pj]));

    for (int cycle = 0; cycle < 100; ++cycle) {
        const double tf0 = best.theta_f;
        const double tp0 = best.theta_psi;
        golden_line(targets, best, true, best.theta_f, grid_step, refine_tol);
        golden_line(targets, best, false, best.theta_psi, grid_step, refine_tol);
        if (std::abs(best.theta_f - tf0) < refine_tol && std::abs(best.theta_psi - tp0) < refine_tol) {
            break;
        }
    }

    double tf = mod180(best.theta_f);
    double tp = mod180(best.theta_psi);
    if (tf > 90.0) {
        // Reflection twin (-theta_f, -theta_psi) mod 180 predicts the same
        // three observables; report the representative with theta_f in [0,90].
        tf = 180.0 - tf;
        tp = tp == 0.0 ? 0.0 : mod180(180.0 - tp);
    }

    FitResult out;
    out.theta_f = tf;
    out.theta_psi = tp;
    out.residual = residual_2d(targets, tf, tp);
    out.predicted = forward_2d(tf, tp);
    return out;
}

}  // namespace qjudge
