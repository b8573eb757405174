#include "qjudge/classical.hpp"

#include <algorithm>

namespace qjudge {

namespace {

// Cells are squared norms, so meaningful negativity signals a violated
// compatibility precondition rather than roundoff.
double clamp_cell(double x) {
    if (x < -1e-12) {
        throw InternalInconsistency("joint_distribution: cell " + std::to_string(x) +
                                    " is negative beyond roundoff");
    }
    return std::max(x, 0.0);
}

}  // namespace

JointDistribution joint_distribution(const StateVector& psi, const Event& a, const Event& b) {
    if (!is_compatible(a, b, EPS_COMMUTE)) {
        throw IncompatibleEvents("joint_distribution: " + a.name + " and " + b.name +
                                 " do not commute; no joint distribution exists");
    }
    const Event not_a = complement(a);
    const Event not_b = complement(b);
    const Event* rows[2] = {&a, &not_a};
    const Event* cols[2] = {&b, &not_b};

    JointDistribution out;
    out.labels = {a.name, b.name};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const Vec after_row = apply(rows[x]->projector, psi.vec);
            const Vec after_both = apply(cols[y]->projector, after_row);
            out.cells[x][y] = clamp_cell(norm_squared(after_both));
        }
    }
    return out;
}

bool classical_conjunction_bound_check(const StateVector& psi, const Event& a, const Event& b) {
    if (!is_compatible(a, b, EPS_COMMUTE)) {
        throw IncompatibleEvents("classical_conjunction_bound_check: " + a.name + " and " +
                                 b.name + " do not commute");
    }
    // Computed directly from the sequential form (equal to the joint cell for
    // commuting projectors) so that full-space events need no complement.
    const double p_ab = sequential_probability(psi, {a, b}).probability;
    const double bound = std::min(born_probability(psi, a), born_probability(psi, b));
    return p_ab <= bound + 1e-9;
}

}  // namespace qjudge
