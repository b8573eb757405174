#pragma once

#include <array>
#include <string>

#include "qjudge/event.hpp"
#include "qjudge/judgment.hpp"

namespace qjudge {

/// Joint probability table over two compatible events. Rows index {a, ~a},
/// columns {b, ~b}. Cells are nonnegative and sum to 1 within 1e-9; this
/// object exists exactly when a genuine joint distribution does.
struct JointDistribution {
    std::array<std::string, 2> labels;
    std::array<std::array<double, 2>, 2> cells;
};

/// cells[x][y] = ||P_y P_x psi||^2 over x in {a,~a}, y in {b,~b}. Commuting
/// projectors make this order-independent. Throws IncompatibleEvents if the
/// events fail the commutator check, FullSpace if either lacks a proper
/// complement, InternalInconsistency if any cell is below -1e-12.
JointDistribution joint_distribution(const StateVector& psi, const Event& a, const Event& b);

/// Executable witness of the classical bound the conjunction fallacy
/// violates: P(a and b) <= min(P(a), P(b)) + 1e-9 for compatible events.
/// Expected to return true on every valid input. Throws IncompatibleEvents.
bool classical_conjunction_bound_check(const StateVector& psi, const Event& a, const Event& b);

}  // namespace qjudge
