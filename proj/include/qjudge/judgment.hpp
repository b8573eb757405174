#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qjudge/event.hpp"
#include "qjudge/linalg.hpp"

namespace qjudge {

/// Unit vector encoding the judged state. Invariant: norm(vec) = 1 within
/// 1e-9; construct through make_state to normalize arbitrary input.
struct StateVector {
    Vec vec;
};

/// Throws ZeroVector if raw is numerically zero.
StateVector make_state(const Vec& raw);

struct SequenceStep {
    std::string event;
    double probability;  // conditional on the previous steps
};

/// Result of judging an ordered list of events. probability equals the
/// product of the trace's step probabilities within 1e-12; final_state is
/// present iff probability > EPS_ZERO.
struct SequenceOutcome {
    double probability = 0.0;
    std::optional<StateVector> final_state;
    std::vector<SequenceStep> trace;
};

/// ||P_e psi||^2, clamped to [0,1]. Throws DimensionMismatch.
double born_probability(const StateVector& psi, const Event& e);

/// Post-judgment state normalize(P_e psi). Throws ZeroProbabilityCollapse if
/// the event's probability is <= EPS_ZERO, DimensionMismatch.
StateVector collapse(const StateVector& psi, const Event& e);

/// Probability of affirming every event in order: ||P_en ... P_e1 psi||^2.
/// Each trace entry records that step's conditional probability. A step that
/// annihilates the state zeroes the overall probability and every remaining
/// step records 0; the sequence never throws on that path.
SequenceOutcome sequential_probability(const StateVector& psi, const std::vector<Event>& events);

/// P(first then second) - P(second). A positive value certifies a
/// conjunction-fallacy configuration. Throws DimensionMismatch.
double conjunction_fallacy_gap(const StateVector& psi, const Event& first, const Event& second);

/// 1 - P(~first then ~second): disjunction by De Morgan over the sequential
/// conjunction of complements. Throws FullSpace if either event spans the
/// whole space.
double sequential_disjunction(const StateVector& psi, const Event& first, const Event& second);

/// P(a then b) - P(b then a). Zero within 1e-9 whenever a and b commute.
double order_effect(const StateVector& psi, const Event& a, const Event& b);

/// P(target) - [P(partition then target) + P(~partition then target)]: the
/// deviation from the law of total probability. Zero within 1e-9 for
/// compatible pairs. Throws FullSpace if partition spans the whole space.
double interference_term(const StateVector& psi, const Event& partition, const Event& target);

/// Sim(a,b) = P(a then b): project onto a first, then onto b. Asymmetric in
/// general; a lower-dimensional first event preserves less of the state.
double similarity(const StateVector& psi, const Event& a, const Event& b);

}  // namespace qjudge
