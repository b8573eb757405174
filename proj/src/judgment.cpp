#include "qjudge/judgment.hpp"

#include <algorithm>
#include <string>

namespace qjudge {

namespace {

void require_dim(const StateVector& psi, const Event& e, const char* what) {
    if (psi.vec.dim() != e.subspace.ambient_dim) {
        throw DimensionMismatch(std::string(what) + ": state dim " +
                                std::to_string(psi.vec.dim()) + " vs event " + e.name + " dim " +
                                std::to_string(e.subspace.ambient_dim));
    }
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

StateVector make_state(const Vec& raw) { return StateVector{normalize(raw)}; }

double born_probability(const StateVector& psi, const Event& e) {
    require_dim(psi, e, "born_probability");
    return clamp01(norm_squared(apply(e.projector, psi.vec)));
}

StateVector collapse(const StateVector& psi, const Event& e) {
    require_dim(psi, e, "collapse");
    Vec projected = apply(e.projector, psi.vec);
    if (norm_squared(projected) <= EPS_ZERO) {
        throw ZeroProbabilityCollapse("collapse: state is orthogonal to event " + e.name);
    }
    return StateVector{normalize(projected)};
}

SequenceOutcome sequential_probability(const StateVector& psi, const std::vector<Event>& events) {
    for (const Event& e : events) require_dim(psi, e, "sequential_probability");

    SequenceOutcome out;
    out.trace.reserve(events.size());

    // The state is chained unnormalized; each step's conditional probability
    // is the ratio of consecutive squared lengths, so the product telescopes
    // to the squared length of the fully projected vector.
    Vec v = psi.vec;
    double q_prev = 1.0;
    double prob = 1.0;
    bool annihilated = false;
    for (const Event& e : events) {
        if (annihilated) {
            out.trace.push_back({e.name, 0.0});
            continue;
        }
        v = apply(e.projector, v);
        const double q = norm_squared(v);
        const double step = clamp01(q / q_prev);
        prob *= step;
        out.trace.push_back({e.name, step});
        q_prev = q;
        if (q <= EPS_ZERO) {
            annihilated = true;
            prob = 0.0;
        }
    }
    out.probability = prob;
    if (!annihilated && prob > EPS_ZERO) {
        out.final_state = StateVector{normalize(v)};
    }
    return out;
}

double conjunction_fallacy_gap(const StateVector& psi, const Event& first, const Event& second) {
    return sequential_probability(psi, {first, second}).probability -
           born_probability(psi, second);
}

double sequential_disjunction(const StateVector& psi, const Event& first, const Event& second) {
    return 1.0 - sequential_probability(psi, {complement(first), complement(second)}).probability;
}

double order_effect(const StateVector& psi, const Event& a, const Event& b) {
    return sequential_probability(psi, {a, b}).probability -
           sequential_probability(psi, {b, a}).probability;
}

double interference_term(const StateVector& psi, const Event& partition, const Event& target) {
    const double direct = born_probability(psi, target);
    const double through = sequential_probability(psi, {partition, target}).probability;
    const double around = sequential_probability(psi, {complement(partition), target}).probability;
    return direct - (through + around);
}

double similarity(const StateVector& psi, const Event& a, const Event& b) {
    return sequential_probability(psi, {a, b}).probability;
}

}  // namespace qjudge
