#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "qjudge/event.hpp"
#include "qjudge/judgment.hpp"
#include "qjudge/linalg.hpp"

using namespace qjudge;

namespace {

// Two-outcome frame used throughout: B is the first axis, F sits 45 degrees
// off it, the state sits at a chosen angle. All reference numbers below were
// computed independently from the closed-form geometry and frozen.
Event axis_b() { return event_from_vectors("B", 2, {Vec::real({1, 0})}); }
Event tilted_f() { return event_from_vectors("F", 2, {Vec::real({1, 1})}); }

StateVector state_at_degrees(double deg) {
    const double rad = deg * (std::numbers::pi / 180.0);
    return make_state(Vec::real({std::cos(rad), std::sin(rad)}));
}

struct KoreaFrame {
    Event china;
    Event korea;
    StateVector psi;
};

KoreaFrame korea_frame() {
    return KoreaFrame{
        event_from_vectors("China", 3, {Vec::real({1, 0, 0}), Vec::real({0, 1, 0})}),
        event_from_vectors("Korea", 3, {Vec::real({1, 0, 1})}),
        make_state(Vec::real({1, 1, 1})),
    };
}

}  // namespace

TEST_CASE("born_probability follows the squared projection length") {
    const Event b = axis_b();
    CHECK(born_probability(make_state(Vec::real({1, 0})), b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(born_probability(make_state(Vec::real({0, 1})), b) == 0.0);
    CHECK(born_probability(state_at_degrees(80.0), b) ==
          doctest::Approx(0.03015368960704583).epsilon(1e-9));

    CHECK_THROWS_AS(born_probability(make_state(Vec::real({1, 0, 0})), b), DimensionMismatch);
}

TEST_CASE("born_probability stays in [0,1]" * doctest::description("1000 random cases")) {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + trial % 7;
        const Event e = gen::random_event(rng, dim, "e", true, true);
        const double p = born_probability(gen::random_state(rng, dim), e);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
    }
}

TEST_CASE("collapse renormalizes the projected state") {
    const Event b = axis_b();
    const StateVector after = collapse(make_state(Vec::real({0.6, 0.8})), b);
    CHECK(std::abs(after.vec[0] - cdouble(1, 0)) < 1e-12);
    CHECK(std::abs(after.vec[1]) < 1e-12);

    CHECK_THROWS_AS(collapse(make_state(Vec::real({0, 1})), b), ZeroProbabilityCollapse);
}

TEST_CASE("sequential_probability chains conditional judgments") {
    const Event b = axis_b();
    const Event f = tilted_f();
    const StateVector psi = state_at_degrees(80.0);

    const SequenceOutcome fb = sequential_probability(psi, {f, b});
    CHECK(fb.probability == doctest::Approx(0.3355050358314172).epsilon(1e-9));
    REQUIRE(fb.trace.size() == 2);
    CHECK(fb.trace[0].event == "F");
    CHECK(fb.trace[0].probability == doctest::Approx(0.6710100716628343).epsilon(1e-9));
    CHECK(fb.trace[1].event == "B");
    CHECK(fb.trace[1].probability == doctest::Approx(0.5).epsilon(1e-9));
    REQUIRE(fb.final_state.has_value());
    CHECK(std::abs(fb.final_state->vec[0] - cdouble(1, 0)) < 1e-9);

    const SequenceOutcome single = sequential_probability(psi, {b});
    CHECK(single.probability == doctest::Approx(born_probability(psi, b)).epsilon(1e-12));

    const SequenceOutcome dead = sequential_probability(psi, {f, complement(f), b});
    CHECK(dead.probability == 0.0);
    CHECK_FALSE(dead.final_state.has_value());
    REQUIRE(dead.trace.size() == 3);
    CHECK(dead.trace[2].probability == 0.0);
}

TEST_CASE("sequence probability equals the trace product"
          * doctest::description("1000 random sequences")) {
    std::mt19937_64 rng(302);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + trial % 6;
        std::uniform_int_distribution<std::size_t> len(1, 4);
        std::vector<Event> events;
        const std::size_t n = len(rng);
        events.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            events.push_back(gen::random_event(rng, dim, "e" + std::to_string(i), true, true));
        }
        const SequenceOutcome out = sequential_probability(gen::random_state(rng, dim), events);
        double product = 1.0;
        for (const SequenceStep& s : out.trace) product *= s.probability;
        CHECK(std::abs(out.probability - product) <= 1e-12);
    }
}

TEST_CASE("longer sequences never gain probability"
          * doctest::description("1000 random prefixes")) {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + trial % 6;
        std::vector<Event> events;
        for (std::size_t i = 0; i < 4; ++i) {
            events.push_back(gen::random_event(rng, dim, "e" + std::to_string(i), true, true));
        }
        const StateVector psi = gen::random_state(rng, dim);
        double prev = 1.0;
        for (std::size_t k = 1; k <= events.size(); ++k) {
            const std::vector<Event> prefix(events.begin(),
                                            events.begin() + static_cast<std::ptrdiff_t>(k));
            const double p = sequential_probability(psi, prefix).probability;
            CHECK(p <= prev + 1e-12);
            prev = p;
        }
    }
}

TEST_CASE("conjunction_fallacy_gap is positive in the Linda geometry") {
    const StateVector psi = state_at_degrees(80.0);
    const double gap = conjunction_fallacy_gap(psi, tilted_f(), axis_b());
    CHECK(gap == doctest::Approx(0.3053513462243714).epsilon(1e-9));
    CHECK(gap > 0.0);

    // An eigenstate of the second event cannot show the effect.
    CHECK(conjunction_fallacy_gap(make_state(Vec::real({1, 0})), tilted_f(), axis_b()) <= 1e-12);
}

TEST_CASE("nested events never show a conjunction gap"
          * doctest::description("1000 random nested pairs")) {
    std::mt19937_64 rng(304);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + trial % 6;
        const gen::EventPair p = gen::random_nested_pair(rng, dim);
        // span(a) inside span(b): P(a then b) = P(a) <= P(b), so no gap.
        CHECK(conjunction_fallacy_gap(gen::random_state(rng, dim), p.a, p.b) <= 1e-9);
    }
}

TEST_CASE("sequential_disjunction by De Morgan") {
    const Event b = axis_b();
    const Event f = tilted_f();
    const StateVector psi = state_at_degrees(10.0);

    const double dis = sequential_disjunction(psi, f, b);
    CHECK(dis == doctest::Approx(0.8355050358314172).epsilon(1e-9));
    // Witness: the single event is judged more likely than the disjunction.
    CHECK(born_probability(psi, b) > dis);

    CHECK(sequential_disjunction(make_state(Vec::real({1, 0})), b, f) ==
          doctest::Approx(1.0).epsilon(1e-9));

    const Event full = event_from_vectors("all", 2, {Vec::real({1, 0}), Vec::real({0, 1})});
    CHECK_THROWS_AS(sequential_disjunction(psi, full, b), FullSpace);
    CHECK_THROWS_AS(sequential_disjunction(psi, b, full), FullSpace);
}

TEST_CASE("order_effect measures non-commutativity") {
    const StateVector psi = state_at_degrees(80.0);
    CHECK(order_effect(psi, tilted_f(), axis_b()) ==
          doctest::Approx(0.3204281910278943).epsilon(1e-9));
    CHECK(order_effect(psi, axis_b(), axis_b()) == 0.0);
}

TEST_CASE("order_effect vanishes for compatible events"
          * doctest::description("1000 random compatible pairs")) {
    std::mt19937_64 rng(305);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + trial % 7;
        const gen::EventPair p = gen::random_compatible_pair(rng, dim);
        CHECK(std::abs(order_effect(gen::random_state(rng, dim), p.a, p.b)) <= 1e-9);
    }
}

TEST_CASE("interference_term captures the total-probability deviation") {
    const StateVector psi = state_at_degrees(80.0);
    CHECK(interference_term(psi, tilted_f(), axis_b()) ==
          doctest::Approx(-0.46984631039295416).epsilon(1e-9));
}

TEST_CASE("interference vanishes for compatible partitions and stays bounded"
          * doctest::description("1000 random cases")) {
    std::mt19937_64 rng(306);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + trial % 7;
        const gen::EventPair p = gen::random_compatible_pair(rng, dim);
        const StateVector psi = gen::random_state(rng, dim);
        CHECK(std::abs(interference_term(psi, p.a, p.b)) <= 1e-9);

        const Event part = gen::random_event(rng, dim, "p");
        const Event target = gen::random_event(rng, dim, "t", true, true);
        const double i = interference_term(psi, part, target);
        CHECK(i >= -1.0 - 1e-12);
        CHECK(i <= 1.0 + 1e-12);
    }
}

TEST_CASE("similarity is directional") {
    const KoreaFrame kf = korea_frame();
    const double korea_to_china = similarity(kf.psi, kf.korea, kf.china);
    const double china_to_korea = similarity(kf.psi, kf.china, kf.korea);
    CHECK(korea_to_china == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(china_to_korea == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK(korea_to_china > china_to_korea);
}

TEST_CASE("similarity from a ray matches the closed form"
          * doctest::description("1000 random cases")) {
    std::mt19937_64 rng(307);
    for (int trial = 0; trial < 1000; ++trial) {
        const Event a = event_from_vectors("a", 3, {gen::random_unit(rng, 3)});
        const Event b = gen::random_event(rng, 3, "b", true, true);
        const StateVector psi = gen::random_state(rng, 3);
        const Vec& ray = a.subspace.basis[0];

        // For a one-dimensional first event the chain factorizes:
        //   Sim(a,b) = |<a|psi>|^2 * ||P_b a||^2,  Sim(b,a) = |<a|P_b psi>|^2.
        const double forward = std::norm(inner_product(ray, psi.vec)) *
                               norm_squared(apply(b.projector, ray));
        const double backward = std::norm(inner_product(ray, apply(b.projector, psi.vec)));
        CHECK(std::abs(similarity(psi, a, b) - forward) <= 1e-12);
        CHECK(std::abs(similarity(psi, b, a) - backward) <= 1e-12);
    }
}
