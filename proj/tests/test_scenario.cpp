#include <algorithm>
#include <cstddef>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "generators.hpp"
#include "qjudge/embedded_scenarios.hpp"
#include "qjudge/report.hpp"
#include "qjudge/scenario.hpp"
#include "qjudge/version.hpp"

using namespace qjudge;

namespace {

std::string read_file(const std::string& relpath) {
    const std::string path = std::string(QJUDGE_SOURCE_DIR) + "/" + relpath;
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string collapse_spaces(const std::string& s) {
    std::string out;
    bool in_run = false;
    for (char ch : s) {
        if (ch == ' ') {
            if (!in_run) out += ' ';
            in_run = true;
        } else {
            out += ch;
            in_run = false;
        }
    }
    return out;
}

double value_of(const Report& r, std::size_t i) { return std::get<double>(r.results[i].payload); }

void require_equal(const Scenario& a, const Scenario& b) {
    CHECK(a.name == b.name);
    CHECK(a.dimension == b.dimension);
    CHECK(a.complex_mode == b.complex_mode);
    REQUIRE(a.events.size() == b.events.size());
    for (std::size_t e = 0; e < a.events.size(); ++e) {
        CHECK(a.events[e].first == b.events[e].first);
        REQUIRE(a.events[e].second.size() == b.events[e].second.size());
        for (std::size_t v = 0; v < a.events[e].second.size(); ++v) {
            const Vec& va = a.events[e].second[v];
            const Vec& vb = b.events[e].second[v];
            REQUIRE(va.dim() == vb.dim());
            for (std::size_t i = 0; i < va.dim(); ++i) CHECK(va[i] == vb[i]);
        }
    }
    CHECK(a.state.kind == b.state.kind);
    REQUIRE(a.state.vec.dim() == b.state.vec.dim());
    for (std::size_t i = 0; i < a.state.vec.dim(); ++i) CHECK(a.state.vec[i] == b.state.vec[i]);
    CHECK(a.state.over == b.state.over);
    REQUIRE(a.queries.size() == b.queries.size());
    for (std::size_t i = 0; i < a.queries.size(); ++i) {
        const Query& qa = a.queries[i];
        const Query& qb = b.queries[i];
        CHECK(qa.kind == qb.kind);
        CHECK(qa.args == qb.args);
        CHECK(qa.targets.p_second == qb.targets.p_second);
        CHECK(qa.targets.p_first == qb.targets.p_first);
        CHECK(qa.targets.p_seq == qb.targets.p_seq);
        CHECK(qa.targets.weights == qb.targets.weights);
        CHECK(qa.grid_step == qb.grid_step);
        CHECK(qa.refine_tol == qb.refine_tol);
    }
}

Scenario random_scenario(std::mt19937_64& rng, int tag) {
    std::uniform_int_distribution<std::size_t> dim_pick(2, 4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::bernoulli_distribution coin(0.5);

    Scenario s;
    s.name = "generated-" + std::to_string(tag);
    s.dimension = dim_pick(rng);
    s.complex_mode = coin(rng);

    std::uniform_int_distribution<std::size_t> nev(2, 3);
    const std::size_t n_events = nev(rng);
    std::vector<std::string> names;
    for (std::size_t e = 0; e < n_events; ++e) {
        const std::string name = "e" + std::to_string(e);
        std::uniform_int_distribution<std::size_t> nv(1, 2);
        std::vector<Vec> vecs;
        const std::size_t n_vecs = nv(rng);
        for (std::size_t v = 0; v < n_vecs; ++v) {
            vecs.push_back(gen::random_vec(rng, s.dimension, s.complex_mode));
        }
        s.events.emplace_back(name, std::move(vecs));
        names.push_back(name);
    }

    switch (tag % 3) {
        case 0:
            s.state.kind = StateKind::explicit_vector;
            s.state.vec = gen::random_vec(rng, s.dimension, s.complex_mode);
            break;
        case 1:
            s.state.kind = StateKind::uniform;
            break;
        default:
            s.state.kind = StateKind::uniform_over;
            s.state.over.push_back(names[0]);
            if (coin(rng)) s.state.over.push_back(names[1]);
            break;
    }

    const auto pick_name = [&] {
        std::uniform_int_distribution<std::size_t> p(0, names.size() - 1);
        return names[p(rng)];
    };
    constexpr QueryKind kAllKinds[] = {
        QueryKind::probability,   QueryKind::sequence,    QueryKind::conjunction_gap,
        QueryKind::disjunction,   QueryKind::order_effect, QueryKind::interference,
        QueryKind::similarity,    QueryKind::compatibility, QueryKind::joint,
        QueryKind::fit2d,
    };
    for (QueryKind kind : kAllKinds) {
        Query q;
        q.kind = kind;
        switch (kind) {
            case QueryKind::probability:
                q.args.push_back(pick_name());
                break;
            case QueryKind::sequence:
                q.args.push_back(pick_name());
                q.args.push_back(pick_name());
                if (coin(rng)) q.args.push_back(pick_name());
                break;
            case QueryKind::fit2d:
                q.targets.p_second = u(rng);
                q.targets.p_first = u(rng);
                q.targets.p_seq = u(rng);
                q.targets.weights = {u(rng), u(rng), 0.5 + u(rng)};
                q.grid_step = 0.5 + u(rng);
                q.refine_tol = 1e-4 * (0.5 + u(rng));
                break;
            default:
                q.args.push_back(pick_name());
                q.args.push_back(pick_name());
                break;
        }
        s.queries.push_back(std::move(q));
    }
    return s;
}

}  // namespace

TEST_CASE("parse_scenario reads the shipped linda file") {
    const Scenario s = parse_scenario(read_file("scenarios/linda.scenario.json"));
    CHECK(s.name == "linda");
    CHECK(s.dimension == 2);
    CHECK_FALSE(s.complex_mode);
    REQUIRE(s.events.size() == 2);
    CHECK(s.events[0].first == "B");
    CHECK(s.events[1].first == "F");
    REQUIRE(s.events[1].second.size() == 1);
    CHECK(s.events[1].second[0][1] == cdouble(1.0, 0.0));
    CHECK(s.state.kind == StateKind::explicit_vector);
    CHECK(s.state.vec[0] == cdouble(0.17364817766693041, 0.0));
    REQUIRE(s.queries.size() == 5);
    CHECK(s.queries[0].kind == QueryKind::probability);
    CHECK(s.queries[1].kind == QueryKind::sequence);
    CHECK(s.queries[1].args == std::vector<std::string>{"F", "B"});
    CHECK(s.queries[4].kind == QueryKind::interference);
    CHECK(s.queries[4].args == std::vector<std::string>{"F", "B"});
}

TEST_CASE("parse_scenario rejects malformed JSON with a position") {
    CHECK_THROWS_AS(parse_scenario(""), SyntaxError);
    try {
        parse_scenario("{\n  \"name\": ,\n}");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 0);
    }
}

TEST_CASE("parse_scenario enforces the schema strictly") {
    const std::string linda = read_file("scenarios/linda.scenario.json");
    const auto swapped = [&](const std::string& from, const std::string& to) {
        std::string text = linda;
        const auto pos = text.find(from);
        REQUIRE(pos != std::string::npos);
        text.replace(pos, from.size(), to);
        return text;
    };

    CHECK_THROWS_AS(parse_scenario(swapped("\"name\"", "\"title\"")), ValidationError);
    CHECK_THROWS_AS(parse_scenario(swapped("\"dimension\": 2", "\"dimension\": 0")),
                    ValidationError);
    CHECK_THROWS_AS(parse_scenario(swapped("\"dimension\": 2", "\"dimension\": 2.5")),
                    ValidationError);
    CHECK_THROWS_AS(parse_scenario(swapped("\"real\"", "\"quaternion\"")), ValidationError);
    CHECK_THROWS_AS(parse_scenario(swapped("\"name\": \"linda\"", "\"name\": \"\"")),
                    ValidationError);
    // Vector of the wrong arity.
    CHECK_THROWS_AS(parse_scenario(swapped("[1.0, 0.0]]", "[1.0, 0.0, 0.0]]")), ValidationError);
    // Real-mode component carrying a complex pair.
    CHECK_THROWS_AS(parse_scenario(swapped("[1.0, 0.0]]", "[[1.0, 0.0], 0.0]]")), ValidationError);
    // Undeclared event reference.
    CHECK_THROWS_AS(parse_scenario(swapped("\"event\": \"B\"", "\"event\": \"X\"")),
                    ValidationError);
    // Unknown key inside a query.
    CHECK_THROWS_AS(
        parse_scenario(swapped("\"kind\": \"probability\"", "\"kind\": \"probability\", \"x\": 1")),
        ValidationError);
    // Wrong arg shape for the kind.
    CHECK_THROWS_AS(parse_scenario(swapped("{\"kind\": \"sequence\", \"events\": [\"F\", \"B\"]}",
                                           "{\"kind\": \"sequence\", \"events\": []}")),
                    ValidationError);
    CHECK_THROWS_AS(parse_scenario(swapped("{\"kind\": \"sequence\", \"events\": [\"F\", \"B\"]}",
                                           "{\"kind\": \"judge\", \"events\": [\"F\"]}")),
                    ValidationError);
    // Numbers must stay finite after parsing.
    CHECK_THROWS_AS(parse_scenario(swapped("0.17364817766693041", "1e999")), Error);
}

TEST_CASE("scenario serialization round trips exactly"
          * doctest::description("200 random scenarios")) {
    std::mt19937_64 rng(601);
    for (int tag = 0; tag < 200; ++tag) {
        const Scenario s = random_scenario(rng, tag);
        const Scenario back = parse_scenario(serialize_scenario(s));
        require_equal(s, back);
    }

    const Scenario linda = parse_scenario(read_file("scenarios/linda.scenario.json"));
    require_equal(linda, parse_scenario(serialize_scenario(linda)));
}

TEST_CASE("run_scenario reproduces the linda judgment numbers") {
    const Report r = run_scenario(parse_scenario(read_file("scenarios/linda.scenario.json")));
    CHECK(r.scenario == "linda");
    CHECK(r.engine == engine_string());
    REQUIRE(r.results.size() == 5);

    CHECK(value_of(r, 0) == doctest::Approx(0.03015368960704583).epsilon(1e-9));
    const auto& seq = std::get<SequenceOutcome>(r.results[1].payload);
    CHECK(seq.probability == doctest::Approx(0.3355050358314172).epsilon(1e-9));
    REQUIRE(seq.trace.size() == 2);
    CHECK(seq.trace[0].probability == doctest::Approx(0.6710100716628343).epsilon(1e-9));
    CHECK(seq.trace[1].probability == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(value_of(r, 2) == doctest::Approx(0.3053513462243714).epsilon(1e-9));
    CHECK(value_of(r, 3) == doctest::Approx(0.3204281910278943).epsilon(1e-9));
    CHECK(value_of(r, 4) == doctest::Approx(-0.46984631039295416).epsilon(1e-9));
}

TEST_CASE("run_scenario reproduces the korea-china judgment numbers") {
    const Report r = run_scenario(parse_scenario(read_file("scenarios/korea-china.scenario.json")));
    REQUIRE(r.results.size() == 3);
    CHECK(value_of(r, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(value_of(r, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK_FALSE(std::get<bool>(r.results[2].payload));
}

TEST_CASE("run_scenario reproduces the disjunction numbers") {
    const Report r = run_scenario(parse_scenario(read_file("scenarios/disjunction.scenario.json")));
    REQUIRE(r.results.size() == 2);
    CHECK(value_of(r, 0) == doctest::Approx(0.8355050358314172).epsilon(1e-9));
    // The lone event outscores the disjunction containing it.
    CHECK(value_of(r, 1) > value_of(r, 0));
}

TEST_CASE("uniform_over builds the advertised state") {
    const std::string text = R"({
      "name": "uniform-over",
      "dimension": 2,
      "scalar_mode": "real",
      "events": {"A": [[1.0, 0.0]], "Z": [[0.0, 1.0]]},
      "state": {"uniform_over": ["A", "Z"]},
      "queries": [{"kind": "probability", "event": "A"}]
    })";
    const Report r = run_scenario(parse_scenario(text));
    // State is (|A> + |Z>)/sqrt(2), so P(A) = 1/2 exactly.
    CHECK(value_of(r, 0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("run_scenario wraps failures in EngineError with the query index") {
    const std::string incompatible = R"({
      "name": "broken",
      "dimension": 2,
      "scalar_mode": "real",
      "events": {"B": [[1.0, 0.0]], "F": [[1.0, 1.0]]},
      "state": "uniform",
      "queries": [
        {"kind": "probability", "event": "B"},
        {"kind": "joint", "first": "B", "second": "F"}
      ]
    })";
    try {
        run_scenario(parse_scenario(incompatible));
        FAIL("expected EngineError");
    } catch (const EngineError& e) {
        CHECK(e.query_index == 1);
        CHECK(std::string(e.what()).find("query 2 (joint)") != std::string::npos);
    }

    const std::string zero_state = R"({
      "name": "flat",
      "dimension": 2,
      "scalar_mode": "real",
      "events": {"B": [[1.0, 0.0]]},
      "state": [0.0, 0.0],
      "queries": []
    })";
    try {
        run_scenario(parse_scenario(zero_state));
        FAIL("expected EngineError");
    } catch (const EngineError& e) {
        CHECK(e.query_index == EngineError::npos);
        CHECK(std::string(e.what()).find("state") != std::string::npos);
    }
}

TEST_CASE("JSON reports parse back and repeat byte for byte") {
    const Scenario s = parse_scenario(read_file("scenarios/linda.scenario.json"));
    const std::string first = emit_report(run_scenario(s), ReportFormat::json);
    const std::string second = emit_report(run_scenario(s), ReportFormat::json);
    CHECK(first == second);

    const nlohmann::json j = nlohmann::json::parse(first);
    CHECK(j["scenario"] == "linda");
    CHECK(j["engine"] == engine_string());
    CHECK(j["tolerances"]["eps_commute"] == 1e-9);
    REQUIRE(j["results"].size() == 5);
    CHECK(j["results"][0]["kind"] == "probability");
    CHECK(j["results"][0]["value"] == 0.030154);
    CHECK(j["results"][1]["trace"].size() == 2);
    CHECK(j["results"][4]["value"] == -0.469846);
}

TEST_CASE("table report carries the labeled rows") {
    const Scenario s = parse_scenario(read_file("scenarios/korea-china.scenario.json"));
    const std::string table =
        collapse_spaces(emit_report(run_scenario(s), ReportFormat::table));
    CHECK(table.find("scenario: korea-china") != std::string::npos);
    CHECK(table.find("Sim(Korea,China) 0.333333") != std::string::npos);
    CHECK(table.find("Sim(China,Korea) 0.166667") != std::string::npos);
    CHECK(table.find("compatibility(Korea, China) false") != std::string::npos);
}

TEST_CASE("a scenario with no queries reports an empty results list") {
    const std::string text = R"({
      "name": "idle",
      "dimension": 2,
      "scalar_mode": "real",
      "events": {"B": [[1.0, 0.0]]},
      "state": "uniform",
      "queries": []
    })";
    const std::string out = emit_report(run_scenario(parse_scenario(text)), ReportFormat::json);
    CHECK(out.find("\"results\": []") != std::string::npos);
    CHECK(nlohmann::json::parse(out)["results"].empty());
}

TEST_CASE("parse_targets mirrors the scenario strictness") {
    const Targets2D t = parse_targets(read_file("scenarios/example.targets.json"));
    CHECK(t.p_second == 0.03015368960704583);
    CHECK(t.p_first == 0.6710100716628343);
    CHECK(t.p_seq == 0.3355050358314172);
    CHECK(t.weights == std::array<double, 3>{1.0, 1.0, 1.0});

    const Targets2D weighted = parse_targets(
        R"({"p_second": 0.1, "p_first": 0.2, "p_seq": 0.15, "weights": [2.0, 0.0, 1.0]})");
    CHECK(weighted.weights == std::array<double, 3>{2.0, 0.0, 1.0});

    CHECK_THROWS_AS(parse_targets(R"({"p_second": 0.1, "p_first": 0.2})"), ValidationError);
    CHECK_THROWS_AS(parse_targets(R"({"p_second": 0.1, "p_first": 0.2, "p_seq": 1.5})"),
                    ValidationError);
    CHECK_THROWS_AS(
        parse_targets(R"({"p_second": 0.1, "p_first": 0.2, "p_seq": 0.1, "extra": 1})"),
        ValidationError);
    CHECK_THROWS_AS(
        parse_targets(
            R"({"p_second": 0.1, "p_first": 0.2, "p_seq": 0.1, "weights": [0.0, 0.0, 0.0]})"),
        ValidationError);
    CHECK_THROWS_AS(
        parse_targets(
            R"({"p_second": 0.1, "p_first": 0.2, "p_seq": 0.1, "weights": [-1.0, 1.0, 1.0]})"),
        ValidationError);
    CHECK_THROWS_AS(parse_targets("[0.1, 0.2, 0.1]"), ValidationError);
    CHECK_THROWS_AS(parse_targets("{oops"), SyntaxError);
}

TEST_CASE("embedded demo scenarios are byte-identical to the shipped files") {
    CHECK(std::string(embedded::kLindaScenario) == read_file("scenarios/linda.scenario.json"));
    CHECK(std::string(embedded::kKoreaChinaScenario) ==
          read_file("scenarios/korea-china.scenario.json"));
}
