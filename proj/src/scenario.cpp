#include "qjudge/scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qjudge/version.hpp"

namespace qjudge {

using ordered_json = nlohmann::ordered_json;

namespace {

struct KindName {
    const char* name;
    QueryKind kind;
};

constexpr KindName kKindNames[] = {
    {"probability", QueryKind::probability},
    {"sequence", QueryKind::sequence},
    {"conjunction_gap", QueryKind::conjunction_gap},
    {"disjunction", QueryKind::disjunction},
    {"order_effect", QueryKind::order_effect},
    {"interference", QueryKind::interference},
    {"similarity", QueryKind::similarity},
    {"compatibility", QueryKind::compatibility},
    {"joint", QueryKind::joint},
    {"fit2d", QueryKind::fit2d},
};

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    const std::size_t end = byte > 0 ? byte - 1 : 0;
    for (std::size_t i = 0; i < end && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError(where + ": " + what);
}

std::string trim_exception_prefix(const char* what) {
    // nlohmann prefixes messages with "[json.exception...] "; the category is
    // already conveyed by the SyntaxError type.
    std::string msg = what;
    if (const auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    return msg;
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte);
        std::string msg = trim_exception_prefix(e.what());
        // The position clause is carried by the SyntaxError fields; keep only
        // the description that follows it.
        if (msg.rfind("parse error at ", 0) == 0) {
            if (const auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
        }
        throw SyntaxError("malformed JSON: " + msg, line, col);
    } catch (const nlohmann::json::exception& e) {
        // e.g. number overflow (1e999), which nlohmann reports without a
        // byte position.
        throw SyntaxError("malformed JSON: " + trim_exception_prefix(e.what()));
    }
}

void check_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
    for (const auto& item : obj.items()) {
        if (allowed.find(item.key()) == allowed.end()) {
            fail(where, "unknown key \"" + item.key() + "\"");
        }
    }
}

const ordered_json& need(const ordered_json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing required key \"") + key + "\"");
    return *it;
}

std::string need_string(const ordered_json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
}

double need_finite(const ordered_json& v, const std::string& where) {
    if (!v.is_number()) fail(where, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(where, "number is not finite");
    return x;
}

double need_probability(const ordered_json& v, const std::string& where) {
    const double x = need_finite(v, where);
    if (x < 0.0 || x > 1.0) fail(where, "probability must lie in [0,1]");
    return x;
}

std::size_t need_positive_int(const ordered_json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        fail(where, "expected a positive integer");
    }
    return static_cast<std::size_t>(v.get<long long>());
}

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char ch : s) {
        const auto u = static_cast<unsigned char>(ch);
        if (!(std::isalnum(u) || ch == '_' || ch == '-')) return false;
    }
    return true;
}

Vec parse_vector(const ordered_json& arr, std::size_t dimension, bool complex_mode,
                 const std::string& where) {
    if (!arr.is_array()) fail(where, "expected an array");
    if (arr.size() != dimension) {
        fail(where, "vector has " + std::to_string(arr.size()) + " components, dimension is " +
                        std::to_string(dimension));
    }
    Vec v(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (complex_mode) {
            const ordered_json& pair = arr[i];
            if (!pair.is_array() || pair.size() != 2) {
                fail(at, "complex components are [re, im] pairs");
            }
            v[i] = cdouble(need_finite(pair[0], at), need_finite(pair[1], at));
        } else {
            v[i] = cdouble(need_finite(arr[i], at), 0.0);
        }
    }
    return v;
}

Targets2D parse_targets_obj(const ordered_json& obj, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    check_keys(obj, {"p_second", "p_first", "p_seq", "weights"}, where);
    Targets2D t;
    t.p_second = need_probability(need(obj, "p_second", where), where + ".p_second");
    t.p_first = need_probability(need(obj, "p_first", where), where + ".p_first");
    t.p_seq = need_probability(need(obj, "p_seq", where), where + ".p_seq");
    if (obj.contains("weights")) {
        const ordered_json& w = obj["weights"];
        if (!w.is_array() || w.size() != 3) fail(where + ".weights", "expected 3 numbers");
        double sum = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            const double x = need_finite(w[i], where + ".weights");
            if (x < 0.0) fail(where + ".weights", "weights must be nonnegative");
            t.weights[i] = x;
            sum += x;
        }
        if (sum <= 0.0) fail(where + ".weights", "at least one weight must be positive");
    }
    return t;
}

std::string expect_event_arg(const ordered_json& q, const char* key, const std::string& where,
                             const std::set<std::string>& declared) {
    const std::string name = need_string(need(q, key, where), where + "." + key);
    if (declared.find(name) == declared.end()) {
        fail(where, std::string("references undeclared event \"") + name + "\"");
    }
    return name;
}

Query parse_query(const ordered_json& q, const std::string& where,
                  const std::set<std::string>& declared) {
    if (!q.is_object()) fail(where, "expected an object");
    const std::string kind_str = need_string(need(q, "kind", where), where + ".kind");
    Query out;
    bool known = false;
    for (const KindName& kn : kKindNames) {
        if (kind_str == kn.name) {
            out.kind = kn.kind;
            known = true;
            break;
        }
    }
    if (!known) fail(where, "unknown query kind \"" + kind_str + "\"");

    switch (out.kind) {
        case QueryKind::probability:
            check_keys(q, {"kind", "event"}, where);
            out.args.push_back(expect_event_arg(q, "event", where, declared));
            break;
        case QueryKind::sequence: {
            check_keys(q, {"kind", "events"}, where);
            const ordered_json& evs = need(q, "events", where);
            if (!evs.is_array() || evs.empty()) {
                fail(where + ".events", "expected a nonempty array of event names");
            }
            for (std::size_t i = 0; i < evs.size(); ++i) {
                const std::string at = where + ".events[" + std::to_string(i) + "]";
                const std::string name = need_string(evs[i], at);
                if (declared.find(name) == declared.end()) {
                    fail(at, "references undeclared event \"" + name + "\"");
                }
                out.args.push_back(name);
            }
            break;
        }
        case QueryKind::interference:
            check_keys(q, {"kind", "partition", "target"}, where);
            out.args.push_back(expect_event_arg(q, "partition", where, declared));
            out.args.push_back(expect_event_arg(q, "target", where, declared));
            break;
        case QueryKind::fit2d:
            check_keys(q, {"kind", "targets", "grid_step", "refine_tol"}, where);
            out.targets = parse_targets_obj(need(q, "targets", where), where + ".targets");
            if (q.contains("grid_step")) {
                out.grid_step = need_finite(q["grid_step"], where + ".grid_step");
                if (out.grid_step <= 0.0) fail(where + ".grid_step", "must be positive");
            }
            if (q.contains("refine_tol")) {
                out.refine_tol = need_finite(q["refine_tol"], where + ".refine_tol");
                if (out.refine_tol <= 0.0) fail(where + ".refine_tol", "must be positive");
            }
            break;
        default:
            // All remaining kinds are pairwise over first/second.
            check_keys(q, {"kind", "first", "second"}, where);
            out.args.push_back(expect_event_arg(q, "first", where, declared));
            out.args.push_back(expect_event_arg(q, "second", where, declared));
            break;
    }
    return out;
}

ordered_json vector_to_json(const Vec& v, bool complex_mode) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (complex_mode) {
            arr.push_back(ordered_json::array({v[i].real(), v[i].imag()}));
        } else {
            arr.push_back(v[i].real());
        }
    }
    return arr;
}

}  // namespace

const char* query_kind_name(QueryKind k) {
    for (const KindName& kn : kKindNames) {
        if (kn.kind == k) return kn.name;
    }
    return "?";
}

Scenario parse_scenario(const std::string& text) {
    const ordered_json j = parse_json(text);
    if (!j.is_object()) throw ValidationError("scenario: top level must be an object");
    check_keys(j, {"name", "dimension", "scalar_mode", "events", "state", "queries"}, "scenario");

    Scenario s;
    s.name = need_string(need(j, "name", "scenario"), "scenario.name");
    if (s.name.empty()) fail("scenario.name", "must be nonempty");
    s.dimension = need_positive_int(need(j, "dimension", "scenario"), "scenario.dimension");
    if (s.dimension > 64) fail("scenario.dimension", "dimensions above 64 are not supported");

    const std::string mode =
        need_string(need(j, "scalar_mode", "scenario"), "scenario.scalar_mode");
    if (mode == "complex") {
        s.complex_mode = true;
    } else if (mode != "real") {
        fail("scenario.scalar_mode", "expected \"real\" or \"complex\"");
    }

    const ordered_json& events = need(j, "events", "scenario");
    if (!events.is_object()) fail("scenario.events", "expected an object of name -> vectors");
    std::set<std::string> declared;
    for (const auto& item : events.items()) {
        const std::string& name = item.key();
        const std::string where = "scenario.events." + name;
        if (!valid_identifier(name)) {
            fail("scenario.events", "event name \"" + name + "\" is not an identifier");
        }
        const ordered_json& vecs = item.value();
        if (!vecs.is_array() || vecs.empty()) {
            fail(where, "expected a nonempty array of vectors");
        }
        std::vector<Vec> raw;
        raw.reserve(vecs.size());
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            raw.push_back(parse_vector(vecs[i], s.dimension, s.complex_mode,
                                       where + "[" + std::to_string(i) + "]"));
        }
        s.events.emplace_back(name, std::move(raw));
        declared.insert(name);
    }

    const ordered_json& state = need(j, "state", "scenario");
    if (state.is_array()) {
        s.state.kind = StateKind::explicit_vector;
        s.state.vec = parse_vector(state, s.dimension, s.complex_mode, "scenario.state");
    } else if (state.is_string()) {
        if (state.get<std::string>() != "uniform") {
            fail("scenario.state", "the only string form is \"uniform\"");
        }
        s.state.kind = StateKind::uniform;
    } else if (state.is_object()) {
        check_keys(state, {"uniform_over"}, "scenario.state");
        const ordered_json& over = need(state, "uniform_over", "scenario.state");
        if (!over.is_array() || over.empty()) {
            fail("scenario.state.uniform_over", "expected a nonempty array of event names");
        }
        s.state.kind = StateKind::uniform_over;
        for (std::size_t i = 0; i < over.size(); ++i) {
            const std::string at = "scenario.state.uniform_over[" + std::to_string(i) + "]";
            const std::string name = need_string(over[i], at);
            if (declared.find(name) == declared.end()) {
                fail(at, "references undeclared event \"" + name + "\"");
            }
            s.state.over.push_back(name);
        }
    } else {
        fail("scenario.state", "expected a vector, \"uniform\", or {\"uniform_over\": [...]}");
    }

    const ordered_json& queries = need(j, "queries", "scenario");
    if (!queries.is_array()) fail("scenario.queries", "expected an array");
    for (std::size_t i = 0; i < queries.size(); ++i) {
        s.queries.push_back(
            parse_query(queries[i], "scenario.queries[" + std::to_string(i) + "]", declared));
    }
    return s;
}

std::string serialize_scenario(const Scenario& s) {
    ordered_json j;
    j["name"] = s.name;
    j["dimension"] = s.dimension;
    j["scalar_mode"] = s.complex_mode ? "complex" : "real";
    ordered_json events = ordered_json::object();
    for (const auto& [name, vecs] : s.events) {
        ordered_json arr = ordered_json::array();
        for (const Vec& v : vecs) arr.push_back(vector_to_json(v, s.complex_mode));
        events[name] = std::move(arr);
    }
    j["events"] = std::move(events);
    switch (s.state.kind) {
        case StateKind::explicit_vector:
            j["state"] = vector_to_json(s.state.vec, s.complex_mode);
            break;
        case StateKind::uniform:
            j["state"] = "uniform";
            break;
        case StateKind::uniform_over:
            j["state"] = ordered_json{{"uniform_over", s.state.over}};
            break;
    }
    ordered_json queries = ordered_json::array();
    for (const Query& q : s.queries) {
        ordered_json jq;
        jq["kind"] = query_kind_name(q.kind);
        switch (q.kind) {
            case QueryKind::probability:
                jq["event"] = q.args[0];
                break;
            case QueryKind::sequence:
                jq["events"] = q.args;
                break;
            case QueryKind::interference:
                jq["partition"] = q.args[0];
                jq["target"] = q.args[1];
                break;
            case QueryKind::fit2d:
                jq["targets"] = ordered_json{{"p_second", q.targets.p_second},
                                             {"p_first", q.targets.p_first},
                                             {"p_seq", q.targets.p_seq},
                                             {"weights", q.targets.weights}};
                jq["grid_step"] = q.grid_step;
                jq["refine_tol"] = q.refine_tol;
                break;
            default:
                jq["first"] = q.args[0];
                jq["second"] = q.args[1];
                break;
        }
        queries.push_back(std::move(jq));
    }
    j["queries"] = std::move(queries);
    return j.dump(2) + "\n";
}

Targets2D parse_targets(const std::string& text) {
    return parse_targets_obj(parse_json(text), "targets");
}

namespace {

Vec uniform_unit_of(const Subspace& sub) {
    Vec sum(sub.ambient_dim);
    for (const Vec& b : sub.basis) axpy(1.0, b, sum);
    return normalize(sum);
}

QueryResult run_query(const StateVector& psi, const std::map<std::string, Event>& events,
                      const Query& q) {
    const auto ev = [&](const std::string& name) -> const Event& { return events.at(name); };
    QueryResult r;
    r.query = q;
    switch (q.kind) {
        case QueryKind::probability:
            r.payload = born_probability(psi, ev(q.args[0]));
            break;
        case QueryKind::sequence: {
            std::vector<Event> seq;
            seq.reserve(q.args.size());
            for (const std::string& name : q.args) seq.push_back(ev(name));
            r.payload = sequential_probability(psi, seq);
            break;
        }
        case QueryKind::conjunction_gap:
            r.payload = conjunction_fallacy_gap(psi, ev(q.args[0]), ev(q.args[1]));
            break;
        case QueryKind::disjunction:
            r.payload = sequential_disjunction(psi, ev(q.args[0]), ev(q.args[1]));
            break;
        case QueryKind::order_effect:
            r.payload = order_effect(psi, ev(q.args[0]), ev(q.args[1]));
            break;
        case QueryKind::interference:
            r.payload = interference_term(psi, ev(q.args[0]), ev(q.args[1]));
            break;
        case QueryKind::similarity:
            r.payload = similarity(psi, ev(q.args[0]), ev(q.args[1]));
            break;
        case QueryKind::compatibility:
            r.payload = is_compatible(ev(q.args[0]), ev(q.args[1]));
            break;
        case QueryKind::joint:
            r.payload = joint_distribution(psi, ev(q.args[0]), ev(q.args[1]));
            break;
        case QueryKind::fit2d:
            r.payload = fit_2d(q.targets, q.grid_step, q.refine_tol);
            break;
    }
    return r;
}

}  // namespace

Report run_scenario(const Scenario& s) {
    Report report;
    report.scenario = s.name;
    report.engine = engine_string();

    std::map<std::string, Event> events;
    for (const auto& [name, raw] : s.events) {
        try {
            events.emplace(name, event_from_vectors(name, s.dimension, raw));
        } catch (const Error& e) {
            throw EngineError("event \"" + name + "\": " + e.what());
        }
    }

    StateVector psi;
    try {
        switch (s.state.kind) {
            case StateKind::explicit_vector:
                psi = make_state(s.state.vec);
                break;
            case StateKind::uniform: {
                Vec ones(s.dimension);
                for (std::size_t i = 0; i < s.dimension; ++i) ones[i] = 1.0;
                psi = make_state(ones);
                break;
            }
            case StateKind::uniform_over: {
                Vec sum(s.dimension);
                for (const std::string& name : s.state.over) {
                    axpy(1.0, uniform_unit_of(events.at(name).subspace), sum);
                }
                psi = make_state(sum);
                break;
            }
        }
    } catch (const Error& e) {
        throw EngineError(std::string("state: ") + e.what());
    }

    for (std::size_t i = 0; i < s.queries.size(); ++i) {
        try {
            report.results.push_back(run_query(psi, events, s.queries[i]));
        } catch (const Error& e) {
            throw EngineError("query " + std::to_string(i + 1) + " (" +
                                  query_kind_name(s.queries[i].kind) + "): " + e.what(),
                              i);
        }
    }
    return report;
}

}  // namespace qjudge
