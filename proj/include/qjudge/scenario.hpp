#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qjudge/classical.hpp"
#include "qjudge/event.hpp"
#include "qjudge/fit.hpp"
#include "qjudge/judgment.hpp"
#include "qjudge/linalg.hpp"

namespace qjudge {

enum class QueryKind {
    probability,
    sequence,
    conjunction_gap,
    disjunction,
    order_effect,
    interference,
    similarity,
    compatibility,
    joint,
    fit2d,
};

const char* query_kind_name(QueryKind k);

/// One judgment request. args holds event names whose meaning depends on the
/// kind: the single event for probability, the ordered list for sequence,
/// {first, second} for the pairwise kinds, {partition, target} for
/// interference, and nothing for fit2d, which carries targets and tuning
/// instead.
struct Query {
    QueryKind kind = QueryKind::probability;
    std::vector<std::string> args;
    Targets2D targets;
    double grid_step = 1.0;
    double refine_tol = 1e-4;
};

enum class StateKind { explicit_vector, uniform, uniform_over };

/// How the scenario's state vector is built: an explicit vector, the
/// normalized all-ones vector, or the normalized sum of the named events'
/// uniform unit vectors.
struct StateSpec {
    StateKind kind = StateKind::uniform;
    Vec vec;
    std::vector<std::string> over;
};

/// Declarative description of a geometry and the judgments to run on it.
/// Event vectors are kept raw; orthonormalization happens at run time.
struct Scenario {
    std::string name;
    std::size_t dimension = 0;
    bool complex_mode = false;
    std::vector<std::pair<std::string, std::vector<Vec>>> events;
    StateSpec state;
    std::vector<Query> queries;
};

/// One query's outcome; the query is echoed so reports can label results
/// without a side table.
struct QueryResult {
    Query query;
    std::variant<double, bool, SequenceOutcome, JointDistribution, FitResult> payload;
};

struct Report {
    std::string scenario;
    std::string engine;
    std::vector<QueryResult> results;
};

/// Parses and validates scenario JSON. Unknown keys anywhere are rejected.
/// Throws SyntaxError (malformed JSON, with line/column) or ValidationError
/// (schema violations: wrong dimensions, undeclared event names, bad query
/// arity, non-finite numbers).
Scenario parse_scenario(const std::string& text);

/// Inverse of parse_scenario for fixture generation; parse(serialize(s))
/// reproduces s exactly.
std::string serialize_scenario(const Scenario& s);

/// Targets file for the standalone fit command: an object with p_second,
/// p_first, p_seq and optional weights. Same strictness as parse_scenario.
Targets2D parse_targets(const std::string& text);

/// Builds events and state, dispatches every query in order. Failures are
/// rethrown as EngineError carrying the 0-based query index (or npos for
/// construction failures). Zero-probability sequences are results, not
/// errors.
Report run_scenario(const Scenario& s);

}  // namespace qjudge
