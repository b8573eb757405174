#pragma once

// Scenario texts compiled into the binary for the demo subcommand. Each is
// byte-identical to its file under scenarios/; a unit test enforces that.

namespace qjudge::embedded {

inline constexpr const char* kLindaScenario = R"qj({
  "name": "linda",
  "dimension": 2,
  "scalar_mode": "real",
  "events": {
    "B": [[1.0, 0.0]],
    "F": [[1.0, 1.0]]
  },
  "state": [0.17364817766693041, 0.984807753012208],
  "queries": [
    {"kind": "probability", "event": "B"},
    {"kind": "sequence", "events": ["F", "B"]},
    {"kind": "conjunction_gap", "first": "F", "second": "B"},
    {"kind": "order_effect", "first": "F", "second": "B"},
    {"kind": "interference", "partition": "F", "target": "B"}
  ]
}
)qj";

inline constexpr const char* kKoreaChinaScenario = R"qj({
  "name": "korea-china",
  "dimension": 3,
  "scalar_mode": "real",
  "events": {
    "China": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
    "Korea": [[1.0, 0.0, 1.0]]
  },
  "state": "uniform",
  "queries": [
    {"kind": "similarity", "first": "Korea", "second": "China"},
    {"kind": "similarity", "first": "China", "second": "Korea"},
    {"kind": "compatibility", "first": "Korea", "second": "China"}
  ]
}
)qj";

}  // namespace qjudge::embedded
