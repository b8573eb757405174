#pragma once

#include <string>

#include "qjudge/fit.hpp"
#include "qjudge/scenario.hpp"

namespace qjudge {

enum class ReportFormat { json, table };

/// Renders a report to UTF-8 bytes. Both formats are deterministic for
/// identical inputs: fixed key order, probabilities at 6 decimal places,
/// angles at 4, fit residuals in scientific notation.
std::string emit_report(const Report& r, ReportFormat format);

/// Report for the standalone fit command: the fit result plus engine
/// identification, same formatting rules as emit_report.
std::string emit_fit_report(const FitResult& fr);

}  // namespace qjudge
