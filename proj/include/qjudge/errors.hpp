#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qjudge {

/// Error taxonomy shared by all engine modules. Every failure mode that a
/// caller can trigger through the public surface maps to exactly one of
/// these; the CLI translates the family into its exit code.
enum class errc {
    dimension_mismatch,
    zero_vector,
    not_orthonormal,
    full_space,
    incompatible_events,
    zero_probability_collapse,
    internal_inconsistency,
    syntax_error,
    validation_error,
    engine_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(errc::dimension_mismatch, msg) {}
};

struct ZeroVector : Error {
    explicit ZeroVector(const std::string& msg) : Error(errc::zero_vector, msg) {}
};

struct NotOrthonormal : Error {
    explicit NotOrthonormal(const std::string& msg) : Error(errc::not_orthonormal, msg) {}
};

struct FullSpace : Error {
    explicit FullSpace(const std::string& msg) : Error(errc::full_space, msg) {}
};

struct IncompatibleEvents : Error {
    explicit IncompatibleEvents(const std::string& msg) : Error(errc::incompatible_events, msg) {}
};

struct ZeroProbabilityCollapse : Error {
    explicit ZeroProbabilityCollapse(const std::string& msg)
        : Error(errc::zero_probability_collapse, msg) {}
};

struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& msg)
        : Error(errc::internal_inconsistency, msg) {}
};

/// Malformed scenario text. line/column are 1-based; 0 when unknown.
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t line_ = 0, std::size_t column_ = 0)
        : Error(errc::syntax_error, msg), line(line_), column(column_) {}
    std::size_t line;
    std::size_t column;
};

/// Well-formed text that violates the scenario schema.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(errc::validation_error, msg) {}
};

/// Failure while running a scenario. query_index is the 0-based index of the
/// offending query, or npos when the failure happened during construction of
/// events or the state, before any query ran.
struct EngineError : Error {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    explicit EngineError(const std::string& msg, std::size_t query_index_ = npos)
        : Error(errc::engine_error, msg), query_index(query_index_) {}
    std::size_t query_index;
};

}  // namespace qjudge
