#include "qjudge/report.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "qjudge/linalg.hpp"
#include "qjudge/version.hpp"

namespace qjudge {

namespace {

// Formatting is pinned down to the byte: fixed decimal counts, "-0.000000"
// folded to "0.000000", so identical reports serialize identically on every
// platform.

std::string strip_negative_zero(std::string s) {
    if (s.empty() || s[0] != '-') return s;
    const bool all_zero = std::all_of(s.begin() + 1, s.end(), [](char ch) {
        return ch == '0' || ch == '.' || ch == 'e' || ch == '+';
    });
    return all_zero ? s.substr(1) : s;
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return strip_negative_zero(buf);
}

std::string fmt_prob(double v) { return fmt("%.6f", v); }
std::string fmt_angle(double v) { return fmt("%.4f", v); }
std::string fmt_sci(double v) { return fmt("%.6e", v); }
std::string fmt_tol(double v) { return fmt("%g", v); }

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x",
                                  static_cast<unsigned>(static_cast<unsigned char>(ch)));
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string name_list(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) out += ", ";
        out += names[i];
    }
    return out;
}

void emit_result_json(const QueryResult& r, std::string& out) {
    const Query& q = r.query;
    const std::string ind = "    ";
    const std::string ind2 = "      ";
    out += ind + "{\n";
    out += ind2 + "\"kind\": " + quoted(query_kind_name(q.kind));
    switch (q.kind) {
        case QueryKind::probability:
            out += ",\n" + ind2 + "\"event\": " + quoted(q.args[0]);
            out += ",\n" + ind2 + "\"value\": " + fmt_prob(std::get<double>(r.payload));
            break;
        case QueryKind::sequence: {
            const auto& seq = std::get<SequenceOutcome>(r.payload);
            out += ",\n" + ind2 + "\"events\": [";
            for (std::size_t i = 0; i < q.args.size(); ++i) {
                if (i > 0) out += ", ";
                out += quoted(q.args[i]);
            }
            out += "]";
            out += ",\n" + ind2 + "\"probability\": " + fmt_prob(seq.probability);
            out += ",\n" + ind2 + "\"trace\": [";
            for (std::size_t i = 0; i < seq.trace.size(); ++i) {
                out += (i > 0 ? "," : "") + std::string("\n") + ind2 + "  {\"event\": " +
                       quoted(seq.trace[i].event) +
                       ", \"probability\": " + fmt_prob(seq.trace[i].probability) + "}";
            }
            out += "\n" + ind2 + "]";
            break;
        }
        case QueryKind::interference:
            out += ",\n" + ind2 + "\"partition\": " + quoted(q.args[0]);
            out += ",\n" + ind2 + "\"target\": " + quoted(q.args[1]);
            out += ",\n" + ind2 + "\"value\": " + fmt_prob(std::get<double>(r.payload));
            break;
        case QueryKind::compatibility:
            out += ",\n" + ind2 + "\"first\": " + quoted(q.args[0]);
            out += ",\n" + ind2 + "\"second\": " + quoted(q.args[1]);
            out += ",\n" + ind2 + "\"value\": " +
                   (std::get<bool>(r.payload) ? std::string("true") : std::string("false"));
            break;
        case QueryKind::joint: {
            const auto& jd = std::get<JointDistribution>(r.payload);
            out += ",\n" + ind2 + "\"first\": " + quoted(q.args[0]);
            out += ",\n" + ind2 + "\"second\": " + quoted(q.args[1]);
            out += ",\n" + ind2 + "\"cells\": {";
            out += "\n" + ind2 + "  \"both\": " + fmt_prob(jd.cells[0][0]) + ",";
            out += "\n" + ind2 + "  \"first_only\": " + fmt_prob(jd.cells[0][1]) + ",";
            out += "\n" + ind2 + "  \"second_only\": " + fmt_prob(jd.cells[1][0]) + ",";
            out += "\n" + ind2 + "  \"neither\": " + fmt_prob(jd.cells[1][1]);
            out += "\n" + ind2 + "}";
            break;
        }
        case QueryKind::fit2d: {
            const auto& fr = std::get<FitResult>(r.payload);
            out += ",\n" + ind2 + "\"theta_f\": " + fmt_angle(fr.theta_f);
            out += ",\n" + ind2 + "\"theta_psi\": " + fmt_angle(fr.theta_psi);
            out += ",\n" + ind2 + "\"residual\": " + fmt_sci(fr.residual);
            out += ",\n" + ind2 + "\"predicted\": [" + fmt_prob(fr.predicted[0]) + ", " +
                   fmt_prob(fr.predicted[1]) + ", " + fmt_prob(fr.predicted[2]) + "]";
            break;
        }
        default:
            // conjunction_gap, disjunction, order_effect, similarity: a pair
            // of events and one signed value.
            out += ",\n" + ind2 + "\"first\": " + quoted(q.args[0]);
            out += ",\n" + ind2 + "\"second\": " + quoted(q.args[1]);
            out += ",\n" + ind2 + "\"value\": " + fmt_prob(std::get<double>(r.payload));
            break;
    }
    out += "\n" + ind + "}";
}

std::string emit_json(const Report& r) {
    std::string out;
    out += "{\n";
    out += "  \"scenario\": " + quoted(r.scenario) + ",\n";
    out += "  \"engine\": " + quoted(r.engine) + ",\n";
    out += "  \"tolerances\": {\n";
    out += "    \"eps_zero\": " + fmt_tol(EPS_ZERO) + ",\n";
    out += "    \"eps_rank\": " + fmt_tol(EPS_RANK) + ",\n";
    out += "    \"eps_ortho\": " + fmt_tol(EPS_ORTHO) + ",\n";
    out += "    \"eps_commute\": " + fmt_tol(EPS_COMMUTE) + "\n";
    out += "  },\n";
    out += "  \"results\": [";
    for (std::size_t i = 0; i < r.results.size(); ++i) {
        out += (i > 0 ? "," : "") + std::string("\n");
        emit_result_json(r.results[i], out);
    }
    out += r.results.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

struct Row {
    std::string label;
    std::string value;
};

std::string query_label(const Query& q) {
    switch (q.kind) {
        case QueryKind::probability:
            return "probability(" + q.args[0] + ")";
        case QueryKind::sequence:
            return "sequence(" + name_list(q.args) + ")";
        case QueryKind::similarity:
            return "Sim(" + q.args[0] + "," + q.args[1] + ")";
        case QueryKind::interference:
            return "interference(" + name_list(q.args) + ")";
        case QueryKind::fit2d:
            return "fit2d";
        default:
            return std::string(query_kind_name(q.kind)) + "(" + name_list(q.args) + ")";
    }
}

void result_rows(const QueryResult& r, std::vector<Row>& rows) {
    const Query& q = r.query;
    const std::string label = query_label(q);
    switch (q.kind) {
        case QueryKind::sequence: {
            const auto& seq = std::get<SequenceOutcome>(r.payload);
            rows.push_back({label, fmt_prob(seq.probability)});
            for (const SequenceStep& step : seq.trace) {
                rows.push_back({"  " + step.event, fmt_prob(step.probability)});
            }
            break;
        }
        case QueryKind::compatibility:
            rows.push_back({label, std::get<bool>(r.payload) ? "true" : "false"});
            break;
        case QueryKind::joint: {
            const auto& jd = std::get<JointDistribution>(r.payload);
            const std::string& a = q.args[0];
            const std::string& b = q.args[1];
            rows.push_back({label, ""});
            rows.push_back({"  " + a + "&" + b, fmt_prob(jd.cells[0][0])});
            rows.push_back({"  " + a + "&~" + b, fmt_prob(jd.cells[0][1])});
            rows.push_back({"  ~" + a + "&" + b, fmt_prob(jd.cells[1][0])});
            rows.push_back({"  ~" + a + "&~" + b, fmt_prob(jd.cells[1][1])});
            break;
        }
        case QueryKind::fit2d: {
            const auto& fr = std::get<FitResult>(r.payload);
            rows.push_back({label, ""});
            rows.push_back({"  theta_f", fmt_angle(fr.theta_f)});
            rows.push_back({"  theta_psi", fmt_angle(fr.theta_psi)});
            rows.push_back({"  residual", fmt_sci(fr.residual)});
            rows.push_back({"  predicted", fmt_prob(fr.predicted[0]) + " " +
                                               fmt_prob(fr.predicted[1]) + " " +
                                               fmt_prob(fr.predicted[2])});
            break;
        }
        default:
            rows.push_back({label, fmt_prob(std::get<double>(r.payload))});
            break;
    }
}

std::string emit_table(const Report& r) {
    std::vector<Row> rows;
    for (const QueryResult& qr : r.results) result_rows(qr, rows);

    std::size_t width = 0;
    for (const Row& row : rows) width = std::max(width, row.label.size());

    std::string out;
    out += "scenario: " + r.scenario + "\n";
    out += "engine:   " + r.engine + "\n";
    out += "\n";
    for (const Row& row : rows) {
        if (row.value.empty()) {
            out += row.label + "\n";
        } else {
            out += row.label + std::string(width + 2 - row.label.size(), ' ') + row.value + "\n";
        }
    }
    return out;
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
    return format == ReportFormat::json ? emit_json(r) : emit_table(r);
}

std::string emit_fit_report(const FitResult& fr) {
    std::string out;
    out += "{\n";
    out += "  \"engine\": " + quoted(engine_string()) + ",\n";
    out += "  \"fit\": {\n";
    out += "    \"theta_f\": " + fmt_angle(fr.theta_f) + ",\n";
    out += "    \"theta_psi\": " + fmt_angle(fr.theta_psi) + ",\n";
    out += "    \"residual\": " + fmt_sci(fr.residual) + ",\n";
    out += "    \"predicted\": [" + fmt_prob(fr.predicted[0]) + ", " + fmt_prob(fr.predicted[1]) +
           ", " + fmt_prob(fr.predicted[2]) + "]\n";
    out += "  }\n";
    out += "}\n";
    return out;
}

}  // namespace qjudge
