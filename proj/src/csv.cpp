#include "compwave/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

namespace compwave {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(fields[i]);
    }
    os << '\n';
}

std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    char c;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                field_started = true;
                break;
            case ',':
                row.push_back(field);
                field.clear();
                field_started = true;
                break;
            case '\r':
                break;
            case '\n':
                if (field_started || !field.empty() || !row.empty()) {
                    row.push_back(field);
                    rows.push_back(row);
                }
                row.clear();
                field.clear();
                field_started = false;
                break;
            default:
                field += c;
                field_started = true;
        }
    }
    if (field_started || !field.empty() || !row.empty()) {
        row.push_back(field);
        rows.push_back(row);
    }
    return rows;
}

void write_profile_csv(std::ostream& os, const WaveAnsatz& ansatz, const Grid& grid,
                       double t) {
    write_csv_row(os, {"x", "v_hat", "u_hat", "v_c", "u_c", "v_r", "u_r", "q1", "h"});
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const AnsatzEval e = ansatz.eval(x, t);
        write_csv_row(os, {format_double(x), format_double(e.v_hat), format_double(e.u_hat),
                           format_double(e.contact.v), format_double(e.contact.u),
                           format_double(e.rare.v), format_double(e.rare.u),
                           format_double(e.q1), format_double(e.h)});
    }
}

void write_snapshot_csv(std::ostream& os, const SolverState& state,
                        const WaveAnsatz& ansatz) {
    write_csv_row(os, {"x", "v", "u", "v_hat", "u_hat", "phi", "psi"});
    for (int i = 0; i < state.grid.n; ++i) {
        const double x = state.grid.x(i);
        const auto [vh, uh] = ansatz.value(x, state.t);
        write_csv_row(os, {format_double(x), format_double(state.v[i]),
                           format_double(state.u[i]), format_double(vh), format_double(uh),
                           format_double(state.v[i] - vh), format_double(state.u[i] - uh)});
    }
}

void write_diagnostics_csv(std::ostream& os, const std::vector<DiagnosticsRecord>& records) {
    write_csv_row(os, {"t", "l2_phi", "l2_psi", "h1_phi", "h1_psi", "sup_phi", "sup_psi",
                       "g_increment", "g", "weighted_l2", "h_l1", "h_linf", "x1", "z1"});
    const std::vector<double> g = g_functional(records);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const DiagnosticsRecord& r = records[i];
        write_csv_row(os, {format_double(r.t), format_double(r.l2_phi),
                           format_double(r.l2_psi), format_double(r.h1_phi),
                           format_double(r.h1_psi), format_double(r.sup_phi),
                           format_double(r.sup_psi), format_double(r.g_increment),
                           format_double(g[i]), format_double(r.weighted_l2),
                           format_double(r.h_l1), format_double(r.h_linf),
                           format_double(r.x1), format_double(r.z1)});
    }
}

void write_interaction_csv(std::ostream& os, const std::vector<CurveSample>& samples) {
    write_csv_row(os, {"t", "x1", "z1", "y1", "x1_lower_slack", "x1_upper_slack",
                       "y1_sq_upper_slack", "y1_sq_lower_slack", "z1_lower_slack"});
    for (const CurveSample& s : samples) {
        write_csv_row(os, {format_double(s.t), format_double(s.x1), format_double(s.z1),
                           format_double(s.y1), format_double(s.x1_lower_slack),
                           format_double(s.x1_upper_slack), format_double(s.y1_sq_upper_slack),
                           format_double(s.y1_sq_lower_slack), format_double(s.z1_lower_slack)});
    }
}

}  // namespace compwave
