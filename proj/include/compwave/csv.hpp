#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "compwave/diagnostics.hpp"
#include "compwave/solver.hpp"
#include "compwave/waves.hpp"

namespace compwave {

/// Shortest round-trip decimal representation ('.' separator, locale-free).
std::string format_double(double v);

/// RFC-4180 field quoting: quotes only when the field contains a comma,
/// quote, or newline.
std::string csv_escape(const std::string& field);

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

/// Parse RFC-4180 CSV (quoted fields, embedded commas/newlines).
std::vector<std::vector<std::string>> parse_csv(std::istream& in);

/// Ansatz snapshot: x, v_hat, u_hat, v_c, u_c, v_r, u_r, q1, h.
void write_profile_csv(std::ostream& os, const WaveAnsatz& ansatz, const Grid& grid,
                       double t);

/// Solver snapshot: x, v, u, v_hat, u_hat, phi, psi.
void write_snapshot_csv(std::ostream& os, const SolverState& state,
                        const WaveAnsatz& ansatz);

/// One row per snapshot with every DiagnosticsRecord field.
void write_diagnostics_csv(std::ostream& os, const std::vector<DiagnosticsRecord>& records);

/// Interaction-curve samples: t, x1, z1, y1 and the window/slack residuals.
void write_interaction_csv(std::ostream& os, const std::vector<CurveSample>& samples);

}  // namespace compwave
