#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sojourn/measures.hpp"
#include "sojourn/theorems.hpp"

namespace sojourn {

using Json = nlohmann::json;

/// {"meta": {"subcommand": ..., "params": ...}, "rows": [...]}.
Json make_document(const std::string& subcommand, Json params, Json rows);

Json to_json(const Qr2& x);
/// [[m11, m12], [m21, m22]] as exact strings.
Json to_json(const Mat2& m);
/// {"p": .., "q": .., "r": .., "s": ..}
Json to_json(const PqrsCoeffs& c);

/// Rows {"z", "t", "p", "q", "r", "s"} for every (z, t) with a nonzero
/// coefficient, up to z^order.
Json theorem1_rows(const Theorem1Series& series, int order);
/// Rows {"z", "t", "matrix"} for every nonzero coefficient matrix.
Json theorem2_rows(const Theorem2Series& series, int order);
/// Rows {"n", "y", "k", "matrix"} over the reachable cone, n >= 1.
Json dp_rows(const SojournTable& table);
/// Rows {"k", "weight", "probability"}; probability is null when undefined.
Json measure_rows(const SojournMeasure& m);
/// Rows {"n", "a"}.
Json first_return_rows(const FirstReturnAmplitudes& amps);

/// Header line plus one line per row, columns in the given order. Nested
/// matrices flatten row-major into <key>11, <key>12, <key>21, <key>22.
std::string rows_to_csv(const Json& rows, const std::vector<std::string>& columns);

}  // namespace sojourn

namespace sojourn {

enum class MeasureKind { a, b, classical_arcsine, classical_uniform };

/// "A", "B", "classical-arcsine", "classical-uniform"; throws std::invalid_argument.
MeasureKind parse_measure_kind(const std::string& text);
std::string to_string(MeasureKind kind);

/// "a_re,a_im,b_re,b_im" with each field in the exact Qr2 text form.
QubitState parse_state(const std::string& text);
Json state_params(const QubitState& phi);

/// Documents emitted by the CLI subcommands.
Json expand_document(int theorem, int order);
Json dp_document(int start, int n_max);
Json measure_document(MeasureKind kind, int n, const QubitState& phi);
Json first_return_document(int n_max);

}  // namespace sojourn
