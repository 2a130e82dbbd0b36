#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "blockmagic/blockrep.hpp"
#include "blockmagic/rank1.hpp"

namespace blockmagic {

/// Text format: one row per line, entries separated by whitespace. Lines
/// starting with '#' are skipped; the first blank line after a row ends the
/// matrix. Throws Parse on ragged rows or bad scalars.
Matrix parse_matrix_text(std::istream& in);
Matrix parse_matrix_text(std::string_view text);
std::string format_matrix_text(const Matrix& m);

/// {"rows": r, "cols": c, "entries": [["1", "s2"], ...]}
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// Either a JSON object as above or the text format.
Matrix parse_matrix_any(std::string_view text);

/// Column vector from a JSON array of scalar strings (numbers also accepted).
Matrix vector_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const Matrix& v);

QuadScalar scalar_from_json(const nlohmann::json& j);

/// {"u": [...], "v": [...], "x": [...], "y": [...], "w": "0"}; w defaults to 0.
std::pair<Rank1Spec, QuadScalar> spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const Rank1Spec& spec, const QuadScalar& w);

/// {"parity": "even"|"odd", "half": n, "w": "...", "Y": M, "Z": M, "V": M, "W": M}
nlohmann::json components_to_json(const BlockComponents& c);
BlockComponents components_from_json(const nlohmann::json& j);

}  // namespace blockmagic
