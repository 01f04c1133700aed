#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "gridcodes/ball.hpp"
#include "gridcodes/bounds.hpp"
#include "gridcodes/code_analysis.hpp"
#include "gridcodes/count.hpp"
#include "gridcodes/cyclic.hpp"
#include "gridcodes/grid.hpp"

namespace gridcodes {

/// Counts that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json count_to_json(const Count& value);

nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const Grid& g);
/// {"dims":[...],"codewords":[[...],...]}
nlohmann::json to_json(const GridCode& code);
nlohmann::json to_json(const BallSizeReport& report);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const CodeAnalysis& analysis);
nlohmann::json to_json(const BoundChain& chain);

/// Parses JSON text, turning syntax errors into DomainError with line/column.
nlohmann::json parse_json_text(std::string_view text, std::string_view source);

/// Reads the code file format; rejects duplicates and out-of-grid codewords.
/// Unknown keys are ignored.
GridCode code_from_json(const nlohmann::json& j);
/// {"orders":[...],"generator_exponents":[...]}
CyclicCodeSpec cyclic_spec_from_json(const nlohmann::json& j);

}  // namespace gridcodes
