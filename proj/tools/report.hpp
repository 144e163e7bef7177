#pragma once

#include "hypercount/value_ring.hpp"

#include <json.hpp>

#include <string>

namespace hypercount::cli {

using Json = nlohmann::ordered_json;

/// {"re", "im"} for float values, {"residue", "modulus"} for exact ones.
Json char_value_json(const CharValue& value);

/// Compact single-token rendering for text and CSV output.
std::string char_value_text(const CharValue& value);

/// Quotes a CSV field when it contains a separator or quote.
std::string csv_field(const std::string& s);

} // namespace hypercount::cli
