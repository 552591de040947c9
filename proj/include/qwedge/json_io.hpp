#pragma once

#include <string>

#include "qwedge/state.hpp"

namespace qwedge {

// State document format:
//   {"dims": [N1,...,Nm], "amplitudes": [[re,im], ...]}
// with amplitudes flat in row-major order. Parsing rejects length
// mismatches, non-finite numbers, and malformed documents with ParseError
// (invalid dims entries map to ArgumentError/DimensionError).
PureState parse_state_json(const std::string& text);
std::string state_to_json(const PureState& state);

// Reads the file and parses it; unreadable files raise ParseError.
PureState load_state_file(const std::string& path);

}  // namespace qwedge
