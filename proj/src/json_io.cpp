#include "qwedge/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qwedge/errors.hpp"

namespace qwedge {

namespace {

using nlohmann::ordered_json;

}  // namespace

PureState parse_state_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("state document must be a JSON object");
    }
    if (!doc.contains("dims") || !doc["dims"].is_array()) {
        throw ParseError("state document needs a 'dims' array");
    }
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
        throw ParseError("state document needs an 'amplitudes' array");
    }

    DimList dims;
    for (const auto& entry : doc["dims"]) {
        if (!entry.is_number_unsigned() || entry.get<std::uint64_t>() == 0) {
            throw ParseError("'dims' entries must be positive integers");
        }
        dims.push_back(entry.get<std::size_t>());
    }

    std::vector<Complex> amps;
    amps.reserve(doc["amplitudes"].size());
    for (const auto& entry : doc["amplitudes"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw ParseError("'amplitudes' entries must be [re, im] pairs");
        }
        const double re = entry[0].get<double>();
        const double im = entry[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw ParseError("'amplitudes' entries must be finite");
        }
        amps.emplace_back(re, im);
    }
    return make_state(std::move(dims), std::move(amps));
}

std::string state_to_json(const PureState& state) {
    ordered_json doc;
    doc["dims"] = state.dims();
    auto& amps = doc["amplitudes"] = ordered_json::array();
    for (const Complex& a : state.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    return doc.dump();
}

PureState load_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open state file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_json(buffer.str());
}

}  // namespace qwedge
