#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "holodiff/cyclo.hpp"
#include "holodiff/engine.hpp"
#include "holodiff/ramfilter.hpp"

namespace holodiff::cli {

// Keys keep their insertion order, so dump(parse(dump(x))) == dump(x).
using Json = nlohmann::ordered_json;

// Reads a ramification document; every problem is reported as a
// ValidationError naming the JSON field.
RamInput parse_ram_input(const Json& doc);
RamInput load_ram_input(const std::filesystem::path& path);
Json ram_input_json(const RamInput& input);

// {"conductor": N, "coeffs": {"e": "num/den", ...}}
Json cyclo_json(const CycloNumber& value);

Json decomp_report(const RamInput& input, const EngineResult& result, bool verbose);
std::string decomp_text(const Json& report);

Json psl2_report(std::int64_t ell, bool verbose);
std::string psl2_text(const Json& report);

// Pretty-printed with two-space indentation and a trailing newline.
std::string dump(const Json& doc);

}  // namespace holodiff::cli
