#pragma once

#include "vpec/bounds.hpp"
#include "vpec/core.hpp"
#include "vpec/lincode.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace vpec::io {

using json = nlohmann::json;

/// A linear code read from or written to the JSON code format
/// {"q", "p", "m", "n", "k", "generator"}, with optional "packet_length" (codeword coordinates are
/// split into consecutive packets of that length) and optional "grs" {"points", "multipliers"}.
struct CodeFile {
    lincode::LinearCode code;
    std::size_t packet_length = 1;
    std::optional<lincode::GrsParams> grs;
};

json code_to_json(const lincode::LinearCode& code, std::size_t packet_length = 1,
                  const std::optional<lincode::GrsParams>& grs = std::nullopt);
/// Throws ParseError on malformed or inconsistent input.
CodeFile code_from_json(const json& j);

/// Throws ParseError when the file is missing or not valid JSON.
json read_json_file(const std::string& path);

/// Reads a list of integer rows, e.g. {"packets": [[...], ...]}. Throws ParseError.
std::vector<Word> read_rows(const json& j, const std::string& key);

/// Erasures become null.
json reconstruction_json(const core::ReconstructionWord& word);

/// One line of the simulate trace.
json trace_json(const core::TraceEvent& event);

/// Curves as CSV: "# config <json>" and "# omitted"/"# curve" comment lines, then
/// curve,R_exact,D_exact,R_dec,D_dec.
std::string curves_csv(const bounds::CurveSet& set, const json& config);
json curves_json(const bounds::CurveSet& set, const json& config);

/// Asymptotic curves in the same schema; R is the overall rate.
std::string asymptotic_csv(const bounds::AsymptoticCurves& curves, const json& config);
json asymptotic_json(const bounds::AsymptoticCurves& curves, const json& config);

/// Codeword table of a linear code whose coordinates are grouped into packets of `packet_length`.
core::CodeTable linear_code_table(const lincode::LinearCode& code, std::size_t packet_length,
                                  std::uint64_t budget = kDefaultBudget);

/// Generator of a linear scheme, read off from the encodings of unit messages. The packets are
/// concatenated in order.
lincode::LinearCode scheme_generator(const core::VpecScheme& scheme);

}  // namespace vpec::io
