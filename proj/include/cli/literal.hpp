#ifndef CLI_LITERAL_HPP
#define CLI_LITERAL_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "riordan/matrix.hpp"
#include "theorems/report.hpp"

namespace cli {

using nlohmann::json;

/// --ring values: F2, F3, Fp:<p>, Zmod:<m>, Z; Z4 is shorthand for Zmod:4.
fps::RingSpec parse_ring(const std::string& text);

json ring_to_json(const fps::RingSpec& ring);
fps::RingSpec ring_from_json(const json& j);

/// Series literals are arrays of integers indexed by degree; entries may
/// be JSON numbers or decimal strings. Output always uses decimal strings.
fps::TruncatedSeries series_from_json(const json& arr, const fps::RingSpec& ring);
json series_to_json(const fps::TruncatedSeries& s);

riordan::Pair pair_from_json(const json& j, std::optional<fps::RingSpec> default_ring = {});
json pair_to_json(const riordan::Pair& p);

/// Polynomial text like "1 + t + 3t^2 - t^4"; errors carry the position.
fps::TruncatedSeries parse_poly(const std::string& text, const fps::RingSpec& ring,
                                std::size_t order);
std::string poly_to_text(const fps::TruncatedSeries& s);

/// Pair text: "(1+t, t+t^2)", generator names "a1", "a2[3]", "e4", "e4[1]",
/// "id"/"a0"/"e0", or an inline JSON object.
riordan::Pair parse_pair(const std::string& text, const fps::RingSpec& ring, std::size_t order);
std::string pair_to_text(const riordan::Pair& p);

json matrix_to_json(const riordan::Matrix& m);
std::string matrix_to_csv(const riordan::Matrix& m);
std::string matrix_to_text(const riordan::Matrix& m);

json report_to_json(const theorems::VerificationReport& r);
json reports_to_json(const std::vector<theorems::VerificationReport>& rs);

}  // namespace cli

#endif
