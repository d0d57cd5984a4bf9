#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "flatkit/concentration.hpp"
#include "flatkit/constants.hpp"
#include "flatkit/families.hpp"
#include "flatkit/harness.hpp"
#include "flatkit/norms.hpp"
#include "flatkit/search.hpp"

namespace flatkit {

using Json = nlohmann::ordered_json;

// Shortest representation that parses back to the same double; '.' decimal
// separator, locale-independent.
std::string format_double(double value);

std::uint64_t fnv1a64(const std::string& text);

Json to_json(const NormReport& report);
NormReport norm_report_from_json(const Json& j);

Json to_json(const MZReport& report);
MZReport mz_report_from_json(const Json& j);

Json to_json(const ConstantsReport& report);
ConstantsReport constants_report_from_json(const Json& j);

Json to_json(const Arc& arc);
Arc arc_from_json(const Json& j);

Json to_json(const ConcentrationReport& report);
ConcentrationReport concentration_report_from_json(const Json& j);

Json to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

// Canonical form: excludes wall-clock so equal configs dump identical bytes.
Json to_json(const SearchResult& result);
SearchResult search_result_from_json(const Json& j);

Json to_json(const TrendTable& table);
TrendTable trend_table_from_json(const Json& j);

Json to_json(const WitnessPanel& panel);
WitnessPanel witness_panel_from_json(const Json& j);

Json to_json(const ZeroDensityRecord& record);
ZeroDensityRecord zero_density_record_from_json(const Json& j);

Json to_json(const std::vector<TailBoundRow>& rows);

// {"kind": "sign"|"binary"|"int", "coeffs": [...]}
Json polynomial_record(const IntPolynomial& poly, const std::string& kind);

std::string to_csv(const TrendTable& table);
std::string to_csv(const WitnessPanel& panel);
std::string to_csv(const SearchResult& result);  // q, alpha, objective, signs, method, seed

// One two-column gnuplot file per selected metric; returns the file names
// written. Unknown metric names are an error; empty selection writes none.
std::vector<std::string> emit_plotdata(const TrendTable& table,
                                       const std::vector<std::string>& series,
                                       const std::string& out_dir);
std::vector<std::string> emit_plotdata(const WitnessPanel& panel,
                                       const std::vector<std::string>& series,
                                       const std::string& out_dir);

}  // namespace flatkit
