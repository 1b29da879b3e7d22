#ifndef PDCOH_REPORT_HPP
#define PDCOH_REPORT_HPP

#include <string>

#include <json.hpp>

#include "pdcoh/cohomology.hpp"
#include "pdcoh/shtuka.hpp"

namespace pdcoh {

inline constexpr const char* kEngineName = "pdcoh";
inline constexpr const char* kEngineVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// ---- datum files ---------------------------------------------------------
//
// {
//   "preset": "drinfeld:2"                      // preset overrides the rest
// }
// {
//   "group": "GL4",                             // CartanSpec string
//   "galois": {"cycles": "(a1 a3)"},            // optional; labels a<i>, t<i>
//   "s": 1,                                     // optional, default 1
//   "mu": [1, 0, 0, -1],
//   "nu": ["1/2", "1/2", "1/2", "1/2"],          // or {"lambda": "1/2"}
//   "j": {"delta": [...], "omega": [...], "labels": [...]},  // optional
//   "normalization": ["3/2"]                     // optional per-factor scales
// }
LocalShtukaDatum parse_datum_json(const Json& doc);
LocalShtukaDatum load_datum_file(const std::string& path);

// ---- machine reports ------------------------------------------------------

Json datum_json(const LocalShtukaDatum& datum);
Json summand_json(const CohomologySummand& s, const LocalShtukaDatum& datum);
Json graded_sum_json(const GradedRepSum& sum, const LocalShtukaDatum& datum);
Json spectral_page_json(const SpectralPage& page, const LocalShtukaDatum& datum);
Json splitting_json(const SplittingReport& report, const LocalShtukaDatum& datum);
Json euler_json(const EulerReport& report, const LocalShtukaDatum& datum);
Json ext_answer_json(const ExtAnswer& answer);

Json make_report(const std::string& command, const LocalShtukaDatum& datum, Json parameters,
                 Json results);

GradedRepSum parse_graded_sum(const Json& doc, const LocalShtukaDatum& datum);

std::string serialize_machine(const Json& report);  // byte-stable dump

// ---- human rendering -------------------------------------------------------

std::string rep_symbol_name(const RepSymbol& rep, const LocalShtukaDatum& datum,
                            bool continuous = false);
std::string render_graded_sum(const GradedRepSum& sum, const LocalShtukaDatum& datum,
                              bool continuous = false);
std::string render_splitting(const SplittingReport& report, const LocalShtukaDatum& datum);

}  // namespace pdcoh

#endif
