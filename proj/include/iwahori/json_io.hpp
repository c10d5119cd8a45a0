#pragma once

// JSON exchange formats:
//   matrix: {"p": 3, "entries": [["1","0"],["1/3","1"]]}  (numbers also accepted on input)
//   value:  {"zero": false, "sign": -1, "eps_exp": 1, "q_exp": -1, "psi_num": 0, "psi_den": 1}
//           or {"zero": true}

#include <string>

#include "json.hpp"

#include "iwahori/padic.hpp"
#include "iwahori/report.hpp"
#include "iwahori/whittaker.hpp"

namespace iwahori {

using Json = nlohmann::ordered_json;

/// Throws std::invalid_argument on any schema violation.
PAdicMatrix matrix_from_json(const Json& doc);
PAdicMatrix parse_matrix(const std::string& text);
Json matrix_to_json(const PAdicMatrix& m);

Json value_to_json(const WhittakerValue& v);
Json cell_to_json(const Cell& cell);
Json report_to_json(const SuiteReport& report);

}  // namespace iwahori
