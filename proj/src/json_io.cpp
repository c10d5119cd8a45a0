#include "iwahori/json_io.hpp"

#include <stdexcept>

namespace iwahori {

namespace {

Rational entry_from_json(const Json& e) {
  if (e.is_string()) return parse_rational(e.get<std::string>());
  if (e.is_number_integer()) return Rational(Integer(e.dump()));
  throw std::invalid_argument("matrix entries must be rational strings or integers");
}

}  // namespace

PAdicMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("p") || !doc.contains("entries")) {
    throw std::invalid_argument("matrix document needs \"p\" and \"entries\"");
  }
  if (!doc["p"].is_number_integer()) throw std::invalid_argument("\"p\" must be an integer");
  const long p = doc["p"].get<long>();
  if (!is_prime(p)) throw std::invalid_argument("\"p\" must be prime");
  const Json& rows = doc["entries"];
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("\"entries\" must be a non-empty array");
  std::vector<std::vector<Rational>> parsed;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rows.size()) throw std::invalid_argument("matrix must be square");
    auto& out = parsed.emplace_back();
    for (const auto& e : row) out.push_back(entry_from_json(e));
  }
  return PAdicMatrix(p, std::move(parsed));
}

PAdicMatrix parse_matrix(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return matrix_from_json(doc);
}

Json matrix_to_json(const PAdicMatrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"p", m.prime()}, {"entries", std::move(rows)}};
}

Json value_to_json(const WhittakerValue& v) {
  if (v.is_zero()) return Json{{"zero", true}};
  return Json{{"zero", false},
              {"sign", v.sign()},
              {"eps_exp", v.eps_exp()},
              {"q_exp", v.q_exp()},
              {"psi_num", v.psi_phase().get_num().get_si()},
              {"psi_den", v.psi_phase().get_den().get_si()}};
}

Json cell_to_json(const Cell& cell) {
  return Json{{"kbar", cell.kbar.exps()},
              {"w", cell.w.window()},
              {"n_factor", matrix_to_json(cell.n_factor)},
              {"t0_factor", matrix_to_json(cell.t0_factor)},
              {"j_factor", matrix_to_json(cell.j_factor)}};
}

Json report_to_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& t : report.tallies) {
    checks.push_back(Json{{"name", t.name}, {"passed", t.passed}, {"failed", t.failed}, {"witnesses", t.witnesses}});
  }
  return Json{{"suite", report.suite}, {"ok", report.ok()}, {"checks", std::move(checks)}};
}

}  // namespace iwahori
