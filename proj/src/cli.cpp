#include "iwahori/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "iwahori/hecke.hpp"
#include "iwahori/json_io.hpp"
#include "iwahori/principal_series.hpp"
#include "iwahori/whittaker.hpp"

namespace iwahori {

namespace {

constexpr int kMaxTableRange = 6;
constexpr int kMaxTableN = 4;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GuardError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

std::string join(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

class Runner {
 public:
  Runner(RunConfig cfg, bool n_given, bool p_given, std::ostream& out)
      : cfg_(std::move(cfg)), n_given_(n_given), p_given_(p_given), out_(out) {}

  void validate() {
    if (cfg_.n < 2) throw UsageError("--n must be at least 2");
    if (!is_prime(cfg_.p)) throw UsageError("--p must be prime");
    if (cfg_.eps_exp < 0 || cfg_.eps_exp >= cfg_.n) throw UsageError("--eps-exp must lie in [0, n)");
    if (cfg_.samples < 1) throw UsageError("--samples must be positive");
    if (cfg_.range < 0) throw UsageError("--range must be nonnegative");
    if (cfg_.format != "json" && cfg_.format != "csv") throw UsageError("--format must be json or csv");
    scale_ = parse_rational(cfg_.scale);
  }

  PAdicMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read matrix file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    PAdicMatrix g = parse_matrix(buffer.str());
    if (n_given_ && g.size() != cfg_.n) throw UsageError("matrix size disagrees with --n");
    if (p_given_ && g.prime() != cfg_.p) throw UsageError("matrix prime disagrees with --p");
    if (cfg_.eps_exp >= g.size()) throw UsageError("--eps-exp must lie in [0, n)");
    if (g.determinant() == 0) throw SingularMatrixError("matrix is singular");
    return g;
  }

  int decompose(const std::string& path) {
    const PAdicMatrix g = load_matrix(path);
    const Cell cell = iwahori_cell(g);
    Weight kbar = cell.kbar;
    const int centre = kbar[kbar.size()];
    if (cfg_.mod_center) kbar = kbar - Weight::constant(kbar.size(), centre);
    if (cfg_.format == "csv") {
      out_ << "k,w\n" << join(kbar.exps(), " ") << ',' << join(cell.w.window(), " ") << '\n';
      return kExitOk;
    }
    Json doc{{"n", g.size()}, {"p", g.prime()}};
    Json body = cell_to_json(cell);
    body["kbar"] = kbar.exps();
    doc.update(body);
    if (cfg_.mod_center) doc["central_exponent"] = centre;
    out_ << doc.dump() << '\n';
    return kExitOk;
  }

  int eval(const std::string& path) {
    const PAdicMatrix g = load_matrix(path);
    const WhittakerValue v = eval_matrix(g, cfg_.eps_exp);
    if (cfg_.format == "csv") {
      out_ << "zero,sign,eps_exp,q_exp,psi_num,psi_den\n" << csv_value(v) << '\n';
    } else {
      out_ << scaled_json(v).dump() << '\n';
    }
    return kExitOk;
  }

  int table() {
    if (cfg_.n > kMaxTableN || cfg_.range > kMaxTableRange) {
      throw GuardError("table is limited to n <= 4 and range <= 6");
    }
    const int n = cfg_.n;
    const WhittakerParams params{n, cfg_.p, cfg_.eps_exp};
    const auto perms = Permutation::all(n);
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "k,w,zero,sign,eps_exp,q_exp\n";
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    for (int i = 0; i + 1 < n; ++i) k[static_cast<std::size_t>(i)] = -cfg_.range;
    for (;;) {
      for (const auto& w : perms) {
        const WhittakerValue v = eval_cell(Weight(k), w, params);
        if (v.is_zero() && !cfg_.include_zeros) continue;
        if (cfg_.format == "csv") {
          csv << join(k, " ") << ',' << join(w.window(), " ") << ',' << csv_cell_value(v) << '\n';
        } else {
          Json row{{"k", k}, {"w", w.window()}};
          row.update(scaled_json(v));
          rows.push_back(std::move(row));
        }
      }
      // odometer over k_1..k_{n-1}; k_n stays 0
      int pos = n - 2;
      while (pos >= 0 && k[static_cast<std::size_t>(pos)] == cfg_.range) {
        k[static_cast<std::size_t>(pos)] = -cfg_.range;
        --pos;
      }
      if (pos < 0) break;
      ++k[static_cast<std::size_t>(pos)];
    }
    if (cfg_.format == "csv") {
      out_ << csv.str();
    } else {
      out_ << Json{{"n", n}, {"p", cfg_.p}, {"eps_exp", cfg_.eps_exp}, {"rows", std::move(rows)}}.dump() << '\n';
    }
    return kExitOk;
  }

  int verify(const std::string& suite) {
    std::vector<SuiteReport> reports;
    const bool all = suite == "all";
    if (suite != "hecke" && suite != "principal" && suite != "whittaker" && !all) {
      throw UsageError("unknown suite '" + suite + "'");
    }
    if (suite == "hecke" || all) {
      if (cfg_.n > 5) throw GuardError("hecke suite supports n <= 5");
      reports.push_back(to_suite_report(verify_presentation(cfg_.n)));
    }
    if (suite == "principal" || all) {
      if (cfg_.n > 4) throw GuardError("principal suite supports n <= 4");
      reports.push_back(verify_principal_series(SeriesParams{cfg_.n, cfg_.p, cfg_.eps_exp}, cfg_.samples, cfg_.seed));
    }
    if (suite == "whittaker" || all) {
      if (cfg_.n > 4) throw GuardError("whittaker suite supports n <= 4");
      reports.push_back(verify_whittaker(WhittakerParams{cfg_.n, cfg_.p, cfg_.eps_exp}, cfg_.samples, cfg_.seed));
    }
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.ok();
    if (cfg_.format == "csv") {
      out_ << "suite,check,passed,failed\n";
      for (const auto& r : reports) {
        for (const auto& t : r.tallies) out_ << r.suite << ',' << t.name << ',' << t.passed << ',' << t.failed << '\n';
      }
    } else {
      Json results = Json::array();
      for (const auto& r : reports) results.push_back(report_to_json(r));
      Json config{{"n", cfg_.n}, {"p", cfg_.p}, {"eps_exp", cfg_.eps_exp}, {"seed", cfg_.seed},
                  {"samples", cfg_.samples}};
      out_ << Json{{"suite", suite}, {"config", config}, {"ok", ok}, {"results", std::move(results)}}.dump() << '\n';
    }
    return ok ? kExitOk : kExitVerificationFailed;
  }

 private:
  Json scaled_json(const WhittakerValue& v) const {
    if (scale_ == 0) return value_to_json(WhittakerValue::zero(v.modulus()));
    Json j = value_to_json(v);
    if (scale_ != 1 && !v.is_zero()) j["coeff"] = to_string(scale_);
    return j;
  }

  std::string csv_cell_value(const WhittakerValue& v) const {
    if (v.is_zero() || scale_ == 0) return "true,,,";
    return "false," + std::to_string(v.sign()) + "," + std::to_string(v.eps_exp()) + "," + std::to_string(v.q_exp());
  }

  std::string csv_value(const WhittakerValue& v) const {
    if (v.is_zero() || scale_ == 0) return "true,,,,,";
    return csv_cell_value(v) + "," + v.psi_phase().get_num().get_str() + "," + v.psi_phase().get_den().get_str();
  }

  RunConfig cfg_;
  bool n_given_;
  bool p_given_;
  std::ostream& out_;
  Rational scale_ = 1;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Iwahori-fixed Whittaker functions of Steinberg representations of GL(n)", "iwahori"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* n_opt = app.add_option("--n", cfg.n, "rank n of GL(n)");
  auto* p_opt = app.add_option("--p", cfg.p, "residue characteristic p (q = p)");
  app.add_option("--eps-exp", cfg.eps_exp, "eps = exp(2 pi i eps_exp / n)");
  app.add_option("--seed", cfg.seed, "random seed for verification sweeps");
  app.add_option("--samples", cfg.samples, "random points per verification suite");
  app.add_option("--range", cfg.range, "bound on |k_i| for table sweeps");
  app.add_option("--format", cfg.format, "json or csv");
  app.add_flag("--include-zeros", cfg.include_zeros, "keep zero rows in tables");
  app.add_option("--scale", cfg.scale, "rational normalization constant (W(1) = scale)");
  app.add_flag("--mod-center", cfg.mod_center, "report kbar modulo the centre (k_n = 0)");

  std::string matrix_path;
  std::string suite = "all";
  auto* decompose = app.add_subcommand("decompose", "Iwahori-Bruhat cell of a matrix");
  decompose->add_option("matrix", matrix_path, "matrix JSON file")->required();
  auto* eval = app.add_subcommand("eval", "Whittaker value at a matrix");
  eval->add_option("matrix", matrix_path, "matrix JSON file")->required();
  auto* table = app.add_subcommand("table", "Whittaker values over all cells with k_n = 0");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "hecke | principal | whittaker | all");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }

  try {
    Runner runner(cfg, n_opt->count() > 0, p_opt->count() > 0, out);
    runner.validate();
    if (decompose->parsed()) return runner.decompose(matrix_path);
    if (eval->parsed()) return runner.eval(matrix_path);
    if (table->parsed()) return runner.table();
    return runner.verify(suite);
  } catch (const SingularMatrixError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSingular;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
}

}  // namespace iwahori
