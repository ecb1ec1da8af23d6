#include "fibercover/certify.hpp"
#include "fibercover/json_io.hpp"
#include "fibercover/quotient_search.hpp"
#include "fibercover/snf.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using fibercover::Int;
using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open output file " + out_path);
  os << text << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON in ") + path +
                                ": " + e.what());
  }
  return j;
}

fibercover::EngineConfig load_config(const std::string& path, int degree_cap,
                                     long long node_budget, bool no_swap,
                                     bool no_framings) {
  fibercover::EngineConfig cfg;
  if (!path.empty()) cfg = fibercover::config_from_json(read_json_file(path));
  if (degree_cap > 0) cfg.degree_cap = degree_cap;
  if (node_budget > 0) cfg.node_budget = node_budget;
  if (no_swap) cfg.use_swap = false;
  if (no_framings) cfg.use_framings = false;
  return cfg;
}

fibercover::IntMat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix must be a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  fibercover::IntMat m = fibercover::intmat(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw std::invalid_argument("matrix rows have unequal lengths");
    for (int c = 0; c < cols; ++c) {
      const json& v = j[i][c];
      if (v.is_number_integer())
        m.at(i, c) = Int(v.get<long long>());
      else if (v.is_string())
        m.at(i, c) = Int(v.get<std::string>());
      else
        throw std::invalid_argument("matrix entries must be integers");
    }
  }
  return m;
}

json matrix_json(const fibercover::IntMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(i, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

int run(int argc, char** argv) {
  CLI::App app{"Finite-cover certificates for filled punctured-torus bundles"};
  app.require_subcommand(1);

  std::string word, out_path, format = "json", config_path, exceptions;
  long long mu = 0, lambda = 0, node_budget = 0, p = 0, q = 0, r = 0;
  int window = 0, degree_cap = 0, index_cap = 0, max_rows = 0;
  bool no_swap = false, no_framings = false;
  std::string case_name, rsum = "0", in_path;

  CLI::App* c_certify =
      app.add_subcommand("certify", "Certify one filling slope");
  c_certify->add_option("--word", word, "monodromy word, e.g. DxDy^4")
      ->required();
  c_certify->add_option("--mu", mu, "filling slope numerator")->required();
  c_certify->add_option("--lambda", lambda, "filling slope boundary power")
      ->required();
  c_certify->add_option("--format", format, "json or csv");
  c_certify->add_option("--out", out_path, "write output to this file");
  c_certify->add_option("--config", config_path, "engine configuration JSON");
  c_certify->add_option("--degree-cap", degree_cap, "witness degree cap");
  c_certify->add_option("--node-budget", node_budget, "search node budget");
  c_certify->add_option("--index-cap", index_cap,
                        "if positive, fall back to a coset sweep of the "
                        "filled group up to this index");
  c_certify->add_flag("--no-swap", no_swap, "skip the quarter-turn variant");
  c_certify->add_flag("--no-framings", no_framings, "skip word rewritings");

  CLI::App* c_scan = app.add_subcommand(
      "scan", "Certify every coprime slope in a window, or run a built-in "
              "exception scan");
  c_scan->add_option("--word", word, "monodromy word");
  c_scan->add_option("--window", window, "scan |mu|, |lambda| <= window")
      ->required();
  c_scan->add_option("--exceptions", exceptions,
                     "fig8 or thm12: slope-grid exception scans");
  c_scan->add_option("--format", format, "json or csv");
  c_scan->add_option("--out", out_path, "write output to this file");
  c_scan->add_option("--config", config_path, "engine configuration JSON");
  c_scan->add_option("--degree-cap", degree_cap, "witness degree cap");
  c_scan->add_option("--node-budget", node_budget, "search node budget");
  c_scan->add_flag("--no-swap", no_swap, "skip the quarter-turn variant");
  c_scan->add_flag("--no-framings", no_framings, "skip word rewritings");

  CLI::App* c_verify =
      app.add_subcommand("verify", "Recheck a certificate file");
  c_verify->add_option("--in", in_path, "certificate JSON file")->required();

  CLI::App* c_quotient = app.add_subcommand(
      "quotient", "Search permutation witnesses for a construction template "
                  "or a triangle system");
  c_quotient->add_option("--case", case_name,
                         "construction label: 1, 2a, 2b, 3a, 4a, 5a, 5b");
  c_quotient->add_option("--rows", max_rows, "row count for 2b/4a");
  c_quotient->add_option("--rsum", rsum, "twist exponent sum R");
  c_quotient->add_option("--mu", mu, "filling slope numerator");
  c_quotient->add_option("--lambda", lambda, "filling slope boundary power");
  c_quotient->add_option("--p", p, "triangle order p");
  c_quotient->add_option("--q", q, "triangle order q");
  c_quotient->add_option("--r", r, "triangle order r");
  c_quotient->add_option("--degree-cap", degree_cap, "witness degree cap");
  c_quotient->add_option("--node-budget", node_budget, "search node budget");
  c_quotient->add_option("--out", out_path, "write output to this file");

  CLI::App* c_snf = app.add_subcommand(
      "snf", "Smith normal form of an integer matrix (JSON rows)");
  c_snf->add_option("--in", in_path, "matrix JSON file")->required();
  c_snf->add_option("--out", out_path, "write output to this file");

  CLI11_PARSE(app, argc, argv);

  if (*c_certify) {
    fibercover::EngineConfig cfg =
        load_config(config_path, degree_cap, node_budget, no_swap, no_framings);
    fibercover::Certificate cert =
        fibercover::certify_text(word, {mu, lambda}, cfg);
    if (cert.status != fibercover::CertStatus::Certified && index_cap > 0) {
      bool exhausted = false;
      auto swept = fibercover::low_index_certificate(
          fibercover::parse_twist_word(word), {mu, lambda}, index_cap,
          cfg.node_budget, &exhausted);
      if (swept) {
        swept->notes.insert(swept->notes.end(), cert.notes.begin(),
                            cert.notes.end());
        cert = *swept;
      } else if (exhausted &&
                 cert.status != fibercover::CertStatus::SearchExhausted) {
        cert.status = fibercover::CertStatus::SearchExhausted;
        cert.notes.push_back("coset sweep ran out of budget");
      } else if (!swept) {
        cert.notes.push_back("coset sweep up to index " +
                             std::to_string(index_cap) + " found no cover");
      }
    }
    if (format == "csv")
      emit(fibercover::certificate_csv_header() + "\n" +
               fibercover::certificate_csv_row(cert),
           out_path);
    else
      emit(fibercover::certificate_json(cert).dump(2), out_path);
    return 0;
  }

  if (*c_scan) {
    if (!exceptions.empty()) {
      std::vector<fibercover::Slope> slopes;
      if (exceptions == "fig8")
        slopes = fibercover::fig8_exception_scan(window);
      else if (exceptions == "thm12")
        slopes = fibercover::thm12_exception_scan(window);
      else
        throw std::invalid_argument("--exceptions must be fig8 or thm12");
      if (format == "csv") {
        std::ostringstream os;
        os << "mu,lambda";
        for (const auto& s : slopes) os << '\n' << s.mu << ',' << s.lambda;
        emit(os.str(), out_path);
      } else {
        json j;
        j["schema"] = "fibercover/1";
        j["scan"] = exceptions;
        j["window"] = window;
        json arr = json::array();
        for (const auto& s : slopes)
          arr.push_back(json{{"mu", s.mu}, {"lambda", s.lambda}});
        j["slopes"] = std::move(arr);
        emit(j.dump(2), out_path);
      }
      return 0;
    }
    if (word.empty())
      throw std::invalid_argument("scan needs --word or --exceptions");
    fibercover::EngineConfig cfg =
        load_config(config_path, degree_cap, node_budget, no_swap, no_framings);
    fibercover::TwistWord tw = fibercover::parse_twist_word(word);
    std::vector<fibercover::ScanRow> rows =
        fibercover::scan_slopes(tw, window, cfg);
    if (format == "csv")
      emit(fibercover::scan_csv(fibercover::twist_str(tw), rows), out_path);
    else
      emit(fibercover::scan_json(fibercover::twist_str(tw), rows).dump(2),
           out_path);
    return 0;
  }

  if (*c_verify) {
    fibercover::Certificate cert =
        fibercover::certificate_from_json(read_json_file(in_path));
    fibercover::VerifyReport rep = fibercover::verify_certificate(cert);
    if (rep.ok) {
      std::cout << "ok: " << cert.word << " "
                << fibercover::slope_str(cert.slope) << " "
                << fibercover::cert_status_str(cert.status) << '\n';
      return 0;
    }
    std::cout << "FAILED: " << rep.failures.size() << " problem(s)\n";
    for (const std::string& f : rep.failures) std::cout << "  - " << f << '\n';
    return 1;
  }

  if (*c_quotient) {
    fibercover::QuotientResult qr;
    std::vector<fibercover::FreeWord> relators;
    std::vector<std::string> names;
    if (!case_name.empty()) {
      fibercover::CasePlan plan =
          fibercover::case_template(case_name, max_rows > 0 ? max_rows : 0);
      fibercover::PlanSystem sys =
          fibercover::plan_relators(plan, Int(rsum), {mu, lambda});
      relators = sys.pres.relators;
      names = sys.pres.gen_names;
      fibercover::FactoryCaps caps;
      if (degree_cap > 0) caps.degree_cap = degree_cap;
      if (node_budget > 0) caps.node_budget = node_budget;
      qr = fibercover::plan_witnesses(plan, Int(rsum), {mu, lambda}, caps);
    } else if (p > 0 && q > 0 && r > 0) {
      qr = fibercover::triangle_quotient(Int(p), Int(q), Int(r),
                                         degree_cap > 0 ? degree_cap : 64,
                                         node_budget > 0 ? node_budget
                                                         : 2'000'000);
      names = {"a", "b"};
    } else {
      throw std::invalid_argument("quotient needs --case or --p/--q/--r");
    }
    json j;
    j["schema"] = "fibercover/1";
    if (!relators.empty()) {
      json rel = json::array();
      for (const auto& w : relators)
        rel.push_back(fibercover::word_str(w, names));
      j["relators"] = std::move(rel);
    }
    json wits = json::array();
    for (const auto& w : qr.witnesses) {
      json wj;
      wj["degree"] = w.degree;
      wj["note"] = w.note;
      json gens = json::array();
      for (const auto& g : w.gens) gens.push_back(g.img);
      wj["gens"] = std::move(gens);
      wits.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(wits);
    j["exhausted"] = qr.exhausted;
    emit(j.dump(2), out_path);
    return 0;
  }

  if (*c_snf) {
    fibercover::IntMat m = matrix_from_json(read_json_file(in_path));
    fibercover::SNFResult res = fibercover::smith_normal_form(m, true);
    json j;
    j["schema"] = "fibercover/1";
    j["rank"] = res.rank;
    json diag = json::array();
    for (const Int& d : res.diag) diag.push_back(d.str());
    j["diag"] = std::move(diag);
    j["D"] = matrix_json(res.D);
    j["U"] = matrix_json(res.U);
    j["V"] = matrix_json(res.V);
    emit(j.dump(2), out_path);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
