#include "fibercover/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace fibercover {

namespace {

using nlohmann::json;

json int_json(const Int& v) { return v.str(); }

Int int_from(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

json torsion_json(const std::vector<Int>& t) {
  json a = json::array();
  for (const Int& v : t) a.push_back(int_json(v));
  return a;
}

std::vector<Int> torsion_from(const json& a) {
  std::vector<Int> out;
  for (const json& v : a) out.push_back(int_from(v));
  return out;
}

json mat2_json(const Mat2& m) {
  return json::array({json::array({to_ll(m.a), to_ll(m.b)}),
                      json::array({to_ll(m.c), to_ll(m.d)})});
}

Mat2 mat2_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
    throw std::invalid_argument("slope map must be a 2x2 integer matrix");
  return mat2(Int(j[0][0].get<long long>()), Int(j[0][1].get<long long>()),
              Int(j[1][0].get<long long>()), Int(j[1][1].get<long long>()));
}

json cover_json(const CertCover& cc) {
  json j;
  j["rows"] = cc.rows;
  j["width"] = cc.width;
  j["sigma"] = cc.sigma;
  j["px"] = cc.px;
  j["py"] = cc.py;
  j["tau"] = cc.tau;
  j["modified"] = cc.modified;
  j["cut_perm"] = cc.cut_perm;
  j["detail"] = cc.detail;
  return j;
}

CertCover cover_from(const json& j) {
  CertCover cc;
  cc.rows = j.at("rows").get<int>();
  cc.width = j.at("width").get<int>();
  cc.sigma = j.value("sigma", std::vector<std::vector<int>>{});
  cc.px = j.at("px").get<std::vector<int>>();
  cc.py = j.at("py").get<std::vector<int>>();
  cc.tau = j.at("tau").get<std::vector<int>>();
  cc.modified = j.value("modified", false);
  cc.cut_perm = j.value("cut_perm", std::vector<int>{});
  cc.detail = j.value("detail", std::string{});
  return cc;
}

}  // namespace

json certificate_json(const Certificate& c) {
  json j;
  j["schema"] = c.schema;
  j["word"] = c.word;
  j["mu"] = c.slope.mu;
  j["lambda"] = c.slope.lambda;
  j["status"] = cert_status_str(c.status);
  j["route"] = c.route;
  j["used_word"] = c.used_word;
  j["used_mu"] = c.used_slope.mu;
  j["used_lambda"] = c.used_slope.lambda;
  j["case"] = c.case_name;
  j["R"] = int_json(c.R);
  j["n"] = int_json(c.n);
  j["monodromy"] = c.monodromy;
  j["degree"] = c.degree;
  j["b1"] = c.b1;
  j["torsion"] = torsion_json(c.torsion);
  j["unfilled_b1"] = c.unfilled_b1;
  j["fix_rank"] = c.fix_rank;
  j["peripheral_rank"] = c.peripheral_rank;
  j["interior_witness"] = c.interior_witness;
  if (c.cover) j["cover"] = cover_json(*c.cover);
  j["notes"] = c.notes;
  j["elapsed_ms"] = c.elapsed_ms;
  return j;
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate c;
    c.schema = j.value("schema", std::string{});
    c.word = j.at("word").get<std::string>();
    c.slope.mu = j.at("mu").get<long long>();
    c.slope.lambda = j.at("lambda").get<long long>();
    auto st = parse_cert_status(j.at("status").get<std::string>());
    if (!st) throw std::invalid_argument("unknown status");
    c.status = *st;
    c.route = j.value("route", std::string{"direct"});
    c.used_word = j.value("used_word", c.word);
    c.used_slope.mu = j.value("used_mu", c.slope.mu);
    c.used_slope.lambda = j.value("used_lambda", c.slope.lambda);
    c.case_name = j.value("case", std::string{});
    c.R = int_from(j.value("R", json("0")));
    c.n = int_from(j.value("n", json("0")));
    auto mono = j.value("monodromy", std::vector<long long>{1, 0, 0, 1});
    if (mono.size() != 4)
      throw std::invalid_argument("monodromy must have four entries");
    std::copy(mono.begin(), mono.end(), c.monodromy.begin());
    c.degree = j.value("degree", 0);
    c.b1 = j.value("b1", -1);
    c.torsion = torsion_from(j.value("torsion", json::array()));
    c.unfilled_b1 = j.value("unfilled_b1", -1);
    c.fix_rank = j.value("fix_rank", 0);
    c.peripheral_rank = j.value("peripheral_rank", 0);
    c.interior_witness = j.value("interior_witness", false);
    if (j.contains("cover") && !j["cover"].is_null())
      c.cover = cover_from(j["cover"]);
    c.notes = j.value("notes", std::vector<std::string>{});
    c.elapsed_ms = j.value("elapsed_ms", 0.0);
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") +
                                e.what());
  }
}

std::string certificate_csv_header() {
  return "word,mu,lambda,status,case,degree,b1";
}

std::string certificate_csv_row(const Certificate& c) {
  std::ostringstream os;
  os << c.word << ',' << c.slope.mu << ',' << c.slope.lambda << ','
     << cert_status_str(c.status) << ',' << c.case_name << ',' << c.degree
     << ',' << c.b1;
  return os.str();
}

json scan_json(const std::string& word, const std::vector<ScanRow>& rows) {
  json j;
  j["schema"] = "fibercover/1";
  j["word"] = word;
  json arr = json::array();
  for (const ScanRow& r : rows) {
    json row;
    row["mu"] = r.slope.mu;
    row["lambda"] = r.slope.lambda;
    row["status"] = cert_status_str(r.status);
    row["case"] = r.case_name;
    row["degree"] = r.degree;
    row["b1"] = r.b1;
    arr.push_back(std::move(row));
  }
  j["slopes"] = std::move(arr);
  return j;
}

std::string scan_csv(const std::string& word, const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << certificate_csv_header() << '\n';
  for (const ScanRow& r : rows)
    os << word << ',' << r.slope.mu << ',' << r.slope.lambda << ','
       << cert_status_str(r.status) << ',' << r.case_name << ',' << r.degree
       << ',' << r.b1 << '\n';
  return os.str();
}

json config_json(const EngineConfig& cfg) {
  json j;
  j["degree_cap"] = cfg.degree_cap;
  j["node_budget"] = cfg.node_budget;
  j["regular_cap"] = cfg.regular_cap;
  j["max_witnesses"] = cfg.max_witnesses;
  j["width_cap"] = cfg.width_cap;
  j["max_cut_candidates"] = cfg.max_cut_candidates;
  j["max_rows"] = cfg.max_rows;
  j["use_swap"] = cfg.use_swap;
  j["use_framings"] = cfg.use_framings;
  json frames = json::array();
  for (const FramingTransform& f : cfg.extra_framings) {
    json fj;
    fj["name"] = f.name;
    fj["pattern"] = twist_str(f.pattern);
    fj["target"] = twist_str(f.target);
    fj["slope_map"] = mat2_json(f.slope_map);
    frames.push_back(std::move(fj));
  }
  j["framings"] = std::move(frames);
  return j;
}

EngineConfig config_from_json(const json& j) {
  try {
    EngineConfig cfg;
    cfg.degree_cap = j.value("degree_cap", cfg.degree_cap);
    cfg.node_budget = j.value("node_budget", cfg.node_budget);
    cfg.regular_cap = j.value("regular_cap", cfg.regular_cap);
    cfg.max_witnesses = j.value("max_witnesses", cfg.max_witnesses);
    cfg.width_cap = j.value("width_cap", cfg.width_cap);
    cfg.max_cut_candidates =
        j.value("max_cut_candidates", cfg.max_cut_candidates);
    cfg.max_rows = j.value("max_rows", cfg.max_rows);
    cfg.use_swap = j.value("use_swap", cfg.use_swap);
    cfg.use_framings = j.value("use_framings", cfg.use_framings);
    if (j.contains("framings")) {
      for (const json& fj : j.at("framings")) {
        FramingTransform f;
        f.name = fj.at("name").get<std::string>();
        f.pattern = parse_twist_word(fj.at("pattern").get<std::string>());
        f.target = parse_twist_word(fj.at("target").get<std::string>());
        f.slope_map = mat2_from(fj.at("slope_map"));
        if (!framing_valid(f))
          throw std::invalid_argument(
              "framing '" + f.name +
              "' rejected: the slope map must have determinant +-1 and the "
              "pattern must be nonempty");
        cfg.extra_framings.push_back(std::move(f));
      }
    }
    return cfg;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed configuration: ") +
                                e.what());
  }
}

}  // namespace fibercover
