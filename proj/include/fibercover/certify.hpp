#pragma once

#include "fibercover/case_plan.hpp"
#include "fibercover/cover_engine.hpp"
#include "fibercover/factory_covers.hpp"
#include "fibercover/homology.hpp"
#include "fibercover/slope_calculus.hpp"
#include "fibercover/twist_word.hpp"
#include "fibercover/types.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fibercover {

// Outcome of a certification run, strongest first. `Certified` is backed by
// an explicit cover with recomputed first Betti number >= 1; the other three
// report why no certificate was produced without claiming a negative.
enum class CertStatus { Certified, SearchExhausted, Degenerate, HypothesisFails };

std::string cert_status_str(CertStatus s);
std::optional<CertStatus> parse_cert_status(const std::string& s);

struct EngineConfig {
  int degree_cap = 64;
  long long node_budget = 2'000'000;
  int regular_cap = 64;
  size_t max_witnesses = 64;
  int width_cap = 4096;
  size_t max_cut_candidates = 8;
  int max_rows = 64;
  bool use_swap = true;      // also try the quarter-turn conjugate word
  bool use_framings = true;  // also try built-in word rewritings
  std::vector<FramingTransform> extra_framings;
};

FactoryCaps caps_of_config(const EngineConfig& cfg);

// Serializable copy of the certifying cover: row data, the two cover
// permutations, and the lift of the monodromy, all as 0-based image arrays.
struct CertCover {
  int rows = 0;
  int width = 0;
  std::vector<std::vector<int>> sigma;
  std::vector<int> px, py, tau;
  bool modified = false;
  std::vector<int> cut_perm;
  std::string detail;
};

struct Certificate {
  std::string schema = "fibercover/1";
  std::string word;  // monodromy as given
  Slope slope;
  CertStatus status = CertStatus::HypothesisFails;
  std::string route;      // "direct", "swap", "direct+<framing>", ...
  std::string used_word;  // word the certificate is stated for
  Slope used_slope;
  std::string case_name;  // "base", "1", "2a", ... ("" when not certified)
  Int R = 0;
  Int n = 0;
  std::array<long long, 4> monodromy{1, 0, 0, 1};  // abelianized, row-major
  int degree = 0;
  int b1 = -1;
  std::vector<Int> torsion;
  int unfilled_b1 = -1;  // cross-checked against the fiber-action formula
  int fix_rank = 0;
  int peripheral_rank = 0;
  bool interior_witness = false;
  std::optional<CertCover> cover;  // absent for the degree-1 base case
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;
};

// Certifies that the filled bundle has a finite cover with positive first
// Betti number. Throws std::invalid_argument on an empty word or a
// non-coprime slope. Never weakens the claim: `Certified` always carries a
// recomputed b1 >= 1.
Certificate certify(const TwistWord& w, const Slope& s,
                    const EngineConfig& cfg = {});
Certificate certify_text(const std::string& word_text, const Slope& s,
                         const EngineConfig& cfg = {});

// Best-effort fallback: enumerates coset actions of the filled group on up
// to max_index points (keeping those whose fiber action is connected) and
// certifies the first with b1 >= 1. Returns nullopt when none is found;
// *exhausted reports whether the node budget cut the enumeration short.
std::optional<Certificate> low_index_certificate(const TwistWord& w,
                                                 const Slope& s, int max_index,
                                                 long long node_budget,
                                                 bool* exhausted = nullptr);

// Independent recheck of a certificate from its serialized data alone.
struct VerifyReport {
  bool ok = false;
  std::vector<std::string> failures;
};

VerifyReport verify_certificate(const Certificate& c);

struct ScanRow {
  Slope slope;
  CertStatus status = CertStatus::HypothesisFails;
  std::string case_name;
  int degree = 0;
  int b1 = -1;
};

// Certifies every coprime slope with |mu|, |lambda| <= window (skipping
// (0, 0)); rows come back sorted by slope.
std::vector<ScanRow> scan_slopes(const TwistWord& w, int window,
                                 const EngineConfig& cfg = {});

}  // namespace fibercover
