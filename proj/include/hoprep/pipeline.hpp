#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hoprep/clause.hpp"

namespace hoprep {

struct PipelineConfig {
  std::vector<std::string> techniques{"hlbe", "ppe", "bce", "qle"};
  long long k_tol = 10;
  int hlbe_depth = 8;
  int max_rounds = 3;
  bool check_ground = false;
  unsigned seed = 0;  // scan-order seed for confluence experiments
};

struct TechniqueStats {
  long long clauses_removed = 0;
  long long literals_removed = 0;
  long long predicates_eliminated = 0;
  long long rounds = 0;
};

struct Report {
  std::vector<std::pair<std::string, TechniqueStats>> techniques;
  std::vector<std::string> certificates;
  std::vector<std::string> derived_units;
  int pipeline_rounds = 0;
  long long wall_ms = 0;
};

class OracleMismatch : public std::runtime_error {
 public:
  explicit OracleMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct PipelineResult {
  ClauseSet set;
  Report report;
};

// Applies the configured techniques in order, repeating the whole sequence
// until a fixpoint or max_rounds. With check_ground set and an
// oracle-supported input, throws OracleMismatch when the transformed set
// disagrees with the input's satisfiability verdict.
PipelineResult run_pipeline(const ClauseSet& input, const PipelineConfig& cfg);

// Deterministic rendering; format is "text" or "json". The wall_ms field is
// the only run-dependent part.
std::string emit_report(const Report& r, const std::string& format);

}  // namespace hoprep
