#include "hoprep/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

#include "hoprep/bce.hpp"
#include "hoprep/hlbe.hpp"
#include "hoprep/modelcheck.hpp"
#include "hoprep/pe.hpp"
#include "hoprep/qle.hpp"

namespace hoprep {

namespace {

const char* branch_name(PeBranch b) {
  switch (b) {
    case PeBranch::Dpe:
      return "dpe";
    case PeBranch::Spe:
      return "spe";
    default:
      return "none";
  }
}

// Satisfiability verdict on oracle-supported fragments; nullopt when the
// set falls outside both fragments.
std::optional<bool> oracle_verdict(const ClauseSet& n) {
  try {
    return ground_prop_sat(n);
  } catch (const FragmentUnsupported&) {
  }
  try {
    return finite_model_sat(n, 3).has_value();
  } catch (const FragmentUnsupported&) {
  }
  return std::nullopt;
}

TechniqueStats& stats_for(Report& r, const std::string& name) {
  for (auto& [n, s] : r.techniques)
    if (n == name) return s;
  r.techniques.emplace_back(name, TechniqueStats{});
  return r.techniques.back().second;
}

long long literal_count(const ClauseSet& n) {
  long long k = 0;
  for (auto& c : n.clauses) k += static_cast<long long>(c.lits.size());
  return k;
}

}  // namespace

PipelineResult run_pipeline(const ClauseSet& input, const PipelineConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  PipelineResult res;
  res.set = input;
  std::optional<bool> before_verdict;
  if (cfg.check_ground) before_verdict = oracle_verdict(input);

  for (int round = 1; round <= cfg.max_rounds; ++round) {
    std::vector<Clause> snapshot = res.set.clauses;
    ++res.report.pipeline_rounds;
    for (auto& t : cfg.techniques) {
      long long lits0 = literal_count(res.set);
      long long cls0 = static_cast<long long>(res.set.clauses.size());
      if (t == "hlbe") {
        HlbeResult h = hlbe_simplify(res.set, cfg.hlbe_depth);
        TechniqueStats& s = stats_for(res.report, "hlbe");
        s.clauses_removed += h.clauses_removed;
        s.literals_removed += h.literals_removed;
        s.rounds += h.rounds;
        for (auto& u : h.derived_units)
          res.report.derived_units.push_back(literal_to_string(u));
        res.set = std::move(h.set);
      } else if (t == "spe" || t == "dpe" || t == "ppe") {
        PeMode mode = t == "spe"   ? PeMode::SpeOnly
                      : t == "dpe" ? PeMode::DpeOnly
                                   : PeMode::Portfolio;
        PeResult p = run_pe(res.set, mode, cfg.k_tol, 16);
        TechniqueStats& s = stats_for(res.report, t);
        s.predicates_eliminated += static_cast<long long>(p.eliminated.size());
        s.rounds += p.rounds;
        for (auto& [sym, br] : p.eliminated)
          res.report.certificates.push_back(t + ": eliminated " + sym +
                                            " via " + branch_name(br));
        res.set = std::move(p.set);
        TechniqueStats& s2 = stats_for(res.report, t);
        s2.clauses_removed += cls0 - static_cast<long long>(res.set.clauses.size());
        s2.literals_removed += lits0 - literal_count(res.set);
        continue;
      } else if (t == "bce") {
        BceResult b = run_bce(res.set, cfg.seed);
        TechniqueStats& s = stats_for(res.report, "bce");
        s.clauses_removed += b.clauses_removed;
        s.rounds += 1;
        for (auto& cert : b.certificates)
          res.report.certificates.push_back(
              "bce: clause " + std::to_string(cert.clause_index) +
              " blocked on " + literal_to_string(cert.blocking) + " (" +
              std::to_string(cert.partners.size()) + " partners)");
        res.set = std::move(b.set);
        s.literals_removed += lits0 - literal_count(res.set);
      } else if (t == "qle" || t == "ple") {
        QleResult q = t == "qle" ? run_qle(res.set, cfg.seed) : run_ple(res.set);
        TechniqueStats& s = stats_for(res.report, t);
        s.clauses_removed += q.clauses_removed;
        s.rounds += q.rounds;
        res.set = std::move(q.set);
        s.literals_removed += lits0 - literal_count(res.set);
      } else {
        throw std::invalid_argument("unknown technique: " + t);
      }
    }
    bool same = clause_set_equal_upto_alpha(snapshot, res.set.clauses);
    if (same) break;
  }

  if (cfg.check_ground && before_verdict) {
    std::optional<bool> after = oracle_verdict(res.set);
    if (after && *after != *before_verdict)
      throw OracleMismatch("transformed set verdict " +
                           std::string(*after ? "sat" : "unsat") +
                           " differs from input verdict " +
                           std::string(*before_verdict ? "sat" : "unsat"));
  }

  res.report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  return res;
}

std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["techniques"] = nlohmann::ordered_json::array();
    for (auto& [name, s] : r.techniques) {
      nlohmann::ordered_json t;
      t["name"] = name;
      t["clauses_removed"] = s.clauses_removed;
      t["literals_removed"] = s.literals_removed;
      t["predicates_eliminated"] = s.predicates_eliminated;
      t["rounds"] = s.rounds;
      j["techniques"].push_back(std::move(t));
    }
    j["certificates"] = r.certificates;
    j["derived_units"] = r.derived_units;
    j["pipeline_rounds"] = r.pipeline_rounds;
    j["wall_ms"] = r.wall_ms;
    return j.dump(2) + "\n";
  }
  std::string out;
  for (auto& [name, s] : r.techniques) {
    out += name + ": removed " + std::to_string(s.clauses_removed) +
           " clauses, " + std::to_string(s.literals_removed) + " literals, " +
           std::to_string(s.predicates_eliminated) + " predicates in " +
           std::to_string(s.rounds) + " rounds\n";
  }
  for (auto& c : r.certificates) out += "certificate: " + c + "\n";
  for (auto& u : r.derived_units) out += "derived unit: " + u + "\n";
  out += "pipeline rounds: " + std::to_string(r.pipeline_rounds) + "\n";
  out += "wall_ms: " + std::to_string(r.wall_ms) + "\n";
  return out;
}

}  // namespace hoprep
