#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hoprep/parser.hpp"
#include "hoprep/pipeline.hpp"

namespace {

std::vector<std::string> split_techniques(const std::string& list) {
  if (list == "all") return {"hlbe", "ppe", "bce", "qle"};
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clause set preprocessor for rank-1 polymorphic higher-order "
               "logic"};
  std::string techniques = "all";
  std::string stats_format = "text";
  std::string output_path;
  std::string input_path;
  hoprep::PipelineConfig cfg;
  app.add_option("--techniques", techniques,
                 "Comma-separated list from hlbe,spe,dpe,ppe,bce,ple,qle, or "
                 "'all'");
  app.add_option("--ktol", cfg.k_tol, "Growth tolerance for SPE");
  app.add_option("--hlbe-depth", cfg.hlbe_depth, "Hidden literal chain depth");
  app.add_option("--max-rounds", cfg.max_rounds, "Pipeline rounds")
      ->check(CLI::PositiveNumber);
  app.add_flag("--check-ground", cfg.check_ground,
               "Verify equisatisfiability with the ground oracle");
  app.add_option("--stats", stats_format, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output_path, "Write the transformed problem here");
  app.add_option("input", input_path, "Input problem")->required();
  CLI11_PARSE(app, argc, argv);

  cfg.techniques = split_techniques(techniques);
  for (auto& t : cfg.techniques) {
    static const std::vector<std::string> known{"hlbe", "spe", "dpe", "ppe",
                                                "bce",  "ple", "qle"};
    if (std::find(known.begin(), known.end(), t) == known.end()) {
      std::cerr << "unknown technique: " << t << "\n";
      return 1;
    }
  }
  if (const char* seed = std::getenv("HOPREP_SEED"))
    cfg.seed = static_cast<unsigned>(std::strtoul(seed, nullptr, 10));

  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "cannot read " << input_path << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  hoprep::ClauseSet problem;
  try {
    problem = hoprep::parse_problem(buf.str());
  } catch (const hoprep::ParseError& e) {
    std::cerr << input_path << ":" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << input_path << ": " << e.what() << "\n";
    return 1;
  }

  hoprep::PipelineResult result;
  try {
    result = hoprep::run_pipeline(problem, cfg);
  } catch (const hoprep::OracleMismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }

  std::string printed = hoprep::print_problem(result.set);
  std::string report = hoprep::emit_report(result.report, stats_format);
  if (output_path.empty()) {
    std::cout << printed;
    std::cerr << report;
  } else {
    std::ofstream out(output_path, std::ios::trunc);
    if (!out) {
      std::cerr << "cannot write " << output_path << "\n";
      return 2;
    }
    out << printed;
    std::cout << report;
  }
  return 0;
}
