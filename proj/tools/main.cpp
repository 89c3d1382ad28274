// Benchmark CLI. Builds a JSON configuration from flags (a --config file
// overrides flags key by key), then drives the shared C API: parse, run,
// print the error table. Exit code is the stabfem_status of the first
// failing call, 0 on success.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabfem.h"

namespace {

using nlohmann::json;

int report_failure(stabfem_status rc) {
  std::fprintf(stderr, "error: %s\n", stabfem_last_error());
  return static_cast<int>(rc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilized finite element benchmark runner"};

  std::string benchmark, out_dir, config_path;
  std::vector<std::string> schemes, emit;
  std::vector<double> thetas;
  double pe_h = 0.0, diffusivity = 0.0, penalty = 0.0, k_tilde = 0.0;
  int elements = 0;

  app.add_option("--benchmark", benchmark,
                 "Benchmark case name (e.g. 1d-steady)");
  app.add_option("--scheme", schemes,
                 "Scheme(s): Galerkin, ClassicalAD, SU, SUPG, MZAD, MMAD")
      ->delimiter(',');
  app.add_option("--theta-deg", thetas, "Flow angle(s) for the oblique cases")
      ->delimiter(',');
  app.add_option("--pe-h", pe_h, "Domain Peclet number (sets diffusivity)");
  app.add_option("--diffusivity", diffusivity, "Diffusivity D (wins over --pe-h)");
  app.add_option("--penalty", penalty, "MZAD penalty p");
  app.add_option("--k-tilde", k_tilde, "MMAD auxiliary weight k_tilde");
  app.add_option("--elements", elements, "Elements per direction override");
  app.add_option("--out-dir", out_dir, "Output directory (default: out)");
  app.add_option("--emit", emit, "Artifact kinds: csv, vtk, table")
      ->delimiter(',');
  app.add_option("--config", config_path,
                 "JSON configuration file; its keys override flags");

  CLI11_PARSE(app, argc, argv);

  json doc = json::object();
  if (app.count("--benchmark") > 0) doc["benchmark"] = benchmark;
  if (app.count("--scheme") > 0) doc["scheme"] = schemes;
  if (app.count("--theta-deg") > 0) doc["theta_deg"] = thetas;
  if (app.count("--pe-h") > 0) doc["pe_h"] = pe_h;
  if (app.count("--diffusivity") > 0) doc["diffusivity"] = diffusivity;
  if (app.count("--penalty") > 0) doc["penalty"] = penalty;
  if (app.count("--k-tilde") > 0) doc["k_tilde"] = k_tilde;
  if (app.count("--elements") > 0) doc["elements"] = elements;
  if (app.count("--out-dir") > 0) doc["out_dir"] = out_dir;
  if (app.count("--emit") > 0) doc["emit"] = emit;

  std::string config_text = doc.dump();
  if (!config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in.good()) {
      std::fprintf(stderr, "error: cannot read config file '%s'\n",
                   config_path.c_str());
      return static_cast<int>(STABFEM_ERR_IO);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string file_text = buf.str();
    if (doc.empty()) {
      // No flags to merge: hand the raw document to the library so parse
      // errors carry the original line/position.
      config_text = file_text;
    } else {
      json file_doc;
      try {
        file_doc = json::parse(file_text);
      } catch (const json::parse_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return static_cast<int>(STABFEM_ERR_PARSE);
      }
      if (!file_doc.is_object()) {
        std::fprintf(stderr, "error: config: the root must be an object\n");
        return static_cast<int>(STABFEM_ERR_CONFIG);
      }
      for (auto it = file_doc.begin(); it != file_doc.end(); ++it) {
        doc[it.key()] = it.value();
      }
      // A file benchmark/inline-problem replaces a flag benchmark entirely.
      if (file_doc.contains("inline-problem") && doc.contains("benchmark") &&
          !file_doc.contains("benchmark")) {
        doc.erase("benchmark");
      }
      config_text = doc.dump();
    }
  }

  stabfem_config* config = nullptr;
  stabfem_status rc = stabfem_config_parse(config_text.c_str(), &config);
  if (rc != STABFEM_OK) return report_failure(rc);

  stabfem_report* report = nullptr;
  rc = stabfem_run(config, &report);
  stabfem_config_free(config);
  if (rc != STABFEM_OK) return report_failure(rc);

  char* table = nullptr;
  rc = stabfem_report_table(report, &table);
  if (rc != STABFEM_OK) {
    stabfem_report_free(report);
    return report_failure(rc);
  }
  std::fputs(table, stdout);
  stabfem_string_free(table);
  stabfem_report_free(report);
  return 0;
}
