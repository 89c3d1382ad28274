#include "stabfem/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "stabfem/error.hpp"
#include "stabfem/io.hpp"

namespace stabfem {

namespace {

namespace fs = std::filesystem;

BenchmarkRun materialize_inline(const InlineProblem& p) {
  BenchmarkRun run;
  run.name = "inline";
  run.mesh = p.dim == 1 ? build_line_mesh(p.nx, p.x_bounds[0], p.x_bounds[1])
                        : build_quad_mesh(p.nx, p.ny, p.x_bounds, p.y_bounds);
  const auto u = p.velocity;
  run.problem.velocity = [u](Point) { return u; };
  run.problem.diffusivity = p.diffusivity;
  if (p.source != 0.0) {
    const double f = p.source;
    run.problem.source = [f](Point, double) { return f; };
  }
  for (const auto& [edge, value] : p.dirichlet) {
    const double v = value;
    run.problem.dirichlet.push_back({edge, [v](Point, double) { return v; }});
  }
  for (const auto& [edge, value] : p.neumann) {
    const double v = value;
    run.problem.neumann.push_back({edge, [v](Point, double) { return v; }});
  }
  run.k_tilde_default = p.diffusivity > 0.0 ? 1.0 : 0.0;
  return run;
}

std::string trimmed_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string run_dir_name(const RunRow& row) {
  std::string name = row.benchmark + "_" + scheme_name(row.scheme);
  if (row.has_theta) name += "_theta" + trimmed_number(row.theta_deg);
  return name;
}

void create_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    fail(Status::io_error,
         "cannot create directory '" + dir.string() + "': " + ec.message());
  }
}

void write_snapshots(const fs::path& dir, const RunConfig& config,
                     const RunResult& result, RunReport* report) {
  for (const auto& snap : result.snapshots) {
    const bool coupled = !snap.field.g.empty();
    if (result.mesh.dim == 1) {
      if (!config.emit_csv) continue;
      const fs::path path =
          dir / ("solution_step" + std::to_string(snap.step) + ".csv");
      write_solution_csv(path.string(), result.mesh, snap.field);
      report->artifacts.push_back(path.string());
    } else {
      if (!config.emit_vtk) continue;
      std::vector<std::pair<std::string, std::vector<double>>> fields;
      fields.emplace_back("phi", snap.field.phi);
      if (coupled) {
        std::vector<double> mag(snap.field.g.size());
        for (size_t i = 0; i < mag.size(); ++i) {
          mag[i] = std::hypot(snap.field.g[i][0], snap.field.g[i][1]);
        }
        fields.emplace_back("g_magnitude", std::move(mag));
      }
      const fs::path path =
          dir / ("solution_step" + std::to_string(snap.step) + ".vtk");
      write_vtk(path.string(), result.mesh, fields);
      report->artifacts.push_back(path.string());
    }
  }
}

void write_errors_csv(const fs::path& path, const RunReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(Status::io_error, "cannot open '" + path.string() + "' for writing");
  }
  out << "benchmark,scheme,theta,l2_rel,max_rel,et_l2,et_max,wall_ms\n";
  const double nan = std::nan("");
  for (const auto& row : report.rows) {
    out << row.benchmark << ',' << scheme_name(row.scheme) << ','
        << format_double(row.has_theta ? row.theta_deg : nan) << ','
        << format_double(row.has_field_errors ? row.l2_rel : nan) << ','
        << format_double(row.has_field_errors ? row.max_rel : nan) << ','
        << format_double(row.has_transient_errors ? row.et_l2 : nan) << ','
        << format_double(row.has_transient_errors ? row.et_max : nan) << ','
        << format_double(row.wall_ms) << '\n';
  }
  out.flush();
  if (!out) fail(Status::io_error, "write to '" + path.string() + "' failed");
}

void append_cell(std::string* line, const std::string& value) {
  *line += value;
  const size_t pad = value.size() < 14 ? 14 - value.size() : 1;
  line->append(pad, ' ');
}

std::string metric_cell(bool present, double v) {
  return present ? trimmed_number(v) : "nan";
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

RunReport run_all(const RunConfig& config) {
  RunReport report;
  const fs::path out_root(config.out_dir);
  create_dir(out_root);

  BenchmarkKnobs knobs;
  knobs.peclet = config.peclet;
  knobs.diffusivity = config.diffusivity;
  knobs.elements = config.elements;

  std::vector<double> thetas = config.theta_deg;
  if (thetas.empty()) thetas.push_back(-1.0);  // single run, case default

  for (SchemeKind kind : config.schemes) {
    for (double theta : thetas) {
      SchemeConfig scheme;
      scheme.kind = kind;
      scheme.penalty = config.penalty;
      scheme.k_tilde = config.k_tilde;

      BenchmarkRun run;
      if (config.has_inline) {
        run = materialize_inline(config.inline_problem);
      } else {
        knobs.theta_deg = theta;
        run = find_case(config.benchmark).make(knobs);
      }
      const RunResult result = run_benchmark(run, scheme);

      RunRow row;
      row.benchmark = run.name;
      row.scheme = kind;
      row.has_theta = result.has_theta;
      row.theta_deg = result.theta_deg;
      row.has_field_errors = result.has_field_errors;
      if (result.has_field_errors) {
        row.l2_rel = result.field_errors.l2_rel;
        row.max_rel = result.field_errors.max_rel;
      }
      row.has_transient_errors = result.has_transient_errors;
      if (result.has_transient_errors) {
        row.et_l2 = result.transient.e_t_l2;
        row.et_max = result.transient.e_t_max;
      }
      row.wall_ms = result.wall_ms;

      const fs::path run_dir = out_root / run_dir_name(row);
      create_dir(run_dir);
      write_snapshots(run_dir, config, result, &report);
      if (result.has_trace && config.emit_csv) {
        const fs::path trace_path = run_dir / "hill_trace.csv";
        write_hill_trace_csv(trace_path.string(), result.trace, run.dt);
        report.artifacts.push_back(trace_path.string());
      }
      report.rows.push_back(std::move(row));
    }
  }

  if (config.emit_csv) {
    const fs::path errors_path = out_root / "errors.csv";
    write_errors_csv(errors_path, report);
    report.artifacts.push_back(errors_path.string());
  }
  if (config.emit_table) {
    const fs::path table_path = out_root / "table.txt";
    std::ofstream out(table_path, std::ios::binary);
    if (!out) {
      fail(Status::io_error,
           "cannot open '" + table_path.string() + "' for writing");
    }
    out << render_table(report);
    out.flush();
    if (!out) {
      fail(Status::io_error, "write to '" + table_path.string() + "' failed");
    }
    report.artifacts.push_back(table_path.string());
  }
  return report;
}

std::string render_table(const RunReport& report) {
  // Preserve first-appearance order of benchmarks, schemes, and angles.
  std::vector<std::string> benchmarks;
  for (const auto& row : report.rows) {
    bool seen = false;
    for (const auto& b : benchmarks) seen = seen || b == row.benchmark;
    if (!seen) benchmarks.push_back(row.benchmark);
  }

  std::string text;
  for (const auto& benchmark : benchmarks) {
    std::vector<SchemeKind> schemes;
    std::vector<std::pair<bool, double>> angles;
    for (const auto& row : report.rows) {
      if (row.benchmark != benchmark) continue;
      bool seen = false;
      for (SchemeKind s : schemes) seen = seen || s == row.scheme;
      if (!seen) schemes.push_back(row.scheme);
      const std::pair<bool, double> angle{row.has_theta, row.theta_deg};
      seen = false;
      for (const auto& a : angles) seen = seen || a == angle;
      if (!seen) angles.push_back(angle);
    }

    const auto find_row = [&](SchemeKind s, const std::pair<bool, double>& a)
        -> const RunRow* {
      for (const auto& row : report.rows) {
        if (row.benchmark == benchmark && row.scheme == s &&
            std::pair<bool, double>{row.has_theta, row.theta_deg} == a) {
          return &row;
        }
      }
      return nullptr;
    };

    text += benchmark + "\n";
    std::string header;
    append_cell(&header, angles.front().first ? "theta" : "");
    append_cell(&header, "norm");
    for (SchemeKind s : schemes) append_cell(&header, scheme_name(s));
    text += header + "\n";

    const bool transient = [&] {
      for (const auto& row : report.rows) {
        if (row.benchmark == benchmark && row.has_transient_errors) return true;
      }
      return false;
    }();
    const std::vector<std::string> metrics =
        transient ? std::vector<std::string>{"l2_rel", "max_rel", "et_l2",
                                             "et_max"}
                  : std::vector<std::string>{"l2_rel", "max_rel"};

    for (const auto& angle : angles) {
      for (const auto& metric : metrics) {
        std::string line;
        append_cell(&line, angle.first ? trimmed_number(angle.second) : "");
        append_cell(&line, metric);
        for (SchemeKind s : schemes) {
          const RunRow* row = find_row(s, angle);
          std::string cell = "nan";
          if (row) {
            if (metric == "l2_rel") {
              cell = metric_cell(row->has_field_errors, row->l2_rel);
            } else if (metric == "max_rel") {
              cell = metric_cell(row->has_field_errors, row->max_rel);
            } else if (metric == "et_l2") {
              cell = metric_cell(row->has_transient_errors, row->et_l2);
            } else {
              cell = metric_cell(row->has_transient_errors, row->et_max);
            }
          }
          append_cell(&line, cell);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        text += line + "\n";
      }
    }
    text += "\n";
  }
  return text;
}

std::string render_json(const RunReport& report) {
  std::string text = "{\"runs\":[";
  for (size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    if (i) text += ',';
    text += "{\"benchmark\":\"" + json_escape(row.benchmark) + "\"";
    text += ",\"scheme\":\"" + std::string(scheme_name(row.scheme)) + "\"";
    if (row.has_theta) {
      text += ",\"theta_deg\":" + format_double(row.theta_deg);
    }
    if (row.has_field_errors) {
      text += ",\"l2_rel\":" + format_double(row.l2_rel);
      text += ",\"max_rel\":" + format_double(row.max_rel);
    }
    if (row.has_transient_errors) {
      text += ",\"et_l2\":" + format_double(row.et_l2);
      text += ",\"et_max\":" + format_double(row.et_max);
    }
    text += ",\"wall_ms\":" + format_double(row.wall_ms);
    text += "}";
  }
  text += "],\"artifacts\":[";
  for (size_t i = 0; i < report.artifacts.size(); ++i) {
    if (i) text += ',';
    text += "\"" + json_escape(report.artifacts[i]) + "\"";
  }
  text += "]}";
  return text;
}

}  // namespace stabfem
