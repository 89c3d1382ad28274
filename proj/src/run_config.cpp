#include "stabfem/run_config.hpp"

#include <json.hpp>

#include "stabfem/error.hpp"

namespace stabfem {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) {
  fail(Status::config_error, "config: " + msg);
}

double number_field(const json& j, const std::string& key) {
  if (!j.is_number()) bad("'" + key + "' must be a number");
  return j.get<double>();
}

int int_field(const json& j, const std::string& key) {
  if (!j.is_number_integer()) bad("'" + key + "' must be an integer");
  return j.get<int>();
}

std::string string_field(const json& j, const std::string& key) {
  if (!j.is_string()) bad("'" + key + "' must be a string");
  return j.get<std::string>();
}

std::array<double, 2> interval_field(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    bad("'" + key + "' must be a two-number array");
  }
  const std::array<double, 2> iv{j[0].get<double>(), j[1].get<double>()};
  if (!(iv[0] < iv[1])) bad("'" + key + "' must be an increasing interval");
  return iv;
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) known = true;
    }
    if (!known) {
      std::string msg = "unknown key '" + key + "' in " + where + " (valid:";
      for (const char* a : allowed) msg += std::string(" ") + a;
      bad(msg + ")");
    }
  }
}

void parse_edge_values(const json& obj, const std::string& key, int dim,
                       std::vector<std::pair<std::string, double>>* out) {
  if (!obj.is_object()) bad("'" + key + "' must be an object of edge: value");
  for (const auto& [edge, value] : obj.items()) {
    const bool valid_1d = edge == "left" || edge == "right";
    const bool valid_2d = valid_1d || edge == "bottom" || edge == "top";
    if (dim == 1 ? !valid_1d : !valid_2d) {
      bad("'" + key + "' names unknown edge '" + edge + "'");
    }
    out->emplace_back(edge, number_field(value, key + "." + edge));
  }
}

InlineProblem parse_inline(const json& obj) {
  if (!obj.is_object()) bad("'inline-problem' must be an object");
  check_keys(obj, "inline-problem",
             {"dim", "elements", "domain", "velocity", "diffusivity", "source",
              "dirichlet", "neumann"});
  InlineProblem p;
  if (!obj.contains("dim")) bad("inline-problem requires 'dim'");
  p.dim = int_field(obj["dim"], "dim");
  if (p.dim != 1 && p.dim != 2) bad("'dim' must be 1 or 2");

  if (!obj.contains("elements")) bad("inline-problem requires 'elements'");
  const json& el = obj["elements"];
  if (el.is_array()) {
    if (p.dim != 2 || el.size() != 2) {
      bad("'elements' array form is [nx, ny] for dim 2");
    }
    p.nx = int_field(el[0], "elements[0]");
    p.ny = int_field(el[1], "elements[1]");
  } else {
    p.nx = int_field(el, "elements");
    p.ny = p.dim == 2 ? p.nx : 0;
  }
  if (p.nx < 1 || (p.dim == 2 && p.ny < 1)) {
    bad("'elements' must be at least 1 per direction");
  }

  if (obj.contains("domain")) {
    const json& dom = obj["domain"];
    if (p.dim == 1) {
      p.x_bounds = interval_field(dom, "domain");
    } else {
      if (!dom.is_array() || dom.size() != 2) {
        bad("'domain' must be [[x0,x1],[y0,y1]] for dim 2");
      }
      p.x_bounds = interval_field(dom[0], "domain[0]");
      p.y_bounds = interval_field(dom[1], "domain[1]");
    }
  }

  if (!obj.contains("velocity")) bad("inline-problem requires 'velocity'");
  const json& vel = obj["velocity"];
  if (!vel.is_array() || static_cast<int>(vel.size()) != p.dim) {
    bad("'velocity' must be an array of dim numbers");
  }
  p.velocity[0] = number_field(vel[0], "velocity[0]");
  if (p.dim == 2) p.velocity[1] = number_field(vel[1], "velocity[1]");

  if (obj.contains("diffusivity")) {
    p.diffusivity = number_field(obj["diffusivity"], "diffusivity");
    if (p.diffusivity < 0.0) bad("'diffusivity' must be >= 0");
  }

  if (obj.contains("source")) {
    p.source = number_field(obj["source"], "source");
  }
  if (obj.contains("dirichlet")) {
    parse_edge_values(obj["dirichlet"], "dirichlet", p.dim, &p.dirichlet);
  }
  if (obj.contains("neumann")) {
    parse_edge_values(obj["neumann"], "neumann", p.dim, &p.neumann);
  }
  return p;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Status::parse_error, e.what());  // nlohmann reports line and column
  }
  if (!doc.is_object()) bad("root must be a JSON object");
  check_keys(doc, "config",
             {"benchmark", "inline-problem", "scheme", "penalty", "k_tilde",
              "pe_h", "diffusivity", "theta_deg", "elements", "out_dir",
              "emit"});

  RunConfig config;
  const bool has_benchmark = doc.contains("benchmark");
  config.has_inline = doc.contains("inline-problem");
  if (has_benchmark == config.has_inline) {
    bad("exactly one of 'benchmark' or 'inline-problem' is required");
  }
  if (has_benchmark) {
    config.benchmark = string_field(doc["benchmark"], "benchmark");
    find_case(config.benchmark);  // unknown names fail here, listing all
  } else {
    config.inline_problem = parse_inline(doc["inline-problem"]);
    for (const char* key : {"pe_h", "elements", "theta_deg"}) {
      if (doc.contains(key)) {
        bad(std::string("'") + key +
            "' does not apply to inline problems; set the equivalent "
            "inline-problem field");
      }
    }
  }

  if (doc.contains("scheme")) {
    const json& sch = doc["scheme"];
    if (sch.is_array()) {
      for (const auto& s : sch) {
        config.schemes.push_back(parse_scheme(string_field(s, "scheme")));
      }
      if (config.schemes.empty()) bad("'scheme' array must not be empty");
    } else {
      config.schemes.push_back(parse_scheme(string_field(sch, "scheme")));
    }
  } else {
    config.schemes.push_back(SchemeKind::mmad);
  }

  if (doc.contains("penalty")) {
    config.penalty = number_field(doc["penalty"], "penalty");
    if (config.penalty <= 0.0) bad("'penalty' must be > 0");
  }
  if (doc.contains("k_tilde")) {
    config.k_tilde = number_field(doc["k_tilde"], "k_tilde");
    if (config.k_tilde < 0.0) bad("'k_tilde' must be >= 0");
  }
  if (doc.contains("pe_h")) {
    config.peclet = number_field(doc["pe_h"], "pe_h");
    if (config.peclet <= 0.0) bad("'pe_h' must be > 0");
  }
  if (doc.contains("diffusivity")) {
    config.diffusivity = number_field(doc["diffusivity"], "diffusivity");
    if (config.diffusivity < 0.0) bad("'diffusivity' must be >= 0");
  }
  if (doc.contains("theta_deg")) {
    const auto& bc = find_case(config.benchmark);
    if (!bc.has_theta) {
      bad("'theta_deg' only applies to 2d-steady-case1 and 2d-steady-case2");
    }
    const json& th = doc["theta_deg"];
    if (th.is_array()) {
      for (const auto& t : th) {
        config.theta_deg.push_back(number_field(t, "theta_deg"));
      }
      if (config.theta_deg.empty()) bad("'theta_deg' array must not be empty");
    } else {
      config.theta_deg.push_back(number_field(th, "theta_deg"));
    }
  }
  if (doc.contains("elements")) {
    config.elements = int_field(doc["elements"], "elements");
    if (config.elements < 1) bad("'elements' must be at least 1");
  }
  if (doc.contains("out_dir")) {
    config.out_dir = string_field(doc["out_dir"], "out_dir");
    if (config.out_dir.empty()) bad("'out_dir' must not be empty");
  }
  if (doc.contains("emit")) {
    const json& emit = doc["emit"];
    if (!emit.is_array()) bad("'emit' must be an array of output kinds");
    config.emit_csv = config.emit_vtk = config.emit_table = false;
    for (const auto& e : emit) {
      const std::string kind = string_field(e, "emit");
      if (kind == "csv") {
        config.emit_csv = true;
      } else if (kind == "vtk") {
        config.emit_vtk = true;
      } else if (kind == "table") {
        config.emit_table = true;
      } else {
        bad("unknown emit kind '" + kind + "' (valid: csv vtk table)");
      }
    }
  }
  return config;
}

}  // namespace stabfem
