#include "qhydro/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhydro/errors.hpp"
#include "qhydro/fitting.hpp"
#include "qhydro/operators.hpp"
#include "qhydro/spectrum.hpp"
#include "qhydro/units.hpp"

namespace qhydro::cli {

using Json = nlohmann::ordered_json;

double round15(double value) {
  if (!std::isfinite(value)) return value;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

namespace {

enum class Format { Table, Json, Csv };

struct Options {
  std::string model = "pauli";
  double q = 1.0;
  int max_shell = 3;
  std::string unit;
  int z = 1;
  std::string mass = "h";
  std::string format = "table";
  int n_max = 10;
  double tol = 1e-9;
  std::optional<double> target;
  std::string out_path;
};

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw DomainError("unknown format '" + s + "'");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", round15(v));
  return buf;
}

Json manifest(const std::string& subcommand, Json parameters) {
  Json m;
  m["tool"] = "qhydro";
  m["tool_version"] = kToolVersion;
  m["constants_version"] = std::string(constants().version);
  m["subcommand"] = subcommand;
  m["parameters"] = std::move(parameters);
  return m;
}

Json config_json(const AtomConfig& config) {
  Json j;
  j["z"] = config.z;
  j["mass"] = mass_spec(config);
  j["reduced_mass_ratio"] = round15(reduced_mass_ratio(config));
  return j;
}

struct Rendered {
  std::string text;
  int code = kSuccess;
};

// ---------------------------------------------------------------- levels

Rendered cmd_levels(const Options& o, Format format) {
  if (o.model != "pauli" && o.model != "ks") throw DomainError("model must be pauli or ks");
  if (o.max_shell < 1) throw DomainError("--max-shell must be >= 1");
  const auto q = QParam::real(o.q);
  const auto config = parse_mass(o.mass, o.z);
  const auto unit = parse_unit(o.unit.empty() ? "e0" : o.unit);

  struct Row {
    std::string label;
    int shell;
    double ratio;
    double energy;
    int multiplicity;
    std::optional<int> physical;
    Json extra;
  };
  std::vector<Row> rows;
  if (o.model == "pauli") {
    for (const auto& level : pauli_spectrum(o.max_shell - 1, q)) {
      Json extra;
      extra["two_j"] = level.two_j;
      rows.push_back({"2j=" + std::to_string(level.two_j), level.two_j + 1, level.energy_ratio,
                      convert(level.energy_ratio, EnergyUnit::RatioOfE0, unit, config), level.degeneracy,
                      level.degeneracy, extra});
    }
  } else {
    for (const auto& level : ks_spectrum(o.max_shell, q)) {
      std::string label = "n=" + std::to_string(level.shell) + ":";
      Json members = Json::array();
      for (std::size_t i = 0; i < level.members.size(); ++i) {
        if (i) label += "|";
        label += quadruple_label(level.members[i]);
        members.push_back(quadruple_label(level.members[i]));
      }
      Json extra;
      extra["nu"] = round15(level.nu);
      extra["members"] = members;
      rows.push_back({label, level.shell, level.energy_ratio,
                      convert(level.energy_ratio, EnergyUnit::RatioOfE0, unit, config),
                      level.oscillator_multiplicity, level.physical_multiplicity, extra});
    }
  }

  std::ostringstream os;
  if (format == Format::Json) {
    Json params;
    params["model"] = o.model;
    params["q"] = round15(o.q);
    params["max_shell"] = o.max_shell;
    params["unit"] = std::string(to_string(unit));
    params["config"] = config_json(config);
    Json levels = Json::array();
    for (const auto& r : rows) {
      Json l;
      l["label"] = r.label;
      l["shell"] = r.shell;
      l["energy_ratio"] = round15(r.ratio);
      l["energy"] = round15(r.energy);
      l["multiplicity"] = r.multiplicity;
      l["physical_multiplicity"] = r.physical ? Json(*r.physical) : Json(nullptr);
      for (const auto& [k, v] : r.extra.items()) l[k] = v;
      levels.push_back(l);
    }
    Json result;
    result["model"] = o.model;
    result["unit"] = std::string(to_string(unit));
    result["e0"] = round15(ground_energy(config, unit));
    result["levels"] = levels;
    Json doc;
    doc["manifest"] = manifest("levels", params);
    doc["result"] = result;
    os << doc.dump(2) << "\n";
  } else if (format == Format::Csv) {
    os << "model,label,energy,unit,multiplicity,q\n";
    for (const auto& r : rows) {
      os << o.model << "," << r.label << "," << fmt(r.energy) << "," << to_string(unit) << "," << r.multiplicity
         << "," << fmt(o.q) << "\n";
    }
  } else {
    os << "# model=" << o.model << " q=" << fmt(o.q) << " unit=" << to_string(unit) << " Z=" << config.z
       << " mass=" << mass_spec(config) << "\n";
    os << std::left << std::setw(6) << "shell" << std::setw(24) << "energy" << std::setw(24) << "E/E0"
       << std::setw(6) << "mult" << "label\n";
    for (const auto& r : rows) {
      os << std::left << std::setw(6) << r.shell << std::setw(24) << fmt(r.energy) << std::setw(24) << fmt(r.ratio)
         << std::setw(6) << r.multiplicity << r.label << "\n";
    }
  }
  return {os.str(), kSuccess};
}

// ---------------------------------------------------------------- split / fit

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

Rendered cmd_split(const Options& o, Format format) {
  const auto config = parse_mass(o.mass, o.z);
  const auto unit = parse_unit(o.unit.empty() ? "cm-1" : o.unit);
  const auto s = splitting_exact(o.q, config, unit);

  Json result;
  result["q"] = round15(s.q);
  result["unit"] = std::string(to_string(unit));
  result["delta_exact"] = round15(s.delta_exact);
  result["delta_exact_magnitude"] = round15(std::abs(s.delta_exact));
  result["delta_quadratic"] = round15(s.delta_quadratic);
  result["delta_quadratic_magnitude"] = round15(std::abs(s.delta_quadratic));
  result["sign"] = sign_of(s.delta_exact);

  std::ostringstream os;
  if (format == Format::Json) {
    Json params;
    params["q"] = round15(o.q);
    params["unit"] = std::string(to_string(unit));
    params["config"] = config_json(config);
    Json doc;
    doc["manifest"] = manifest("split", params);
    doc["result"] = result;
    os << doc.dump(2) << "\n";
  } else if (format == Format::Csv) {
    os << "key,value\n";
    for (const auto& [k, v] : result.items()) os << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  } else {
    os << "q                    " << fmt(s.q) << "\n"
       << "delta exact          " << fmt(s.delta_exact) << " " << to_string(unit) << "\n"
       << "delta quadratic      " << fmt(s.delta_quadratic) << " " << to_string(unit) << "\n"
       << "|delta exact|        " << fmt(std::abs(s.delta_exact)) << " " << to_string(unit) << "\n"
       << "|delta quadratic|    " << fmt(std::abs(s.delta_quadratic)) << " " << to_string(unit) << "\n"
       << "sign                 " << sign_of(s.delta_exact) << "\n";
  }
  return {os.str(), kSuccess};
}

Rendered cmd_fit(const Options& o, Format format) {
  if (!o.target) throw DomainError("fit requires --target");
  const auto config = parse_mass(o.mass, o.z);
  const auto unit = parse_unit(o.unit.empty() ? "cm-1" : o.unit);
  const auto f = fit_q(*o.target, unit, config);

  Json result;
  result["target"] = round15(*o.target);
  result["unit"] = std::string(to_string(unit));
  result["q_fitted"] = round15(f.q_fitted);
  result["q_conjugate"] = round15(f.q_conjugate);
  result["residual"] = round15(f.residual);
  result["iterations"] = f.iterations;
  result["bracket"] = Json::array({round15(f.bracket.first), round15(f.bracket.second)});
  result["signed_delta"] = round15(f.signed_delta);

  std::ostringstream os;
  if (format == Format::Json) {
    Json params;
    params["target"] = round15(*o.target);
    params["unit"] = std::string(to_string(unit));
    params["config"] = config_json(config);
    params["tol"] = kDefaultFitTolerance;
    Json doc;
    doc["manifest"] = manifest("fit", params);
    doc["result"] = result;
    os << doc.dump(2) << "\n";
  } else if (format == Format::Csv) {
    os << "key,value\n";
    for (const auto& [k, v] : result.items()) {
      if (k == "bracket") {
        os << "bracket_lo," << fmt(f.bracket.first) << "\nbracket_hi," << fmt(f.bracket.second) << "\n";
      } else {
        os << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << "target               " << fmt(*o.target) << " " << to_string(unit) << "\n"
       << "q fitted             " << fmt(f.q_fitted) << "\n"
       << "q conjugate (1/q)    " << fmt(f.q_conjugate) << "\n"
       << "signed delta         " << fmt(f.signed_delta) << " " << to_string(unit) << "\n"
       << "residual             " << fmt(f.residual) << "\n"
       << "iterations           " << f.iterations << "\n";
  }
  return {os.str(), kSuccess};
}

// ---------------------------------------------------------------- verify

Rendered cmd_verify(const Options& o, Format format) {
  if (o.n_max < 4) throw DomainError("--n-max must be >= 4");
  if (!(o.tol > 0.0)) throw DomainError("--tol must be > 0");
  const auto q = QParam::real(o.q);
  const auto basis = make_basis(o.n_max);

  const std::vector<RelationReport> reports = {
      check_qboson_relations(basis, q),
      check_su_q2_relations(basis, q),
      check_su_q11_relations(basis, q),
      check_construction_paths(basis, q),
  };
  const auto blocks = casimir_block_spectrum(basis, q);
  const auto closure = so32_closure(basis, q);
  const bool closure_asserted = o.q == 1.0;

  bool passed = true;
  Json relations = Json::array();
  for (const auto& r : reports) {
    const bool ok = r.max_interior_residual <= o.tol;
    passed = passed && ok;
    Json terms = Json::array();
    for (const auto& t : r.terms) terms.push_back({{"expression", t.expression}, {"residual", round15(t.residual)}});
    relations.push_back({{"name", r.relation_name},
                         {"max_interior_residual", round15(r.max_interior_residual)},
                         {"interior_dimension", r.interior_dimension},
                         {"asserted", true},
                         {"passed", ok},
                         {"terms", terms}});
  }
  Json casimir = Json::array();
  double casimir_worst = 0.0;
  for (const auto& b : blocks) {
    casimir_worst = std::max(casimir_worst, b.deviation);
    casimir.push_back({{"two_j", b.two_j},
                       {"eigenvalue", round15(b.eigenvalue)},
                       {"expected", round15(b.expected)},
                       {"deviation", round15(b.deviation)}});
  }
  const bool casimir_ok = casimir_worst <= o.tol;
  passed = passed && casimir_ok;
  const bool closure_ok = closure.max_residual <= o.tol;
  if (closure_asserted) passed = passed && closure_ok;

  std::ostringstream os;
  if (format == Format::Json) {
    Json params;
    params["q"] = round15(o.q);
    params["n_max"] = o.n_max;
    params["tol"] = o.tol;
    Json result;
    result["passed"] = passed;
    result["relations"] = relations;
    result["casimir"] = {{"max_deviation", round15(casimir_worst)}, {"passed", casimir_ok}, {"blocks", casimir}};
    result["closure"] = {{"residual", round15(closure.max_residual)},
                         {"worst_pair", closure.worst_pair},
                         {"interior_dimension", closure.interior_dimension},
                         {"asserted", closure_asserted},
                         {"passed", closure_asserted ? Json(closure_ok) : Json(nullptr)}};
    Json doc;
    doc["manifest"] = manifest("verify", params);
    doc["result"] = result;
    os << doc.dump(2) << "\n";
  } else if (format == Format::Csv) {
    os << "check,residual,asserted,passed\n";
    for (const auto& r : reports) {
      os << r.relation_name << "," << fmt(r.max_interior_residual) << ",true,"
         << (r.max_interior_residual <= o.tol ? "true" : "false") << "\n";
    }
    os << "casimir," << fmt(casimir_worst) << ",true," << (casimir_ok ? "true" : "false") << "\n";
    os << "so(3,2) closure," << fmt(closure.max_residual) << "," << (closure_asserted ? "true" : "false") << ","
       << (closure_asserted ? (closure_ok ? "true" : "false") : "") << "\n";
  } else {
    os << "# q=" << fmt(o.q) << " n_max=" << o.n_max << " tol=" << fmt(o.tol) << "\n";
    for (const auto& r : reports) {
      os << std::left << std::setw(22) << r.relation_name << std::setw(24) << fmt(r.max_interior_residual)
         << (r.max_interior_residual <= o.tol ? "PASS" : "FAIL") << "\n";
    }
    os << std::left << std::setw(22) << "casimir [j][j+1]" << std::setw(24) << fmt(casimir_worst)
       << (casimir_ok ? "PASS" : "FAIL") << "\n";
    os << std::left << std::setw(22) << "so(3,2) closure" << std::setw(24) << fmt(closure.max_residual)
       << (closure_asserted ? (closure_ok ? "PASS" : "FAIL") : "reported") << "\n";
    os << (passed ? "all asserted checks passed" : "verification FAILED") << "\n";
  }
  return {os.str(), passed ? kSuccess : kVerificationFailed};
}

// ---------------------------------------------------------------- constants

Rendered cmd_constants(Format format) {
  const auto& c = constants();
  const std::vector<std::pair<std::string, double>> entries = {
      {"rydberg_wavenumber_cm-1", c.rydberg_wavenumber},
      {"rydberg_energy_ev", c.rydberg_electronvolt},
      {"proton_electron_mass_ratio", c.proton_electron_mass_ratio},
      {"deuteron_electron_mass_ratio", c.deuteron_electron_mass_ratio},
  };
  std::ostringstream os;
  if (format == Format::Json) {
    Json result;
    result["version"] = std::string(c.version);
    Json values;
    for (const auto& [k, v] : entries) values[k] = round15(v);
    result["values"] = values;
    Json doc;
    doc["manifest"] = manifest("constants", Json::object());
    doc["result"] = result;
    os << doc.dump(2) << "\n";
  } else if (format == Format::Csv) {
    os << "name,value\nversion," << c.version << "\n";
    for (const auto& [k, v] : entries) os << k << "," << fmt(v) << "\n";
  } else {
    os << "# constant table " << c.version << "\n";
    for (const auto& [k, v] : entries) os << std::left << std::setw(32) << k << fmt(v) << "\n";
  }
  return {os.str(), kSuccess};
}

void add_config_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--unit", o.unit, "Energy unit: e0, ev, cm-1, ry");
  cmd->add_option("--z", o.z, "Nuclear charge number Z")->check(CLI::PositiveNumber);
  cmd->add_option("--mass", o.mass, "Reduced mass: h, d, inf, ratio:<x>");
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--out", o.out_path, "Write the result to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-deformed hydrogen atom: spectra, 2s-2p splitting, q fit, algebra checks", "qhydro"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  auto* levels = app.add_subcommand("levels", "Print a q-deformed discrete spectrum");
  levels->add_option("--model", o.model, "pauli or ks")->check(CLI::IsMember({"pauli", "ks"}));
  levels->add_option("--q", o.q, "Deformation parameter q > 0");
  levels->add_option("--max-shell", o.max_shell, "Highest shell n");
  add_config_options(levels, o);
  add_output_options(levels, o);

  auto* split = app.add_subcommand("split", "n = 2 splitting, exact and quadratic");
  split->add_option("--q", o.q, "Deformation parameter q > 0");
  add_config_options(split, o);
  add_output_options(split, o);

  auto* fit = app.add_subcommand("fit", "Fit q to a target |splitting|");
  fit->add_option("--target", o.target, "Target splitting magnitude")->required();
  add_config_options(fit, o);
  add_output_options(fit, o);

  auto* verify = app.add_subcommand("verify", "Check the algebra relations on a truncated basis");
  verify->add_option("--q", o.q, "Deformation parameter q > 0");
  verify->add_option("--n-max", o.n_max, "Per-mode occupation cutoff");
  verify->add_option("--tol", o.tol, "Residual tolerance");
  add_output_options(verify, o);

  auto* consts = app.add_subcommand("constants", "Dump the embedded constant table");
  add_output_options(consts, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    const auto format = parse_format(o.format);
    Rendered r;
    if (*levels) r = cmd_levels(o, format);
    else if (*split) r = cmd_split(o, format);
    else if (*fit) r = cmd_fit(o, format);
    else if (*verify) r = cmd_verify(o, format);
    else r = cmd_constants(format);

    if (o.out_path.empty()) {
      out << r.text;
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << o.out_path << " for writing\n";
        return kUsage;
      }
      file << r.text;
    }
    if (r.code == kVerificationFailed) err << "error: verification failed\n";
    return r.code;
  } catch (const FitDomainError& e) {
    err << "error: " << e.what() << "\n";
    return kFitDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace qhydro::cli
