#ifndef CAPFLOW_TOOLS_CLI_HPP
#define CAPFLOW_TOOLS_CLI_HPP

// Command-line frontend. Exit codes: 0 success, 1 verification failure,
// 2 usage or validation error, 3 I/O error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "capflow/capflow.hpp"

namespace capflow::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kIoError = 3,
};

enum class OutputFormat { Plain, Csv, Json };

namespace detail {

// 17 significant digits round-trips every double.
inline std::string full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

inline nlohmann::json quantity(double value, const char* unit) {
  return {{"value", value}, {"unit", unit}};
}

struct TubeOptions {
  std::string shape;
  double rmin = 0.0;
  std::optional<double> rmax;
  double length = 0.0;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--shape", shape, "straight|conical|parabolic|hyperbolic|cosh|sinusoidal")
        ->required();
    cmd.add_option("--rmin", rmin, "minimum (throat) radius, m")->required();
    cmd.add_option("--rmax", rmax, "maximum radius, m (defaults to --rmin)");
    cmd.add_option("--length", length, "tube length, m")->required();
  }

  RadiusProfile profile() const {
    const auto kind = shape_from_token(shape);
    if (!kind) {
      throw CLI::ValidationError("--shape", "unknown shape '" + shape + "'");
    }
    return make_profile(*kind, rmin, rmax.value_or(rmin), length);
  }
};

inline void add_format(CLI::App& cmd, OutputFormat& format) {
  const std::map<std::string, OutputFormat> names{
      {"plain", OutputFormat::Plain}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};
  cmd.add_option("--format", format, "plain|csv|json")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

inline nlohmann::json tube_json(const RadiusProfile& p) {
  return {{"shape", std::string(to_token(p.kind()))},
          {"rmin", quantity(p.r_min(), "m")},
          {"rmax", quantity(p.r_max(), "m")},
          {"length", quantity(p.length(), "m")}};
}

inline std::string tube_csv(const RadiusProfile& p) {
  return std::string(to_token(p.kind())) + "," + full(p.r_min()) + "," + full(p.r_max()) +
         "," + full(p.length());
}

inline std::vector<ShapeKind> parse_shapes(const std::string& list) {
  if (list == "all") return {std::begin(kCorrugatedShapes), std::end(kCorrugatedShapes)};
  std::vector<ShapeKind> shapes;
  std::stringstream in(list);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto kind = shape_from_token(token);
    if (!kind) throw CLI::ValidationError("--shapes", "unknown shape '" + token + "'");
    shapes.push_back(*kind);
  }
  if (shapes.empty()) throw CLI::ValidationError("--shapes", "no shapes given");
  return shapes;
}

}  // namespace detail

inline void write_pdrop(std::ostream& out, OutputFormat format, const RadiusProfile& profile,
                        double viscosity, double flow, double pressure) {
  switch (format) {
    case OutputFormat::Plain:
      out << "pressure_drop " << detail::full(pressure) << " Pa\n";
      break;
    case OutputFormat::Csv:
      out << "shape,rmin,rmax,length,viscosity,flow_rate,pressure_drop\n"
          << detail::tube_csv(profile) << "," << detail::full(viscosity) << ","
          << detail::full(flow) << "," << detail::full(pressure) << "\n";
      break;
    case OutputFormat::Json: {
      auto record = detail::tube_json(profile);
      record["viscosity"] = detail::quantity(viscosity, "Pa_s");
      record["flow_rate"] = detail::quantity(flow, "m3_per_s");
      record["pressure_drop"] = detail::quantity(pressure, "Pa");
      out << record.dump() << "\n";
      break;
    }
  }
}

inline void write_qflow(std::ostream& out, OutputFormat format, const RadiusProfile& profile,
                        double viscosity, double pressure, double flow) {
  switch (format) {
    case OutputFormat::Plain:
      out << "flow_rate " << detail::full(flow) << " m3_per_s\n";
      break;
    case OutputFormat::Csv:
      out << "shape,rmin,rmax,length,viscosity,pressure_drop,flow_rate\n"
          << detail::tube_csv(profile) << "," << detail::full(viscosity) << ","
          << detail::full(pressure) << "," << detail::full(flow) << "\n";
      break;
    case OutputFormat::Json: {
      auto record = detail::tube_json(profile);
      record["viscosity"] = detail::quantity(viscosity, "Pa_s");
      record["pressure_drop"] = detail::quantity(pressure, "Pa");
      record["flow_rate"] = detail::quantity(flow, "m3_per_s");
      out << record.dump() << "\n";
      break;
    }
  }
}

inline void write_profile(std::ostream& out, OutputFormat format, const ProfileTable& table) {
  switch (format) {
    case OutputFormat::Plain:
      for (const auto& row : table.rows) {
        out << detail::full(row.x) << " " << detail::full(row.r) << "\n";
      }
      break;
    case OutputFormat::Csv:
      out << "x,r\n";
      for (const auto& row : table.rows) {
        out << detail::full(row.x) << "," << detail::full(row.r) << "\n";
      }
      break;
    case OutputFormat::Json: {
      auto rows = nlohmann::json::array();
      for (const auto& row : table.rows) {
        rows.push_back({{"x", row.x}, {"r", row.r}, {"unit", "m"}});
      }
      out << rows.dump() << "\n";
      break;
    }
  }
}

struct VerifyRow {
  std::size_t trial;
  VerificationReport report;
};

inline void write_verify(std::ostream& out, OutputFormat format,
                         const std::vector<VerifyRow>& rows) {
  const auto passed = static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.report.pass; }));
  switch (format) {
    case OutputFormat::Plain:
    case OutputFormat::Csv: {
      const char sep = format == OutputFormat::Csv ? ',' : ' ';
      out << "trial" << sep << "shape" << sep << "rmin" << sep << "rmax" << sep << "length"
          << sep << "analytic" << sep << "numeric" << sep << "discrepancy" << sep
          << "error_estimate" << sep << "converged" << sep << "pass\n";
      for (const auto& [trial, r] : rows) {
        out << trial << sep << to_token(r.profile.kind()) << sep << detail::full(r.profile.r_min())
            << sep << detail::full(r.profile.r_max()) << sep
            << detail::full(r.profile.length()) << sep
            << detail::full(r.analytic_pressure_drop) << sep
            << detail::full(r.numeric_pressure_drop) << sep
            << detail::full(r.relative_discrepancy) << sep
            << detail::full(r.oracle_error_estimate) << sep
            << (r.converged ? "true" : "false") << sep << (r.pass ? "true" : "false") << "\n";
      }
      if (format == OutputFormat::Plain) {
        out << "passed " << passed << " of " << rows.size() << "\n";
      }
      break;
    }
    case OutputFormat::Json: {
      auto trials = nlohmann::json::array();
      for (const auto& [trial, r] : rows) {
        auto record = detail::tube_json(r.profile);
        record["trial"] = trial;
        record["analytic_pressure_drop"] = detail::quantity(r.analytic_pressure_drop, "Pa");
        record["numeric_pressure_drop"] = detail::quantity(r.numeric_pressure_drop, "Pa");
        record["relative_discrepancy"] = r.relative_discrepancy;
        record["oracle_error_estimate"] = detail::quantity(r.oracle_error_estimate, "m-3");
        record["tolerance"] = r.tolerance;
        record["converged"] = r.converged;
        record["pass"] = r.pass;
        trials.push_back(std::move(record));
      }
      nlohmann::json doc{{"trials", std::move(trials)},
                         {"passed", passed},
                         {"total", rows.size()},
                         {"all_pass", passed == rows.size()}};
      out << doc.dump() << "\n";
      break;
    }
  }
}

/// Randomized closed-form-vs-quadrature sweep: `trials` profiles per shape,
/// ordered by shape then trial index.
inline std::vector<VerifyRow> run_verify(const std::vector<ShapeKind>& shapes,
                                         std::size_t trials, double tol, std::uint64_t seed,
                                         bool degenerate) {
  QuadratureConfig config;
  // keep the oracle an order of magnitude tighter than what it is checking
  config.rel_tol = std::min(config.rel_tol, tol / 10.0);

  ProfileSampler sampler(seed);
  std::vector<VerifyRow> rows;
  rows.reserve(shapes.size() * trials);
  std::size_t index = 0;
  for (const auto kind : shapes) {
    for (std::size_t t = 0; t < trials; ++t) {
      const auto profile = degenerate ? sampler.degenerate(kind) : sampler.corrugated(kind);
      rows.push_back({index++, verify_analytic(profile, tol, config)});
    }
  }
  return rows;
}

/// Parses argv and runs one subcommand, writing records to out and
/// diagnostics to err. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laminar flow through converging-diverging capillaries", "capflow"};
  app.require_subcommand(1);

  OutputFormat format = OutputFormat::Plain;
  double viscosity = 0.0;

  auto* pdrop = app.add_subcommand("pdrop", "pressure drop for a given flow rate");
  detail::TubeOptions pdrop_tube;
  double pdrop_flow = 0.0;
  pdrop_tube.add_to(*pdrop);
  pdrop->add_option("--viscosity", viscosity, "dynamic viscosity, Pa s")->required();
  pdrop->add_option("--flow", pdrop_flow, "volumetric flow rate, m^3/s")->required();
  detail::add_format(*pdrop, format);

  auto* qflow = app.add_subcommand("qflow", "flow rate for a given pressure drop");
  detail::TubeOptions qflow_tube;
  double qflow_pressure = 0.0;
  qflow_tube.add_to(*qflow);
  qflow->add_option("--viscosity", viscosity, "dynamic viscosity, Pa s")->required();
  qflow->add_option("--pressure", qflow_pressure, "pressure drop, Pa")->required();
  detail::add_format(*qflow, format);

  auto* profile_cmd = app.add_subcommand("profile", "sample r(x) over [-L/2, L/2]");
  detail::TubeOptions profile_tube;
  std::size_t samples = 101;
  std::string out_path;
  profile_tube.add_to(*profile_cmd);
  profile_cmd->add_option("--samples", samples, "number of points, >= 2")
      ->capture_default_str();
  profile_cmd->add_option("--out", out_path, "output file (default: stdout)");
  detail::add_format(*profile_cmd, format);

  auto* verify = app.add_subcommand("verify", "closed forms vs adaptive quadrature");
  std::string shapes = "all";
  std::size_t trials = 100;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  bool degenerate = false;
  verify->add_option("--shapes", shapes, "'all' or comma-separated shape list")
      ->capture_default_str();
  verify->add_option("--trials", trials, "random profiles per shape")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol, "relative tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_flag("--degenerate", degenerate, "use r_max == r_min profiles");
  detail::add_format(*verify, format);

  auto* network = app.add_subcommand("network", "evaluate a series/parallel network file");
  std::string network_file;
  std::optional<double> network_flow;
  std::optional<double> network_pressure;
  network->add_option("file", network_file, "network description (JSON)")->required();
  network->add_option("--viscosity", viscosity, "dynamic viscosity, Pa s")->required();
  auto* flow_opt = network->add_option("--flow", network_flow, "flow rate, m^3/s");
  auto* pressure_opt = network->add_option("--pressure", network_pressure, "pressure drop, Pa");
  flow_opt->excludes(pressure_opt);
  detail::add_format(*network, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (pdrop->parsed()) {
      const auto profile = pdrop_tube.profile();
      const Fluid fluid(viscosity);
      write_pdrop(out, format, profile, viscosity, pdrop_flow,
                  pressure_drop(profile, pdrop_flow, fluid));
    } else if (qflow->parsed()) {
      const auto profile = qflow_tube.profile();
      const Fluid fluid(viscosity);
      write_qflow(out, format, profile, viscosity, qflow_pressure,
                  flow_rate(profile, qflow_pressure, fluid));
    } else if (profile_cmd->parsed()) {
      const auto table = sample_profile(profile_tube.profile(), samples);
      if (out_path.empty()) {
        write_profile(out, format, table);
      } else {
        std::ofstream file(out_path);
        if (!file) throw IoError("cannot open '" + out_path + "' for writing");
        write_profile(file, format, table);
        file.close();
        if (!file) throw IoError("failed writing '" + out_path + "'");
      }
    } else if (verify->parsed()) {
      const auto rows = run_verify(detail::parse_shapes(shapes), trials, tol, seed, degenerate);
      write_verify(out, format, rows);
      const bool all_pass = std::all_of(rows.begin(), rows.end(),
                                        [](const VerifyRow& r) { return r.report.pass; });
      return all_pass ? kSuccess : kVerificationFailed;
    } else if (network->parsed()) {
      if (network_flow.has_value() == network_pressure.has_value()) {
        err << "network: exactly one of --flow or --pressure is required\n";
        return kUsageError;
      }
      const auto tree = load_network(network_file);
      const Fluid fluid(viscosity);
      const auto resistance = network_resistance(tree, fluid);
      const double flow =
          network_flow ? *network_flow : network_flow_rate(tree, *network_pressure, fluid);
      const double pressure =
          network_pressure ? *network_pressure : network_pressure_drop(tree, *network_flow, fluid);
      switch (format) {
        case OutputFormat::Plain:
          out << "resistance " << detail::full(resistance.resistance) << " Pa_s_per_m3\n";
          if (network_flow) {
            out << "pressure_drop " << detail::full(pressure) << " Pa\n";
          } else {
            out << "flow_rate " << detail::full(flow) << " m3_per_s\n";
          }
          break;
        case OutputFormat::Csv:
          out << "viscosity,resistance,geometric_factor,flow_rate,pressure_drop\n"
              << detail::full(viscosity) << "," << detail::full(resistance.resistance) << ","
              << detail::full(resistance.geometric_factor) << "," << detail::full(flow) << ","
              << detail::full(pressure) << "\n";
          break;
        case OutputFormat::Json: {
          nlohmann::json record{
              {"viscosity", detail::quantity(viscosity, "Pa_s")},
              {"resistance", detail::quantity(resistance.resistance, "Pa_s_per_m3")},
              {"geometric_factor", detail::quantity(resistance.geometric_factor, "m-3")},
              {"flow_rate", detail::quantity(flow, "m3_per_s")},
              {"pressure_drop", detail::quantity(pressure, "Pa")}};
          out << record.dump() << "\n";
          break;
        }
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kSuccess;
}

}  // namespace capflow::cli

#endif
