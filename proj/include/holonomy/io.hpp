#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "holonomy/evolution.hpp"
#include "holonomy/phases.hpp"
#include "holonomy/scenarios.hpp"
#include "holonomy/states.hpp"

namespace holonomy::io {

using json = nlohmann::json;

// Matrices are nested row arrays of [re, im] pairs.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j, const std::string& where);

struct ScenarioOptions {
  std::optional<std::size_t> samples_per_segment;
  std::optional<double> cyclicity_tol;
  std::optional<double> nodal_tol;
};

struct ScenarioFile {
  std::string name;
  DensityOperator rho0;
  HamiltonianSchedule schedule;
  ScenarioOptions options;
};

/// Validates and converts a scenario document. Errors are ParseError (or the
/// state/schedule validation errors) qualified with the JSON path.
ScenarioFile parse_scenario(const json& doc);
ScenarioFile load_scenario(const std::filesystem::path& path);
json read_json_file(const std::filesystem::path& path);

DensityOperator parse_density(const json& j, const std::string& where);
HamiltonianSchedule parse_schedule(const json& j, const std::string& where);
json schedule_to_json(const HamiltonianSchedule& schedule);

json scenario_to_json(const std::string& name, const json& rho0, const HamiltonianSchedule& schedule,
                      const ScenarioOptions& options);
json qubit_rho_json(double r, double theta, double phi);
json matrix_rho_json(const DensityOperator& rho);

struct RunSettings {
  std::size_t samples_per_segment = kDefaultSamplesPerSegment;
  PhaseOptions phase;
};

/// Resolves defaults: explicit override > scenario option > HOLONOMY_TOL
/// (cyclicity only) > built-in default.
RunSettings resolve_settings(const ScenarioOptions& file, const ScenarioOptions& overrides);

struct Evaluation {
  json report;
  bool nodal = false;
};

/// Full phase report document. Throws NotCyclic.
Evaluation evaluate(const std::string& name, const DensityOperator& rho0,
                    const HamiltonianSchedule& schedule, const RunSettings& settings,
                    const std::optional<ExpectedPhases>& expected, const json& scenario_echo);

json phase_report_json(const PhaseReport& report);

/// "t,rx,ry,rz" header, 17 significant digits, LF endings.
void write_bloch_csv(std::ostream& out, const std::vector<BlochSample>& samples);

}  // namespace holonomy::io
