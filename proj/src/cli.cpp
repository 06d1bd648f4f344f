#include "holonomy/cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "holonomy/composite.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/io.hpp"
#include "holonomy/transport.hpp"

namespace holonomy::cli {

namespace {

using io::json;

constexpr double kCompositeAgreementTol = 1e-6;

struct CommonFlags {
  std::optional<std::size_t> samples;
  std::optional<double> cyclicity_tol;
  std::optional<double> nodal_tol;

  void attach(CLI::App* app) {
    app->add_option("--samples", samples, "Grid intervals per schedule segment")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    app->add_option("--cyclicity-tol", cyclicity_tol, "Override the cyclicity tolerance")
        ->check(CLI::PositiveNumber);
    app->add_option("--nodal-tol", nodal_tol, "Override the nodal tolerance")
        ->check(CLI::PositiveNumber);
  }

  io::ScenarioOptions overrides() const { return {samples, cyclicity_tol, nodal_tol}; }
};

struct QubitFlags {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double omega = 1.0;
  bool degrees = false;

  double angle(double x) const { return degrees ? x * std::numbers::pi / 180.0 : x; }
};

void add_qubit_flags(CLI::App* app, QubitFlags& q, bool with_phi, bool required) {
  auto* r = app->add_option("--r", q.r, "Bloch radius in [0, 1]");
  auto* t = app->add_option("--theta", q.theta, "Polar angle (radians unless --degrees)");
  if (required) {
    r->required();
    t->required();
  }
  if (with_phi) {
    auto* p = app->add_option("--phi", q.phi, "Azimuthal sweep (radians unless --degrees)");
    if (required) p->required();
  }
  app->add_option("--omega", q.omega, "Field strength as an angular frequency (hbar = 1)");
  app->add_flag("--degrees", q.degrees, "Interpret angles in degrees");
}

int emit(std::ostream& out, const io::Evaluation& ev) {
  out << ev.report.dump(2) << '\n';
  return ev.nodal ? kNodal : kOk;
}

int run_example(const std::string& which, const QubitFlags& q, const CommonFlags& flags,
                std::ostream& out) {
  const double theta = q.angle(q.theta);
  const double phi = q.angle(q.phi);
  const ScenarioSpec spec = which == "example1" ? example_one(q.r, theta, q.omega)
                                                : example_two(q.r, theta, phi, q.omega);
  const io::ScenarioOptions opts = flags.overrides();
  const json rho_echo = which == "example1" ? io::qubit_rho_json(q.r, theta, 0.0)
                                            : io::qubit_rho_json(q.r, 0.0, 0.0);
  const json echo = io::scenario_to_json(spec.name, rho_echo, spec.schedule, opts);
  const io::RunSettings settings = io::resolve_settings({}, opts);
  return emit(out, io::evaluate(spec.name, spec.rho0, spec.schedule, settings, spec.expected, echo));
}

std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("--weights: cannot parse \"" + item + "\"");
    }
  }
  return out;
}

struct CompositeInput {
  CompositeState state;
  HamiltonianSchedule schedule;
};

CompositeInput composite_demo(const std::string& name) {
  const ScenarioSpec ex1 = example_one(0.5, std::numbers::pi / 3.0);
  if (name == "product" || name == "identity") {
    const ComplexMatrix rho_a = 0.5 * pauli::identity();
    auto state = CompositeState::make(
        2, 2, DensityOperator::from_matrix(kron(rho_a, ex1.rho0.matrix())));
    if (name == "product") return {std::move(state), ex1.schedule};
    return {std::move(state),
            HamiltonianSchedule::piecewise({{1.0, ComplexMatrix::Zero(2, 2)}})};
  }
  if (name == "correlated") {
    ComplexMatrix d1 = ComplexMatrix::Zero(2, 2), d2 = ComplexMatrix::Zero(2, 2);
    d1(0, 0) = 0.9;
    d1(1, 1) = 0.1;
    d2(0, 0) = 0.2;
    d2(1, 1) = 0.8;
    const std::vector<double> w{0.3, 0.7};
    const std::vector<DensityOperator> states{DensityOperator::from_matrix(d1),
                                              DensityOperator::from_matrix(d2)};
    return {build_correlated(w, states), ex1.schedule};
  }
  throw ParseError("unknown composite demo \"" + name + "\" (product, correlated, identity)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total, dynamical and geometric phases of mixed states under cyclic evolution",
               "holonomy"};
  app.require_subcommand(1);

  CommonFlags run_flags, ex1_flags, ex2_flags, bloch_flags, comp_flags;

  std::string scenario_path;
  auto* run_cmd = app.add_subcommand("run", "Evaluate a JSON scenario file");
  run_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
  run_flags.attach(run_cmd);

  QubitFlags ex1_q, ex2_q;
  auto* ex1_cmd = app.add_subcommand("example1", "Qubit in a constant field along z");
  add_qubit_flags(ex1_cmd, ex1_q, false, true);
  ex1_flags.attach(ex1_cmd);

  auto* ex2_cmd = app.add_subcommand("example2", "Qubit in a three-segment field");
  add_qubit_flags(ex2_cmd, ex2_q, true, true);
  ex2_flags.attach(ex2_cmd);

  std::string bloch_scenario, bloch_out;
  std::size_t bloch_samples = 100;
  QubitFlags bloch_q;
  auto* bloch_cmd = app.add_subcommand("bloch", "Export the Bloch-vector path as CSV");
  bloch_cmd
      ->add_option("--scenario", bloch_scenario,
                   "Scenario file, or example1 / example2 with --r --theta [--phi]")
      ->required();
  bloch_cmd->add_option("--samples", bloch_samples, "Number of rows")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  bloch_cmd->add_option("--out", bloch_out, "Output CSV (default: standard output)");
  add_qubit_flags(bloch_cmd, bloch_q, true, false);

  std::string comp_weights, comp_states, comp_schedule, comp_demo;
  auto* comp_cmd = app.add_subcommand("composite", "Check the composite-system phase theorem");
  comp_cmd->add_option("--weights", comp_weights, "Comma-separated weights for |i><i|_A");
  comp_cmd->add_option("--states", comp_states, "JSON array of subsystem-B states");
  comp_cmd->add_option("--schedule", comp_schedule, "JSON schedule acting on subsystem B");
  comp_cmd->add_option("--demo", comp_demo, "Built-in demo: product, correlated, identity");
  comp_flags.attach(comp_cmd);

  QubitFlags ce_q;
  ce_q.r = 0.5;
  ce_q.theta = std::numbers::pi / 4.0;
  std::size_t ce_samples = kDefaultSamplesPerSegment;
  auto* ce_cmd = app.add_subcommand("counterexample",
                                    "Alternative parallel transport that misses the phase");
  add_qubit_flags(ce_cmd, ce_q, false, false);
  ce_cmd->add_option("--samples", ce_samples, "Grid intervals")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (run_cmd->parsed()) {
      const io::ScenarioFile file = io::load_scenario(scenario_path);
      const io::RunSettings settings = io::resolve_settings(file.options, run_flags.overrides());
      const json echo = io::read_json_file(scenario_path);
      return emit(out, io::evaluate(file.name, file.rho0, file.schedule, settings, std::nullopt,
                                    echo));
    }
    if (ex1_cmd->parsed()) return run_example("example1", ex1_q, ex1_flags, out);
    if (ex2_cmd->parsed()) return run_example("example2", ex2_q, ex2_flags, out);

    if (bloch_cmd->parsed()) {
      std::optional<ScenarioSpec> spec;
      if (bloch_scenario == "example1") {
        spec = example_one(bloch_q.r, bloch_q.angle(bloch_q.theta), bloch_q.omega);
      } else if (bloch_scenario == "example2") {
        spec = example_two(bloch_q.r, bloch_q.angle(bloch_q.theta), bloch_q.angle(bloch_q.phi),
                           bloch_q.omega);
      } else {
        io::ScenarioFile file = io::load_scenario(bloch_scenario);
        spec.emplace(ScenarioSpec{file.name, std::move(file.rho0), std::move(file.schedule),
                                  std::nullopt});
      }
      const auto samples = bloch_path(*spec, bloch_samples);
      if (bloch_out.empty()) {
        io::write_bloch_csv(out, samples);
      } else {
        std::ofstream f(bloch_out, std::ios::binary);
        if (!f) throw ParseError("cannot write " + bloch_out);
        io::write_bloch_csv(f, samples);
      }
      return kOk;
    }

    if (comp_cmd->parsed()) {
      std::optional<CompositeInput> input;
      if (!comp_demo.empty()) {
        input = composite_demo(comp_demo);
      } else {
        if (comp_weights.empty() || comp_states.empty() || comp_schedule.empty()) {
          throw ParseError("composite needs --demo or all of --weights, --states, --schedule");
        }
        const std::vector<double> weights = parse_weights(comp_weights);
        const json states_doc = io::read_json_file(comp_states);
        if (!states_doc.is_array()) throw ParseError(comp_states + ": expected an array");
        std::vector<DensityOperator> states;
        for (std::size_t i = 0; i < states_doc.size(); ++i) {
          states.push_back(io::parse_density(states_doc[i], "$[" + std::to_string(i) + "]"));
        }
        input.emplace(CompositeInput{build_correlated(weights, states),
                                     io::parse_schedule(io::read_json_file(comp_schedule), "$")});
      }
      const io::RunSettings settings = io::resolve_settings({}, comp_flags.overrides());
      const UnitaryPath path = propagate(input->schedule, settings.samples_per_segment);
      const TheoremCheck check = theorem_check(input->state, path, settings.phase);
      const json doc = {{"ab", io::phase_report_json(check.phi_ab)},
                        {"b", io::phase_report_json(check.phi_b)},
                        {"agreement", check.agreement}};
      out << doc.dump(2) << '\n';
      if (check.agreement > kCompositeAgreementTol) {
        err << "error: composite and subsystem geometric phases disagree by " << check.agreement
            << '\n';
        return kInvalidInput;
      }
      return kOk;
    }

    if (ce_cmd->parsed()) {
      const CounterexampleResult res =
          counterexample_lift(ce_q.r, ce_q.angle(ce_q.theta), ce_q.omega, ce_samples);
      const json doc = {{"r", ce_q.r},
                        {"theta", ce_q.angle(ce_q.theta)},
                        {"residual_plus", res.residuals[0]},
                        {"residual_minus", res.residuals[1]},
                        {"phase", res.phase},
                        {"geometric", res.geometric},
                        {"distance", phase_distance(res.phase, res.geometric)}};
      out << doc.dump(2) << '\n';
      return kOk;
    }
  } catch (const NotCyclic& e) {
    err << "not cyclic: " << e.what() << '\n';
    return kNotCyclic;
  } catch (const NodalPoint& e) {
    err << "nodal point: " << e.what() << '\n';
    return kNodal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const io::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace holonomy::cli
