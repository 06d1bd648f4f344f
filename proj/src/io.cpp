#include "holonomy/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "holonomy/errors.hpp"
#include "holonomy/transport.hpp"

namespace holonomy::io {

namespace {

const json& require_key(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing key \"" + key + "\"");
  return *it;
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + ": non-finite number");
  return v;
}

double positive_at(const json& j, const std::string& where) {
  const double v = number_at(j, where);
  if (!(v > 0.0)) throw ParseError(where + ": must be positive");
  return v;
}

// Re-throws validation failures with the JSON path prepended, keeping the
// concrete error type.
template <typename F>
auto qualified(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const NotHermitian& e) {
    throw NotHermitian(where + ": " + e.what());
  } catch (const InvalidSchedule& e) {
    throw InvalidSchedule(where + ": " + e.what());
  } catch (const InvalidPurity& e) {
    throw InvalidPurity(where + ": " + e.what());
  } catch (const InvalidDensity& e) {
    throw InvalidDensity(where + ": " + e.what());
  } catch (const DimensionMismatch& e) {
    throw DimensionMismatch(where + ": " + e.what());
  } catch (const InvalidAngle& e) {
    throw InvalidAngle(where + ": " + e.what());
  }
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError(rw + ": expected a row of " + std::to_string(n) + " entries");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      const std::string ew = rw + "[" + std::to_string(c) + "]";
      if (e.is_number()) {
        m(r, c) = number_at(e, ew);
      } else if (e.is_array() && e.size() == 2) {
        m(r, c) = Complex(number_at(e[0], ew + "[0]"), number_at(e[1], ew + "[1]"));
      } else {
        throw ParseError(ew + ": expected [re, im]");
      }
    }
  }
  return m;
}

DensityOperator parse_density(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  if (j.contains("qubit")) {
    const json& q = j["qubit"];
    const std::string qw = where + ".qubit";
    const double r = number_at(require_key(q, "r", qw), qw + ".r");
    const double theta = number_at(require_key(q, "theta", qw), qw + ".theta");
    const double phi = q.contains("phi") ? number_at(q["phi"], qw + ".phi") : 0.0;
    return qualified(qw, [&] { return qubit_state(r, theta, phi); });
  }
  if (j.contains("matrix")) {
    const ComplexMatrix m = matrix_from_json(j["matrix"], where + ".matrix");
    return qualified(where + ".matrix", [&] { return DensityOperator::from_matrix(m); });
  }
  throw ParseError(where + ": expected \"qubit\" or \"matrix\"");
}

HamiltonianSchedule parse_schedule(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  if (j.contains("segments")) {
    const json& segs = j["segments"];
    const std::string sw = where + ".segments";
    if (!segs.is_array() || segs.empty()) throw ParseError(sw + ": expected a non-empty array");
    std::vector<ScheduleSegment> out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const std::string iw = sw + "[" + std::to_string(i) + "]";
      ScheduleSegment seg;
      seg.duration = positive_at(require_key(segs[i], "duration", iw), iw + ".duration");
      seg.h = matrix_from_json(require_key(segs[i], "h", iw), iw + ".h");
      out.push_back(std::move(seg));
    }
    return qualified(where, [&] { return HamiltonianSchedule::piecewise(std::move(out)); });
  }
  if (j.contains("sampled")) {
    const json& s = j["sampled"];
    const std::string sw = where + ".sampled";
    const double tau = positive_at(require_key(s, "tau", sw), sw + ".tau");
    const json& hs = require_key(s, "h", sw);
    if (!hs.is_array()) throw ParseError(sw + ".h: expected an array of matrices");
    std::vector<ComplexMatrix> h;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      h.push_back(matrix_from_json(hs[i], sw + ".h[" + std::to_string(i) + "]"));
    }
    return qualified(where, [&] { return HamiltonianSchedule::sampled(tau, std::move(h)); });
  }
  throw ParseError(where + ": expected \"segments\" or \"sampled\"");
}

json schedule_to_json(const HamiltonianSchedule& schedule) {
  if (schedule.is_piecewise()) {
    json segs = json::array();
    for (const auto& s : schedule.segments()) {
      segs.push_back({{"duration", s.duration}, {"h", matrix_to_json(s.h)}});
    }
    return {{"segments", std::move(segs)}};
  }
  json hs = json::array();
  for (const auto& h : schedule.samples().h) hs.push_back(matrix_to_json(h));
  return {{"sampled", {{"tau", schedule.samples().tau}, {"h", std::move(hs)}}}};
}

json qubit_rho_json(double r, double theta, double phi) {
  return {{"qubit", {{"r", r}, {"theta", theta}, {"phi", phi}}}};
}

json matrix_rho_json(const DensityOperator& rho) {
  return {{"matrix", matrix_to_json(rho.matrix())}};
}

json scenario_to_json(const std::string& name, const json& rho0, const HamiltonianSchedule& schedule,
                      const ScenarioOptions& options) {
  json doc = {{"name", name}, {"rho0", rho0}, {"schedule", schedule_to_json(schedule)}};
  json opts = json::object();
  if (options.samples_per_segment) opts["samples_per_segment"] = *options.samples_per_segment;
  if (options.cyclicity_tol) opts["cyclicity_tol"] = *options.cyclicity_tol;
  if (options.nodal_tol) opts["nodal_tol"] = *options.nodal_tol;
  if (!opts.empty()) doc["options"] = std::move(opts);
  return doc;
}

ScenarioFile parse_scenario(const json& doc) {
  if (!doc.is_object()) throw ParseError("$: expected an object");
  std::string name = "scenario";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("$.name: expected a string");
    name = doc["name"].get<std::string>();
  }
  DensityOperator rho0 = parse_density(require_key(doc, "rho0", "$"), "$.rho0");
  HamiltonianSchedule schedule = parse_schedule(require_key(doc, "schedule", "$"), "$.schedule");
  if (rho0.dim() != schedule.dim()) {
    throw DimensionMismatch("$: rho0 has dimension " + std::to_string(rho0.dim()) +
                            " but the schedule acts on dimension " +
                            std::to_string(schedule.dim()));
  }

  ScenarioOptions options;
  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) throw ParseError("$.options: expected an object");
    if (o.contains("samples_per_segment")) {
      const json& s = o["samples_per_segment"];
      if (!s.is_number_integer() || s.get<long long>() < 2) {
        throw ParseError("$.options.samples_per_segment: expected an integer >= 2");
      }
      options.samples_per_segment = s.get<std::size_t>();
    }
    if (o.contains("cyclicity_tol")) {
      options.cyclicity_tol = positive_at(o["cyclicity_tol"], "$.options.cyclicity_tol");
    }
    if (o.contains("nodal_tol")) {
      options.nodal_tol = positive_at(o["nodal_tol"], "$.options.nodal_tol");
    }
  }
  return {std::move(name), std::move(rho0), std::move(schedule), options};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  return parse_scenario(read_json_file(path));
}

RunSettings resolve_settings(const ScenarioOptions& file, const ScenarioOptions& overrides) {
  RunSettings s;
  s.samples_per_segment = overrides.samples_per_segment.value_or(
      file.samples_per_segment.value_or(kDefaultSamplesPerSegment));
  if (overrides.cyclicity_tol) {
    s.phase.cyclicity_tol = overrides.cyclicity_tol;
  } else if (file.cyclicity_tol) {
    s.phase.cyclicity_tol = file.cyclicity_tol;
  } else if (const char* env = std::getenv("HOLONOMY_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0)) {
      throw ParseError(std::string("HOLONOMY_TOL is not a positive number: ") + env);
    }
    s.phase.cyclicity_tol = tol;
  }
  s.phase.nodal_tol = overrides.nodal_tol.value_or(file.nodal_tol.value_or(kNodalTol));
  return s;
}

json phase_report_json(const PhaseReport& r) {
  return {{"total", r.total},
          {"dynamical", r.dynamical},
          {"geometric", r.geometric},
          {"geometric_mod", r.geometric_mod},
          {"trace_magnitude", r.trace_magnitude},
          {"cyclicity_residual", r.cyclicity_residual},
          {"nodal", r.nodal}};
}

Evaluation evaluate(const std::string& name, const DensityOperator& rho0,
                    const HamiltonianSchedule& schedule, const RunSettings& settings,
                    const std::optional<ExpectedPhases>& expected, const json& scenario_echo) {
  const UnitaryPath path = propagate(schedule, settings.samples_per_segment);
  const PhaseReport rep = phase_report(rho0, path, settings.phase);

  json doc = {{"name", name}};
  doc.update(phase_report_json(rep));
  doc["global_cyclic"] = is_global_cyclic(path).global;

  if (rep.nodal) {
    doc["parallel"] = nullptr;
  } else {
    const TransportedPath lift = parallel_lift(rho0, path, settings.phase);
    doc["parallel"] = {{"xi_tau", lift.xi_final()},
                       {"sjoqvist_phase", sjoqvist_phase(rho0, lift, settings.phase)},
                       {"residual", parallel_residual(rho0, lift.lifted)}};
  }

  if (expected) {
    json e = {{"source", expected->source}};
    const auto field = [&](const char* key, double value, double deviation) {
      e[key] = {{"value", value}, {"deviation", deviation}};
    };
    if (rep.nodal) {
      field("total", expected->total, std::nan(""));
      field("geometric", expected->geometric, std::nan(""));
    } else {
      field("total", expected->total, phase_distance(rep.total, expected->total));
      field("geometric", expected->geometric, phase_distance(rep.geometric, expected->geometric));
    }
    field("dynamical", expected->dynamical, std::abs(rep.dynamical - expected->dynamical));
    doc["expected"] = std::move(e);
  }
  doc["scenario"] = scenario_echo;
  return {std::move(doc), rep.nodal};
}

void write_bloch_csv(std::ostream& out, const std::vector<BlochSample>& samples) {
  out << "t,rx,ry,rz\n";
  char buf[128];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.t, s.r.r[0], s.r.r[1],
                  s.r.r[2]);
    out << buf;
  }
}

}  // namespace holonomy::io
