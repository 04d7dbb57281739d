#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qflow/analysis.hpp"
#include "qflow/currents.hpp"
#include "qflow/eigenstates.hpp"
#include "qflow/units.hpp"
#include "qflow/verify.hpp"

namespace qflow::cli {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct GridSpec {
  double r_min = 0.1, r_max = 5.0;
  int n_r = 50;
  int n_theta = 24; // open interval (0, pi), midpoint placement
  int n_phi = 1;    // [0, 2*pi)

  void validate() const {
    if (n_r < 1 || n_theta < 1 || n_phi < 1)
      throw std::domain_error("grid: counts must be >= 1");
    if (!(r_min > 0.0) || !(r_max >= r_min))
      throw std::domain_error("grid: need 0 < r_min <= r_max");
  }

  double r_at(int i) const {
    return n_r == 1 ? r_min
                    : r_min + (r_max - r_min) * i / (n_r - 1.0);
  }
  double theta_at(int j) const { return M_PI * (j + 0.5) / n_theta; }
  double phi_at(int k) const { return 2.0 * M_PI * k / n_phi; }
};

// "r=0.1:5:50,theta=24,phi=8"
inline GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw std::domain_error("grid: expected key=value in '" + part + "'");
    const std::string key = part.substr(0, eq);
    const std::string val = part.substr(eq + 1);
    if (key == "r") {
      double lo, hi;
      int n;
      if (std::sscanf(val.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3)
        throw std::domain_error("grid: r expects min:max:count");
      g.r_min = lo;
      g.r_max = hi;
      g.n_r = n;
    } else if (key == "theta") {
      g.n_theta = std::stoi(val);
    } else if (key == "phi") {
      g.n_phi = std::stoi(val);
    } else {
      throw std::domain_error("grid: unknown key '" + key + "'");
    }
  }
  g.validate();
  return g;
}

inline SpinVector parse_spin(const std::string& text) {
  if (text == "up")
    return SpinVector::up();
  if (text == "down")
    return SpinVector::down();
  if (text == "none")
    return SpinVector::none();
  double x, y, z;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &x, &y, &z) == 3)
    return {{x, y, z}};
  throw std::domain_error("spin: expected up|down|none|sx,sy,sz");
}

inline QuantumNumbers parse_state(const std::string& text) {
  int n, l, m;
  if (std::sscanf(text.c_str(), "%d,%d,%d", &n, &l, &m) != 3)
    throw std::domain_error("state: expected n,l,m");
  return {n, l, m};
}

inline SphericalPoint parse_point(const std::string& text) {
  double r, theta, phi;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &r, &theta, &phi) != 3)
    throw std::domain_error("point: expected r,theta,phi");
  return {r, theta, phi};
}

inline SchrodingerState make_state(const std::string& system,
                                   const QuantumNumbers& qn, double omega) {
  if (system == "hydrogen")
    return hydrogen_state(qn);
  if (system == "oscillator")
    return oscillator_state(qn, omega);
  throw std::domain_error("system: expected hydrogen|oscillator");
}

inline int quad_points_from_env(int fallback) {
  if (const char* env = std::getenv("QFLOW_QUAD_POINTS")) {
    const int v = std::atoi(env);
    if (v >= 8)
      return v;
  }
  return fallback;
}

struct OutputScales {
  double length = 1.0, velocity = 1.0, density = 1.0, current = 1.0,
         time = 1.0;
};

inline OutputScales scales_for(UnitSystem units) {
  OutputScales s;
  if (units == UnitSystem::SI) {
    const PhysicalConstants k = constants(UnitSystem::SI);
    s.length = k.length_unit;
    s.velocity = k.velocity_unit;
    s.density = 1.0 / (k.length_unit * k.length_unit * k.length_unit);
    s.current = s.velocity * s.density;
    s.time = k.time_unit;
  }
  return s;
}

inline int cmd_constants(const std::string& units_name, std::ostream& out) {
  const UnitSystem sys =
      units_name == "si" ? UnitSystem::SI : UnitSystem::Atomic;
  const PhysicalConstants k = constants(sys);
  out << "units = " << (sys == UnitSystem::SI ? "si" : "atomic") << "\n"
      << "hbar = " << fmt(k.hbar) << "\n"
      << "m_e = " << fmt(k.m_e) << "\n"
      << "e_charge = " << fmt(k.e_charge) << "\n"
      << "c = " << fmt(k.c) << "\n"
      << "alpha = " << fmt(k.alpha) << "\n"
      << "r0 = " << fmt(k.r0) << "\n"
      << "velocity_unit = " << fmt(k.velocity_unit) << "\n"
      << "length_unit = " << fmt(k.length_unit) << "\n"
      << "energy_unit = " << fmt(k.energy_unit) << "\n"
      << "time_unit = " << fmt(k.time_unit) << "\n";
  return 0;
}

inline int cmd_sample(const SchrodingerState& state, const SpinVector& spin,
                      const GridSpec& grid, UnitSystem units,
                      std::ostream& out) {
  const OutputScales sc = scales_for(units);
  out << "r,theta,phi,x,y,z,rho,J_r,J_theta,J_phi,v_r,v_theta,v_phi\n";
  long skipped = 0;
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_theta; ++j)
      for (int k = 0; k < grid.n_phi; ++k) {
        const SphericalPoint p{grid.r_at(i), grid.theta_at(j), grid.phi_at(k)};
        if (on_polar_axis(p, 1e-15)) {
          ++skipped;
          continue;
        }
        double rho;
        SphericalVector J, v;
        try {
          rho = state.rho(p);
          J = total_current(state, spin, p);
          v = velocity(state, spin, p);
        } catch (const std::exception&) {
          ++skipped;
          continue;
        }
        const Vec3 x = to_cartesian(p);
        out << fmt(p.r * sc.length) << ',' << fmt(p.theta) << ','
            << fmt(p.phi) << ',' << fmt(x.x * sc.length) << ','
            << fmt(x.y * sc.length) << ',' << fmt(x.z * sc.length) << ','
            << fmt(rho * sc.density) << ',' << fmt(J.v_r * sc.current) << ','
            << fmt(J.v_theta * sc.current) << ',' << fmt(J.v_phi * sc.current)
            << ',' << fmt(v.v_r * sc.velocity) << ','
            << fmt(v.v_theta * sc.velocity) << ','
            << fmt(v.v_phi * sc.velocity) << '\n';
      }
  out << "# skipped_points," << skipped << "\n";
  return 0;
}

inline int cmd_streamline(const SchrodingerState& state,
                          const SpinVector& spin, const SphericalPoint& start,
                          double dt, int steps, UnitSystem units,
                          std::ostream& out) {
  const OutputScales sc = scales_for(units);
  const Trajectory traj = streamline(
      [&](const SphericalPoint& p) { return velocity(state, spin, p); },
      start, dt, steps, state.label());
  out << "t,x,y,z,r,theta,phi\n";
  for (const TrajectorySample& s : traj.samples) {
    const Vec3 x = to_cartesian(s.p);
    out << fmt(s.t * sc.time) << ',' << fmt(x.x * sc.length) << ','
        << fmt(x.y * sc.length) << ',' << fmt(x.z * sc.length) << ','
        << fmt(s.p.r * sc.length) << ',' << fmt(s.p.theta) << ','
        << fmt(s.p.phi) << '\n';
  }
  if (traj.error) {
    std::cerr << "streamline stopped early: " << *traj.error << "\n";
    return 2;
  }
  return 0;
}

inline int cmd_compare(const GridSpec& grid, UnitSystem units,
                       std::ostream& out) {
  const OutputScales sc = scales_for(units);
  std::vector<SphericalPoint> points;
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_theta; ++j)
      for (int k = 0; k < grid.n_phi; ++k)
        points.push_back({grid.r_at(i), grid.theta_at(j), grid.phi_at(k)});
  const ComparisonReport report = compare_dirac_schrodinger(points);
  out << "r,theta,phi,v_dirac,v_corrected,v_classical,abs_dev,rel_dev\n";
  for (const ComparisonRow& row : report.rows) {
    if (row.error) {
      out << fmt(row.p.r * sc.length) << ',' << fmt(row.p.theta) << ','
          << fmt(row.p.phi) << ",error,error,error,error,error\n";
      continue;
    }
    out << fmt(row.p.r * sc.length) << ',' << fmt(row.p.theta) << ','
        << fmt(row.p.phi) << ',' << fmt(row.v_dirac * sc.velocity) << ','
        << fmt(row.v_corrected * sc.velocity) << ','
        << fmt(row.v_classical * sc.velocity) << ','
        << fmt(row.abs_deviation * sc.velocity) << ','
        << fmt(row.rel_deviation) << '\n';
  }
  out << "# max_abs_dev," << fmt(report.max_abs_deviation * sc.velocity)
      << "\n# max_rel_dev," << fmt(report.max_rel_deviation) << "\n";
  return 0;
}

inline int cmd_verify(const std::string& suite, std::ostream& out) {
  const int quad_points = quad_points_from_env(160);
  const std::vector<verify::CheckResult> results =
      verify::run_suite(suite, quad_points);
  if (results.empty()) {
    std::cerr << "verify: unknown suite '" << suite << "'\n";
    return 1;
  }
  int failed = 0;
  for (const verify::CheckResult& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  [" << r.suite << "] " << r.name;
    if (!r.detail.empty())
      out << "  (" << r.detail << ")";
    out << "\n";
    if (!r.pass)
      ++failed;
  }
  out << failed << " of " << results.size() << " checks failed\n";
  return failed == 0 ? 0 : 2;
}

inline int run(const std::vector<std::string>& argv) {
  CLI::App app{"qflow: spin-corrected quantum probability currents"};
  app.require_subcommand(1);

  std::string units_name = "atomic";
  std::string system = "hydrogen";
  std::string state_text = "1,0,0";
  std::string spin_text = "up";
  std::string grid_text = "r=0.1:5:50,theta=24,phi=1";
  std::string start_text = "1,1.5708,0";
  std::string suite = "all";
  std::string output_path;
  double omega = 1.0;
  double dt = 0.001;
  int steps = 1000;

  auto* constants_cmd = app.add_subcommand("constants", "dump constant table");
  constants_cmd->add_option("--units", units_name)
      ->check(CLI::IsMember({"atomic", "si"}));
  constants_cmd->add_option("-o,--output", output_path);

  auto* sample_cmd =
      app.add_subcommand("sample", "sample rho, J and v on a grid");
  sample_cmd->add_option("--system", system)
      ->check(CLI::IsMember({"hydrogen", "oscillator"}));
  sample_cmd->add_option("--state", state_text);
  sample_cmd->add_option("--spin", spin_text);
  sample_cmd->add_option("--grid", grid_text);
  sample_cmd->add_option("--omega", omega);
  sample_cmd->add_option("--units", units_name)
      ->check(CLI::IsMember({"atomic", "si"}));
  sample_cmd->add_option("-o,--output", output_path);

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant checks");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember(
          {"all", "units", "specialfns", "eigenstates", "currents",
           "analysis"}));
  verify_cmd->add_option("-o,--output", output_path);

  auto* stream_cmd =
      app.add_subcommand("streamline", "trace a probability-flow streamline");
  stream_cmd->add_option("--system", system)
      ->check(CLI::IsMember({"hydrogen", "oscillator"}));
  stream_cmd->add_option("--state", state_text);
  stream_cmd->add_option("--spin", spin_text);
  stream_cmd->add_option("--omega", omega);
  stream_cmd->add_option("--start", start_text);
  stream_cmd->add_option("--dt", dt);
  stream_cmd->add_option("--steps", steps);
  stream_cmd->add_option("--units", units_name)
      ->check(CLI::IsMember({"atomic", "si"}));
  stream_cmd->add_option("-o,--output", output_path);

  auto* compare_cmd = app.add_subcommand(
      "compare", "Dirac vs Schrodinger(+Gordon) 1s velocities");
  compare_cmd->add_option("--grid", grid_text);
  compare_cmd->add_option("--units", units_name)
      ->check(CLI::IsMember({"atomic", "si"}));
  compare_cmd->add_option("-o,--output", output_path);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const UnitSystem units =
      units_name == "si" ? UnitSystem::SI : UnitSystem::Atomic;

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!output_path.empty()) {
    file.open(output_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open output file: " << output_path << "\n";
      return 1;
    }
    out = &file;
  }

  try {
    if (constants_cmd->parsed())
      return cmd_constants(units_name, *out);
    if (sample_cmd->parsed())
      return cmd_sample(make_state(system, parse_state(state_text), omega),
                        parse_spin(spin_text), parse_grid(grid_text), units,
                        *out);
    if (verify_cmd->parsed())
      return cmd_verify(suite, *out);
    if (stream_cmd->parsed())
      return cmd_streamline(
          make_state(system, parse_state(state_text), omega),
          parse_spin(spin_text), parse_point(start_text), dt, steps, units,
          *out);
    if (compare_cmd->parsed())
      return cmd_compare(parse_grid(grid_text), units, *out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  return run(args);
}

} // namespace qflow::cli
