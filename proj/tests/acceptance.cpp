// Acceptance suite: one PASS/FAIL line per criterion, exit code is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qflow/analysis.hpp"
#include "qflow/currents.hpp"
#include "qflow/eigenstates.hpp"
#include "qflow/verify.hpp"

using namespace qflow;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%2d] %-28s %s  %s\n", index, name.c_str(),
              pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass)
    ++g_failures;
}

double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

std::mt19937_64 rng(20240817);

SphericalPoint random_point(double r_lo, double r_hi) {
  std::uniform_real_distribution<double> ur(r_lo, r_hi);
  std::uniform_real_distribution<double> ut(0.05, M_PI - 0.05);
  std::uniform_real_distribution<double> up(0.0, 2.0 * M_PI);
  return {ur(rng), ut(rng), up(rng)};
}

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const SchrodingerState st = hydrogen_state({1, 0, 0});
  const SpinVector spin = SpinVector::up();
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const SphericalPoint p = random_point(0.05, 8.0);
    const SphericalVector v = velocity(st, spin, p);
    worst = std::max(worst, rel_err(v.v_phi, std::sin(p.theta)));
    worst = std::max(worst, std::abs(v.v_r) + std::abs(v.v_theta));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::ostringstream d;
  d << "max rel err " << worst << ", " << secs << " s";
  report(1, "1s velocity", worst < 1e-10 && secs < 1.0, d.str());
}

void criterion_2() {
  const DiracHydrogenState ds = DiracHydrogenState::ground_state(+1);
  const SchrodingerState st = hydrogen_state({1, 0, 0});
  const SpinVector spin = SpinVector::up();
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const SphericalPoint p = random_point(0.05, 8.0);
    const SphericalVector vd = dirac_velocity(ds, p);
    const SphericalVector vs = velocity(st, spin, p);
    worst = std::max(worst, rel_err(vd.v_phi, vs.v_phi));
  }
  std::ostringstream d;
  d << "max rel err " << worst;
  report(2, "Dirac exactness", worst < 1e-12, d.str());
}

void criterion_3() {
  std::vector<SchrodingerState> states = {
      hydrogen_state({1, 0, 0}), hydrogen_state({2, 0, 0}),
      hydrogen_state({2, 1, 0}), oscillator_state({0, 0, 0}, 1.0)};
  bool pass = true;
  for (const auto& st : states) {
    for (int i = 0; i < 100; ++i) {
      const SphericalPoint p = random_point(0.05, 6.0);
      const SphericalVector j1 = schrodinger_current_j1(st, p);
      if (j1.v_r != 0.0 || j1.v_theta != 0.0 || j1.v_phi != 0.0)
        pass = false;
    }
  }
  report(3, "classical-current nullity", pass,
         pass ? "J1 exactly zero for all m=0 states" : "nonzero J1 found");
}

void criterion_4() {
  double worst = 0.0;
  const struct {
    SchrodingerState st;
    ReferenceLabel ref;
    double r_lo, r_hi;
  } cases[] = {
      {hydrogen_state({2, 0, 0}), ReferenceLabel::H2sPlus, 0.1, 1.8},
      {hydrogen_state({2, 1, 0}), ReferenceLabel::H2p0Plus, 0.1, 8.0},
      {hydrogen_state({2, 1, 1}), ReferenceLabel::H2p1, 0.1, 8.0},
      {hydrogen_state({2, 1, -1}), ReferenceLabel::H2pMinus1, 0.1, 8.0},
  };
  for (const auto& c : cases) {
    // spin aligned with the magnetic number, the convention the closed
    // forms are quoted for
    const SpinVector spin = SpinVector::for_magnetic_number(c.st.qn().m);
    for (int i = 0; i < 100; ++i) {
      const SphericalPoint p = random_point(c.r_lo, c.r_hi);
      if (c.st.rho(p) < 1e-12)
        continue;
      const SphericalVector v = velocity(c.st, spin, p);
      const SphericalVector want = reference_velocity(c.ref, p);
      worst = std::max(worst, rel_err(v.v_phi, want.v_phi));
    }
  }
  bool node_raised = false;
  try {
    velocity(hydrogen_state({2, 0, 0}), SpinVector::up(),
             {2.0 + 1e-13, 1.3, 0.4});
  } catch (const node_error&) {
    node_raised = true;
  }
  std::ostringstream d;
  d << "max rel err " << worst << ", 2s node error "
    << (node_raised ? "raised" : "missing");
  report(4, "2s/2p closed forms", worst < 1e-10 && node_raised, d.str());
}

void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<SchrodingerState> states = {
      hydrogen_state({1, 0, 0}), hydrogen_state({2, 0, 0}),
      hydrogen_state({2, 1, 0}), hydrogen_state({2, 1, 1})};
  const SpinVector spins[] = {{{0.0, 0.0, 0.5}}, {{0.3, -0.2, 0.1}}};
  QuadratureSpec spec;
  spec.n_radial = 160;
  spec.n_theta = 48;
  spec.n_phi = 48;
  double worst_abs = 0.0, worst_ratio = 0.0;
  for (const auto& st : states) {
    for (const auto& spin : spins) {
      const Vec3 L2 = mean_gordon_angular_momentum(st, spin, spec);
      const Vec3 want = spin.s * 2.0;
      worst_abs = std::max(worst_abs, (L2 - want).norm());
      worst_ratio =
          std::max(worst_ratio, std::abs(L2.norm() / spin.s.norm() - 2.0));
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::ostringstream d;
  d << "max |<L2>-2s| " << worst_abs << ", ratio dev " << worst_ratio << ", "
    << secs << " s";
  report(5, "angular momentum identity",
         worst_abs < 1e-8 && worst_ratio < 1e-7 && secs < 10.0, d.str());
}

void criterion_6() {
  const std::vector<SchrodingerState> states = {
      hydrogen_state({1, 0, 0}),  hydrogen_state({2, 0, 0}),
      hydrogen_state({2, 1, 0}),  hydrogen_state({2, 1, 1}),
      hydrogen_state({2, 1, -1}), oscillator_state({0, 0, 0}, 1.0),
      oscillator_state({0, 1, 0}, 1.0), oscillator_state({1, 0, 0}, 1.0),
      oscillator_state({0, 1, 1}, 1.0)};
  const SpinVector spins[] = {SpinVector::up(), SpinVector::down()};
  double worst = 0.0;
  for (const auto& st : states) {
    for (const auto& spin : spins) {
      FieldFn field = [&](const SphericalPoint& p) {
        return total_current(st, spin, p);
      };
      int accepted = 0;
      while (accepted < 50) {
        const SphericalPoint p = random_point(0.3, 5.0);
        if (st.rho(p) < 1e-6)
          continue;
        ++accepted;
        worst = std::max(worst, std::abs(divergence(field, p, 1e-4)));
      }
    }
  }
  std::ostringstream d;
  d << "max |div J| " << worst;
  report(6, "continuity", worst < 1e-6, d.str());
}

void criterion_7() {
  double worst = 0.0;
  bool periods_ok = true;
  double worst_drift = 0.0;
  for (const double omega : {0.5, 1.0, 2.0}) {
    const SchrodingerState st = oscillator_state({0, 0, 0}, omega);
    const SpinVector spin = SpinVector::up();
    for (int i = 0; i < 100; ++i) {
      const SphericalPoint p = random_point(0.1, 3.0);
      const SphericalVector v = velocity(st, spin, p);
      worst =
          std::max(worst, rel_err(v.v_phi, -omega * p.r * std::sin(p.theta)));
    }
    const double period = 2.0 * M_PI / omega;
    const int steps = 20000;
    VelocityFn vel = [&](const SphericalPoint& p) {
      return velocity(st, spin, p);
    };
    const Trajectory traj =
        streamline(vel, {1.0, M_PI / 2.0, 0.0}, period / steps, steps, "osc");
    if (traj.error)
      periods_ok = false;
    else {
      const SphericalPoint& last = traj.samples.back().p;
      const Vec3 start = to_cartesian({1.0, M_PI / 2.0, 0.0});
      const Vec3 end = to_cartesian(last);
      if ((end - start).norm() > 1e-4)
        periods_ok = false;
      worst_drift = std::max(worst_drift, std::abs(last.r - 1.0));
    }
  }
  std::ostringstream d;
  d << "max rel err vs -wr sin(theta): " << worst << ", period "
    << (periods_ok ? "ok" : "off") << ", drift " << worst_drift;
  report(7, "oscillator flow",
         worst < 1e-10 && periods_ok && worst_drift < 1e-6, d.str());
}

void criterion_8() {
  const SchrodingerState st = hydrogen_state({1, 0, 0});
  const SpinVector spin = SpinVector::up();
  VelocityFn vel = [&](const SphericalPoint& p) {
    return velocity(st, spin, p);
  };
  const double period = 2.0 * M_PI; // 2 pi r0 / (alpha c) in atomic units
  const int steps = 20000;
  const Trajectory traj =
      streamline(vel, {1.0, M_PI / 2.0, 0.0}, period / steps, steps, "1s");
  bool pass = !traj.error.has_value();
  double close_dist = 1e30, drift_r = 1e30, drift_theta = 1e30;
  if (pass) {
    const Vec3 start = to_cartesian({1.0, M_PI / 2.0, 0.0});
    close_dist = (to_cartesian(traj.samples.back().p) - start).norm();
    drift_r = 0.0;
    drift_theta = 0.0;
    for (const auto& s : traj.samples) {
      drift_r = std::max(drift_r, std::abs(s.p.r - 1.0));
      drift_theta = std::max(drift_theta, std::abs(s.p.theta - M_PI / 2.0));
    }
    pass = close_dist < 1e-6 && drift_r < 1e-6 && drift_theta < 1e-6;
  }
  std::ostringstream d;
  d << "closure " << close_dist << ", r drift " << drift_r << ", theta drift "
    << drift_theta;
  report(8, "streamline circularity", pass, d.str());
}

void criterion_9() {
  QuadratureSpec spec;
  spec.n_radial = 200;
  spec.n_theta = 64;
  spec.n_phi = 32;
  double worst = 0.0;
  const std::vector<SchrodingerState> states = {
      hydrogen_state({1, 0, 0}),  hydrogen_state({2, 0, 0}),
      hydrogen_state({2, 1, 0}),  hydrogen_state({2, 1, 1}),
      hydrogen_state({2, 1, -1}), oscillator_state({0, 0, 0}, 1.0),
      oscillator_state({0, 1, 0}, 1.0), oscillator_state({1, 0, 0}, 1.0),
      oscillator_state({0, 1, 1}, 1.0)};
  for (const auto& st : states) {
    const double norm = integrate_density(
        [&](const SphericalPoint& p) { return st.rho(p); }, spec);
    worst = std::max(worst, std::abs(norm - 1.0));
  }
  const DiracHydrogenState ds = DiracHydrogenState::ground_state(+1);
  const double dnorm = integrate_density(
      [&](const SphericalPoint& p) { return ds.rho(p); }, spec);
  worst = std::max(worst, std::abs(dnorm - 1.0));

  double aniso = 0.0;
  for (const double r : {0.3, 1.0, 2.5}) {
    const double base = ds.rho({r, 0.4, 0.0});
    for (int i = 0; i < 40; ++i) {
      const SphericalPoint p = random_point(r, r);
      aniso = std::max(aniso, rel_err(ds.rho({r, p.theta, p.phi}), base));
    }
  }
  std::ostringstream d;
  d << "max |norm-1| " << worst << ", Dirac anisotropy " << aniso;
  report(9, "normalizations", worst < 1e-8 && aniso < 1e-14, d.str());
}

void criterion_10() {
  // Excited oscillator states with spin up: look for flow that is not a
  // circle (nonzero v_r or v_theta somewhere, or |v| varying along an
  // (r, theta) circle).
  const std::vector<SchrodingerState> states = {
      oscillator_state({0, 1, 0}, 1.0), oscillator_state({1, 0, 0}, 1.0),
      oscillator_state({0, 1, 1}, 1.0), oscillator_state({0, 2, 1}, 1.0),
      oscillator_state({1, 1, 0}, 1.0)};
  const SpinVector spin = SpinVector::up();
  bool found = false;
  std::string which = "none";
  for (const auto& st : states) {
    bool has_current = false;
    bool noncircular = false;
    for (int i = 0; i < 200 && !noncircular; ++i) {
      const SphericalPoint p = random_point(0.2, 3.0);
      SphericalVector v;
      try {
        v = velocity(st, spin, p);
      } catch (const std::exception&) {
        continue;
      }
      const double mag =
          std::sqrt(v.v_r * v.v_r + v.v_theta * v.v_theta + v.v_phi * v.v_phi);
      if (mag > 1e-9)
        has_current = true;
      if (std::abs(v.v_r) > 1e-9 || std::abs(v.v_theta) > 1e-9)
        noncircular = true;
      if (!noncircular && mag > 1e-9) {
        // |v| must be constant along the circle (r, theta, *)
        for (const double phi : {1.0, 2.5, 4.0}) {
          const SphericalVector w = velocity(st, spin, {p.r, p.theta, phi});
          const double wm = std::sqrt(w.v_r * w.v_r + w.v_theta * w.v_theta +
                                      w.v_phi * w.v_phi);
          if (rel_err(wm, mag) > 1e-9)
            noncircular = true;
        }
      }
    }
    if (has_current && noncircular) {
      found = true;
      which = st.label();
      break;
    }
  }
  report(10, "oscillator excited state", found,
         found ? ("non-circular flow in " + which)
               : "all excited flows are circular (axisymmetric rho, axial "
                 "spin force a purely azimuthal current)");
}

void criterion_11() {
#ifdef QFLOW_CLI_PATH
  const std::string cli = QFLOW_CLI_PATH;
  const std::string args =
      " sample --system hydrogen --state 2,1,1 --spin up"
      " --grid r=0.2:4:12,theta=10,phi=6 --units si -o ";
  const std::string fa = "acc_det_a.csv", fb = "acc_det_b.csv";
  const int ra = std::system((cli + args + fa).c_str());
  const int rb = std::system((cli + args + fb).c_str());
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string ta = slurp(fa), tb = slurp(fb);
  std::remove(fa.c_str());
  std::remove(fb.c_str());
  const bool pass = ra == 0 && rb == 0 && !ta.empty() && ta == tb;
  std::ostringstream d;
  d << ta.size() << " bytes, " << (ta == tb ? "identical" : "differ");
  report(11, "determinism", pass, d.str());
#else
  report(11, "determinism", false, "CLI path not configured");
#endif
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d of 11 criteria failed\n", g_failures);
  return g_failures;
}
